#ifndef RLSHIFT_TOOLS_CLI_HPP
#define RLSHIFT_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlshift.hpp"

namespace rlshift::cli {

/// Exit codes: all checks passed, some check failed, bad invocation.
enum Exit : int { ok = 0, failed = 1, usage = 2 };

/// Options shared by every subcommand.
struct Common {
    std::string out;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

namespace detail {

inline Json parse_json_arg(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad " + what + " '" + text + "'");
    }
}

inline std::vector<long> long_list(const Json& j, const std::string& what)
{
    if (!j.is_array()) throw Error(Errc::parse_error, what + " must be a list of integers");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(Errc::parse_error, what + " must be a list of integers");
        out.push_back(x.get<long>());
    }
    return out;
}

inline std::vector<Rational> rational_list(const Json& j)
{
    if (!j.is_array()) throw Error(Errc::parse_error, "points must be a list");
    std::vector<Rational> out;
    for (const auto& x : j) {
        if (x.is_number_integer()) out.push_back(Rational(x.get<long>()));
        else if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
        else throw Error(Errc::parse_error, "points must be integers or rational strings like \"1/2\"");
    }
    return out;
}

/// A weight from "A1:2:[1]", or a bare label list "[1]" completed with the given algebra and level.
inline AffineWeight weight_arg(const std::string& text, const AlgebraId& id, int level)
{
    if (text.find(':') != std::string::npos) {
        const AffineWeight w = AffineWeight::parse(text);
        if (w.algebra() != id || w.level() != level)
            throw Error(Errc::algebra_mismatch, text + " is not a weight of " + id.name() + " at level " + std::to_string(level));
        return w;
    }
    return AffineWeight(id, level, AffineWeight::parse_int_list(text));
}

/// An sl(r) level s weight for beta and branch: "A1:2:[0]", r - 1 labels, or r diagram rows.
inline AffineWeight sl_weight_arg(const std::string& text, int r, int s)
{
    const AlgebraId id = AlgebraId::make(Series::A, r - 1);
    if (text.find(':') != std::string::npos) return weight_arg(text, id, s);
    auto list = AffineWeight::parse_int_list(text);
    if (list.size() == static_cast<std::size_t>(r)) {
        // Diagram rows; full columns of height r are trivial for sl(r).
        const int full = list.back();
        std::vector<int> rows;
        for (std::size_t i = 0; i + 1 < list.size(); ++i) rows.push_back(list[i] - full);
        return sl_weight(YoungDiagram(rows, r - 1, s), r);
    }
    return AffineWeight(id, s, list);
}

inline std::vector<CowLatticeElement> coweights_arg(const RootSystem& rs, const std::string& text)
{
    const Json j = parse_json_arg(text, "coweight list");
    std::vector<CowLatticeElement> out;
    if (!j.empty() && j[0].is_array()) {
        for (const auto& m : j) out.emplace_back(rs, long_list(m, "coweight"));
    } else {
        out.emplace_back(rs, long_list(j, "coweight"));
    }
    return out;
}

inline std::vector<CowLatticeElement> fundamental_coweights(const RootSystem& rs)
{
    std::vector<CowLatticeElement> out;
    for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(CowLatticeElement::fundamental(rs, i));
    return out;
}

/// Multi-shift specs: the given one, or (X_i, -X_i, 0, ...) for every fundamental coweight.
inline std::vector<MultiShiftSpec> multishift_specs(const RootSystem& rs, std::size_t points, const std::string& mus,
                                                    const std::string& z)
{
    if (points < 2) throw Error(Errc::invalid_argument, "multi-shift needs at least 2 points");
    const std::vector<Rational> pts = z.empty() ? default_points(points) : rational_list(parse_json_arg(z, "points"));
    if (pts.size() != points) throw Error(Errc::invalid_argument, "number of points differs from --points");
    std::vector<MultiShiftSpec> specs;
    if (!mus.empty()) {
        MultiShiftSpec s{pts, coweights_arg(rs, mus), 0};
        s.validate(rs);
        specs.push_back(std::move(s));
        return specs;
    }
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        MultiShiftSpec s{pts, std::vector<CowLatticeElement>(points, CowLatticeElement::zero(rs)), 0};
        s.mus[0] = CowLatticeElement::fundamental(rs, i);
        s.mus[1] = s.mus[0].negated(rs);
        s.validate(rs);
        specs.push_back(std::move(s));
    }
    return specs;
}

/// "tensor:2,3", "symplectic:1,2", or a path to an embedding JSON file.
inline Embedding embedding_arg(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const auto args = AffineWeight::parse_int_list("[" + text.substr(colon + 1) + "]");
        if (args.size() != 2) throw Error(Errc::parse_error, "embedding parameters must be two integers, got '" + text + "'");
        if (kind == "tensor") return tensor_embedding(args[0], args[1]);
        if (kind == "symplectic") return symplectic_embedding(args[0], args[1]);
        throw Error(Errc::parse_error, "unknown embedding kind '" + kind + "'");
    }
    std::ifstream in(text);
    if (!in) throw Error(Errc::parse_error, "cannot read embedding file '" + text + "'");
    try {
        return Embedding::from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad embedding file: ") + e.what());
    }
}

inline std::vector<std::vector<CenterElement>> omegas_arg(const AlgebraId& id, std::size_t n, const std::string& text)
{
    if (text.empty()) return center_assignments(id, n);
    std::vector<std::vector<CenterElement>> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<CenterElement> w;
        std::stringstream names(group);
        std::string name;
        while (std::getline(names, name, ',')) w.push_back(center_element(id, name));
        if (w.size() != n) throw Error(Errc::invalid_argument, "each assignment needs " + std::to_string(n) + " center elements");
        require_center_product_identity(w);
        out.push_back(std::move(w));
    }
    return out;
}

inline Json trace_json(const BetaTrace& t, const AffineWeight& lambda)
{
    const int s = lambda.level();
    const int sigma = diagram_columns(lambda) % s;
    return {{"lambda", lambda.to_string()},
            {"diagram", sl_diagram(lambda).to_string()},
            {"k", t.k},
            {"a", t.a},
            {"q", t.q},
            {"b", t.b},
            {"beta", t.result.to_string()},
            {"sigma", sigma},
            {"sigmaBeta", sl_center_action(sigma, t.result).to_string()},
            {"modifiedTranspose", modified_transpose(lambda).to_string()}};
}

} // namespace detail

/// Writes the document to --out, else to $RLSHIFT_OUT_DIR/<command>.json, else to `out`.
inline void emit(const Json& doc, const std::string& command, const Common& c, std::ostream& out)
{
    const std::string text = doc.dump(2) + "\n";
    std::string path = c.out;
    if (path.empty())
        if (const char* dir = std::getenv("RLSHIFT_OUT_DIR"); dir && *dir) path = (std::filesystem::path(dir) / (command + ".json")).string();
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
    f << text;
}

/// Runs one invocation. Reports go to `out` (or a file), diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Exact verification of shift automorphisms, embeddings, branching and fusion", "rlshift"};
    app.require_subcommand(1);
    Common common;
    std::string command;
    Json run_info = Json::object();
    std::function<int()> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "Output file for the JSON document");
        sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--seed", common.seed, "Seed for randomized suites");
    };
    auto bundle = [&](const std::vector<Report>& reports) {
        run_info["seed"] = common.seed;
        const Json doc = report_bundle(reports, run_info);
        emit(doc, command, common, out);
        return doc["passed"].get<bool>() ? Exit::ok : Exit::failed;
    };
    auto info = [&](Json doc) {
        emit(doc, command, common, out);
        return Exit::ok;
    };

    // Variables bound by subcommand options.
    std::string algebra = "A1", mu, mus, z, lambda, gamma, embedding, weights, omegas, diagram, type = "sl";
    long window = 3, max_pole = 3;
    std::size_t points = 2, n = 4, bound = 1u << 20, max_weights = 256, stabilize = 0;
    int r = 2, s = 2, level = 1, big_lambda = -1;
    bool numeric = false;

    auto* roots = app.add_subcommand("roots", "Root system data");
    roots->add_option("--algebra", algebra, "A2, sl(3), C2, sp(4), so(8), ...")->required();
    roots->callback([&] {
        action = [&] {
            const RootSystem rs = build_root_system(AlgebraId::parse(algebra));
            Json rj = Json::array();
            for (std::size_t a = 0; a < rs.num_roots(); ++a)
                rj.push_back({{"label", rs.root_label(a)}, {"coords", rs.root(a).coords}, {"height", rs.root(a).height}});
            return info({{"algebra", rs.algebra().name()}, {"rank", rs.rank()}, {"cartanMatrix", rs.cartan_matrix()},
                         {"marks", rs.marks()}, {"comarks", rs.comarks()}, {"dualCoxeter", rs.dual_coxeter()}, {"roots", rj}});
        };
    });

    auto* chev = app.add_subcommand("chevalley", "Chevalley basis and structure constants");
    chev->add_option("--algebra", algebra)->required();
    chev->callback([&] { action = [&] { return info(ChevalleyBasis(AlgebraId::parse(algebra)).summary()); }; });

    auto* shift = app.add_subcommand("shift-verify", "Bracket preservation of the single shift");
    shift->add_option("--algebra", algebra)->required();
    shift->add_option("--window", window, "Loop degree window");
    shift->add_option("--mu", mu, "Coweight [1,0] or list [[1,0],[0,1]]; default all fundamental coweights");
    shift->callback([&] {
        action = [&] {
            const ChevalleyBasis cb(AlgebraId::parse(algebra));
            const auto list = mu.empty() ? detail::fundamental_coweights(cb.roots()) : detail::coweights_arg(cb.roots(), mu);
            std::vector<Report> reps;
            for (const auto& m : list)
                reps.push_back(verify_bracket_preservation(cb, "single-shift mu=" + coweight_label(m), single_shift_map(cb, m), window, common.jobs));
            run_info = {{"command", command}, {"algebra", cb.roots().algebra().name()}, {"window", window}};
            return bundle(reps);
        };
    });

    auto* conj = app.add_subcommand("conj-verify", "tau conjugation equals the single shift; integrality criterion");
    conj->add_option("--algebra", algebra)->required();
    conj->add_option("--window", window);
    conj->add_option("--mu", mu);
    conj->callback([&] {
        action = [&] {
            const ChevalleyBasis cb(AlgebraId::parse(algebra));
            const auto list = mu.empty() ? detail::fundamental_coweights(cb.roots()) : detail::coweights_arg(cb.roots(), mu);
            std::vector<Report> reps;
            for (const auto& m : list) reps.push_back(verify_conjugation_agreement(cb, m, window));
            reps.push_back(verify_inner_criterion(cb.roots()));
            run_info = {{"command", command}, {"algebra", cb.roots().algebra().name()}, {"window", window}};
            return bundle(reps);
        };
    });

    auto* multi = app.add_subcommand("multishift-verify", "Multi-shift bracket preservation and conjugation");
    multi->add_option("--algebra", algebra)->required();
    multi->add_option("--points", points, "Number of marked points");
    multi->add_option("--mus", mus, "Coweights per point, e.g. [[1],[-1]]");
    multi->add_option("--z", z, "Points, e.g. [0,1] or [0,\"1/2\"]");
    multi->add_option("--window", window);
    multi->callback([&] {
        action = [&] {
            const ChevalleyBasis cb(AlgebraId::parse(algebra));
            std::vector<Report> reps;
            for (const auto& spec : detail::multishift_specs(cb.roots(), points, mus, z))
                for (std::size_t t = 0; t < spec.points.size(); ++t) {
                    const MultiShiftSpec at = spec.at(t);
                    reps.push_back(verify_bracket_preservation(cb, multi_shift_label(at), multi_shift_map(cb, at), window, common.jobs));
                    reps.push_back(verify_multishift_conjugation(cb, at, window));
                }
            run_info = {{"command", command}, {"algebra", cb.roots().algebra().name()}, {"points", points}, {"window", window}};
            return bundle(reps);
        };
    });

    auto* current = app.add_subcommand("current-verify", "Multi-shift preserves the current algebra");
    current->add_option("--algebra", algebra)->required();
    current->add_option("--points", points);
    current->add_option("--mus", mus);
    current->add_option("--z", z);
    current->add_option("--max-pole", max_pole, "Largest pole order of the samples");
    current->callback([&] {
        action = [&] {
            const ChevalleyBasis cb(AlgebraId::parse(algebra));
            std::vector<Report> reps;
            for (const auto& spec : detail::multishift_specs(cb.roots(), points, mus, z))
                for (std::size_t t = 0; t < spec.points.size(); ++t) reps.push_back(verify_current_algebra(cb, spec.at(t), max_pole));
            run_info = {{"command", command}, {"algebra", cb.roots().algebra().name()}, {"points", points}, {"maxPole", max_pole}};
            return bundle(reps);
        };
    });

    auto* emb = app.add_subcommand("embed-verify", "Embedding invariants, lemmas and affine extension");
    emb->add_option("--embedding", embedding, "tensor:r,s | symplectic:r,s | path to JSON")->required();
    emb->add_option("--window", window);
    emb->callback([&] {
        action = [&] {
            const Embedding e = detail::embedding_arg(embedding);
            run_info = {{"command", command}, {"embedding", e.name()}, {"window", window}};
            return bundle({e.validate(), verify_embedding_lemmas(e), verify_affine_extension(e, window)});
        };
    });

    auto* square = app.add_subcommand("square-verify", "Shift commutes with the affine extension of an embedding");
    square->add_option("--embedding", embedding)->required();
    square->add_option("--window", window);
    square->add_option("--points", points, "Points for the multi-shift square (0 to skip)");
    square->callback([&] {
        action = [&] {
            const Embedding e = detail::embedding_arg(embedding);
            const RootSystem& rs = e.source(0).roots();
            std::vector<Report> reps;
            Json skipped = Json::array();
            for (const auto& m : detail::fundamental_coweights(rs)) {
                try {
                    reps.push_back(verify_commuting_square(e, m, window));
                } catch (const Error& ex) {
                    if (ex.code() != Errc::coweight_not_in_target_lattice) throw;
                    skipped.push_back(coweight_label(m));
                }
            }
            if (points >= 2)
                for (const auto& spec : detail::multishift_specs(rs, points, "", ""))
                    for (std::size_t t = 0; t < points; ++t) {
                        try {
                            reps.push_back(verify_commuting_square(e, spec.at(t), window));
                        } catch (const Error& ex) {
                            if (ex.code() != Errc::coweight_not_in_target_lattice) throw;
                            skipped.push_back(multi_shift_label(spec.at(t)));
                        }
                    }
            run_info = {{"command", command}, {"embedding", e.name()}, {"window", window}, {"points", points}};
            if (!skipped.empty()) run_info["skippedNotInTargetLattice"] = skipped;
            return bundle(reps);
        };
    });

    auto* young = app.add_subcommand("young", "Young diagram operations in the r x s box");
    young->add_option("--r", r)->required();
    young->add_option("--s", s)->required();
    young->add_option("--diagram", diagram, "Rows, e.g. [2,1]; omit to verify the identities on the whole box");
    young->callback([&] {
        action = [&] {
            if (r < 1 || s < 1) throw Error(Errc::invalid_argument, "r and s must be positive");
            if (!diagram.empty()) {
                const YoungDiagram y = YoungDiagram::parse(diagram, r, s);
                return info({{"diagram", y.to_string()}, {"size", y.size()}, {"columns", y.columns()},
                             {"transpose", y.transpose().to_string()}, {"complement", y.conjugate().to_string()},
                             {"star", y.star().to_string()}, {"spWeight", sp_weight(y).to_string()},
                             {"spCenterAction", sp_center_action(sp_weight(y)).to_string()}});
            }
            run_info = {{"command", command}, {"r", r}, {"s", s}};
            return bundle({verify_diagram_identities(r, s)});
        };
    });

    auto* beta = app.add_subcommand("beta", "The beta map with its intermediate sequences");
    beta->add_option("--r", r)->required();
    beta->add_option("--s", s)->required();
    beta->add_option("--lambda", lambda, "sl(r) weight at level s; omit to verify over all of P_s(sl(r))");
    beta->callback([&] {
        action = [&] {
            if (r < 2 || s < 2) throw Error(Errc::invalid_argument, "beta needs r, s >= 2");
            if (!lambda.empty()) {
                const AffineWeight w = detail::sl_weight_arg(lambda, r, s);
                return info(detail::trace_json(beta_trace(w), w));
            }
            run_info = {{"command", command}, {"r", r}, {"s", s}};
            return bundle({verify_beta_properties(r, s, r <= 3 && s <= 3)});
        };
    });

    auto* branch = app.add_subcommand("branch", "Level-one branching partners of an sl(r) weight");
    branch->add_option("--r", r)->required();
    branch->add_option("--s", s)->required();
    branch->add_option("--lambda", lambda)->required();
    branch->add_option("--gamma", gamma, "sl(s) level r weight; with --big-lambda, query one multiplicity");
    branch->add_option("--big-lambda", big_lambda, "Index of the level-one sl(rs) weight");
    branch->callback([&] {
        action = [&] {
            if (r < 2 || s < 2) throw Error(Errc::invalid_argument, "branching needs r, s >= 2");
            const AffineWeight w = detail::sl_weight_arg(lambda, r, s);
            Json doc{{"lambda", w.to_string()}, {"r", r}, {"s", s}};
            Json parts = Json::array();
            for (const auto& t : branching_partners(w))
                parts.push_back({{"sigma", t.sigma}, {"gamma", t.gamma.to_string()}, {"levelOneIndex", t.big_lambda}});
            doc["partners"] = parts;
            if (!gamma.empty() || big_lambda >= 0) {
                if (gamma.empty() || big_lambda < 0) throw Error(Errc::invalid_argument, "--gamma and --big-lambda go together");
                const AffineWeight g = detail::sl_weight_arg(gamma, s, r);
                doc["query"] = {{"gamma", g.to_string()}, {"levelOneIndex", big_lambda},
                                {"multiplicity", branching_multiplicity(w, g, big_lambda)}};
            }
            return info(doc);
        };
    });

    auto* fusion = app.add_subcommand("fusion-table", "Fusion coefficients at a level and their ring invariants");
    fusion->add_option("--algebra", algebra)->required();
    fusion->add_option("--level", level)->required();
    fusion->add_option("--max-weights", max_weights, "Refuse levels with more weights than this");
    fusion->add_option("--stabilize", stabilize, "Also compare large-level fusion with tensor products on this many random triples");
    fusion->callback([&] {
        action = [&] {
            const AlgebraId id = AlgebraId::parse(algebra);
            const FusionTable t(id, level, {max_weights, common.jobs});
            std::vector<Report> reps{verify_fusion_invariants(t)};
            if (stabilize) reps.push_back(verify_large_level_stabilization(stabilize, common.seed, {id}));
            run_info = {{"command", command}, {"algebra", id.name()}, {"level", level}, {"table", t.to_json()}};
            return bundle(reps);
        };
    });

    auto* dim = app.add_subcommand("dim", "Genus-zero block dimension");
    dim->add_option("--algebra", algebra)->required();
    dim->add_option("--level", level)->required();
    dim->add_option("--weights", weights, "JSON list, e.g. [[1],[1],[1],[1]] or [\"A1:2:[1]\", ...]")->required();
    dim->add_flag("--numeric", numeric, "Also evaluate the Verlinde sum numerically");
    dim->callback([&] {
        action = [&] {
            const AlgebraId id = AlgebraId::parse(algebra);
            const Json j = detail::parse_json_arg(weights, "weights");
            if (!j.is_array() || j.empty()) throw Error(Errc::parse_error, "--weights must be a nonempty list");
            std::vector<AffineWeight> ws;
            for (const auto& x : j) ws.push_back(detail::weight_arg(x.is_string() ? x.get<std::string>() : x.dump(), id, level));
            const FusionTable t(id, level, {max_weights, common.jobs});
            Json doc{{"algebra", id.name()}, {"level", level}, {"weights", weight_list(ws)}, {"dimension", t.dimension(ws)}};
            if (numeric) doc["verlinde"] = static_cast<double>(numeric_verlinde_dimension(SMatrix(id, level), ws));
            return info(doc);
        };
    });

    auto* inv = app.add_subcommand("invariance", "Block dimensions under center elements with product one");
    inv->add_option("--algebra", algebra)->required();
    inv->add_option("--level", level)->required();
    inv->add_option("--n", n, "Number of points");
    inv->add_option("--omegas", omegas, "Assignments like \"rot1,rot1,rot1,rot1;id,id,id,id\"; default all");
    inv->add_option("--bound", bound, "Largest number of tuples");
    inv->callback([&] {
        action = [&] {
            const AlgebraId id = AlgebraId::parse(algebra);
            const FusionTable t(id, level, {max_weights, common.jobs});
            const auto assignments = detail::omegas_arg(id, n, omegas);
            run_info = {{"command", command}, {"algebra", id.name()}, {"level", level}, {"n", n}};
            return bundle({verify_diagram_automorphism_invariance(t, all_index_tuples(t.size(), n, bound), assignments, common.jobs)});
        };
    });

    auto* dual = app.add_subcommand("duality", "Rank-level dimension equalities");
    dual->add_option("--type", type, "sl or sp")->check(CLI::IsMember({"sl", "sp"}));
    dual->add_option("--r", r)->required();
    dual->add_option("--s", s)->required();
    dual->add_option("--n", n);
    dual->add_option("--bound", bound);
    dual->callback([&] {
        action = [&] {
            run_info = {{"command", command}, {"type", type}, {"r", r}, {"s", s}, {"n", n}};
            const Report rep = type == "sl" ? verify_sl_rank_level_dims(r, s, n, bound, common.jobs)
                                            : verify_sp_rank_level_dims(r, s, n, bound, common.jobs);
            if (type == "sl" && r * s <= 8) return bundle({rep, verify_level_one_ring(AlgebraId::make(Series::A, r * s - 1))});
            return bundle({rep});
        };
    });

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "rlshift: " << e.what() << "\n";
        return Exit::usage;
    }
    command = app.get_subcommands().front()->get_name();
    try {
        return action();
    } catch (const Error& e) {
        err << "rlshift " << command << ": " << e.what() << "\n";
        return e.code() == Errc::internal_inconsistency || e.code() == Errc::sign_consistency_failure ? Exit::failed : Exit::usage;
    } catch (const std::exception& e) {
        err << "rlshift " << command << ": " << e.what() << "\n";
        return Exit::usage;
    }
}

} // namespace rlshift::cli

#endif
