#ifndef RLSHIFT_FUSION_VERIFY_HPP
#define RLSHIFT_FUSION_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../parallel.hpp"
#include "../report.hpp"
#include "../weights/affine_weight.hpp"
#include "../weights/branching.hpp"
#include "../weights/young.hpp"
#include "character.hpp"
#include "fusion_table.hpp"
#include "verlinde.hpp"

namespace rlshift {

inline constexpr const char* dimension_only_note =
    "dimension equality only: the pairing between spaces of conformal blocks is not constructed";

/// Number of n-tuples over p elements; throws SizeLimitExceeded above bound.
inline std::size_t tuple_count(std::size_t p, std::size_t n, std::size_t bound)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (p != 0 && total > bound / p) throw Error(Errc::size_limit_exceeded, "search space exceeds " + std::to_string(bound) + " cases");
        total *= p;
    }
    if (total > bound) throw Error(Errc::size_limit_exceeded, "search space exceeds " + std::to_string(bound) + " cases");
    return total;
}

/// The code-th n-tuple over {0..p-1}, first slot most significant.
inline std::vector<std::size_t> tuple_at(std::size_t code, std::size_t p, std::size_t n)
{
    std::vector<std::size_t> t(n);
    for (std::size_t i = n; i-- > 0;) {
        t[i] = code % p;
        code /= p;
    }
    return t;
}

inline std::vector<std::vector<std::size_t>> all_index_tuples(std::size_t p, std::size_t n, std::size_t bound = 1u << 22)
{
    const std::size_t total = tuple_count(p, n, bound);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(total);
    for (std::size_t c = 0; c < total; ++c) out.push_back(tuple_at(c, p, n));
    return out;
}

inline Json weight_list(const std::vector<AffineWeight>& ws)
{
    Json j = Json::array();
    for (const auto& w : ws) j.push_back(w.to_string());
    return j;
}

/// Outcome of one case in a sweep, merged into a Report in index order.
struct CaseOutcome {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<Json> failures;
};

inline void merge_outcomes(Report& rep, const std::vector<CaseOutcome>& outs)
{
    std::size_t skipped = 0;
    for (const auto& o : outs) {
        rep.count(o.checked);
        skipped += o.skipped;
        for (const auto& f : o.failures) rep.fail(f);
    }
    if (skipped) rep.set("casesSkipped", skipped);
}

/// Exact genus-zero dimensions against the numeric Verlinde sum on every n-point tuple.
inline Report verify_verlinde_agreement(const AlgebraId& id, int level, std::size_t points, unsigned jobs = 1,
                                        std::size_t bound = 1u << 20)
{
    Report rep = Report::check("exact fusion dimension equals numeric Verlinde sum", "verlinde-cross-oracle",
                               Json{{"algebra", id.name()}, {"level", level}, {"points", points}, {"tolerance", 1e-6}});
    auto lat = std::make_shared<const WeightLattice>(id);
    const FusionTable t(lat, level, {bound, jobs});
    const SMatrix s(lat, level);
    const std::size_t total = tuple_count(t.size(), points, bound);
    const auto outs = parallel_map(total, jobs, [&](std::size_t code) {
        CaseOutcome o;
        o.checked = 1;
        const auto idx = tuple_at(code, t.size(), points);
        const long exact = t.dimension(idx);
        std::vector<AffineWeight> ws;
        for (std::size_t i : idx) ws.push_back(t.weight(i));
        try {
            const long double v = numeric_verlinde_dimension(s, idx);
            if (std::llround(v) != exact) o.failures.push_back({{"weights", weight_list(ws)}, {"exact", exact}, {"numeric", static_cast<double>(v)}});
        } catch (const Error& e) {
            o.failures.push_back({{"weights", weight_list(ws)}, {"exact", exact}, {"error", e.what()}});
        }
        return o;
    });
    merge_outcomes(rep, outs);
    return rep;
}

/// At level >= <lambda,theta> + <mu,theta> the folding is trivial, so fusion
/// coefficients equal classical tensor multiplicities. Random triples from a seed.
inline Report verify_large_level_stabilization(std::size_t triples, std::uint64_t seed, const std::vector<AlgebraId>& algebras)
{
    Report rep = Report::check("fusion at large level equals classical tensor multiplicity", "large-level-stabilization",
                               Json{{"triples", triples}, {"seed", seed}});
    if (algebras.empty()) throw Error(Errc::invalid_argument, "need at least one algebra");
    std::mt19937_64 rng(seed);
    std::vector<std::shared_ptr<const WeightLattice>> lats;
    for (const auto& id : algebras) lats.push_back(std::make_shared<const WeightLattice>(id));
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    for (std::size_t t = 0; t < triples; ++t) {
        const WeightLattice& lat = *lats[pick(lats.size())];
        auto random_weight = [&] {
            Labels l(lat.rank(), 0);
            const std::size_t boxes = pick(3) + 1;
            for (std::size_t k = 0; k < boxes; ++k) ++l[pick(lat.rank())];
            return l;
        };
        const Labels lambda = random_weight(), mu = random_weight();
        const int level = static_cast<int>(lat.theta_pairing(lambda) + lat.theta_pairing(mu));
        const auto classical = tensor_product(lat, lambda, mu);
        const auto fused = fusion_product(lat, level, lambda, mu);
        // nu drawn from the classical support, or an arbitrary dominant weight of the level.
        Labels nu;
        if (pick(4) != 0) {
            auto it = classical.begin();
            std::advance(it, static_cast<long>(pick(classical.size())));
            nu = it->first;
        } else {
            const auto all = level_weights(lat.algebra(), level);
            nu = WeightLattice::from_affine(all[pick(all.size())]);
        }
        rep.count();
        const auto c = classical.find(nu), f = fused.find(nu);
        const long cm = c == classical.end() ? 0 : c->second, fm = f == fused.end() ? 0 : f->second;
        const AffineWeight a = lat.to_affine(lambda, level), b = lat.to_affine(mu, level), n = lat.to_affine(nu, level);
        if (cm != fm) rep.fail({{"lambda", a.to_string()}, {"mu", b.to_string()}, {"nu", n.to_string()}, {"classical", cm}, {"fusion", fm}});
        rep.count();
        if (classical != fused) rep.fail({{"lambda", a.to_string()}, {"mu", b.to_string()}, {"property", "whole product"}});
    }
    return rep;
}

/// All n-tuples of center elements of g whose product is the identity.
inline std::vector<std::vector<CenterElement>> center_assignments(const AlgebraId& id, std::size_t n)
{
    const auto elems = center_elements(id);
    std::vector<std::vector<CenterElement>> out;
    for (const auto& idx : all_index_tuples(elems.size(), n)) {
        std::vector<CenterElement> w;
        for (std::size_t i : idx) w.push_back(elems[i]);
        CenterElement p = w[0];
        for (std::size_t i = 1; i < w.size(); ++i) p = p.compose(w[i]);
        if (p.is_identity()) out.push_back(std::move(w));
    }
    return out;
}

/// dim V_lambda = dim V_{omega lambda} for every tuple and every assignment.
inline Report verify_diagram_automorphism_invariance(const FusionTable& t, const std::vector<std::vector<std::size_t>>& tuples,
                                                     const std::vector<std::vector<CenterElement>>& omegas, unsigned jobs = 1)
{
    Report rep = Report::check("block dimension is invariant under center elements with product one", "center-invariance",
                               Json{{"algebra", t.algebra().name()}, {"level", t.level()}, {"tuples", tuples.size()}, {"assignments", omegas.size()}});
    for (const auto& w : omegas) require_center_product_identity(w);
    const auto outs = parallel_map(tuples.size(), jobs, [&](std::size_t k) {
        CaseOutcome o;
        const auto& idx = tuples[k];
        const long base = t.dimension(idx);
        for (const auto& w : omegas) {
            if (w.size() != idx.size()) throw Error(Errc::invalid_argument, "assignment length differs from tuple length");
            ++o.checked;
            std::vector<std::size_t> moved;
            for (std::size_t i = 0; i < idx.size(); ++i) moved.push_back(t.index_of(w[i].act(t.weight(idx[i]))));
            const long d = t.dimension(moved);
            if (d != base) {
                std::vector<AffineWeight> ws, ms;
                Json names = Json::array();
                for (std::size_t i = 0; i < idx.size(); ++i) {
                    ws.push_back(t.weight(idx[i]));
                    ms.push_back(t.weight(moved[i]));
                    names.push_back(w[i].name);
                }
                o.failures.push_back({{"weights", weight_list(ws)}, {"omega", names}, {"moved", weight_list(ms)}, {"dim", base}, {"movedDim", d}});
            }
        }
        return o;
    });
    merge_outcomes(rep, outs);
    return rep;
}

/// Exhaustive invariance over all n-tuples and all assignments with product one.
inline Report verify_diagram_automorphism_invariance(const AlgebraId& id, int level, std::size_t n, unsigned jobs = 1)
{
    const FusionTable t(id, level, {256, jobs});
    return verify_diagram_automorphism_invariance(t, all_index_tuples(t.size(), n), center_assignments(id, n), jobs);
}

/// For each n-tuple over P_s(sl(r)) and each choice of (gamma_k, Lambda_k) from
/// the branching rule: if rs divides the sum of the Lambda indices, the sl(r) level s
/// and sl(s) level r dimensions agree and the level-one sl(rs) dimension is 1;
/// otherwise the level-one dimension is 0 and the case is skipped.
inline Report verify_sl_rank_level_dims(int r, int s, std::size_t n, std::size_t bound = 1u << 20, unsigned jobs = 1)
{
    if (r < 2 || s < 2) throw Error(Errc::invalid_argument, "sl rank-level duality needs r, s >= 2");
    Report rep = Report::check("sl(r) level s and sl(s) level r block dimensions agree on branching partners", "sl-rank-level",
                               Json{{"r", r}, {"s", s}, {"points", n}});
    rep.note(dimension_only_note);
    const AlgebraId gr = AlgebraId::make(Series::A, r - 1), gs = AlgebraId::make(Series::A, s - 1), big = AlgebraId::make(Series::A, r * s - 1);
    const FusionTable tr(gr, s, {bound, jobs}), ts(gs, r, {bound, jobs});
    const LevelOneRing ring(big);
    std::vector<std::vector<BranchingTriple>> partners;
    for (const auto& w : tr.weights()) partners.push_back(branching_partners(w));
    const auto us = static_cast<std::size_t>(s);
    const std::size_t tuples = tuple_count(tr.size(), n, bound);
    const std::size_t choices = tuple_count(us, n, bound);
    tuple_count(tuples, 1, bound / choices); // overall bound
    const auto outs = parallel_map(tuples, jobs, [&](std::size_t code) {
        CaseOutcome o;
        const auto idx = tuple_at(code, tr.size(), n);
        const long left = tr.dimension(idx);
        for (std::size_t c = 0; c < choices; ++c) {
            const auto sig = tuple_at(c, us, n);
            std::vector<std::size_t> gamma, lam;
            int total = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const auto& tri = partners[idx[k]][sig[k]];
                gamma.push_back(ts.index_of(tri.gamma));
                lam.push_back(static_cast<std::size_t>(tri.big_lambda));
                total += tri.big_lambda;
            }
            const long one = ring.dimension(lam);
            ++o.checked;
            if (total % (r * s) != 0) {
                ++o.skipped;
                if (one != 0) o.failures.push_back({{"property", "level-one dimension vanishes off the divisibility condition"}, {"lambdaIndices", lam}});
                continue;
            }
            const long right = ts.dimension(gamma);
            if (one != 1 || left != right) {
                std::vector<AffineWeight> ws, gs_;
                for (std::size_t k = 0; k < n; ++k) {
                    ws.push_back(tr.weight(idx[k]));
                    gs_.push_back(ts.weight(gamma[k]));
                }
                o.failures.push_back({{"lambda", weight_list(ws)}, {"gamma", weight_list(gs_)}, {"lambdaIndices", lam},
                                      {"dimSlR", left}, {"dimSlS", right}, {"dimLevelOne", one}});
            }
        }
        return o;
    });
    merge_outcomes(rep, outs);
    return rep;
}

/// lambda^T: the transposed diagram as a weight of sp(2s) at level r.
inline AffineWeight sp_transpose(const AffineWeight& w) { return sp_weight(sp_diagram(w).transpose()); }

/// lambda*: the starred diagram (Y^T)^c as a weight of sp(2s) at level r.
inline AffineWeight sp_star(const AffineWeight& w) { return sp_weight(sp_diagram(w).star()); }

/// For n-tuples over P_s(sp(2r)) with sum |lambda_i| even: dim over sp(2r) at level s
/// equals dim of the transposed tuple over sp(2s) at level r, and the starred tuple
/// has the same dimension as the transposed one. Odd tuples are recorded only.
inline Report verify_sp_rank_level_dims(int r, int s, std::size_t n, std::size_t bound = 1u << 20, unsigned jobs = 1)
{
    if (r < 1 || s < 1) throw Error(Errc::invalid_argument, "sp rank-level duality needs r, s >= 1");
    if (n % 2) throw Error(Errc::invalid_argument, "number of points must be even");
    Report rep = Report::check("sp(2r) level s and sp(2s) level r block dimensions agree on transposed tuples", "sp-rank-level",
                               Json{{"r", r}, {"s", s}, {"points", n}});
    rep.note(dimension_only_note);
    if (r == 1 || s == 1) rep.note("sp(2) is treated as C1, which is sl(2)");
    const FusionTable tr(AlgebraId::make(Series::C, r), s, {bound, jobs}), ts(AlgebraId::make(Series::C, s), r, {bound, jobs});
    std::vector<std::size_t> transposed, starred;
    std::vector<int> boxes;
    for (const auto& w : tr.weights()) {
        transposed.push_back(ts.index_of(sp_transpose(w)));
        starred.push_back(ts.index_of(sp_star(w)));
        boxes.push_back(sp_diagram(w).size());
    }
    const std::size_t total = tuple_count(tr.size(), n, bound);
    struct Odd {
        bool odd = false;
        long left = 0, right = 0;
    };
    std::vector<Odd> odd(total);
    const auto outs = parallel_map(total, jobs, [&](std::size_t code) {
        CaseOutcome o;
        const auto idx = tuple_at(code, tr.size(), n);
        std::vector<std::size_t> tt, st;
        int sum = 0;
        for (std::size_t i : idx) {
            tt.push_back(transposed[i]);
            st.push_back(starred[i]);
            sum += boxes[i];
        }
        const long left = tr.dimension(idx), right = ts.dimension(tt);
        if (sum % 2) {
            ++o.skipped;
            odd[code] = {true, left, right};
            return o;
        }
        const long star = ts.dimension(st);
        o.checked = 1;
        if (left != right || star != right) {
            std::vector<AffineWeight> ws, wt;
            for (std::size_t k = 0; k < n; ++k) {
                ws.push_back(tr.weight(idx[k]));
                wt.push_back(ts.weight(tt[k]));
            }
            o.failures.push_back({{"lambda", weight_list(ws)}, {"transpose", weight_list(wt)}, {"dim", left}, {"dimTranspose", right}, {"dimStar", star}});
        }
        return o;
    });
    merge_outcomes(rep, outs);
    Json examples = Json::array();
    for (std::size_t code = 0; code < total && examples.size() < 10; ++code)
        if (odd[code].odd) {
            std::vector<AffineWeight> ws;
            for (std::size_t i : tuple_at(code, tr.size(), n)) ws.push_back(tr.weight(i));
            examples.push_back({{"lambda", weight_list(ws)}, {"dim", odd[code].left}, {"dimTranspose", odd[code].right}});
        }
    rep.set("oddParityExamples", examples);
    rep.note("tuples with odd total box count fall outside the hypothesis; their dimensions are listed without assertion");
    return rep;
}

} // namespace rlshift

#endif
