#ifndef RLSHIFT_EMBED_EMBEDDING_HPP
#define RLSHIFT_EMBED_EMBEDDING_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/rational.hpp"
#include "../loopalg/loop_element.hpp"
#include "../report.hpp"
#include "../rootdata/chevalley.hpp"

namespace rlshift {

/// One factor phi_i : g_i -> g of an embedding, given by the images of the
/// Chevalley generators e_j = X_{alpha_j}, f_j = X_{-alpha_j} in the target's
/// defining representation. dynkin_index 0 means "not claimed; compute it".
struct FactorSpec {
    AlgebraId source;
    std::vector<RationalMatrix> e_images;
    std::vector<RationalMatrix> f_images;
    long dynkin_index = 0;
};

/// phi = (phi_1, phi_2) : g_1 + g_2 -> g with images of the whole Chevalley basis
/// derived from the generator images, plus the affine extension X (x) f + a c ->
/// phi_i(X) (x) f + a l_i c.
class Embedding {
public:
    Embedding(std::string name, const AlgebraId& target, std::vector<FactorSpec> factors)
        : name_(std::move(name)), target_(std::make_shared<ChevalleyBasis>(target))
    {
        if (factors.size() != 2) throw Error(Errc::invalid_argument, "an embedding has exactly two factors");
        for (auto& spec : factors) factors_.push_back(build_factor_(std::move(spec)));
    }

    const std::string& name() const noexcept { return name_; }
    const ChevalleyBasis& target() const noexcept { return *target_; }
    std::size_t num_factors() const noexcept { return factors_.size(); }
    const ChevalleyBasis& source(std::size_t i) const { return *factors_.at(i).source; }

    /// phi_i of source basis element k (roots then simple coroots).
    const RationalMatrix& image(std::size_t i, std::size_t k) const { return factors_.at(i).images.at(k); }
    const ChevalleyCoords& image_coords(std::size_t i, std::size_t k) const { return factors_.at(i).coords.at(k); }

    /// Dynkin index l_i: <phi(x), phi(y)> = l_i <x, y>.
    long dynkin_index(std::size_t i) const { return factors_.at(i).index; }
    long claimed_index(std::size_t i) const { return factors_.at(i).claimed; }

    /// phi_i on the Cartan subalgebra.
    CartanElement map_cartan(std::size_t i, const CartanElement& h) const
    {
        const Factor& f = factors_.at(i);
        const auto x = f.source->roots().coroot_coords(h);
        const std::size_t nr = f.source->num_roots();
        CartanElement out = CartanElement::zero(target().roots().dim());
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!is_zero(x[j])) out += x[j] * CartanElement(f.images[nr + j].diagonal_entries());
        return out;
    }

    /// phi_i(mu) as a target coweight; throws CoweightNotInTargetLattice.
    CowLatticeElement map_coweight(std::size_t i, const CowLatticeElement& mu) const
    {
        return CowLatticeElement::from_cartan(target().roots(), map_cartan(i, mu.cartan()));
    }

    /// Affine extension of phi_i.
    LoopElement extend(std::size_t i, const LoopElement& x) const
    {
        const Factor& f = factors_.at(i);
        check_basis_index(*f.source, x);
        LoopElement out = LoopElement::central(x.central_part() * Rational(f.index));
        const std::size_t nr = target().num_roots();
        for (const auto& [k, g] : x.terms()) {
            const ChevalleyCoords& c = f.coords[k];
            for (std::size_t a = 0; a < c.roots.size(); ++a)
                if (!is_zero(c.roots[a])) out.add_term(a, g.scaled(c.roots[a]));
            for (std::size_t j = 0; j < c.cartan.size(); ++j)
                if (!is_zero(c.cartan[j])) out.add_term(nr + j, g.scaled(c.cartan[j]));
        }
        return out;
    }

    /// Checks the embedding invariants: homomorphism on all basis pairs, injectivity,
    /// Cartan into Cartan, image inside the target, and the Dynkin index on all
    /// fundamental-coweight pairs (and against the claimed value, if any).
    Report validate() const
    {
        Report r = Report::check("embedding invariants", "embedding", Json{{"embedding", name_}, {"target", target().roots().algebra().name()}});
        const RootSystem& trs = target().roots();
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const Factor& f = factors_[i];
            const ChevalleyBasis& src = *f.source;
            for (std::size_t k = 0; k < src.dim(); ++k) {
                r.count();
                if (!trs.contains(f.images[k])) r.fail({{"factor", i + 1}, {"property", "image in target"}, {"element", LoopElement::basis_label(src, k)}});
            }
            for (std::size_t k1 = 0; k1 < src.dim(); ++k1)
                for (std::size_t k2 = 0; k2 < src.dim(); ++k2) {
                    r.count();
                    const RationalMatrix lhs = matrix_of_(f, src, commutator(src.basis_matrix(k1), src.basis_matrix(k2)));
                    if (!(lhs == commutator(f.images[k1], f.images[k2])))
                        r.fail({{"factor", i + 1},
                                {"property", "bracket"},
                                {"x", LoopElement::basis_label(src, k1)},
                                {"y", LoopElement::basis_label(src, k2)}});
                }
            r.count();
            {
                RationalMatrix stacked(src.dim(), trs.dim() * trs.dim());
                for (std::size_t k = 0; k < src.dim(); ++k)
                    for (std::size_t e = 0; e < f.images[k].data().size(); ++e) stacked(k, e) = f.images[k].data()[e];
                if (rank(stacked) != src.dim()) r.fail({{"factor", i + 1}, {"property", "injective"}});
            }
            for (std::size_t j = 0; j < src.rank(); ++j) {
                r.count();
                const RationalMatrix& h = f.images[src.num_roots() + j];
                if (!h.is_diagonal() || !trs.in_cartan(CartanElement(h.diagonal_entries())))
                    r.fail({{"factor", i + 1}, {"property", "Cartan into Cartan"}, {"element", "H" + std::to_string(j + 1)}});
            }
            for (std::size_t a = 0; a < src.rank(); ++a)
                for (std::size_t b = 0; b < src.rank(); ++b) {
                    r.count();
                    const auto& xa = src.roots().fundamental_coweight(a);
                    const auto& xb = src.roots().fundamental_coweight(b);
                    const Rational lhs = trs.form(map_cartan(i, xa), map_cartan(i, xb));
                    const Rational rhs = Rational(f.index) * src.roots().form(xa, xb);
                    if (lhs != rhs)
                        r.fail({{"factor", i + 1}, {"property", "Dynkin index"}, {"pair", {a + 1, b + 1}}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
                }
            if (f.claimed != 0) {
                r.count();
                if (f.claimed != f.index) r.fail({{"factor", i + 1}, {"property", "claimed Dynkin index"}, {"claimed", f.claimed}, {"computed", f.index}});
            }
            r.set("dynkinIndex" + std::to_string(i + 1), f.index);
        }
        return r;
    }

    Json to_json() const
    {
        auto mat = [](const RationalMatrix& m) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    const Rational& x = m(i, j);
                    if (is_integer(x) && x.get_num().fits_slong_p())
                        row.push_back(x.get_num().get_si());
                    else
                        row.push_back(x.get_str());
                }
                rows.push_back(row);
            }
            return rows;
        };
        Json j;
        j["name"] = name_;
        j["target"] = target().roots().algebra().name();
        Json facs = Json::array();
        for (const auto& f : factors_) {
            Json fj;
            fj["source"] = f.source->roots().algebra().name();
            fj["dynkinIndex"] = f.claimed != 0 ? f.claimed : f.index;
            Json e = Json::array(), fm = Json::array();
            for (std::size_t k = 0; k < f.source->rank(); ++k) {
                e.push_back(mat(f.images[f.source->roots().simple_root(k)]));
                fm.push_back(mat(f.images[f.source->roots().negative(f.source->roots().simple_root(k))]));
            }
            fj["e"] = e;
            fj["f"] = fm;
            facs.push_back(fj);
        }
        j["factors"] = facs;
        return j;
    }

    static Embedding from_json(const Json& j)
    {
        auto mat = [](const Json& rows) {
            if (!rows.is_array() || rows.empty()) throw Error(Errc::parse_error, "matrix must be a nonempty array of rows");
            RationalMatrix m(rows.size(), rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].is_array() || rows[i].size() != rows.size()) throw Error(Errc::parse_error, "matrix must be square");
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    const Json& x = rows[i][k];
                    if (x.is_number_integer())
                        m(i, k) = Rational(x.get<long>());
                    else if (x.is_string())
                        m(i, k) = parse_rational(x.get<std::string>());
                    else
                        throw Error(Errc::parse_error, "matrix entries must be integers or rational strings");
                }
            }
            return m;
        };
        try {
            std::vector<FactorSpec> facs;
            for (const auto& fj : j.at("factors")) {
                FactorSpec s;
                s.source = AlgebraId::parse(fj.at("source").get<std::string>());
                for (const auto& m : fj.at("e")) s.e_images.push_back(mat(m));
                for (const auto& m : fj.at("f")) s.f_images.push_back(mat(m));
                s.dynkin_index = fj.value("dynkinIndex", 0L);
                facs.push_back(std::move(s));
            }
            return Embedding(j.value("name", std::string("custom")), AlgebraId::parse(j.at("target").get<std::string>()), std::move(facs));
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::parse_error, std::string("embedding JSON: ") + e.what());
        }
    }

private:
    struct Factor {
        std::shared_ptr<ChevalleyBasis> source;
        std::vector<RationalMatrix> images;
        std::vector<ChevalleyCoords> coords;
        long index = 0;
        long claimed = 0;
    };

    // phi applied to an arbitrary source matrix via its Chevalley coordinates.
    static RationalMatrix matrix_of_(const Factor& f, const ChevalleyBasis& src, const RationalMatrix& m)
    {
        const auto c = src.decompose(m);
        RationalMatrix out(f.images[0].rows(), f.images[0].cols());
        for (std::size_t a = 0; a < c.roots.size(); ++a)
            if (!is_zero(c.roots[a])) out += f.images[a].scaled(c.roots[a]);
        for (std::size_t j = 0; j < c.cartan.size(); ++j)
            if (!is_zero(c.cartan[j])) out += f.images[src.num_roots() + j].scaled(c.cartan[j]);
        return out;
    }

    Factor build_factor_(FactorSpec spec)
    {
        Factor f;
        f.source = std::make_shared<ChevalleyBasis>(spec.source);
        const ChevalleyBasis& src = *f.source;
        const RootSystem& rs = src.roots();
        const std::size_t n = target().roots().dim();
        if (spec.e_images.size() != rs.rank() || spec.f_images.size() != rs.rank())
            throw Error(Errc::algebra_mismatch, "need one e and one f image per simple root of " + rs.algebra().name());
        for (const auto* v : {&spec.e_images, &spec.f_images})
            for (const auto& m : *v)
                if (m.rows() != n || m.cols() != n) throw Error(Errc::algebra_mismatch, "generator image has the wrong size for the target");
        f.images.assign(src.dim(), RationalMatrix(n, n));
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            f.images[rs.simple_root(j)] = spec.e_images[j];
            f.images[rs.negative(rs.simple_root(j))] = spec.f_images[j];
            f.images[src.num_roots() + j] = commutator(spec.e_images[j], spec.f_images[j]);
        }
        // Remaining root vectors by the same recursion that built the source basis.
        for (std::size_t g = 0; g < rs.npos(); ++g) {
            auto it = src.extraspecial_pairs().find(g);
            if (it == src.extraspecial_pairs().end()) continue;
            const std::size_t a = rs.simple_root(it->second);
            std::vector<int> beta_coords = rs.root(g).coords;
            beta_coords[it->second] -= 1;
            const std::size_t beta = *rs.find(beta_coords);
            const int n_pos = src.structure_constant(a, beta);
            const int n_neg = src.structure_constant(rs.negative(a), rs.negative(beta));
            f.images[g] = commutator(f.images[a], f.images[beta]).scaled(rat(1, n_pos));
            f.images[rs.negative(g)] = commutator(f.images[rs.negative(a)], f.images[rs.negative(beta)]).scaled(rat(1, n_neg));
        }
        for (std::size_t k = 0; k < src.dim(); ++k) f.coords.push_back(target().decompose(f.images[k]));

        // Dynkin index from the first simple coroot.
        const Rational ratio = target().roots().form(f.images[src.num_roots()], f.images[src.num_roots()]) /
                               rs.form(rs.simple_coroot(0), rs.simple_coroot(0));
        if (!is_integer(ratio) || sgn(ratio) <= 0)
            throw Error(Errc::algebra_mismatch, "Dynkin index " + ratio.get_str() + " is not a positive integer");
        f.index = to_long(ratio);
        f.claimed = spec.dynkin_index;
        return f;
    }

    std::string name_;
    std::shared_ptr<ChevalleyBasis> target_;
    std::vector<Factor> factors_;
};

namespace detail {

inline FactorSpec factor_from_function(const AlgebraId& id, const std::function<RationalMatrix(const RationalMatrix&)>& phi,
                                       long claimed)
{
    ChevalleyBasis cb(id);
    FactorSpec s;
    s.source = id;
    s.dynkin_index = claimed;
    for (std::size_t j = 0; j < cb.rank(); ++j) {
        s.e_images.push_back(phi(cb.root_vector(cb.roots().simple_root(j))));
        s.f_images.push_back(phi(cb.root_vector(cb.roots().negative(cb.roots().simple_root(j)))));
    }
    return s;
}

} // namespace detail

/// sl(r) + sl(s) -> sl(rs): X -> X (x) I_s, Y -> I_r (x) Y. Dynkin indices (s, r).
inline Embedding tensor_embedding(int r, int s)
{
    if (r < 2 || s < 2) throw Error(Errc::invalid_argument, "tensor embedding needs r, s >= 2");
    const auto ur = static_cast<std::size_t>(r);
    const auto us = static_cast<std::size_t>(s);
    const RationalMatrix ir = RationalMatrix::identity(ur), is = RationalMatrix::identity(us);
    std::vector<FactorSpec> f;
    f.push_back(detail::factor_from_function(AlgebraId::make(Series::A, r - 1), [&](const RationalMatrix& x) { return kron(x, is); }, s));
    f.push_back(detail::factor_from_function(AlgebraId::make(Series::A, s - 1), [&](const RationalMatrix& y) { return kron(ir, y); }, r));
    return Embedding("sl(" + std::to_string(r) + ")+sl(" + std::to_string(s) + ")->sl(" + std::to_string(r * s) + ")",
                     AlgebraId::make(Series::A, r * s - 1), std::move(f));
}

/// Diagonal +-1 change of basis taking the symmetric form J_C(r) (x) J_C(s) to the
/// all-ones antidiagonal form used for type D.
inline RationalMatrix symplectic_tensor_basis_change(int r, int s)
{
    const AlgebraId c1 = AlgebraId::make(Series::C, r), c2 = AlgebraId::make(Series::C, s);
    const RationalMatrix form = kron(build_root_system(c1).invariant_form(), build_root_system(c2).invariant_form());
    const std::size_t n = form.rows();
    RationalMatrix d = RationalMatrix::identity(n);
    for (std::size_t a = 0; a < n / 2; ++a) d(n - 1 - a, n - 1 - a) = form(a, n - 1 - a);
    // Validate the transport: D^T B D must be the type D form.
    const RationalMatrix transported = d.transpose() * form * d;
    const RationalMatrix target = build_root_system(AlgebraId::make(Series::D, static_cast<int>(n / 2))).invariant_form();
    if (!(transported == target)) throw Error(Errc::internal_inconsistency, "symplectic tensor form did not transport to type D form");
    return d;
}

/// sp(2r) + sp(2s) -> so(4rs) through the tensor product, with the product of the two
/// symplectic forms as the symmetric form. Dynkin indices (s, r).
inline Embedding symplectic_embedding(int r, int s)
{
    if (r < 1 || s < 1) throw Error(Errc::invalid_argument, "symplectic embedding needs r, s >= 1");
    if (4 * r * s < 6) throw Error(Errc::target_not_simple, "so(" + std::to_string(4 * r * s) + ") is not simple");
    const RationalMatrix d = symplectic_tensor_basis_change(r, s); // D^-1 = D
    const RationalMatrix ir = RationalMatrix::identity(static_cast<std::size_t>(2 * r));
    const RationalMatrix is = RationalMatrix::identity(static_cast<std::size_t>(2 * s));
    std::vector<FactorSpec> f;
    f.push_back(detail::factor_from_function(AlgebraId::make(Series::C, r), [&](const RationalMatrix& x) { return d * kron(x, is) * d; }, s));
    f.push_back(detail::factor_from_function(AlgebraId::make(Series::C, s), [&](const RationalMatrix& y) { return d * kron(ir, y) * d; }, r));
    return Embedding("sp(" + std::to_string(2 * r) + ")+sp(" + std::to_string(2 * s) + ")->so(" + std::to_string(4 * r * s) + ")",
                     AlgebraId::make(Series::D, 2 * r * s), std::move(f));
}

} // namespace rlshift

#endif
