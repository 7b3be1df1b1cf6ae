#ifndef RLSHIFT_FUSION_FUSION_TABLE_HPP
#define RLSHIFT_FUSION_FUSION_TABLE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../parallel.hpp"
#include "../report.hpp"
#include "../weights/affine_weight.hpp"
#include "character.hpp"
#include "weight_lattice.hpp"

namespace rlshift {

/// Folds x = nu + rho into the level alcove by the affine Weyl group at
/// shifted level level + g*. Returns the sign, or 0 when x lies on a wall.
inline int fold_into_alcove(const WeightLattice& lat, int level, Labels& x)
{
    const long k = level + lat.dual_coxeter();
    int sign = 1;
    for (;;) {
        ChamberImage c = lat.to_dominant(std::move(x));
        sign *= c.sign;
        x = std::move(c.weight);
        if (c.on_wall) return 0;
        const long p = lat.theta_pairing(x);
        if (p == k) return 0;
        if (p < k) return sign;
        // Affine reflection in the wall <x, theta> = k.
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= (p - k) * lat.theta()[i];
        sign = -sign;
    }
}

/// Fusion product at a level by Kac-Walton: Racah-Speiser terms folded into the alcove.
inline std::map<Labels, long> fusion_product(const WeightLattice& lat, int level, const Labels& lambda, const Labels& mu)
{
    const std::size_t n = lat.rank();
    std::map<Labels, long> out;
    for (const auto& [nu, m] : weight_system(lat, mu)) {
        Labels x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = lambda[i] + nu[i] + lat.rho()[i];
        const int sign = fold_into_alcove(lat, level, x);
        if (sign == 0) continue;
        for (std::size_t i = 0; i < n; ++i) x[i] -= lat.rho()[i];
        out[x] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw Error(Errc::internal_inconsistency, "negative fusion coefficient");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

struct FusionOptions {
    std::size_t max_weights = 256;
    unsigned jobs = 1;
};

/// N_{lambda mu}^nu for all weights of P_level(g), computed once and then read-only.
class FusionTable {
public:
    FusionTable(const AlgebraId& id, int level, FusionOptions opt = {})
        : FusionTable(std::make_shared<const WeightLattice>(id), level, opt)
    {
    }

    FusionTable(std::shared_ptr<const WeightLattice> lat, int level, FusionOptions opt = {})
        : lat_(std::move(lat)), level_(level)
    {
        if (level < 1) throw Error(Errc::invalid_argument, "level must be at least 1");
        weights_ = level_weights(lat_->algebra(), level);
        if (weights_.size() > opt.max_weights)
            throw Error(Errc::size_limit_exceeded, lat_->algebra().name() + " at level " + std::to_string(level) + " has " +
                                                       std::to_string(weights_.size()) + " weights (limit " +
                                                       std::to_string(opt.max_weights) + ")");
        for (std::size_t i = 0; i < weights_.size(); ++i) index_[WeightLattice::from_affine(weights_[i])] = i;
        const std::size_t p = weights_.size();
        rows_ = parallel_map(p * p, opt.jobs, [&](std::size_t ab) {
            const auto prod = fusion_product(*lat_, level_, WeightLattice::from_affine(weights_[ab / p]),
                                             WeightLattice::from_affine(weights_[ab % p]));
            std::vector<std::pair<std::size_t, long>> row;
            for (const auto& [nu, m] : prod) row.emplace_back(index_.at(nu), m);
            return row;
        });
        duals_.resize(p);
        for (std::size_t i = 0; i < p; ++i) duals_[i] = index_.at(lat_->dual(WeightLattice::from_affine(weights_[i])));
    }

    const AlgebraId& algebra() const noexcept { return lat_->algebra(); }
    const WeightLattice& lattice() const noexcept { return *lat_; }
    int level() const noexcept { return level_; }
    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<AffineWeight>& weights() const noexcept { return weights_; }
    const AffineWeight& weight(std::size_t i) const { return weights_.at(i); }
    std::size_t vacuum_index() const { return 0; }
    std::size_t dual_index(std::size_t i) const { return duals_.at(i); }

    std::size_t index_of(const AffineWeight& w) const
    {
        if (w.algebra() != algebra() || w.level() != level_)
            throw Error(Errc::algebra_mismatch, w.to_string() + " is not a weight of " + algebra().name() + " at level " + std::to_string(level_));
        return index_.at(WeightLattice::from_affine(w));
    }

    /// Nonzero coefficients of weight(a) * weight(b), as (index, multiplicity).
    const std::vector<std::pair<std::size_t, long>>& product(std::size_t a, std::size_t b) const
    {
        return rows_.at(a * weights_.size() + b);
    }

    long coefficient(std::size_t a, std::size_t b, std::size_t c) const
    {
        for (const auto& [k, m] : product(a, b))
            if (k == c) return m;
        return 0;
    }

    long coefficient(const AffineWeight& a, const AffineWeight& b, const AffineWeight& c) const
    {
        return coefficient(index_of(a), index_of(b), index_of(c));
    }

    /// v * weight(b) for a vector v over the weights.
    std::vector<long> multiply(const std::vector<long>& v, std::size_t b) const
    {
        std::vector<long> out(weights_.size(), 0);
        for (std::size_t a = 0; a < v.size(); ++a)
            if (v[a] != 0)
                for (const auto& [c, m] : product(a, b)) out[c] += v[a] * m;
        return out;
    }

    /// Genus-zero block dimension: coefficient of the vacuum in the iterated product.
    long dimension(const std::vector<std::size_t>& idx) const
    {
        if (idx.empty()) return 1;
        if (idx.size() == 1) return idx[0] == vacuum_index() ? 1 : 0;
        std::vector<long> v(weights_.size(), 0);
        v.at(idx[0]) = 1;
        for (std::size_t k = 1; k + 1 < idx.size(); ++k) v = multiply(v, idx[k]);
        return v.at(dual_index(idx.back()));
    }

    long dimension(const std::vector<AffineWeight>& ws) const
    {
        std::vector<std::size_t> idx;
        for (const auto& w : ws) idx.push_back(index_of(w));
        return dimension(idx);
    }

    Json to_json() const
    {
        Json j;
        j["algebra"] = algebra().name();
        j["level"] = level_;
        Json ws = Json::array();
        for (const auto& w : weights_) ws.push_back(w.to_string());
        j["weights"] = ws;
        Json coeffs = Json::array();
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                for (const auto& [c, m] : product(a, b)) coeffs.push_back({a, b, c, m});
        j["coefficients"] = coeffs;
        return j;
    }

private:
    std::shared_ptr<const WeightLattice> lat_;
    int level_ = 0;
    std::vector<AffineWeight> weights_;
    std::map<Labels, std::size_t> index_;
    std::vector<std::vector<std::pair<std::size_t, long>>> rows_;
    std::vector<std::size_t> duals_;
};

/// genusZeroDimension for a tuple of weights sharing algebra and level.
inline long genus_zero_dimension(const std::vector<AffineWeight>& ws, FusionOptions opt = {})
{
    if (ws.empty()) throw Error(Errc::invalid_argument, "need at least one weight");
    for (const auto& w : ws)
        if (w.algebra() != ws[0].algebra() || w.level() != ws[0].level())
            throw Error(Errc::algebra_mismatch, "weights must share algebra and level");
    return FusionTable(ws[0].algebra(), ws[0].level(), opt).dimension(ws);
}

/// Level-one fusion for types A and D, where every weight is a simple current:
/// Z/(n+1) for A_n; Z/2 x Z/2 (n even) or Z/4 (n odd) for D_n.
class LevelOneRing {
public:
    explicit LevelOneRing(const AlgebraId& id) : id_(id)
    {
        const int n = id.rank;
        auto fundamental = [&](int i) {
            std::vector<int> l(static_cast<std::size_t>(n), 0);
            if (i > 0) l[static_cast<std::size_t>(i - 1)] = 1;
            return AffineWeight(id, 1, l);
        };
        if (id.series == Series::A) {
            for (int i = 0; i <= n; ++i) weights_.push_back(fundamental(i));
            order_ = n + 1;
        } else if (id.series == Series::D) {
            // 0, vector, and the two spinors.
            weights_ = {fundamental(0), fundamental(1), fundamental(n - 1), fundamental(n)};
            order_ = 4;
        } else {
            throw Error(Errc::algebra_mismatch, "level-one ring is hard-coded for types A and D only");
        }
    }

    const AlgebraId& algebra() const noexcept { return id_; }
    const std::vector<AffineWeight>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }

    std::size_t index_of(const AffineWeight& w) const
    {
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (weights_[i] == w) return i;
        throw Error(Errc::algebra_mismatch, w.to_string() + " is not a level-one weight of " + id_.name());
    }

    /// Index of the unique weight in weight(a) * weight(b).
    std::size_t product(std::size_t a, std::size_t b) const
    {
        if (a >= size() || b >= size()) throw Error(Errc::invalid_argument, "level-one index out of range");
        if (id_.series == Series::A) return (a + b) % static_cast<std::size_t>(order_);
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return id_.rank % 2 == 0 ? 0 : (a == 1 ? 0 : 1);
        if (a == 1 || b == 1) return a + b - 1 == 2 ? 3 : 2; // v*s = c, v*c = s
        return id_.rank % 2 == 0 ? 1 : 0;                    // s*c
    }

    long dimension(const std::vector<std::size_t>& idx) const
    {
        std::size_t acc = 0;
        for (std::size_t i : idx) acc = product(acc, i);
        return acc == 0 ? 1 : 0;
    }

    long dimension(const std::vector<AffineWeight>& ws) const
    {
        std::vector<std::size_t> idx;
        for (const auto& w : ws) idx.push_back(index_of(w));
        return dimension(idx);
    }

private:
    AlgebraId id_;
    std::vector<AffineWeight> weights_;
    int order_ = 1;
};

/// Symmetry, unit, duality of the vacuum coefficient, and associativity, exhaustively.
inline Report verify_fusion_invariants(const FusionTable& t)
{
    Report rep = Report::check("fusion table is a commutative associative unital ring", "fusion-invariants",
                               Json{{"algebra", t.algebra().name()}, {"level", t.level()}});
    const std::size_t p = t.size();
    const std::size_t vac = t.vacuum_index();
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            rep.count();
            if (t.product(a, b) != t.product(b, a))
                rep.fail({{"property", "symmetry"}, {"lambda", t.weight(a).to_string()}, {"mu", t.weight(b).to_string()}});
            for (std::size_t c = 0; c < p; ++c) {
                rep.count();
                if (t.coefficient(vac, a, c) != (a == c ? 1 : 0))
                    rep.fail({{"property", "unit"}, {"lambda", t.weight(a).to_string()}, {"nu", t.weight(c).to_string()}});
            }
            rep.count();
            if (t.coefficient(a, b, vac) != (b == t.dual_index(a) ? 1 : 0))
                rep.fail({{"property", "vacuum coefficient is the dual pairing"}, {"lambda", t.weight(a).to_string()}, {"mu", t.weight(b).to_string()}});
        }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c) {
                rep.count();
                std::vector<long> left(p, 0);
                left[a] = 1;
                left = t.multiply(t.multiply(left, b), c);
                std::vector<long> bc(p, 0);
                bc[b] = 1;
                bc = t.multiply(bc, c);
                std::vector<long> right(p, 0);
                for (std::size_t d = 0; d < p; ++d)
                    if (bc[d] != 0)
                        for (const auto& [e, m] : t.product(a, d)) right[e] += bc[d] * m;
                if (left != right)
                    rep.fail({{"property", "associativity"}, {"triple", {t.weight(a).to_string(), t.weight(b).to_string(), t.weight(c).to_string()}}});
            }
    return rep;
}

/// The hard-coded level-one ring agrees with the general engine.
inline Report verify_level_one_ring(const AlgebraId& id, FusionOptions opt = {})
{
    Report rep = Report::check("hard-coded level-one fusion agrees with the general engine", "level-one-ring",
                               Json{{"algebra", id.name()}});
    const LevelOneRing ring(id);
    const FusionTable t(id, 1, opt);
    rep.count();
    if (t.size() != ring.size()) rep.fail({{"property", "size"}, {"engine", t.size()}, {"ring", ring.size()}});
    for (std::size_t a = 0; a < ring.size(); ++a)
        for (std::size_t b = 0; b < ring.size(); ++b) {
            rep.count();
            const std::size_t ta = t.index_of(ring.weights()[a]), tb = t.index_of(ring.weights()[b]);
            const auto& row = t.product(ta, tb);
            const std::size_t c = ring.product(a, b);
            if (row.size() != 1 || row[0].second != 1 || row[0].first != t.index_of(ring.weights()[c]))
                rep.fail({{"lambda", ring.weights()[a].to_string()}, {"mu", ring.weights()[b].to_string()}, {"ring", ring.weights()[c].to_string()}});
        }
    return rep;
}

} // namespace rlshift

#endif
