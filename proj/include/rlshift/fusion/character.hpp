#ifndef RLSHIFT_FUSION_CHARACTER_HPP
#define RLSHIFT_FUSION_CHARACTER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "weight_lattice.hpp"

namespace rlshift {

/// Multiplicities of the dominant weights of V(lambda), by Freudenthal's formula.
inline std::map<Labels, long> dominant_character(const WeightLattice& lat, const Labels& lambda)
{
    if (!lat.is_dominant(lambda)) throw Error(Errc::invalid_argument, "highest weight must be dominant");
    const std::size_t n = lat.rank();
    const auto& pos = lat.positive_roots();

    // Dominant weights below lambda, reached by subtracting positive roots.
    std::map<Labels, long> depth{{lambda, 0}};
    std::vector<Labels> order{lambda};
    for (std::size_t k = 0; k < order.size(); ++k)
        for (const auto& a : pos) {
            Labels m = order[k];
            for (std::size_t i = 0; i < n; ++i) m[i] -= a[i];
            if (!lat.is_dominant(m) || depth.count(m)) continue;
            Labels d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = lambda[i] - m[i];
            const auto c = lat.root_coordinates(d);
            depth[m] = std::accumulate(c->begin(), c->end(), 0L);
            order.push_back(std::move(m));
        }
    std::stable_sort(order.begin(), order.end(), [&](const Labels& x, const Labels& y) { return depth[x] < depth[y]; });

    Labels lr = lambda;
    for (std::size_t i = 0; i < n; ++i) lr[i] += lat.rho()[i];
    const long top = lat.scaled_inner(lr, lr);

    std::map<Labels, long> mult{{lambda, 1}};
    auto lookup = [&](const Labels& x) -> long {
        const auto it = mult.find(lat.to_dominant(x).weight);
        return it == mult.end() ? 0 : it->second;
    };
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Labels& mu = order[k];
        long num = 0;
        for (const auto& a : pos) {
            Labels x = mu;
            for (;;) {
                for (std::size_t i = 0; i < n; ++i) x[i] += a[i];
                const Labels dom = lat.to_dominant(x).weight;
                if (!lat.dominated_by(dom, lambda)) break;
                num += lookup(x) * lat.scaled_inner(x, a);
            }
        }
        Labels mr = mu;
        for (std::size_t i = 0; i < n; ++i) mr[i] += lat.rho()[i];
        const long den = top - lat.scaled_inner(mr, mr);
        if (den <= 0 || (2 * num) % den != 0) throw Error(Errc::internal_inconsistency, "Freudenthal recursion did not give an integer");
        mult[mu] = 2 * num / den;
    }
    for (auto it = mult.begin(); it != mult.end();) it = it->second == 0 ? mult.erase(it) : std::next(it);
    return mult;
}

/// All weights of V(lambda) with multiplicities.
inline std::vector<std::pair<Labels, long>> weight_system(const WeightLattice& lat, const Labels& lambda)
{
    std::vector<std::pair<Labels, long>> out;
    for (const auto& [mu, m] : dominant_character(lat, lambda))
        for (auto& w : lat.orbit(mu)) out.emplace_back(std::move(w), m);
    std::sort(out.begin(), out.end());
    return out;
}

/// Weyl dimension formula, as an independent check on the character.
inline long weyl_dimension(const WeightLattice& lat, const Labels& lambda)
{
    Labels lr = lambda;
    for (std::size_t i = 0; i < lat.rank(); ++i) lr[i] += lat.rho()[i];
    Rational d(1);
    for (const auto& a : lat.positive_roots()) d *= lat.inner(lr, a) / lat.inner(lat.rho(), a);
    return to_long(d);
}

/// Classical tensor product V(lambda) x V(mu) by Racah-Speiser reflection.
inline std::map<Labels, long> tensor_product(const WeightLattice& lat, const Labels& lambda, const Labels& mu)
{
    const std::size_t n = lat.rank();
    std::map<Labels, long> out;
    for (const auto& [nu, m] : weight_system(lat, mu)) {
        Labels x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = lambda[i] + nu[i] + lat.rho()[i];
        const ChamberImage c = lat.to_dominant(std::move(x));
        if (c.on_wall) continue;
        Labels w = c.weight;
        for (std::size_t i = 0; i < n; ++i) w[i] -= lat.rho()[i];
        out[w] += c.sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw Error(Errc::internal_inconsistency, "negative tensor multiplicity");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

} // namespace rlshift

#endif
