#ifndef RLSHIFT_WEIGHTS_BRANCHING_HPP
#define RLSHIFT_WEIGHTS_BRANCHING_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../report.hpp"
#include "affine_weight.hpp"
#include "young.hpp"

namespace rlshift {

/// Intermediate sequences of the beta map, kept for display.
struct BetaTrace {
    std::vector<int> k; ///< k_1..k_r, shifted labels with k_r = k_0
    std::vector<int> a; ///< a_j = sum_{i=j}^r k_i
    std::vector<int> q; ///< complement of a in {1..r+s}, decreasing
    std::vector<int> b; ///< b_j = r + s + q_s - q_{s-j+1}
    AffineWeight result;
};

/// beta : P_s(sl(r)) -> P_r(sl(s)) through the a/q/b decreasing sequences.
inline BetaTrace beta_trace(const AffineWeight& w)
{
    if (w.algebra().series != Series::A) throw Error(Errc::algebra_mismatch, "beta is defined on sl weights");
    const int r = w.algebra().rank + 1;
    const int s = w.level();
    if (s < 2) throw Error(Errc::invalid_argument, "beta needs level s >= 2 so that sl(s) is simple");
    const auto ur = static_cast<std::size_t>(r);
    const auto us = static_cast<std::size_t>(s);
    const auto aff = w.affine_labels();
    BetaTrace t;
    t.k.resize(ur);
    for (std::size_t j = 1; j < ur; ++j) t.k[j - 1] = aff[j] + 1;
    t.k[ur - 1] = aff[0] + 1;
    t.a.resize(ur);
    int acc = 0;
    for (std::size_t j = ur; j-- > 0;) t.a[j] = (acc += t.k[j]);
    const std::set<int> in_a(t.a.begin(), t.a.end());
    for (int v = r + s; v >= 1; --v)
        if (!in_a.count(v)) t.q.push_back(v);
    if (t.q.size() != us) throw Error(Errc::internal_inconsistency, "complement of a has the wrong size");
    t.b.resize(us);
    for (std::size_t j = 1; j <= us; ++j) t.b[j - 1] = r + s + t.q[us - 1] - t.q[us - j];
    for (std::size_t j = 0; j + 1 < us; ++j)
        if (t.b[j] <= t.b[j + 1]) throw Error(Errc::internal_inconsistency, "b sequence is not strictly decreasing");
    // Invert k -> a on the sl(s) side, then subtract rho.
    std::vector<int> kp(us);
    for (std::size_t j = 0; j + 1 < us; ++j) kp[j] = t.b[j] - t.b[j + 1];
    kp[us - 1] = t.b[us - 1];
    std::vector<int> affine(us);
    affine[0] = kp[us - 1] - 1;
    for (std::size_t j = 1; j < us; ++j) affine[j] = kp[j - 1] - 1;
    for (int x : affine)
        if (x < 0) throw Error(Errc::internal_inconsistency, "beta produced a negative label");
    t.result = AffineWeight::from_affine_labels(AlgebraId::make(Series::A, s - 1), affine);
    if (t.result.level() != r) throw Error(Errc::internal_inconsistency, "beta image has the wrong level");
    return t;
}

inline AffineWeight beta_map(const AffineWeight& w) { return beta_trace(w).result; }

/// lambda^T: transpose Y(lambda), then delete the columns of length s.
inline AffineWeight modified_transpose(const AffineWeight& w)
{
    const YoungDiagram y = sl_diagram(w);
    const int r = w.algebra().rank + 1;
    const int s = w.level();
    const YoungDiagram t = y.transpose(); // s rows, at most r - 1 columns
    const int full = t.rows().empty() ? 0 : t.rows().back();
    std::vector<int> rows;
    for (std::size_t i = 0; i + 1 < t.rows().size(); ++i) rows.push_back(t.rows()[i] - full);
    return sl_weight(YoungDiagram(rows, s - 1, r), s);
}

/// c(lambda) and |Y(lambda)| for sl weights.
inline int diagram_columns(const AffineWeight& w) { return sl_diagram(w).columns(); }
inline int diagram_size(const AffineWeight& w) { return sl_diagram(w).size(); }

/// delta(lambda, sigma) = |Y| + rs + r (sigma - c(Y)), reduced mod rs.
inline int branching_delta(const AffineWeight& w, int sigma)
{
    const int r = w.algebra().rank + 1;
    const int s = w.level();
    const int rs = r * s;
    const long d = diagram_size(w) + rs + static_cast<long>(r) * (sigma - diagram_columns(w));
    return static_cast<int>(((d % rs) + rs) % rs);
}

/// Multiplicity (0 or 1) of the sl(r) level s weight lambda and the sl(s) level r
/// weight gamma in the level-1 sl(rs) module with index big_lambda.
inline int branching_multiplicity(const AffineWeight& lambda, const AffineWeight& gamma, int big_lambda)
{
    const int r = lambda.algebra().rank + 1;
    const int s = lambda.level();
    if (gamma.algebra() != AlgebraId::make(Series::A, s - 1) || gamma.level() != r)
        throw Error(Errc::algebra_mismatch, "gamma must be an sl(s) weight at level r");
    if (big_lambda < 0 || big_lambda >= r * s) throw Error(Errc::invalid_argument, "level-one index out of range");
    const AffineWeight b = beta_map(lambda);
    for (int sigma = 0; sigma < s; ++sigma)
        if (sl_center_action(sigma, b) == gamma && branching_delta(lambda, sigma) == big_lambda) return 1;
    return 0;
}

/// Triples (gamma, Lambda) with multiplicity one for a given lambda: one per sigma.
struct BranchingTriple {
    AffineWeight lambda;
    AffineWeight gamma;
    int big_lambda = 0;
    int sigma = 0;
};

inline std::vector<BranchingTriple> branching_partners(const AffineWeight& lambda)
{
    std::vector<BranchingTriple> out;
    const AffineWeight b = beta_map(lambda);
    for (int sigma = 0; sigma < lambda.level(); ++sigma)
        out.push_back({lambda, sl_center_action(sigma, b), branching_delta(lambda, sigma), sigma});
    return out;
}

/// omega(lambda*) = lambda^T on every diagram in the r x s box, plus (Y^T)^c = (Y^c)^T.
inline Report verify_diagram_identities(int r, int s)
{
    Report rep = Report::check("center action on starred diagram equals transpose", "diagram-identities", Json{{"r", r}, {"s", s}});
    for (const auto& y : all_diagrams(r, s)) {
        rep.count();
        if (y.transpose().conjugate() != y.conjugate().transpose())
            rep.fail({{"identity", "(Y^T)^c = (Y^c)^T"}, {"Y", y.to_string()}});
        {
            rep.count();
            // lambda* is a level-r weight of sp(2s); omega acts there by complement.
            const AffineWeight star = sp_weight(y.star());
            const AffineWeight lhs = sp_center_action(star);
            const AffineWeight rhs = sp_weight(y.transpose());
            if (lhs != rhs) rep.fail({{"identity", "omega(Y*) = Y^T"}, {"Y", y.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
        }
    }
    return rep;
}

/// sigma . beta(lambda) = lambda^T with sigma = c(lambda) mod s, orbit bijection,
/// and delta assigning exactly one Lambda per (lambda, sigma).
inline Report verify_beta_properties(int r, int s, bool check_delta = true)
{
    Report rep = Report::check("sigma.beta(lambda) equals modified transpose with sigma = c(lambda)", "beta", Json{{"r", r}, {"s", s}});
    const AlgebraId src = AlgebraId::make(Series::A, r - 1);
    
    const auto weights = level_weights(src, s);
    for (const auto& w : weights) {
        rep.count();
        const AffineWeight b = beta_map(w);

        const int sigma = diagram_columns(w) % s;
        const AffineWeight lhs = sl_center_action(sigma, b);
        const AffineWeight rhs = modified_transpose(w);
        if (lhs != rhs) rep.fail({{"lambda", w.to_string()}, {"sigmaBeta", lhs.to_string()}, {"transpose", rhs.to_string()}});
        if (check_delta) {
            for (int sg = 0; sg < s; ++sg) {
                rep.count();
                const AffineWeight gamma = sl_center_action(sg, b);
                int hits = 0;
                for (int L = 0; L < r * s; ++L) hits += branching_multiplicity(w, gamma, L);
                // gamma may be hit by several sigma when beta(lambda) has a nontrivial stabilizer.
                int expected_max = 0;
                for (int t = 0; t < s; ++t) expected_max += sl_center_action(t, b) == gamma ? 1 : 0;
                if (hits < 1 || hits > expected_max)
                    rep.fail({{"lambda", w.to_string()}, {"sigma", sg}, {"levelOneHits", hits}});
            }
        }
    }
    // beta induces a bijection between Z/r orbits of P_s(sl(r)) and Z/s orbits of P_r(sl(s)).
    const auto orbit_of = [](const AffineWeight& w) {
        const int n = w.algebra().rank + 1;
        std::set<AffineWeight> o;
        for (int t = 0; t < n; ++t) o.insert(sl_center_action(t, w));
        return o;
    };
    std::set<std::set<AffineWeight>> source_orbits, image_orbits;
    for (const auto& w : weights) source_orbits.insert(orbit_of(w));
    for (const auto& orbit : source_orbits) {
        rep.count();
        std::set<AffineWeight> hit;
        for (const auto& w : orbit) {
            const AffineWeight b = beta_map(w);
            for (int sg = 0; sg < s; ++sg) hit.insert(sl_center_action(sg, b));
        }
        const auto target = orbit_of(*hit.begin());
        if (hit != target) rep.fail({{"property", "orbit maps onto one orbit"}, {"lambda", orbit.begin()->to_string()}});
        image_orbits.insert(target);
    }
    std::set<std::set<AffineWeight>> all_target_orbits;
    for (const auto& g : level_weights(AlgebraId::make(Series::A, s - 1), r)) all_target_orbits.insert(orbit_of(g));
    rep.count();
    if (image_orbits.size() != source_orbits.size() || image_orbits != all_target_orbits)
        rep.fail({{"property", "orbit bijection"}, {"sourceOrbits", source_orbits.size()},
                  {"imageOrbits", image_orbits.size()}, {"targetOrbits", all_target_orbits.size()}});
    return rep;
}

} // namespace rlshift

#endif
