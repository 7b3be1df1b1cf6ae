#ifndef RLSHIFT_FUSION_VERLINDE_HPP
#define RLSHIFT_FUSION_VERLINDE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../weights/affine_weight.hpp"
#include "weight_lattice.hpp"

namespace rlshift {

using Complex = std::complex<long double>;

/// Modular S-matrix at a level from the Kac-Peterson sum over the Weyl group,
/// normalized to be unitary with S_{0,0} real positive.
class SMatrix {
public:
    SMatrix(const AlgebraId& id, int level) : SMatrix(std::make_shared<const WeightLattice>(id), level) {}

    SMatrix(std::shared_ptr<const WeightLattice> lat, int level) : lat_(std::move(lat)), level_(level)
    {
        if (level < 1) throw Error(Errc::invalid_argument, "level must be at least 1");
        weights_ = level_weights(lat_->algebra(), level);
        const std::size_t p = weights_.size();
        const std::size_t n = lat_->rank();
        const long double k = static_cast<long double>(level + lat_->dual_coxeter());
        const long double two_pi = 2.0L * std::acos(-1.0L);
        std::vector<Labels> shifted(p);
        for (std::size_t i = 0; i < p; ++i) {
            shifted[i] = WeightLattice::from_affine(weights_[i]);
            for (std::size_t j = 0; j < n; ++j) shifted[i][j] += lat_->rho()[j];
        }
        s_.assign(p * p, Complex(0));
        for (std::size_t a = 0; a < p; ++a)
            for (const auto& [word, sign] : lat_->weyl_words()) {
                const Labels wa = lat_->apply_word(word, shifted[a]);
                for (std::size_t b = 0; b < p; ++b) {
                    const long double phase = -two_pi * lat_->inner_real(wa, shifted[b]) / k;
                    s_[a * p + b] += static_cast<long double>(sign) * Complex(std::cos(phase), std::sin(phase));
                }
            }
        long double norm = 0;
        for (std::size_t b = 0; b < p; ++b) norm += std::norm(s_[b]);
        const Complex fix = std::conj(s_[0]) / std::abs(s_[0]) / std::sqrt(norm);
        for (auto& x : s_) x *= fix;
    }

    const AlgebraId& algebra() const noexcept { return lat_->algebra(); }
    int level() const noexcept { return level_; }
    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<AffineWeight>& weights() const noexcept { return weights_; }
    const Complex& operator()(std::size_t a, std::size_t b) const { return s_.at(a * weights_.size() + b); }

    std::size_t index_of(const AffineWeight& w) const
    {
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (weights_[i] == w) return i;
        throw Error(Errc::algebra_mismatch, w.to_string() + " is not a weight of " + algebra().name() + " at level " + std::to_string(level_));
    }

    /// Largest entry of |S S^dagger - 1|.
    long double unitarity_defect() const
    {
        const std::size_t p = size();
        long double worst = 0;
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b) {
                Complex acc(0);
                for (std::size_t c = 0; c < p; ++c) acc += (*this)(a, c) * std::conj((*this)(b, c));
                worst = std::max(worst, std::abs(acc - Complex(a == b ? 1.0L : 0.0L)));
            }
        return worst;
    }

private:
    std::shared_ptr<const WeightLattice> lat_;
    int level_ = 0;
    std::vector<AffineWeight> weights_;
    std::vector<Complex> s_;
};

/// sum_mu prod_i S_{lambda_i mu} / S_{0 mu}^{n-2}. Throws PrecisionLoss when the
/// value is farther than tolerance from an integer (real and imaginary parts).
inline long double numeric_verlinde_dimension(const SMatrix& s, const std::vector<std::size_t>& idx, long double tolerance = 1e-6L)
{
    Complex total(0);
    const long double n = static_cast<long double>(idx.size());
    for (std::size_t mu = 0; mu < s.size(); ++mu) {
        Complex term = std::pow(s(0, mu), 2.0L - n);
        for (std::size_t i : idx) term *= s(i, mu);
        total += term;
    }
    const long double re = total.real();
    if (std::fabs(re - std::round(re)) > tolerance || std::fabs(total.imag()) > tolerance)
        throw Error(Errc::precision_loss, "Verlinde sum " + std::to_string(static_cast<double>(re)) + " + " +
                                              std::to_string(static_cast<double>(total.imag())) + "i is not within tolerance of an integer");
    return re;
}

inline long double numeric_verlinde_dimension(const SMatrix& s, const std::vector<AffineWeight>& ws, long double tolerance = 1e-6L)
{
    std::vector<std::size_t> idx;
    for (const auto& w : ws) idx.push_back(s.index_of(w));
    return numeric_verlinde_dimension(s, idx, tolerance);
}

} // namespace rlshift

#endif
