#ifndef RLSHIFT_FUSION_WEIGHT_LATTICE_HPP
#define RLSHIFT_FUSION_WEIGHT_LATTICE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/rational.hpp"
#include "../rootdata/root_system.hpp"
#include "../weights/affine_weight.hpp"

namespace rlshift {

/// Integral weight in Dynkin labels (coordinates on the fundamental weights).
using Labels = std::vector<long>;

/// Result of moving a weight into the dominant chamber by simple reflections.
struct ChamberImage {
    Labels weight;
    int sign = 1;        ///< (-1)^{length of the Weyl element used}
    bool on_wall = false; ///< some label of the result is zero
};

/// Weight-lattice data of a classical algebra in fundamental-weight coordinates,
/// with the form normalized so that long roots have square length 2.
class WeightLattice {
public:
    explicit WeightLattice(const AlgebraId& id) : WeightLattice(build_root_system(id)) {}

    explicit WeightLattice(const RootSystem& rs) : id_(rs.algebra()), n_(rs.rank())
    {
        cartan_ = rs.cartan_matrix();
        comarks_ = rs.comarks();
        dual_coxeter_ = rs.dual_coxeter();
        std::vector<std::vector<Rational>> g(n_, std::vector<Rational>(n_));
        Integer den = 1;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                g[i][j] = rs.form(rs.fundamental_weight(i), rs.fundamental_weight(j));
                den = lcm(den, g[i][j].get_den());
            }
        denom_ = den.get_si();
        gram_.assign(n_, std::vector<long>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) gram_[i][j] = to_long(g[i][j] * Rational(den));
        for (std::size_t a = 0; a < rs.npos(); ++a) {
            const auto& c = rs.root(a).coords;
            Labels l(n_, 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) l[i] += static_cast<long>(cartan_[i][j]) * c[j];
            positive_.push_back(std::move(l));
        }
        theta_ = positive_.at(rs.highest_root());
        rho_.assign(n_, 1);
        if (inner(theta_, theta_) != Rational(2)) throw Error(Errc::internal_inconsistency, "highest root does not have square length 2");
        // Inverse Cartan matrix, used for root-lattice membership.
        RationalMatrix a(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a(i, j) = Rational(cartan_[i][j]);
        auto inv = inverse(a);
        if (!inv) throw Error(Errc::internal_inconsistency, "singular Cartan matrix");
        inverse_cartan_ = *inv;
    }

    const AlgebraId& algebra() const noexcept { return id_; }
    std::size_t rank() const noexcept { return n_; }
    int dual_coxeter() const noexcept { return dual_coxeter_; }
    const std::vector<int>& comarks() const noexcept { return comarks_; }
    const Labels& rho() const noexcept { return rho_; }
    const Labels& theta() const noexcept { return theta_; }
    const std::vector<Labels>& positive_roots() const noexcept { return positive_; }

    Labels zero() const { return Labels(n_, 0); }

    /// Labels of the simple root alpha_i: column i of the Cartan matrix.
    Labels simple_root(std::size_t i) const
    {
        Labels l(n_);
        for (std::size_t k = 0; k < n_; ++k) l[k] = cartan_[k][i];
        return l;
    }

    /// (x, y) scaled by the common denominator; exact integer.
    long scaled_inner(const Labels& x, const Labels& y) const
    {
        long s = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s += x[i] * gram_[i][j] * y[j];
        return s;
    }
    long form_denominator() const noexcept { return denom_; }
    Rational inner(const Labels& x, const Labels& y) const { return rat(scaled_inner(x, y), denom_); }
    long double inner_real(const Labels& x, const Labels& y) const
    {
        return static_cast<long double>(scaled_inner(x, y)) / static_cast<long double>(denom_);
    }

    /// <x, theta^vee> = sum of comark * label.
    long theta_pairing(const Labels& x) const
    {
        long s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += comarks_[i] * x[i];
        return s;
    }

    void reflect(Labels& x, std::size_t i) const
    {
        const long c = x[i];
        if (c == 0) return;
        for (std::size_t k = 0; k < n_; ++k) x[k] -= c * cartan_[k][i];
    }

    ChamberImage to_dominant(Labels x) const
    {
        ChamberImage r;
        for (;;) {
            std::size_t i = 0;
            while (i < n_ && x[i] >= 0) ++i;
            if (i == n_) break;
            reflect(x, i);
            r.sign = -r.sign;
        }
        for (long v : x) r.on_wall = r.on_wall || v == 0;
        r.weight = std::move(x);
        return r;
    }

    bool is_dominant(const Labels& x) const
    {
        for (long v : x)
            if (v < 0) return false;
        return true;
    }

    /// -w_0(x): the dominant conjugate of -x.
    Labels dual(const Labels& x) const
    {
        Labels m(n_);
        for (std::size_t i = 0; i < n_; ++i) m[i] = -x[i];
        return to_dominant(std::move(m)).weight;
    }

    /// Coordinates of x on the simple roots, if x is in the root lattice.
    std::optional<std::vector<long>> root_coordinates(const Labels& x) const
    {
        std::vector<long> c(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < n_; ++j) s += inverse_cartan_(i, j) * Rational(x[j]);
            if (!is_integer(s)) return std::nullopt;
            c[i] = to_long(s);
        }
        return c;
    }

    /// mu <= lambda in the dominance order (lambda - mu a nonnegative sum of simple roots).
    bool dominated_by(const Labels& mu, const Labels& lambda) const
    {
        Labels d(n_);
        for (std::size_t i = 0; i < n_; ++i) d[i] = lambda[i] - mu[i];
        const auto c = root_coordinates(d);
        if (!c) return false;
        for (long v : *c)
            if (v < 0) return false;
        return true;
    }

    /// The Weyl orbit of x.
    std::vector<Labels> orbit(const Labels& x) const
    {
        std::set<Labels> seen{x};
        std::vector<Labels> todo{x};
        while (!todo.empty()) {
            Labels y = std::move(todo.back());
            todo.pop_back();
            for (std::size_t i = 0; i < n_; ++i) {
                if (y[i] == 0) continue;
                Labels z = y;
                reflect(z, i);
                if (seen.insert(z).second) todo.push_back(std::move(z));
            }
        }
        return {seen.begin(), seen.end()};
    }

    /// Every Weyl group element as a reflection word, with its sign. Enumerated
    /// through the orbit of rho, which is regular and so in bijection with W.
    const std::vector<std::pair<std::vector<std::size_t>, int>>& weyl_words() const
    {
        std::call_once(cache_->once, [this] {
            auto& words = cache_->words;
            std::map<Labels, std::size_t> seen{{rho_, 0}};
            words.push_back({{}, 1});
            std::vector<Labels> points{rho_};
            for (std::size_t k = 0; k < points.size(); ++k)
                for (std::size_t i = 0; i < n_; ++i) {
                    Labels z = points[k];
                    reflect(z, i);
                    if (seen.emplace(z, points.size()).second) {
                        auto w = words[k].first;
                        w.insert(w.begin(), i); // s_i applied after w_k
                        words.push_back({std::move(w), -words[k].second});
                        points.push_back(std::move(z));
                    }
                }
        });
        return cache_->words;
    }

    /// Applies a word from weyl_words(): the last letter acts first.
    Labels apply_word(const std::vector<std::size_t>& word, Labels x) const
    {
        for (std::size_t k = word.size(); k-- > 0;) reflect(x, word[k]);
        return x;
    }

    static Labels from_affine(const AffineWeight& w)
    {
        return Labels(w.labels().begin(), w.labels().end());
    }

    AffineWeight to_affine(const Labels& x, int level) const
    {
        return AffineWeight(id_, level, std::vector<int>(x.begin(), x.end()));
    }

private:
    AlgebraId id_;
    std::size_t n_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<long>> gram_;
    long denom_ = 1;
    std::vector<int> comarks_;
    int dual_coxeter_ = 0;
    std::vector<Labels> positive_;
    Labels theta_;
    Labels rho_;
    RationalMatrix inverse_cartan_;
    struct WordCache {
        std::once_flag once;
        std::vector<std::pair<std::vector<std::size_t>, int>> words;
    };
    std::shared_ptr<WordCache> cache_ = std::make_shared<WordCache>();
};

} // namespace rlshift

#endif
