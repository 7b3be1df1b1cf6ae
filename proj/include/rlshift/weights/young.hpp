#ifndef RLSHIFT_WEIGHTS_YOUNG_HPP
#define RLSHIFT_WEIGHTS_YOUNG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "affine_weight.hpp"

namespace rlshift {

/// Young diagram inside an r x s box (at most r rows, at most s columns). Rows
/// are stored padded with zeros to exactly r entries.
class YoungDiagram {
public:
    YoungDiagram() = default;

    YoungDiagram(std::vector<int> rows, int max_rows, int max_cols) : rows_(std::move(rows)), r_(max_rows), s_(max_cols)
    {
        if (r_ < 0 || s_ < 0) throw Error(Errc::invalid_argument, "diagram bounds must be nonnegative");
        while (rows_.size() > static_cast<std::size_t>(r_) && !rows_.empty() && rows_.back() == 0) rows_.pop_back();
        if (rows_.size() > static_cast<std::size_t>(r_)) throw Error(Errc::invalid_argument, "diagram has more than " + std::to_string(r_) + " rows");
        rows_.resize(static_cast<std::size_t>(r_), 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0 || rows_[i] > s_) throw Error(Errc::invalid_argument, "row length outside 0.." + std::to_string(s_));
            if (i > 0 && rows_[i] > rows_[i - 1]) throw Error(Errc::invalid_argument, "rows must be weakly decreasing");
        }
    }

    static YoungDiagram empty(int r, int s) { return YoungDiagram({}, r, s); }

    const std::vector<int>& rows() const noexcept { return rows_; }
    int max_rows() const noexcept { return r_; }
    int max_cols() const noexcept { return s_; }

    /// |Y|, the number of boxes.
    int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    /// c(Y), the number of columns (first row length).
    int columns() const { return rows_.empty() ? 0 : rows_[0]; }

    /// Rows and columns exchanged; lives in the s x r box.
    YoungDiagram transpose() const
    {
        std::vector<int> t(static_cast<std::size_t>(s_), 0);
        for (int c = 1; c <= s_; ++c)
            t[static_cast<std::size_t>(c - 1)] = static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [c](int a) { return a >= c; }));
        return YoungDiagram(std::move(t), s_, r_);
    }

    /// Complement in the box: (s - a_r, ..., s - a_1).
    YoungDiagram conjugate() const
    {
        std::vector<int> c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = s_ - rows_[rows_.size() - 1 - i];
        return YoungDiagram(std::move(c), r_, s_);
    }

    /// (Y^T)^c
    YoungDiagram star() const { return transpose().conjugate(); }

    /// "[3,1,0]"
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
        return s + "]";
    }

    static YoungDiagram parse(const std::string& text, int r, int s) { return YoungDiagram(AffineWeight::parse_int_list(text), r, s); }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.r_ == b.r_ && a.s_ == b.s_ && a.rows_ == b.rows_; }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) { return !(a == b); }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ < b.rows_; }

private:
    std::vector<int> rows_;
    int r_ = 0;
    int s_ = 0;
};

/// All diagrams in the r x s box, in lexicographic order of rows.
inline std::vector<YoungDiagram> all_diagrams(int r, int s)
{
    std::vector<YoungDiagram> out;
    std::vector<int> rows(static_cast<std::size_t>(r), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
        if (i == rows.size()) {
            out.emplace_back(rows, r, s);
            return;
        }
        for (int a = 0; a <= cap; ++a) {
            rows[i] = a;
            rec(i + 1, a);
        }
    };
    rec(0, s);
    return out;
}

/// Diagram of a weight of sp(2r) at level s: rows a_j = sum_{i >= j} k_i (r rows, at most s columns).
inline YoungDiagram sp_diagram(const AffineWeight& w)
{
    if (w.algebra().series != Series::C) throw Error(Errc::algebra_mismatch, "expected an sp weight");
    const auto& k = w.labels();
    std::vector<int> rows(k.size());
    int acc = 0;
    for (std::size_t j = k.size(); j-- > 0;) rows[j] = (acc += k[j]);
    return YoungDiagram(rows, w.algebra().rank, w.level());
}

inline AffineWeight sp_weight(const YoungDiagram& y)
{
    const int r = y.max_rows();
    std::vector<int> k(static_cast<std::size_t>(r));
    for (std::size_t j = 0; j < k.size(); ++j) k[j] = y.rows()[j] - (j + 1 < k.size() ? y.rows()[j + 1] : 0);
    return AffineWeight(AlgebraId::make(Series::C, r), y.max_cols(), k);
}

/// Diagram of a weight of sl(r) at level s: r - 1 rows a_j = sum_{i >= j} k_i, at most s columns.
inline YoungDiagram sl_diagram(const AffineWeight& w)
{
    if (w.algebra().series != Series::A) throw Error(Errc::algebra_mismatch, "expected an sl weight");
    const auto& k = w.labels();
    std::vector<int> rows(k.size());
    int acc = 0;
    for (std::size_t j = k.size(); j-- > 0;) rows[j] = (acc += k[j]);
    return YoungDiagram(rows, w.algebra().rank, w.level());
}

/// sl(r) weight at level s from a diagram with at most r - 1 rows and s columns.
inline AffineWeight sl_weight(const YoungDiagram& y, int r)
{
    if (y.max_rows() != r - 1) throw Error(Errc::invalid_argument, "sl(r) diagrams have r - 1 rows");
    std::vector<int> k(static_cast<std::size_t>(r - 1));
    for (std::size_t j = 0; j < k.size(); ++j) k[j] = y.rows()[j] - (j + 1 < k.size() ? y.rows()[j + 1] : 0);
    return AffineWeight(AlgebraId::make(Series::A, r - 1), y.max_cols(), k);
}

/// Center action on sp(2r) level s weights: the diagram of omega*(lambda) is Y(lambda)^c.
inline AffineWeight sp_center_action(const AffineWeight& w)
{
    if (w.algebra().series != Series::C) throw Error(Errc::algebra_mismatch, "expected an sp weight");
    return center_elements(w.algebra()).at(1).act(w);
}

/// Rotation of the affine labels of an sl(r) weight by sigma.
inline AffineWeight sl_center_action(int sigma, const AffineWeight& w)
{
    if (w.algebra().series != Series::A) throw Error(Errc::algebra_mismatch, "expected an sl weight");
    return sl_rotation(w.algebra().rank + 1, sigma).act(w);
}

} // namespace rlshift

#endif
