#ifndef RLSHIFT_WEIGHTS_AFFINE_WEIGHT_HPP
#define RLSHIFT_WEIGHTS_AFFINE_WEIGHT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../rootdata/root_system.hpp"

namespace rlshift {

/// Comarks a_i^vee (coefficients of theta^vee in simple coroots) in closed form.
/// Agrees with RootSystem::comarks(); used where building root data is unnecessary.
inline std::vector<int> comarks_of(const AlgebraId& id)
{
    id.validate();
    const auto n = static_cast<std::size_t>(id.rank);
    std::vector<int> c(n, 1);
    switch (id.series) {
    case Series::A:
    case Series::C: break;
    case Series::B:
        for (std::size_t i = 1; i + 1 < n; ++i) c[i] = 2;
        break;
    case Series::D:
        for (std::size_t i = 1; i + 2 < n; ++i) c[i] = 2;
        break;
    }
    return c;
}

/// Dominant weight at level l, stored by its finite Dynkin labels k_1..k_rank;
/// k_0 = l - sum_i a_i^vee k_i.
class AffineWeight {
public:
    AffineWeight() = default;

    AffineWeight(const AlgebraId& id, int level, std::vector<int> labels) : id_(id), level_(level), labels_(std::move(labels))
    {
        id_.validate();
        if (level_ < 0) throw Error(Errc::invalid_argument, "level must be nonnegative");
        if (labels_.size() != static_cast<std::size_t>(id_.rank))
            throw Error(Errc::invalid_argument, "expected " + std::to_string(id_.rank) + " labels for " + id_.name());
        for (int k : labels_)
            if (k < 0) throw Error(Errc::invalid_argument, "Dynkin labels must be nonnegative");
        if (zeroth_label() < 0) throw Error(Errc::invalid_argument, "weight " + to_string() + " exceeds its level");
    }

    /// From affine labels k_0..k_rank (their comark-weighted sum is the level).
    static AffineWeight from_affine_labels(const AlgebraId& id, const std::vector<int>& affine)
    {
        const auto c = comarks_of(id);
        if (affine.size() != c.size() + 1) throw Error(Errc::invalid_argument, "wrong number of affine labels");
        int level = affine[0];
        for (std::size_t i = 0; i < c.size(); ++i) level += c[i] * affine[i + 1];
        return AffineWeight(id, level, std::vector<int>(affine.begin() + 1, affine.end()));
    }

    static AffineWeight vacuum(const AlgebraId& id, int level) { return AffineWeight(id, level, std::vector<int>(static_cast<std::size_t>(id.rank), 0)); }

    const AlgebraId& algebra() const noexcept { return id_; }
    int level() const noexcept { return level_; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    /// (lambda, theta) = sum_i a_i^vee k_i
    int theta_pairing() const
    {
        const auto c = comarks_of(id_);
        int t = 0;
        for (std::size_t i = 0; i < c.size(); ++i) t += c[i] * labels_[i];
        return t;
    }

    int zeroth_label() const { return level_ - theta_pairing(); }

    std::vector<int> affine_labels() const
    {
        std::vector<int> a{zeroth_label()};
        a.insert(a.end(), labels_.begin(), labels_.end());
        return a;
    }

    bool is_vacuum() const
    {
        for (int k : labels_)
            if (k != 0) return false;
        return true;
    }

    /// "A2:3:[1,0]"
    std::string to_string() const
    {
        std::string s = id_.name() + ":" + std::to_string(level_) + ":[";
        for (std::size_t i = 0; i < labels_.size(); ++i) s += (i ? "," : "") + std::to_string(labels_[i]);
        return s + "]";
    }

    static AffineWeight parse(const std::string& text)
    {
        const auto p1 = text.find(':');
        const auto p2 = p1 == std::string::npos ? std::string::npos : text.find(':', p1 + 1);
        if (p2 == std::string::npos) throw Error(Errc::parse_error, "weight must look like A2:3:[1,0], got '" + text + "'");
        const AlgebraId id = AlgebraId::parse(text.substr(0, p1));
        int level = 0;
        try {
            level = std::stoi(text.substr(p1 + 1, p2 - p1 - 1));
        } catch (...) {
            throw Error(Errc::parse_error, "bad level in '" + text + "'");
        }
        return AffineWeight(id, level, parse_int_list(text.substr(p2 + 1)));
    }

    /// Parses "[1,2,3]" (whitespace tolerated; "[]" is empty).
    static std::vector<int> parse_int_list(const std::string& text)
    {
        std::string t;
        for (char ch : text)
            if (ch != ' ' && ch != '\t') t += ch;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw Error(Errc::parse_error, "expected a bracketed list, got '" + text + "'");
        std::vector<int> out;
        std::string body = t.substr(1, t.size() - 2);
        if (body.empty()) return out;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) throw 0;
            } catch (...) {
                throw Error(Errc::parse_error, "bad integer '" + item + "' in '" + text + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    friend bool operator==(const AffineWeight& a, const AffineWeight& b)
    {
        return a.id_ == b.id_ && a.level_ == b.level_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const AffineWeight& a, const AffineWeight& b) { return !(a == b); }
    friend bool operator<(const AffineWeight& a, const AffineWeight& b)
    {
        return std::tie(a.id_, a.level_, a.labels_) < std::tie(b.id_, b.level_, b.labels_);
    }

private:
    AlgebraId id_;
    int level_ = 0;
    std::vector<int> labels_;
};

/// P_l(g): all dominant weights of level l, in lexicographic order of labels.
inline std::vector<AffineWeight> level_weights(const AlgebraId& id, int level)
{
    const auto c = comarks_of(id);
    std::vector<AffineWeight> out;
    std::vector<int> labels(c.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
        if (i == c.size()) {
            out.emplace_back(id, level, labels);
            return;
        }
        for (int k = 0; k * c[i] <= budget; ++k) {
            labels[i] = k;
            rec(i + 1, budget - k * c[i]);
        }
        labels[i] = 0;
    };
    rec(0, level);
    return out;
}

/// A diagram automorphism of the affine Dynkin diagram coming from the center,
/// as a permutation of nodes 0..rank: node i goes to node perm[i].
struct CenterElement {
    std::string name;
    std::vector<int> perm;

    bool is_identity() const
    {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        return true;
    }

    /// (this o other)(i) = this(other(i))
    CenterElement compose(const CenterElement& other) const
    {
        CenterElement c{name + "*" + other.name, std::vector<int>(perm.size())};
        for (std::size_t i = 0; i < perm.size(); ++i) c.perm[i] = perm[static_cast<std::size_t>(other.perm[i])];
        return c;
    }

    /// omega*(Lambda_i) = Lambda_{omega(i)}.
    AffineWeight act(const AffineWeight& w) const
    {
        const auto a = w.affine_labels();
        if (a.size() != perm.size()) throw Error(Errc::algebra_mismatch, "center element and weight have different ranks");
        std::vector<int> b(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) b[static_cast<std::size_t>(perm[i])] = a[i];
        return AffineWeight::from_affine_labels(w.algebra(), b);
    }
};

/// Rotation of the A_{r-1} affine diagram: Lambda_i -> Lambda_{(i + sigma) mod r}.
inline CenterElement sl_rotation(int r, int sigma)
{
    if (r < 2) throw Error(Errc::invalid_rank, "sl(r) needs r >= 2");
    CenterElement c{"rot" + std::to_string(((sigma % r) + r) % r), std::vector<int>(static_cast<std::size_t>(r))};
    for (int i = 0; i < r; ++i) c.perm[static_cast<std::size_t>(i)] = ((i + sigma) % r + r) % r;
    return c;
}

/// All elements of the center, realized on the affine diagram.
inline std::vector<CenterElement> center_elements(const AlgebraId& id)
{
    id.validate();
    const int n = id.rank;
    const auto nodes = static_cast<std::size_t>(n + 1);
    auto identity = [&] {
        CenterElement c{"id", std::vector<int>(nodes)};
        for (std::size_t i = 0; i < nodes; ++i) c.perm[i] = static_cast<int>(i);
        return c;
    };
    std::vector<CenterElement> out;
    switch (id.series) {
    case Series::A:
        for (int s = 0; s <= n; ++s) out.push_back(sl_rotation(n + 1, s));
        out[0].name = "id";
        break;
    case Series::B: {
        out.push_back(identity());
        CenterElement v = identity();
        v.name = "v";
        std::swap(v.perm[0], v.perm[1]);
        out.push_back(v);
        break;
    }
    case Series::C: {
        out.push_back(identity());
        CenterElement f{"flip", std::vector<int>(nodes)};
        for (int i = 0; i <= n; ++i) f.perm[static_cast<std::size_t>(i)] = n - i;
        out.push_back(f);
        break;
    }
    case Series::D: {
        const auto un = static_cast<std::size_t>(n);
        CenterElement v = identity();
        v.name = "v";
        std::swap(v.perm[0], v.perm[1]);
        std::swap(v.perm[un - 1], v.perm[un]);
        CenterElement s{"s", std::vector<int>(nodes)};
        for (int i = 0; i <= n; ++i) s.perm[static_cast<std::size_t>(i)] = n - i;
        if (n % 2) {
            s.perm[0] = n;
            s.perm[un] = 1;
            s.perm[1] = n - 1;
            s.perm[un - 1] = 0;
        }
        out.push_back(identity());
        if (n % 2 == 0) {
            out.push_back(v);
            out.push_back(s);
            CenterElement vs = v.compose(s);
            vs.name = "vs";
            out.push_back(vs);
        } else {
            out.push_back(s);
            CenterElement s2 = s.compose(s), s3 = s2.compose(s);
            s2.name = "s2";
            s3.name = "s3";
            out.push_back(s2);
            out.push_back(s3);
        }
        break;
    }
    }
    return out;
}

inline CenterElement center_element(const AlgebraId& id, const std::string& name)
{
    for (auto& c : center_elements(id))
        if (c.name == name) return c;
    if (id.series == Series::A) {
        try {
            return sl_rotation(id.rank + 1, std::stoi(name));
        } catch (const std::logic_error&) {
        }
    }
    throw Error(Errc::parse_error, "no center element '" + name + "' for " + id.name());
}

/// Throws CenterProductNotIdentity unless the composition of all elements is the identity.
inline void require_center_product_identity(const std::vector<CenterElement>& omegas)
{
    if (omegas.empty()) return;
    CenterElement p = omegas[0];
    for (std::size_t i = 1; i < omegas.size(); ++i) p = p.compose(omegas[i]);
    if (!p.is_identity()) throw Error(Errc::center_product_not_identity, "product of center elements is " + p.name + ", not the identity");
}

/// Affine Cartan matrix a_ij = alpha_j(H_i), i, j in 0..rank, with alpha_0 = -theta, H_0 = -theta^vee.
inline std::vector<std::vector<int>> affine_cartan_matrix(const RootSystem& rs)
{
    const std::size_t r = rs.rank();
    const std::size_t th = rs.highest_root();
    auto root_idx = [&](std::size_t j) { return j == 0 ? th : rs.simple_root(j - 1); };
    auto coroot = [&](std::size_t i) { return i == 0 ? rs.coroot(th) : rs.simple_coroot(i - 1); };
    std::vector<std::vector<int>> a(r + 1, std::vector<int>(r + 1));
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
            const int sign = (i == 0) != (j == 0) ? -1 : 1;
            a[i][j] = sign * static_cast<int>(to_long(rs.root_value(root_idx(j), coroot(i))));
        }
    return a;
}

} // namespace rlshift

#endif
