#ifndef RTMLV_HOPF_HPP
#define RTMLV_HOPF_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rtmlv/rational.hpp"

namespace rtmlv {

// Rooted trees in canonical form. A tree is stored as its bracket code:
// "[]" is the single vertex, and in general code = '[' + codes of the
// children (sorted) + ']'. Children are ordered by (degree, code), so two
// trees are equal iff their codes are equal.
class Tree {
  public:
    // Single vertex.
    Tree() : code_("[]") {}

    // Tree whose root has the given child subtrees (any order).
    explicit Tree(std::vector<Tree> children) {
        std::sort(children.begin(), children.end());
        std::size_t n = 2;
        for (const Tree& c : children) n += c.code_.size();
        code_.reserve(n);
        code_ += '[';
        for (const Tree& c : children) code_ += c.code_;
        code_ += ']';
    }

    const std::string& code() const { return code_; }
    int degree() const { return static_cast<int>(code_.size() / 2); }

    std::vector<Tree> children() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.code_ == b.code_; }
    friend bool operator<(const Tree& a, const Tree& b) {
        if (a.code_.size() != b.code_.size()) return a.code_.size() < b.code_.size();
        return a.code_ < b.code_;
    }

  private:
    std::string code_;
};

// A forest is a multiset of trees; the empty forest is the algebra unit.
class Forest {
  public:
    Forest() = default;
    explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
        std::sort(trees_.begin(), trees_.end());
        rebuild();
    }
    explicit Forest(const Tree& t) : trees_{t} { rebuild(); }

    const std::vector<Tree>& trees() const { return trees_; }
    const std::string& code() const { return code_; }
    int degree() const { return static_cast<int>(code_.size() / 2); }
    bool empty() const { return trees_.empty(); }

    Forest mul(const Forest& other) const {
        std::vector<Tree> ts = trees_;
        ts.insert(ts.end(), other.trees_.begin(), other.trees_.end());
        return Forest(std::move(ts));
    }

    // The forest with tree #i removed, paired with that tree.
    std::pair<Tree, Forest> split_least() const {
        if (trees_.empty()) throw std::logic_error("split_least on empty forest");
        std::vector<Tree> rest(trees_.begin() + 1, trees_.end());
        return {trees_.front(), Forest(std::move(rest))};
    }

    friend bool operator==(const Forest& a, const Forest& b) { return a.code_ == b.code_; }
    friend bool operator<(const Forest& a, const Forest& b) {
        if (a.code_.size() != b.code_.size()) return a.code_.size() < b.code_.size();
        return std::lexicographical_compare(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                            b.trees_.end());
    }

  private:
    void rebuild() {
        code_.clear();
        for (const Tree& t : trees_) code_ += t.code();
    }
    std::vector<Tree> trees_;
    std::string code_;
};

inline std::vector<Tree> Tree::children() const {
    std::vector<Tree> out;
    // Walk the interior of the code and cut at depth-0 boundaries.
    int depth = 0;
    std::size_t start = 1;
    for (std::size_t i = 1; i + 1 < code_.size(); ++i) {
        depth += code_[i] == '[' ? 1 : -1;
        if (depth == 0) {
            Tree c;
            c.code_ = code_.substr(start, i + 1 - start);
            out.push_back(std::move(c));
            start = i + 1;
        }
    }
    return out;
}

// Exact rational linear combination of forests.
class ForestSum {
  public:
    using Terms = std::map<Forest, Rational>;

    ForestSum() = default;
    explicit ForestSum(const Forest& f, const Rational& c = 1) { add(f, c); }
    explicit ForestSum(const Tree& t, const Rational& c = 1) { add(Forest(t), c); }

    static ForestSum unit() { return ForestSum(Forest{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Forest& f, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(f, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ForestSum& operator+=(const ForestSum& o) {
        for (const auto& [f, c] : o.terms_) add(f, c);
        return *this;
    }
    ForestSum& operator-=(const ForestSum& o) {
        for (const auto& [f, c] : o.terms_) add(f, -c);
        return *this;
    }
    friend ForestSum operator+(ForestSum a, const ForestSum& b) { return a += b; }
    friend ForestSum operator-(ForestSum a, const ForestSum& b) { return a -= b; }
    friend ForestSum operator*(const Rational& c, const ForestSum& a) {
        ForestSum out;
        if (c == 0) return out;
        for (const auto& [f, k] : a.terms_) out.terms_.emplace(f, c * k);
        return out;
    }
    friend ForestSum operator-(const ForestSum& a) { return Rational(-1) * a; }
    // Forest product, extended bilinearly.
    friend ForestSum operator*(const ForestSum& a, const ForestSum& b) {
        ForestSum out;
        for (const auto& [fa, ca] : a.terms_)
            for (const auto& [fb, cb] : b.terms_) out.add(fa.mul(fb), ca * cb);
        return out;
    }
    friend bool operator==(const ForestSum& a, const ForestSum& b) { return a.terms_ == b.terms_; }

  private:
    Terms terms_;
};

// Sparse element of the tensor square. Terms iterate with the left slot
// descending, matching the usual way coproducts are displayed.
struct TensorKeyOrder {
    bool operator()(const std::pair<Forest, Forest>& a,
                    const std::pair<Forest, Forest>& b) const {
        if (!(a.first == b.first)) return b.first < a.first;
        return a.second < b.second;
    }
};

class TensorSum {
  public:
    using Key = std::pair<Forest, Forest>;
    using Terms = std::map<Key, Rational, TensorKeyOrder>;

    TensorSum() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Forest& l, const Forest& r, const Rational& c) {
        if (c == 0) return;
        Key k{l, r};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorSum& operator+=(const TensorSum& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
    friend TensorSum operator*(const Rational& c, const TensorSum& a) {
        TensorSum out;
        if (c == 0) return out;
        for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
        return out;
    }
    // Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend TensorSum operator*(const TensorSum& a, const TensorSum& b) {
        TensorSum out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add(ka.first.mul(kb.first), ka.second.mul(kb.second), ca * cb);
        return out;
    }
    friend bool operator==(const TensorSum& a, const TensorSum& b) { return a.terms_ == b.terms_; }

  private:
    Terms terms_;
};

// Grafting: every forest term becomes the tree with that forest as children.
inline ForestSum b_plus(const ForestSum& f) {
    ForestSum out;
    for (const auto& [forest, c] : f.terms()) out.add(Forest(Tree(forest.trees())), c);
    return out;
}

inline Rational counit(const ForestSum& f) {
    auto it = f.terms().find(Forest{});
    return it == f.terms().end() ? Rational(0) : it->second;
}

namespace detail {

struct HopfCaches {
    std::mutex mu;
    std::map<Tree, TensorSum> coproducts;
    std::map<Tree, ForestSum> antipodes;
    std::map<int, std::vector<Tree>> trees_by_degree;
};

inline HopfCaches& hopf_caches() {
    static HopfCaches c;
    return c;
}

}  // namespace detail

TensorSum coproduct(const Forest& f);

// Coproduct of a single tree, via the grafting cocycle:
// D(B+(f)) = B+(f) (x) 1  +  (id (x) B+) D(f).
inline const TensorSum& coproduct(const Tree& t) {
    auto& caches = detail::hopf_caches();
    {
        std::scoped_lock lock(caches.mu);
        auto it = caches.coproducts.find(t);
        if (it != caches.coproducts.end()) return it->second;
    }
    TensorSum out;
    out.add(Forest(t), Forest{}, 1);
    TensorSum inner = coproduct(Forest(t.children()));
    for (const auto& [k, c] : inner.terms()) {
        out.add(k.first, Forest(Tree(k.second.trees())), c);
    }
    std::scoped_lock lock(caches.mu);
    return caches.coproducts.emplace(t, std::move(out)).first->second;
}

// Coproduct of a forest: multiplicative over the trees.
inline TensorSum coproduct(const Forest& f) {
    TensorSum out;
    out.add(Forest{}, Forest{}, 1);
    for (const Tree& t : f.trees()) out = out * coproduct(t);
    return out;
}

inline TensorSum coproduct(const ForestSum& f) {
    TensorSum out;
    for (const auto& [forest, c] : f.terms()) out += c * coproduct(forest);
    return out;
}

ForestSum antipode(const Forest& f);

// Antipode of a single tree by the connected-Hopf recursion
// S(t) = -sum_{f' != t} S(f') f'' over the coproduct terms.
inline const ForestSum& antipode(const Tree& t) {
    auto& caches = detail::hopf_caches();
    {
        std::scoped_lock lock(caches.mu);
        auto it = caches.antipodes.find(t);
        if (it != caches.antipodes.end()) return it->second;
    }
    ForestSum out;
    const Forest full(t);
    for (const auto& [k, c] : coproduct(t).terms()) {
        if (k.first == full) continue;
        out -= c * (antipode(k.first) * ForestSum(k.second));
    }
    std::scoped_lock lock(caches.mu);
    return caches.antipodes.emplace(t, std::move(out)).first->second;
}

inline ForestSum antipode(const Forest& f) {
    ForestSum out = ForestSum::unit();
    for (const Tree& t : f.trees()) out = out * antipode(t);
    return out;
}

inline ForestSum antipode(const ForestSum& f) {
    ForestSum out;
    for (const auto& [forest, c] : f.terms()) out += c * antipode(forest);
    return out;
}

// All canonical trees of degree d, ordered by (degree, code).
inline const std::vector<Tree>& enumerate_trees(int d);

// All canonical forests of exactly degree d, in (degree, code) order.
inline std::vector<Forest> enumerate_forests(int d) {
    if (d < 0) throw std::invalid_argument("forest degree must be nonnegative");
    std::vector<Forest> out;
    std::vector<Tree> acc;
    // Multisets are produced by choosing trees in non-decreasing order.
    auto rec = [&](auto&& self, int remaining, const Tree* min_tree) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int k = 1; k <= remaining; ++k) {
            for (const Tree& t : enumerate_trees(k)) {
                if (min_tree && t < *min_tree) continue;
                acc.push_back(t);
                self(self, remaining - k, &t);
                acc.pop_back();
            }
        }
    };
    rec(rec, d, nullptr);
    std::sort(out.begin(), out.end());
    return out;
}

inline const std::vector<Tree>& enumerate_trees(int d) {
    if (d < 1) throw std::invalid_argument("tree degree must be positive");
    auto& caches = detail::hopf_caches();
    {
        std::scoped_lock lock(caches.mu);
        auto it = caches.trees_by_degree.find(d);
        if (it != caches.trees_by_degree.end()) return it->second;
    }
    std::vector<Tree> out;
    for (const Forest& f : enumerate_forests(d - 1)) out.emplace_back(f.trees());
    std::sort(out.begin(), out.end());
    std::scoped_lock lock(caches.mu);
    return caches.trees_by_degree.emplace(d, std::move(out)).first->second;
}

inline std::vector<Forest> enumerate_forests_up_to(int dmax) {
    std::vector<Forest> out;
    for (int d = 0; d <= dmax; ++d) {
        auto fs = enumerate_forests(d);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

// Triple tensors, used when checking coassociativity.
using Tensor3 = std::map<std::tuple<Forest, Forest, Forest>, Rational>;

inline Tensor3 coproduct_on_left(const TensorSum& t) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
        const TensorSum inner = coproduct(k.first);
        for (const auto& [k2, c2] : inner.terms()) {
            auto key = std::make_tuple(k2.first, k2.second, k.second);
            auto [it, inserted] = out.emplace(key, c * c2);
            if (!inserted) {
                it->second += c * c2;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

inline Tensor3 coproduct_on_right(const TensorSum& t) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
        const TensorSum inner = coproduct(k.second);
        for (const auto& [k2, c2] : inner.terms()) {
            auto key = std::make_tuple(k.first, k2.first, k2.second);
            auto [it, inserted] = out.emplace(key, c * c2);
            if (!inserted) {
                it->second += c * c2;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace rtmlv

#endif
