#ifndef RTMLV_PRODUCTS_HPP
#define RTMLV_PRODUCTS_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rtmlv/words.hpp"

namespace rtmlv {

// Labelled single-rule faults for harness self-validation. Never active by
// default; the verify front end owns the switch.
enum class Mutation { none, diamond_rule_3_sign };

inline Mutation& active_mutation() {
    static Mutation m = Mutation::none;
    return m;
}

struct UnknownMutation : std::runtime_error {
    explicit UnknownMutation(const std::string& what) : std::runtime_error(what) {}
};

inline Mutation mutation_from_label(const std::string& label) {
    if (label.empty() || label == "none") return Mutation::none;
    if (label == "diamond_rule_3_sign") return Mutation::diamond_rule_3_sign;
    throw UnknownMutation("unknown mutation label: " + label);
}

class MutationGuard {
  public:
    explicit MutationGuard(Mutation m) : prev_(active_mutation()) { active_mutation() = m; }
    ~MutationGuard() { active_mutation() = prev_; }
    MutationGuard(const MutationGuard&) = delete;
    MutationGuard& operator=(const MutationGuard&) = delete;

  private:
    Mutation prev_;
};

// --- harmonic product ---------------------------------------------------------

// Word-level quasi-shuffle, computed by a prefix-pair table:
//   1 * w = w * 1 = w
//   vx * w = v * wx = (v * w) x
//   v y_s * w y_t = (v * w y_t) y_s + (v y_s * w) y_t + (v * w) x y_{st}
inline NCPoly harmonic(const Word& a, const Word& b) {
    a.require_same(b);
    const int r = a.modulus();
    const int n = a.degree(), m = b.degree();
    const NCPoly x = letter_x(r);
    std::vector<NCPoly> y(static_cast<std::size_t>(r), NCPoly(r));
    for (int j = 0; j < r; ++j) y[static_cast<std::size_t>(j)] = letter_y(r, j);

    // prefix-pair table, two rows at a time
    std::vector<NCPoly> prev, cur;
    prev.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        prev.push_back(NCPoly::from_word(Word(r, b.bytes().substr(0, static_cast<std::size_t>(j)))));
    cur.assign(static_cast<std::size_t>(m) + 1, NCPoly(r));
    for (int i = 1; i <= n; ++i) {
        Letter la = a.letter(i - 1);
        cur[0] = NCPoly::from_word(Word(r, a.bytes().substr(0, static_cast<std::size_t>(i))));
        for (int j = 1; j <= m; ++j) {
            Letter lb = b.letter(j - 1);
            if (la.is_x) {
                cur[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)] * x;
            } else if (lb.is_x) {
                cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] * x;
            } else {
                NCPoly cell = prev[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(la.j)];
                cell += cur[static_cast<std::size_t>(j - 1)] * y[static_cast<std::size_t>(lb.j)];
                cell += prev[static_cast<std::size_t>(j - 1)] *
                        NCPoly::from_word(Word(r).append_x().append_y((la.j + lb.j) % r));
                cur[static_cast<std::size_t>(j)] = std::move(cell);
            }
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(m)];
}

inline NCPoly harmonic(const NCPoly& p, const NCPoly& q) {
    p.require_same(q);
    NCPoly out(p.modulus());
    for (const auto& [wa, ca] : p.terms())
        for (const auto& [wb, cb] : q.terms()) out.add_scaled(harmonic(wa, wb), ca * cb);
    return out;
}

// Word-pair memo for harmonic products. Callers that hammer the same small
// pair set (the diamond closed form does) own one per run.
class HarmonicTable {
  public:
    const NCPoly& product(const Word& a, const Word& b) {
        Key key{a.modulus(), a.bytes(), b.bytes()};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(std::move(key), harmonic(a, b)).first->second;
    }

    NCPoly product(const NCPoly& p, const NCPoly& q) {
        p.require_same(q);
        NCPoly out(p.modulus());
        for (const auto& [wa, ca] : p.terms())
            for (const auto& [wb, cb] : q.terms()) out.add_scaled(product(wa, wb), ca * cb);
        return out;
    }

  private:
    using Key = std::tuple<int, std::string, std::string>;
    std::map<Key, NCPoly> memo_;
};

// --- diamond product ----------------------------------------------------------

// The modified harmonic product  <>_s : A_1 x A_r -> A_r, defined by peeling
// the rightmost letters. The left argument lives in the two-letter algebra.
// A memo table instance is a pure function table; callers own one per run so
// that an injected mutation can never poison shared state.
class DiamondTable {
  public:
    NCPoly diamond(const RootIndex& s, const NCPoly& v, const NCPoly& w) {
        if (v.modulus() != 1) throw ModulusMismatch("left diamond argument must have modulus 1");
        if (s.modulus() != w.modulus()) throw ModulusMismatch("twist modulus differs");
        NCPoly out(w.modulus());
        for (const auto& [wv, cv] : v.terms())
            for (const auto& [ww, cw] : w.terms())
                out.add_scaled(diamond_words(s, wv, ww), cv * cw);
        return out;
    }

    const NCPoly& diamond_words(const RootIndex& s, const Word& v, const Word& w) {
        const int r = s.modulus();
        Key key{r, s.j(), v.bytes(), w.bytes()};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        NCPoly out(r);
        if (v.empty()) {
            out = NCPoly::from_word(w);
        } else if (w.empty()) {
            out = apply_psi(s, apply_phi(embed_into(NCPoly::from_word(v), r)));
        } else {
            const Letter lv = v.last();
            const Letter lw = w.last();
            const Word V = v.drop_last();
            const Word W = w.drop_last();
            const bool mut3 = active_mutation() == Mutation::diamond_rule_3_sign;
            if (lv.is_x && lw.is_x) {
                // vx <> wx = (v <> wx) x - (vy <> w) x
                out = diamond_words(s, V, w) * letter_x(r);
                NCPoly t = diamond_words(s, V.append_y(0), W) * letter_x(r);
                out = mut3 ? out + t : out - t;
            } else if (!lv.is_x && lw.is_x) {
                // vy <> wx = (v <> wx) y + (vy <> w) x
                out = diamond_words(s, V, w) * letter_y(r, 0) +
                      diamond_words(s, v, W) * letter_x(r);
            } else if (lv.is_x && lw.j == 0) {
                // vx <> wy = (v <> wy) x + (vx <> w) y
                out = diamond_words(s, V, w) * letter_x(r) +
                      diamond_words(s, v, W) * letter_y(r, 0);
            } else if (!lv.is_x && lw.j == 0) {
                // vy <> wy = (v <> wy) y - (vx <> w) y
                out = diamond_words(s, V, w) * letter_y(r, 0) -
                      diamond_words(s, V.append_x(), W) * letter_y(r, 0);
            } else if (lv.is_x) {
                // vx <> w y_t = (v <> w y_t) x + (v <> w z_t) y_t - (vy <> w) y_t
                NCPoly wz = diamond_words(s, V, W.append_x()) + diamond_words(s, V, w);
                out = diamond_words(s, V, w) * letter_x(r) + wz * letter_y(r, lw.j) -
                      diamond_words(s, V.append_y(0), W) * letter_y(r, lw.j);
            } else {
                // vy <> w y_t = (v <> w y_t) y - (v <> w z_t) y_t + (vy <> w) y_t
                NCPoly wz = diamond_words(s, V, W.append_x()) + diamond_words(s, V, w);
                out = diamond_words(s, V, w) * letter_y(r, 0) - wz * letter_y(r, lw.j) +
                      diamond_words(s, v, W) * letter_y(r, lw.j);
            }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

  private:
    using Key = std::tuple<int, int, std::string, std::string>;
    std::map<Key, NCPoly> memo_;
};

// One-shot convenience wrapper.
inline NCPoly diamond(const RootIndex& s, const NCPoly& v, const NCPoly& w) {
    DiamondTable table;
    return table.diamond(s, v, w);
}

// Closed form through the harmonic algebra:
//   v <>_s w = psi_s( phi(v) * psi_s^{-1}(w) ).
// Shares no code with the recursion above; the law suite compares the two.
// An optional harmonic memo speeds up sweeps that revisit the same pairs.
inline NCPoly diamond_oracle(const RootIndex& s, const NCPoly& v, const NCPoly& w,
                             HarmonicTable* cache = nullptr) {
    if (v.modulus() != 1) throw ModulusMismatch("left diamond argument must have modulus 1");
    if (s.modulus() != w.modulus()) throw ModulusMismatch("twist modulus differs");
    NCPoly lhs = apply_phi(embed_into(v, w.modulus()));
    NCPoly rhs = apply_psi_inv(s, w);
    return apply_psi(s, cache ? cache->product(lhs, rhs) : harmonic(lhs, rhs));
}

}  // namespace rtmlv

#endif
