#ifndef RTMLV_WORDS_HPP
#define RTMLV_WORDS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtmlv/rational.hpp"

namespace rtmlv {

struct ModulusMismatch : std::runtime_error {
    explicit ModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotRightDivisible : std::runtime_error {
    explicit NotRightDivisible(const std::string& what, std::string rem = {})
        : std::runtime_error(what), remainder(std::move(rem)) {}
    std::string remainder;  // irreducible part, printable
};

struct NotInA1 : std::runtime_error {
    explicit NotInA1(const std::string& what) : std::runtime_error(what) {}
};

// Element of the group of r-th roots of unity, held as the exponent j mod r.
class RootIndex {
  public:
    RootIndex(int j, int r) : r_(r) {
        if (r < 1) throw std::invalid_argument("modulus must be >= 1");
        j_ = ((j % r) + r) % r;
    }

    int j() const { return j_; }
    int modulus() const { return r_; }
    bool is_one() const { return j_ == 0; }
    int delta() const { return j_ == 0 ? 0 : 1; }

    RootIndex operator*(const RootIndex& o) const {
        require_same(o);
        return RootIndex(j_ + o.j_, r_);
    }
    RootIndex inverse() const { return RootIndex(-j_, r_); }
    RootIndex operator/(const RootIndex& o) const {
        require_same(o);
        return RootIndex(j_ - o.j_, r_);
    }
    friend bool operator==(const RootIndex& a, const RootIndex& b) {
        return a.j_ == b.j_ && a.r_ == b.r_;
    }

  private:
    void require_same(const RootIndex& o) const {
        if (r_ != o.r_) throw ModulusMismatch("root indices with different moduli");
    }
    int j_;
    int r_;
};

// Letters are encoded into single bytes so that plain byte order is the
// term order on letters: y_1 (byte 0), then y_s ascending, then x last.
constexpr char kXByte = 0x7F;
constexpr int kMaxModulus = 126;

struct Letter {
    bool is_x;
    int j;  // meaningful when !is_x
    char byte() const { return is_x ? kXByte : static_cast<char>(j); }
};

// A word over {x} u {y_j : 0 <= j < r}. Degree = letter count.
class Word {
  public:
    explicit Word(int r) : r_(check_modulus(r)) {}
    Word(int r, std::string bytes) : r_(check_modulus(r)), s_(std::move(bytes)) {}

    int modulus() const { return r_; }
    int degree() const { return static_cast<int>(s_.size()); }
    bool empty() const { return s_.empty(); }
    const std::string& bytes() const { return s_; }

    Letter letter(int i) const {
        char b = s_.at(static_cast<std::size_t>(i));
        if (b == kXByte) return {true, 0};
        return {false, static_cast<int>(b)};
    }
    Letter last() const { return letter(degree() - 1); }
    Letter first() const { return letter(0); }

    Word append_x() const { return Word(r_, s_ + kXByte); }
    Word append_y(int j) const {
        if (j < 0 || j >= r_) throw std::invalid_argument("twist out of modulus");
        return Word(r_, s_ + static_cast<char>(j));
    }
    Word append(const Letter& l) const { return Word(r_, s_ + l.byte()); }
    Word drop_last() const { return Word(r_, s_.substr(0, s_.size() - 1)); }
    Word concat(const Word& o) const {
        require_same(o);
        return Word(r_, s_ + o.s_);
    }

    bool ends_in_y() const { return !empty() && !last().is_x; }
    bool in_a1() const { return empty() || ends_in_y(); }
    bool admissible() const {
        if (!ends_in_y()) return false;
        Letter f = first();
        return f.is_x || f.j != 0;
    }

    void require_same(const Word& o) const {
        if (r_ != o.r_) throw ModulusMismatch("words with different moduli");
    }

    friend bool operator==(const Word& a, const Word& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

  private:
    static int check_modulus(int r) {
        if (r < 1 || r > kMaxModulus) throw std::invalid_argument("modulus out of range");
        return r;
    }
    int r_;
    std::string s_;
};

// Term order used everywhere (printing, leading terms, division):
// longer words first, then letterwise with y_1 highest and x lowest.
struct WordBefore {
    bool operator()(const Word& a, const Word& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.bytes() != b.bytes()) return a.bytes() < b.bytes();
        return a.modulus() < b.modulus();
    }
};

// Sparse noncommutative polynomial over the word algebra of modulus r.
class NCPoly {
  public:
    using Terms = std::map<Word, Rational, WordBefore>;

    explicit NCPoly(int r) : r_(r) {
        if (r < 1 || r > kMaxModulus) throw std::invalid_argument("modulus out of range");
    }

    static NCPoly zero(int r) { return NCPoly(r); }
    static NCPoly one(int r) { return from_word(Word(r)); }
    static NCPoly from_word(const Word& w, const Rational& c = 1) {
        NCPoly p(w.modulus());
        p.add(w, c);
        return p;
    }

    int modulus() const { return r_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rational& c) {
        if (w.modulus() != r_) throw ModulusMismatch("term modulus differs from polynomial");
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void require_same(const NCPoly& o) const {
        if (r_ != o.r_) throw ModulusMismatch("polynomials with different moduli");
    }
    void require_modulus(int r) const {
        if (r_ != r) throw ModulusMismatch("polynomial modulus differs from context");
    }

    NCPoly& operator+=(const NCPoly& o) {
        require_same(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    void add_scaled(const NCPoly& o, const Rational& c) {
        require_same(o);
        if (c == 0) return;
        if (c == 1) {
            *this += o;
            return;
        }
        for (const auto& [w, k] : o.terms_) add(w, c * k);
    }
    NCPoly& operator-=(const NCPoly& o) {
        require_same(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Rational& c, const NCPoly& a) {
        NCPoly out(a.r_);
        if (c == 0) return out;
        for (const auto& [w, k] : a.terms_) out.terms_.emplace(w, c * k);
        return out;
    }
    friend NCPoly operator-(const NCPoly& a) { return Rational(-1) * a; }
    // Concatenation product, extended bilinearly. Concatenating one fixed
    // word on either side preserves the term order, so those cases build
    // the result in one ordered pass.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.require_same(b);
        NCPoly out(a.r_);
        if (b.terms_.size() == 1) {
            const auto& [wb, cb] = *b.terms_.begin();
            const bool unit = cb == 1;
            for (const auto& [wa, ca] : a.terms_)
                out.terms_.emplace_hint(out.terms_.end(), wa.concat(wb),
                                        unit ? ca : ca * cb);
            return out;
        }
        if (a.terms_.size() == 1) {
            const auto& [wa, ca] = *a.terms_.begin();
            const bool unit = ca == 1;
            for (const auto& [wb, cb] : b.terms_)
                out.terms_.emplace_hint(out.terms_.end(), wa.concat(wb),
                                        unit ? cb : ca * cb);
            return out;
        }
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add(wa.concat(wb), ca * cb);
        return out;
    }
    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    // Every word ends in some y-letter (or the polynomial is a constant).
    bool in_a1() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_a1()) return false;
        return true;
    }
    bool admissible() const {
        for (const auto& [w, c] : terms_)
            if (!w.admissible()) return false;
        return true;
    }

    int max_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  private:
    int r_;
    Terms terms_;
};

// Single-letter polynomials and the standard binomials.
inline NCPoly letter_x(int r) { return NCPoly::from_word(Word(r).append_x()); }
inline NCPoly letter_y(int r, int j) { return NCPoly::from_word(Word(r).append_y(j)); }
inline NCPoly z_full(int r) { return letter_x(r) + letter_y(r, 0); }  // z = x + y_1
inline NCPoly z_sub(const RootIndex& s) {  // z_s = x + y_s
    return letter_x(s.modulus()) + letter_y(s.modulus(), s.j());
}
inline NCPoly z_delta(const RootIndex& s) {  // z_s^delta = x + delta(s) y_s
    NCPoly p = letter_x(s.modulus());
    if (s.delta() == 1) p += letter_y(s.modulus(), s.j());
    return p;
}
inline Word z_word(int r, int k, int j) {  // z_{k,s} = x^{k-1} y_s
    Word w(r);
    for (int i = 1; i < k; ++i) w = w.append_x();
    return w.append_y(j);
}

// Unique factorization of a word as z_{k1,s1} ... z_{kl,sl} x^a.
struct ZDecomp {
    std::vector<std::pair<int, int>> factors;  // (k, j)
    int trailing_x = 0;
};

inline ZDecomp z_decompose(const Word& w) {
    ZDecomp out;
    int run = 0;
    for (int i = 0; i < w.degree(); ++i) {
        Letter l = w.letter(i);
        if (l.is_x) {
            ++run;
        } else {
            out.factors.emplace_back(run + 1, l.j);
            run = 0;
        }
    }
    out.trailing_x = run;
    return out;
}

inline Word z_compose(int r, const ZDecomp& d) {
    Word w(r);
    for (const auto& [k, j] : d.factors) {
        for (int i = 1; i < k; ++i) w = w.append_x();
        w = w.append_y(j);
    }
    for (int i = 0; i < d.trailing_x; ++i) w = w.append_x();
    return w;
}

// --- morphisms -------------------------------------------------------------

// phi: the algebra automorphism x -> x + y_1, y_s -> delta(s) y_s - y_1.
inline NCPoly apply_phi(const NCPoly& p) {
    const int r = p.modulus();
    NCPoly out(r);
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc = NCPoly::from_word(Word(r), c);
        for (int i = 0; i < w.degree(); ++i) {
            Letter l = w.letter(i);
            NCPoly img(r);
            if (l.is_x) {
                img = z_full(r);
            } else {
                if (l.j != 0) img += letter_y(r, l.j);
                img -= letter_y(r, 0);
            }
            acc = acc * img;
        }
        out += acc;
    }
    return out;
}

// tau: the anti-automorphism x <-> y_1, y_s -> -y_s (s != 1).
inline NCPoly apply_tau(const NCPoly& p) {
    const int r = p.modulus();
    NCPoly out(r);
    for (const auto& [w, c] : p.terms()) {
        Word img(r);
        int sign = 1;
        for (int i = w.degree() - 1; i >= 0; --i) {
            Letter l = w.letter(i);
            if (l.is_x) {
                img = img.append_y(0);
            } else if (l.j == 0) {
                img = img.append_x();
            } else {
                img = img.append_y(l.j);
                sign = -sign;
            }
        }
        out.add(img, sign > 0 ? c : -c);
    }
    return out;
}

// The twist rewritings, defined per word through the z-decomposition.
inline NCPoly apply_twist_map(const NCPoly& p, const auto& remap) {
    const int r = p.modulus();
    NCPoly out(r);
    for (const auto& [w, c] : p.terms()) {
        ZDecomp d = z_decompose(w);
        std::vector<int> js;
        js.reserve(d.factors.size());
        for (const auto& [k, j] : d.factors) js.push_back(j);
        std::vector<int> out_js = remap(js, r);
        for (std::size_t i = 0; i < d.factors.size(); ++i) d.factors[i].second = out_js[i];
        out.add(z_compose(r, d), c);
    }
    return out;
}

// I: twists become cumulative products down the word.
inline NCPoly apply_cumulate(const NCPoly& p) {
    return apply_twist_map(p, [](const std::vector<int>& js, int r) {
        std::vector<int> out(js.size());
        int acc = 0;
        for (std::size_t i = 0; i < js.size(); ++i) {
            acc = (acc + js[i]) % r;
            out[i] = acc;
        }
        return out;
    });
}

inline NCPoly apply_cumulate_inv(const NCPoly& p) {
    return apply_twist_map(p, [](const std::vector<int>& js, int r) {
        std::vector<int> out(js.size());
        int prev = 0;
        for (std::size_t i = 0; i < js.size(); ++i) {
            out[i] = ((js[i] - prev) % r + r) % r;
            prev = js[i];
        }
        return out;
    });
}

// M_s: multiplies the first twist by s.
inline NCPoly apply_first_twist(const RootIndex& s, const NCPoly& p) {
    if (s.modulus() != p.modulus()) throw ModulusMismatch("twist modulus differs");
    return apply_twist_map(p, [&](const std::vector<int>& js, int r) {
        std::vector<int> out = js;
        if (!out.empty()) out[0] = (out[0] + s.j()) % r;
        return out;
    });
}

// psi_s = phi . I . M_s (rightmost applied first).
inline NCPoly apply_psi(const RootIndex& s, const NCPoly& p) {
    return apply_phi(apply_cumulate(apply_first_twist(s, p)));
}

// psi_s^{-1} = M_{s^{-1}} . I^{-1} . phi.
inline NCPoly apply_psi_inv(const RootIndex& s, const NCPoly& p) {
    return apply_first_twist(s.inverse(), apply_cumulate_inv(apply_phi(p)));
}

enum class MorphismKind { phi, tau, cumulate, cumulate_inv, first_twist, psi, psi_inv };

inline NCPoly apply_morphism(MorphismKind kind, const NCPoly& p) {
    switch (kind) {
        case MorphismKind::phi: return apply_phi(p);
        case MorphismKind::tau: return apply_tau(p);
        case MorphismKind::cumulate: return apply_cumulate(p);
        case MorphismKind::cumulate_inv: return apply_cumulate_inv(p);
        default: throw std::invalid_argument("morphism needs a twist argument");
    }
}

inline NCPoly apply_morphism(MorphismKind kind, const RootIndex& s, const NCPoly& p) {
    switch (kind) {
        case MorphismKind::first_twist: return apply_first_twist(s, p);
        case MorphismKind::psi: return apply_psi(s, p);
        case MorphismKind::psi_inv: return apply_psi_inv(s, p);
        default: return apply_morphism(kind, p);
    }
}

// --- text form ---------------------------------------------------------------

inline std::string to_text(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int i = 0; i < w.degree(); ++i) {
        if (i) out += ' ';
        Letter l = w.letter(i);
        if (l.is_x) {
            out += 'x';
        } else {
            out += 'y';
            out += std::to_string(l.j);
        }
    }
    return out;
}

inline std::string to_text(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || w.empty()) {
            out += rational_str(a);
            if (!w.empty()) out += '*';
        }
        if (!w.empty()) out += to_text(w);
        first = false;
    }
    return out;
}

// --- right division ---------------------------------------------------------

// Exact right quotient: returns q with q * u == p. The divisor must be a
// nonzero polynomial whose words all have the same positive length; its
// leading word is cancelled against the leading word of the remainder, which
// strictly decreases in the term order, so the loop terminates.
inline NCPoly right_divide(const NCPoly& p, const NCPoly& u) {
    p.require_same(u);
    if (u.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const int len = u.terms().begin()->first.degree();
    if (len < 1) throw std::invalid_argument("divisor has a constant term");
    for (const auto& [w, c] : u.terms())
        if (w.degree() != len)
            throw std::invalid_argument("divisor words must share one length");
    const Word& lead = u.terms().begin()->first;
    const Rational& lead_c = u.terms().begin()->second;

    NCPoly q(p.modulus());
    NCPoly rem = p;
    while (!rem.is_zero()) {
        const Word& w = rem.terms().begin()->first;
        const Rational c = rem.terms().begin()->second;
        const int n = w.degree();
        bool match = n >= len && w.bytes().compare(n - len, len, lead.bytes()) == 0;
        if (!match) {
            throw NotRightDivisible("no exact right quotient", to_text(rem));
        }
        Word prefix(p.modulus(), w.bytes().substr(0, static_cast<std::size_t>(n - len)));
        Rational k = c / lead_c;
        q.add(prefix, k);
        rem -= NCPoly::from_word(prefix, k) * u;
    }
    return q;
}

// --- index coding -----------------------------------------------------------

// An MLV index pair (k_1..k_l ; s_1..s_l), twists held as exponents mod r.
struct MLVIndex {
    std::vector<int> k;
    std::vector<int> j;
    int r = 1;

    int depth() const { return static_cast<int>(k.size()); }
    int weight() const {
        int w = 0;
        for (int v : k) w += v;
        return w;
    }
    bool admissible() const {
        return depth() >= 1 && !(k.front() == 1 && j.front() == 0);
    }
};

inline MLVIndex word_to_index(const Word& w) {
    if (!w.ends_in_y()) throw NotInA1("word is empty or ends with x");
    ZDecomp d = z_decompose(w);
    MLVIndex ix;
    ix.r = w.modulus();
    for (const auto& [k, j] : d.factors) {
        ix.k.push_back(k);
        ix.j.push_back(j);
    }
    return ix;
}

inline Word index_to_word(const MLVIndex& ix) {
    if (ix.k.size() != ix.j.size() || ix.k.empty())
        throw std::invalid_argument("index lists must be nonempty and equal length");
    ZDecomp d;
    for (std::size_t i = 0; i < ix.k.size(); ++i) {
        if (ix.k[i] < 1) throw std::invalid_argument("exponents must be >= 1");
        d.factors.emplace_back(ix.k[i], ix.j[i]);
    }
    return z_compose(ix.r, d);
}

// --- enumeration helpers ----------------------------------------------------

inline std::vector<Word> all_words(int r, int len) {
    std::vector<Word> out;
    std::vector<char> alphabet;
    for (int j = 0; j < r; ++j) alphabet.push_back(static_cast<char>(j));
    alphabet.push_back(kXByte);
    std::string cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.emplace_back(r, cur);
            return;
        }
        for (char b : alphabet) {
            cur.push_back(b);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline std::vector<Word> words_up_to(int r, int maxlen) {
    std::vector<Word> out;
    for (int l = 0; l <= maxlen; ++l) {
        auto ws = all_words(r, l);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

inline std::vector<Word> admissible_words(int r, int len) {
    std::vector<Word> out;
    for (Word& w : all_words(r, len))
        if (w.admissible()) out.push_back(std::move(w));
    return out;
}

// Maps the two-letter algebra into modulus r: y_0 goes to y_0.
inline NCPoly embed_into(const NCPoly& p, int r) {
    if (p.modulus() != 1) throw ModulusMismatch("only modulus-1 inputs embed");
    if (r == 1) return p;
    NCPoly out(r);
    for (const auto& [w, c] : p.terms()) out.add(Word(r, w.bytes()), c);
    return out;
}

}  // namespace rtmlv

#endif
