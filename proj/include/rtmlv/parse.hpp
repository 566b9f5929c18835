#ifndef RTMLV_PARSE_HPP
#define RTMLV_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "rtmlv/hopf.hpp"
#include "rtmlv/words.hpp"

namespace rtmlv {

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct TwistOutOfRange : std::runtime_error {
    TwistOutOfRange(int j, int r)
        : std::runtime_error("twist y" + std::to_string(j) + " out of range for modulus " +
                             std::to_string(r)) {}
};

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected a number", pos);
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    // p or p/q; the sign is handled by the caller.
    Rational rational() {
        Rational num(integer());
        skip_ws();
        if (peek() == '/') {
            ++pos;
            long long den = integer();
            if (den == 0) throw SyntaxError("zero denominator", pos);
            num /= den;
        }
        return num;
    }
};

// Shared sum-of-terms scaffolding for both grammars. parse_base reads one
// coefficient-free factor; a bare number is a multiple of the unit.
template <typename Sum, typename ParseBase>
Sum parse_sum(std::string_view text, Sum zero, Sum unit, ParseBase&& parse_base) {
    Cursor cur{text};
    Sum acc = zero;
    bool first = true;
    while (!cur.done()) {
        Rational sign(1);
        if (cur.eat('-')) {
            sign = -1;
        } else if (cur.eat('+')) {
            if (first) throw SyntaxError("unexpected '+'", cur.pos - 1);
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", cur.pos);
        }
        first = false;
        cur.skip_ws();
        Rational coeff(1);
        bool have_factor = true;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.rational();
            cur.skip_ws();
            if (cur.peek() == '*') {
                ++cur.pos;
            } else {
                have_factor = false;  // bare rational: multiple of the unit
            }
        }
        Sum term = have_factor ? parse_base(cur) : unit;
        acc += (sign * coeff) * term;
        cur.skip_ws();
    }
    return acc;
}

inline Tree parse_tree(Cursor& cur);

inline std::vector<Tree> parse_tree_list(Cursor& cur) {
    std::vector<Tree> trees;
    while (true) {
        cur.skip_ws();
        if (cur.peek() != '[') break;
        trees.push_back(parse_tree(cur));
    }
    return trees;
}

inline Tree parse_tree(Cursor& cur) {
    cur.skip_ws();
    if (!cur.eat('[')) throw SyntaxError("expected '['", cur.pos);
    std::vector<Tree> children = parse_tree_list(cur);
    if (!cur.eat(']')) throw SyntaxError("expected ']'", cur.pos);
    return children.empty() ? Tree() : Tree(std::move(children));
}

}  // namespace detail

// Forest grammar: tree := '[' forest ']'; forest := tree* ; a sum literal is
// c1*F1 + c2*F2 + ... with rational coefficients; a bare number scales the
// empty forest.
inline ForestSum parse_forest(std::string_view text) {
    return detail::parse_sum(text, ForestSum(), ForestSum::unit(), [](detail::Cursor& cur) {
        std::vector<Tree> trees = detail::parse_tree_list(cur);
        if (trees.empty()) throw SyntaxError("expected a forest", cur.pos);
        return ForestSum(Forest(std::move(trees)));
    });
}

// Word grammar: whitespace-separated letters `x` and `y<j>` (0 <= j < r);
// sum literals as for forests; a bare number scales the empty word.
inline NCPoly parse_word_poly(std::string_view text, int r) {
    return detail::parse_sum(text, NCPoly::zero(r), NCPoly::one(r), [r](detail::Cursor& cur) {
        Word w(r);
        bool any = false;
        while (true) {
            cur.skip_ws();
            char c = cur.peek();
            if (c == 'x') {
                ++cur.pos;
                w = w.append_x();
                any = true;
            } else if (c == 'y') {
                ++cur.pos;
                std::size_t at = cur.pos;
                if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
                    throw SyntaxError("expected a twist index after 'y'", cur.pos);
                long long j = cur.integer();
                if (j >= r) throw TwistOutOfRange(static_cast<int>(j), r);
                (void)at;
                w = w.append_y(static_cast<int>(j));
                any = true;
            } else {
                break;
            }
        }
        if (!any) throw SyntaxError("expected a word", cur.pos);
        return NCPoly::from_word(w);
    });
}

// Index literal: "k1,...,kl;j1,...,jl".
inline MLVIndex parse_index(std::string_view text, int r) {
    detail::Cursor cur{text};
    MLVIndex ix;
    ix.r = r;
    do {
        ix.k.push_back(static_cast<int>(cur.integer()));
    } while (cur.eat(','));
    if (!cur.eat(';')) throw SyntaxError("expected ';'", cur.pos);
    do {
        long long j = cur.integer();
        if (j >= r) throw TwistOutOfRange(static_cast<int>(j), r);
        ix.j.push_back(static_cast<int>(j));
    } while (cur.eat(','));
    if (!cur.done()) throw SyntaxError("trailing input", cur.pos);
    if (ix.k.size() != ix.j.size())
        throw SyntaxError("exponent and twist lists differ in length", cur.pos);
    return ix;
}

// --- text form ----------------------------------------------------------------

inline std::string to_text(const Tree& t) { return t.code(); }

inline std::string to_text(const Forest& f) {
    if (f.empty()) return "1";
    std::string out;
    for (const Tree& t : f.trees()) {
        if (!out.empty()) out += ' ';
        out += t.code();
    }
    return out;
}

namespace detail {

template <typename Terms, typename KeyText>
std::string sum_text(const Terms& terms, KeyText&& key_text) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
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
        std::string key = key_text(k);
        if (a != 1 || key == "1") {
            out += rational_str(a);
            if (key != "1") out += '*';
        }
        if (key != "1") out += key;
        first = false;
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const ForestSum& s) {
    return detail::sum_text(s.terms(), [](const Forest& f) { return to_text(f); });
}

inline std::string to_text(const TensorSum& s) {
    return detail::sum_text(s.terms(), [](const TensorSum::Key& k) {
        return to_text(k.first) + " (x) " + to_text(k.second);
    });
}

inline std::string to_text(const MLVIndex& ix) {
    std::string out;
    for (std::size_t i = 0; i < ix.k.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ix.k[i]);
    }
    out += ';';
    for (std::size_t i = 0; i < ix.j.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ix.j[i]);
    }
    return out;
}

}  // namespace rtmlv

#endif
