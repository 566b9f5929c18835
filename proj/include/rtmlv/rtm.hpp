#ifndef RTMLV_RTM_HPP
#define RTMLV_RTM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rtmlv/hopf.hpp"
#include "rtmlv/products.hpp"
#include "rtmlv/words.hpp"

namespace rtmlv {

struct NonAdmissibleOutput : std::runtime_error {
    explicit NonAdmissibleOutput(const std::string& what) : std::runtime_error(what) {}
};

// Evaluates the endomorphism attached to a forest on word polynomials of a
// fixed modulus. Holds the memo tables; treat one context per run (or per
// thread) as a pure function table.
class RtmContext {
  public:
    explicit RtmContext(int r) : r_(r) {
        if (r < 1 || r > kMaxModulus) throw std::invalid_argument("modulus out of range");
    }

    int modulus() const { return r_; }
    DiamondTable& diamonds() { return table_; }

    NCPoly apply(const ForestSum& f, const NCPoly& p) {
        p.require_modulus(r_);
        NCPoly out(r_);
        for (const auto& [forest, c] : f.terms()) out += c * apply(forest, p);
        return out;
    }

    NCPoly apply(const Forest& f, const NCPoly& p) {
        p.require_modulus(r_);
        NCPoly out(r_);
        for (const auto& [w, c] : p.terms()) out += c * apply_word(f, w);
        return out;
    }

    // F_f: the modulus-1 polynomial with f~(zd_s w) = zd_s (F_f <>_s w).
    NCPoly f_poly(const ForestSum& f) {
        NCPoly out(1);
        for (const auto& [forest, c] : f.terms()) out += c * f_poly(forest);
        return out;
    }

    NCPoly f_poly(const Forest& f) {
        auto it = f_memo_.find(f.code());
        if (it != f_memo_.end()) return it->second;
        NCPoly out(1);
        if (f.empty()) {
            out = NCPoly::one(1);
        } else if (f.trees().size() == 1) {
            const Tree& t = f.trees().front();
            std::vector<Tree> ch = t.children();
            if (ch.empty()) {
                out = letter_y(1, 0);
            } else {
                // R = R_y R_{x+2y} R_y^{-1}
                NCPoly inner = f_poly(Forest(std::move(ch)));
                NCPoly q = right_divide(inner, letter_y(1, 0));
                out = q * (letter_x(1) + Rational(2) * letter_y(1, 0)) * letter_y(1, 0);
            }
        } else {
            auto [head, rest] = f.split_least();
            out = table_.diamond(RootIndex(0, 1), f_poly(Forest(head)), f_poly(rest));
        }
        f_memo_.emplace(f.code(), out);
        return out;
    }

    // G_f: the companion polynomial attached to the antipode side.
    NCPoly g_poly(const ForestSum& f) {
        NCPoly out(1);
        for (const auto& [forest, c] : f.terms()) out += c * g_poly(forest);
        return out;
    }

    NCPoly g_poly(const Forest& f) {
        auto it = g_memo_.find(f.code());
        if (it != g_memo_.end()) return it->second;
        NCPoly out(1);
        if (f.empty()) {
            out = NCPoly::one(1);
        } else if (f.trees().size() == 1) {
            const Tree& t = f.trees().front();
            std::vector<Tree> ch = t.children();
            if (ch.empty()) {
                out = -letter_y(1, 0);
            } else {
                out = (Rational(2) * letter_x(1) + letter_y(1, 0)) * g_poly(Forest(std::move(ch)));
            }
        } else {
            auto [head, rest] = f.split_least();
            out = table_.diamond(RootIndex(0, 1), g_poly(Forest(head)), g_poly(rest));
        }
        g_memo_.emplace(f.code(), out);
        return out;
    }

  private:
    // Basis letters: id -1 is z, id j >= 0 is zd_j.
    static constexpr int kZ = -1;

    NCPoly basis_poly(int id) const {
        return id == kZ ? z_full(r_) : z_delta(RootIndex(id, r_));
    }

    // Rewrites a word over the letter basis {z} u {zd_s}:
    //   x = zd_1,  y_1 = z - zd_1,  y_s = zd_s - zd_1.
    // Returns the expansion as (basis id string, sign) pairs.
    std::vector<std::pair<std::vector<int>, Rational>> basis_expand(const Word& w) const {
        std::vector<std::pair<std::vector<int>, Rational>> acc;
        acc.push_back({{}, Rational(1)});
        for (int i = 0; i < w.degree(); ++i) {
            Letter l = w.letter(i);
            std::vector<std::pair<int, Rational>> images;
            if (l.is_x) {
                images = {{0, Rational(1)}};
            } else if (l.j == 0) {
                images = {{kZ, Rational(1)}, {0, Rational(-1)}};
            } else {
                images = {{l.j, Rational(1)}, {0, Rational(-1)}};
            }
            std::vector<std::pair<std::vector<int>, Rational>> next;
            next.reserve(acc.size() * images.size());
            for (const auto& [ids, c] : acc)
                for (const auto& [id, k] : images) {
                    auto ids2 = ids;
                    ids2.push_back(id);
                    next.emplace_back(std::move(ids2), c * k);
                }
            acc = std::move(next);
        }
        return acc;
    }

    NCPoly apply_word(const Forest& f, const Word& w) {
        NCPoly out(r_);
        for (const auto& [ids, c] : basis_expand(w)) out += c * apply_basis(f, ids);
        return out;
    }

    // f~ on basis words: the last letter is peeled through the coproduct,
    //   f~(w v) = sum over (f) of f'~(w) f''~(v),
    // and f~(1) = counit(f).
    NCPoly apply_basis(const Forest& f, const std::vector<int>& ids) {
        if (ids.empty())
            return f.empty() ? NCPoly::one(r_) : NCPoly::zero(r_);
        if (ids.size() == 1) return letter_image(f, ids.front());
        std::vector<int> prefix(ids.begin(), ids.end() - 1);
        NCPoly out(r_);
        const TensorSum split = coproduct(f);
        for (const auto& [k, c] : split.terms()) {
            NCPoly right = letter_image(k.second, ids.back());
            if (right.is_zero()) continue;
            NCPoly left = apply_basis(k.first, prefix);
            if (left.is_zero()) continue;
            out += c * (left * right);
        }
        return out;
    }

    // f~ on a single basis letter, resolved by the defining conditions:
    //   single vertex:  zd_s -> zd_s (z - zd_s),  z -> 0;
    //   grafted tree:   R_{z-zd_s} R_{2z-zd_s} R^{-1}_{z-zd_s} of the child image;
    //   proper forest:  composition, splitting off the least tree.
    NCPoly letter_image(const Forest& f, int id) {
        if (f.empty()) return basis_poly(id);
        auto key = std::make_pair(f.code(), id);
        auto it = letter_memo_.find(key);
        if (it != letter_memo_.end()) return it->second;
        NCPoly out(r_);
        if (f.trees().size() == 1) {
            if (id == kZ) {
                out = NCPoly::zero(r_);
            } else {
                const RootIndex s(id, r_);
                const NCPoly zd = z_delta(s);
                const NCPoly zmzd = z_full(r_) - zd;
                std::vector<Tree> ch = f.trees().front().children();
                if (ch.empty()) {
                    out = zd * zmzd;
                } else {
                    NCPoly inner = letter_image(Forest(std::move(ch)), id);
                    NCPoly q = right_divide(inner, zmzd);
                    out = q * (Rational(2) * z_full(r_) - zd) * zmzd;
                }
            }
        } else {
            auto [head, rest] = f.split_least();
            out = apply(Forest(head), letter_image(rest, id));
        }
        letter_memo_.emplace(std::move(key), out);
        return out;
    }

    int r_;
    DiamondTable table_;
    std::map<std::pair<std::string, int>, NCPoly> letter_memo_;
    std::map<std::string, NCPoly> f_memo_;
    std::map<std::string, NCPoly> g_memo_;
};

// --- relation families --------------------------------------------------------

enum class RelationVariant { direct, tau_conjugate };

struct Relation {
    Forest forest;
    Word input;
    NCPoly output;

    Relation(Forest f, Word w, NCPoly p)
        : forest(std::move(f)), input(std::move(w)), output(std::move(p)) {}
};

// One candidate kernel element per (forest of degree d, admissible word of
// weight wt). Every output term is checked for admissibility.
inline std::vector<Relation> generate_relations(RtmContext& ctx, int d, int wt,
                                                RelationVariant variant) {
    if (d < 1) throw std::invalid_argument("forest degree must be >= 1");
    if (wt < 1) throw std::invalid_argument("word weight must be >= 1");
    std::vector<Relation> out;
    for (const Forest& f : enumerate_forests(d)) {
        for (const Word& w : admissible_words(ctx.modulus(), wt)) {
            NCPoly rel(ctx.modulus());
            if (variant == RelationVariant::direct) {
                rel = ctx.apply(f, NCPoly::from_word(w));
            } else {
                rel = apply_tau(ctx.apply(f, apply_tau(NCPoly::from_word(w))));
            }
            if (!rel.admissible())
                throw NonAdmissibleOutput("relation output contains a non-admissible word");
            out.emplace_back(f, w, std::move(rel));
        }
    }
    return out;
}

}  // namespace rtmlv

#endif
