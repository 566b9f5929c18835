#ifndef RTMLV_LAWS_HPP
#define RTMLV_LAWS_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtmlv/hopf.hpp"
#include "rtmlv/mlv.hpp"
#include "rtmlv/parse.hpp"
#include "rtmlv/products.hpp"
#include "rtmlv/rtm.hpp"
#include "rtmlv/words.hpp"

namespace rtmlv {

struct UnknownLaw : std::runtime_error {
    explicit UnknownLaw(const std::string& name) : std::runtime_error("unknown law: " + name) {}
};

struct LawSweep {
    std::vector<int> r_values{1, 2};
    int max_forest = 2;
    int max_word = 2;
    long sample_budget = 120;
    std::uint64_t seed = 20200531;
};

struct SweepOverrides {
    std::optional<std::vector<int>> r_values;
    std::optional<int> max_forest;
    std::optional<int> max_word;
    std::optional<long> sample_budget;
    std::optional<std::uint64_t> seed;

    LawSweep apply(LawSweep s) const {
        if (r_values) s.r_values = *r_values;
        if (max_forest) s.max_forest = *max_forest;
        if (max_word) s.max_word = *max_word;
        if (sample_budget) s.sample_budget = *sample_budget;
        if (seed) s.seed = *seed;
        return s;
    }
};

struct LawFailure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string law;
    long cases = 0;
    std::vector<LawFailure> failures;
    long ms = 0;

    bool ok() const { return failures.empty(); }
};

struct LawInfo {
    std::string name;
    std::string note;
    LawSweep defaults;
    std::function<void(const LawSweep&, LawReport&)> run;
};

namespace lawdetail {

template <typename T>
void expect_eq(LawReport& rep, const std::string& input, const T& lhs, const T& rhs) {
    ++rep.cases;
    if (!(lhs == rhs)) rep.failures.push_back({input, to_text(lhs), to_text(rhs)});
}

inline void expect_zero(LawReport& rep, const std::string& input, const NCPoly& p) {
    ++rep.cases;
    if (!p.is_zero()) rep.failures.push_back({input, to_text(p), "0"});
}

inline std::string tensor3_text(const Tensor3& t) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t) {
        if (!out.empty()) out += " + ";
        out += rational_str(c) + "*" + to_text(std::get<0>(k)) + " (x) " +
               to_text(std::get<1>(k)) + " (x) " + to_text(std::get<2>(k));
    }
    return out;
}

inline void expect_eq3(LawReport& rep, const std::string& input, const Tensor3& l,
                       const Tensor3& r) {
    ++rep.cases;
    if (!(l == r)) rep.failures.push_back({input, tensor3_text(l), tensor3_text(r)});
}

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (char c : name) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ULL;
    return h;
}

inline Word random_word(std::mt19937_64& rng, int r, int len) {
    Word w(r);
    std::uniform_int_distribution<int> pick(0, r);
    for (int i = 0; i < len; ++i) {
        int v = pick(rng);
        w = v == r ? w.append_x() : w.append_y(v);
    }
    return w;
}

// Samples tuples one degree above the exhaustive cap: the budget-bounded
// randomized layer on top of the exhaustive sweep.
inline std::vector<std::vector<Word>> sampled_tuples(const LawSweep& sweep,
                                                     const std::string& law, int r, int arity) {
    std::vector<std::vector<Word>> out;
    if (sweep.sample_budget <= 0) return out;
    std::mt19937_64 rng(mix_seed(sweep.seed, law + std::to_string(r)));
    std::uniform_int_distribution<int> len(0, sweep.max_word + 1);
    for (long i = 0; i < sweep.sample_budget; ++i) {
        std::vector<Word> tuple;
        bool above = false;
        for (int a = 0; a < arity; ++a) {
            int l = len(rng);
            above = above || l > sweep.max_word;
            tuple.push_back(random_word(rng, r, l));
        }
        if (!above) tuple.back() = random_word(rng, r, sweep.max_word + 1);
        out.push_back(std::move(tuple));
    }
    return out;
}

inline std::string describe(int r, std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out = "r=" + std::to_string(r);
    for (const auto& [k, v] : kv) {
        out += ' ';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

}  // namespace lawdetail

const std::vector<LawInfo>& law_registry();

inline const LawInfo& find_law(const std::string& name) {
    for (const LawInfo& l : law_registry())
        if (l.name == name) return l;
    throw UnknownLaw(name);
}

inline LawReport run_law(const std::string& name, const SweepOverrides& over = {}) {
    const LawInfo& law = find_law(name);
    LawReport rep;
    rep.law = name;
    LawSweep sweep = over.apply(law.defaults);
    auto start = std::chrono::steady_clock::now();
    law.run(sweep, rep);
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

inline std::vector<LawReport> run_suite(const std::vector<std::string>& names,
                                        const SweepOverrides& over = {}) {
    std::vector<LawReport> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(run_law(n, over));
    return out;
}

inline std::vector<std::string> all_law_names() {
    std::vector<std::string> out;
    for (const LawInfo& l : law_registry()) out.push_back(l.name);
    return out;
}

// --- the registry -------------------------------------------------------------

inline const std::vector<LawInfo>& law_registry() {
    using lawdetail::describe;
    using lawdetail::expect_eq;
    using lawdetail::expect_eq3;
    using lawdetail::expect_zero;
    using lawdetail::sampled_tuples;

    static const std::vector<LawInfo> registry = [] {
        std::vector<LawInfo> laws;
        auto add = [&](std::string name, std::string note, LawSweep defaults,
                       std::function<void(const LawSweep&, LawReport&)> run) {
            laws.push_back({std::move(name), std::move(note), defaults, std::move(run)});
        };

        LawSweep hopf_sweep;
        hopf_sweep.max_forest = 4;

        add("hopf_coassoc", "coproduct is coassociative", hopf_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                    TensorSum d = coproduct(f);
                    expect_eq3(rep, "f=" + to_text(f), coproduct_on_left(d),
                               coproduct_on_right(d));
                }
            });

        add("hopf_counit", "counit is a two-sided identity against the coproduct", hopf_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                    ForestSum left, right;
                    const TensorSum d = coproduct(f);
                    for (const auto& [k, c] : d.terms()) {
                        left += (c * counit(ForestSum(k.first))) * ForestSum(k.second);
                        right += (c * counit(ForestSum(k.second))) * ForestSum(k.first);
                    }
                    ForestSum self(f);
                    expect_eq(rep, "f=" + to_text(f) + " (left)", left, self);
                    expect_eq(rep, "f=" + to_text(f) + " (right)", right, self);
                }
            });

        add("hopf_antipode_axiom", "antipode convolution collapses to the counit", hopf_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                    ForestSum left, right;
                    const TensorSum d = coproduct(f);
                    for (const auto& [k, c] : d.terms()) {
                        left += c * (antipode(k.first) * ForestSum(k.second));
                        right += c * (ForestSum(k.first) * antipode(k.second));
                    }
                    ForestSum target = counit(ForestSum(f)) * ForestSum::unit();
                    expect_eq(rep, "f=" + to_text(f) + " (left)", left, target);
                    expect_eq(rep, "f=" + to_text(f) + " (right)", right, target);
                }
            });

        LawSweep harm_sweep;
        harm_sweep.max_word = 4;  // total degree across the tuple

        add("harmonic_comm_assoc", "harmonic product commutes and associates", harm_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    auto words = words_up_to(r, sw.max_word);
                    for (const Word& a : words)
                        for (const Word& b : words) {
                            if (a.degree() + b.degree() > sw.max_word) continue;
                            expect_eq(rep,
                                      describe(r, {{"a", to_text(a)}, {"b", to_text(b)}}),
                                      harmonic(a, b), harmonic(b, a));
                            for (const Word& c : words) {
                                if (a.degree() + b.degree() + c.degree() > sw.max_word) continue;
                                NCPoly pc = NCPoly::from_word(c);
                                expect_eq(rep,
                                          describe(r, {{"a", to_text(a)},
                                                       {"b", to_text(b)},
                                                       {"c", to_text(c)}}),
                                          harmonic(harmonic(a, b), pc),
                                          harmonic(NCPoly::from_word(a), harmonic(b, c)));
                            }
                        }
                    // sampled layer: triples one past the total-degree cap
                    std::mt19937_64 rng(lawdetail::mix_seed(sw.seed, rep.law + std::to_string(r)));
                    for (long i = 0; i < sw.sample_budget; ++i) {
                        int total = sw.max_word + 1;
                        std::uniform_int_distribution<int> cut(0, total);
                        int la = cut(rng);
                        std::uniform_int_distribution<int> cut2(0, total - la);
                        int lb = cut2(rng);
                        Word a = lawdetail::random_word(rng, r, la);
                        Word b = lawdetail::random_word(rng, r, lb);
                        Word c = lawdetail::random_word(rng, r, total - la - lb);
                        NCPoly pc = NCPoly::from_word(c);
                        expect_eq(rep,
                                  describe(r, {{"a", to_text(a)},
                                               {"b", to_text(b)},
                                               {"c", to_text(c)}}),
                                  harmonic(harmonic(a, b), pc),
                                  harmonic(NCPoly::from_word(a), harmonic(b, c)));
                    }
                }
            });

        add("harmonic_lemma_i_ii", "harmonic product absorbs full z-letters on either end",
            LawSweep{}, [](const LawSweep& sw, LawReport& rep) {
                auto check_pair = [&](int r, const Word& v, const Word& w) {
                    const int kmax = 3;
                    NCPoly pv = NCPoly::from_word(v), pw = NCPoly::from_word(w);
                    NCPoly vw = harmonic(pv, pw);
                    // products that do not depend on the full (k,s,l,t) tuple
                    std::vector<NCPoly> right_app, right_pre, left_app, left_pre;
                    std::vector<Word> zs;
                    for (int k = 1; k <= kmax; ++k)
                        for (int sj = 0; sj < r; ++sj) {
                            Word zw = z_word(r, k, sj);
                            zs.push_back(zw);
                            NCPoly z = NCPoly::from_word(zw);
                            right_app.push_back(harmonic(pv, pw * z));
                            right_pre.push_back(harmonic(pv, z * pw));
                            left_app.push_back(harmonic(pv * z, pw));
                            left_pre.push_back(harmonic(z * pv, pw));
                        }
                    const std::size_t n = zs.size();
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            const Word& zkw = zs[a];
                            const Word& zlw = zs[b];
                            int k = z_decompose(zkw).factors[0].first;
                            int sj = z_decompose(zkw).factors[0].second;
                            int l = z_decompose(zlw).factors[0].first;
                            int tj = z_decompose(zlw).factors[0].second;
                            NCPoly zk = NCPoly::from_word(zkw);
                            NCPoly zl = NCPoly::from_word(zlw);
                            NCPoly zkl = NCPoly::from_word(z_word(r, k + l, (sj + tj) % r));
                            std::string input =
                                describe(r, {{"v", to_text(v)},
                                             {"w", to_text(w)},
                                             {"k", std::to_string(k)},
                                             {"l", std::to_string(l)},
                                             {"s", std::to_string(sj)},
                                             {"t", std::to_string(tj)}});
                            expect_eq(rep, input + " (i)", harmonic(pv * zk, pw * zl),
                                      right_app[b] * zk + left_app[a] * zl + vw * zkl);
                            expect_eq(rep, input + " (ii)", harmonic(zk * pv, zl * pw),
                                      zk * right_pre[b] + zl * left_pre[a] + zkl * vw);
                        }
                };
                for (int r : sw.r_values) {
                    auto words = words_up_to(r, sw.max_word);
                    for (const Word& v : words)
                        for (const Word& w : words) check_pair(r, v, w);
                    for (const auto& tup : sampled_tuples(sw, rep.law, r, 2))
                        check_pair(r, tup[0], tup[1]);
                }
            });

        add("lem_xplusy", "appending the full z-letter slides out of the diamond", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly z1 = z_full(1), zr = z_full(r);
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        for (const Word& v : words_up_to(1, sw.max_word))
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pv = NCPoly::from_word(v), pw = NCPoly::from_word(w);
                                NCPoly base = table.diamond(s, pv, pw) * zr;
                                std::string input = describe(
                                    r, {{"s", std::to_string(sj)},
                                        {"v", to_text(v)},
                                        {"w", to_text(w)}});
                                expect_eq(rep, input + " (vz)", table.diamond(s, pv * z1, pw),
                                          base);
                                expect_eq(rep, input + " (wz)", table.diamond(s, pv, pw * zr),
                                          base);
                            }
                    }
                }
            });

        add("lem6", "tail z-delta letters peel off the diamond", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly x1 = letter_x(1), y1 = letter_y(1, 0);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zd = z_delta(t);
                            NCPoly ydt = table.diamond(t, y1, NCPoly::one(r));
                            for (const Word& v : words_up_to(1, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    std::string input = describe(
                                        r, {{"s", std::to_string(sj)},
                                            {"t", std::to_string(tj)},
                                            {"v", to_text(v)},
                                            {"w", to_text(w)}});
                                    expect_eq(rep, input + " (i)",
                                              table.diamond(s, pv * x1, pw * zd),
                                              table.diamond(s, pv, pw * zd) * zd -
                                                  table.diamond(s, pv * y1, pw) * zd);
                                    expect_eq(rep, input + " (ii)",
                                              table.diamond(s, pv * y1, pw * zd),
                                              table.diamond(s, pv, pw * zd) * ydt +
                                                  table.diamond(s, pv * y1, pw) * zd);
                                }
                        }
                }
            });

        LawSweep prop0_sweep;
        prop0_sweep.max_word = 2;

        add("prop0", "diamond recursion matches its harmonic closed form", prop0_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    HarmonicTable products;
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        auto run_case = [&](const Word& v, const Word& w) {
                            NCPoly pv = NCPoly::from_word(v), pw = NCPoly::from_word(w);
                            expect_eq(rep,
                                      describe(r, {{"s", std::to_string(sj)},
                                                   {"v", to_text(v)},
                                                   {"w", to_text(w)}}),
                                      table.diamond(s, pv, pw),
                                      diamond_oracle(s, pv, pw, &products));
                        };
                        for (const Word& v : words_up_to(1, sw.max_word + 1))
                            for (const Word& w : words_up_to(r, sw.max_word)) run_case(v, w);
                    }
                }
            });

        add("lem1_mixed_assoc", "diamond at 1 associates into diamond at s", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    RootIndex one(0, 1);
                    auto lefts = words_up_to(1, sw.max_word);
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        for (const Word& u : lefts)
                            for (const Word& v : lefts)
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pu = NCPoly::from_word(u);
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    expect_eq(rep,
                                              describe(r, {{"s", std::to_string(sj)},
                                                           {"u", to_text(u)},
                                                           {"v", to_text(v)},
                                                           {"w", to_text(w)}}),
                                              table.diamond(s, table.diamond(one, pu, pv), pw),
                                              table.diamond(s, pu, table.diamond(s, pv, pw)));
                                }
                    }
                }
            });

        add("lem_y", "a single y distributes over an interior z-delta letter", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly y1 = letter_y(1, 0);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zdt = z_delta(t), zds = z_delta(s);
                            for (const Word& v : words_up_to(r, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    NCPoly lhs = table.diamond(s, y1, pv * zdt * pw);
                                    NCPoly rhs = table.diamond(s, y1, pv) * zdt * pw +
                                                 pv * zdt * table.diamond(s, y1, pw) +
                                                 pv * zdt * (zds - zdt) * pw;
                                    expect_eq(rep,
                                              describe(r, {{"s", std::to_string(sj)},
                                                           {"t", std::to_string(tj)},
                                                           {"v", to_text(v)},
                                                           {"w", to_text(w)}}),
                                              lhs, rhs);
                                }
                        }
                }
            });

        LawSweep prop7_sweep;
        prop7_sweep.max_word = 1;

        add("prop7", "the F-polynomials are compatible with the coproduct", prop7_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                        NCPoly ff = ctx.f_poly(f);
                        for (int sj = 0; sj < r; ++sj)
                            for (int s2 = 0; s2 < r; ++s2) {
                                RootIndex s(sj, r), sp(s2, r);
                                NCPoly zd = z_delta(sp);
                                for (const Word& v : words_up_to(r, sw.max_word))
                                    for (const Word& w : words_up_to(r, sw.max_word)) {
                                        NCPoly pv = NCPoly::from_word(v);
                                        NCPoly pw = NCPoly::from_word(w);
                                        NCPoly lhs =
                                            ctx.diamonds().diamond(s, ff, pv * zd * pw);
                                        NCPoly rhs(r);
                                        const TensorSum d = coproduct(f);
                                        for (const auto& [k, c] : d.terms()) {
                                            rhs += c * (ctx.diamonds().diamond(
                                                            s, ctx.f_poly(k.first), pv) *
                                                        zd *
                                                        ctx.diamonds().diamond(
                                                            sp, ctx.f_poly(k.second), pw));
                                        }
                                        expect_eq(rep,
                                                  describe(r, {{"f", to_text(f)},
                                                               {"s", std::to_string(sj)},
                                                               {"s'", std::to_string(s2)},
                                                               {"v", to_text(v)},
                                                               {"w", to_text(w)}}),
                                                  lhs, rhs);
                                    }
                            }
                    }
                }
            });

        add("prop_main3", "the tau-mirror identity for diamond tails", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly y1 = letter_y(1, 0);
                    NCPoly z = z_full(r);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zds = z_delta(s), zdt = z_delta(t);
                            for (const Word& v : words_up_to(1, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    NCPoly lhs =
                                        zds * table.diamond(s, pv * y1, pw * (z - zdt));
                                    NCPoly inner = table.diamond(
                                        t, apply_tau(pv) * y1, apply_tau(pw) * (z - zds));
                                    NCPoly rhs = -(apply_tau(inner) * (z - zdt));
                                    expect_eq(rep,
                                              describe(r, {{"s", std::to_string(sj)},
                                                           {"t", std::to_string(tj)},
                                                           {"v", to_text(v)},
                                                           {"w", to_text(w)}}),
                                              lhs, rhs);
                                }
                        }
                }
            });

        add("lem2_i", "diamond against 1 is multiplicative on the left slot", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        NCPoly unit = NCPoly::one(r);
                        for (const Word& v : words_up_to(1, sw.max_word))
                            for (const Word& v2 : words_up_to(1, sw.max_word)) {
                                NCPoly pv = NCPoly::from_word(v);
                                NCPoly pv2 = NCPoly::from_word(v2);
                                expect_eq(rep,
                                          describe(r, {{"s", std::to_string(sj)},
                                                       {"v", to_text(v)},
                                                       {"v'", to_text(v2)}}),
                                          table.diamond(s, pv * pv2, unit),
                                          table.diamond(s, pv, unit) *
                                              table.diamond(s, pv2, unit));
                            }
                    }
                }
            });

        add("lem2_ii", "trailing z minus z-delta factors through diamond", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly y1 = letter_y(1, 0);
                    NCPoly z = z_full(r);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zdt = z_delta(t);
                            NCPoly ydt = table.diamond(t, y1, NCPoly::one(r));
                            for (const Word& v : words_up_to(1, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    expect_eq(
                                        rep,
                                        describe(r, {{"s", std::to_string(sj)},
                                                     {"t", std::to_string(tj)},
                                                     {"v", to_text(v)},
                                                     {"w", to_text(w)}}),
                                        table.diamond(s, pv * y1, pw * (z - zdt)),
                                        (table.diamond(s, pv * y1, pw) -
                                         table.diamond(s, pv, pw * zdt)) *
                                            ydt);
                                }
                        }
                }
            });

        add("lem2_iii", "leading y against a leading z interchanges", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly y1 = letter_y(1, 0);
                    NCPoly z = z_full(r);
                    NCPoly unit = NCPoly::one(r);
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        NCPoly yds = table.diamond(s, y1, unit);
                        for (const Word& v : words_up_to(1, sw.max_word))
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pv = NCPoly::from_word(v);
                                NCPoly pw = NCPoly::from_word(w);
                                expect_eq(rep,
                                          describe(r, {{"s", std::to_string(sj)},
                                                       {"v", to_text(v)},
                                                       {"w", to_text(w)}}),
                                          table.diamond(s, y1 * pv, z * pw),
                                          yds * table.diamond(s, pv, z * pw) +
                                              z * table.diamond(s, y1 * pv, pw) -
                                              z * yds * table.diamond(s, pv, pw));
                            }
                    }
                }
            });

        add("lem2_iv", "leading y against a leading z-delta retargets the twist", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly y1 = letter_y(1, 0);
                    NCPoly unit = NCPoly::one(r);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zdt = z_delta(t);
                            NCPoly yds = table.diamond(s, y1, unit);
                            for (const Word& v : words_up_to(1, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    expect_eq(rep,
                                              describe(r, {{"s", std::to_string(sj)},
                                                           {"t", std::to_string(tj)},
                                                           {"v", to_text(v)},
                                                           {"w", to_text(w)}}),
                                              table.diamond(s, y1 * pv, zdt * pw),
                                              yds * table.diamond(s, pv, zdt * pw) +
                                                  zdt * table.diamond(t, y1 * pv, pw));
                                }
                        }
                }
            });

        add("lem2_v", "leading z against a leading z interchanges", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly z1 = z_full(1);
                    NCPoly z = z_full(r);
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        for (const Word& v : words_up_to(1, sw.max_word))
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pv = NCPoly::from_word(v);
                                NCPoly pw = NCPoly::from_word(w);
                                expect_eq(rep,
                                          describe(r, {{"s", std::to_string(sj)},
                                                       {"v", to_text(v)},
                                                       {"w", to_text(w)}}),
                                          table.diamond(s, z1 * pv, z * pw),
                                          z * (table.diamond(s, pv, z * pw) +
                                               table.diamond(s, z1 * pv, pw) -
                                               z * table.diamond(s, pv, pw)));
                            }
                    }
                }
            });

        add("lem2_vi", "leading z against a leading z-delta retargets the twist", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly z1 = z_full(1);
                    NCPoly z = z_full(r);
                    for (int sj = 0; sj < r; ++sj)
                        for (int tj = 0; tj < r; ++tj) {
                            RootIndex s(sj, r), t(tj, r);
                            NCPoly zdt = z_delta(t);
                            for (const Word& v : words_up_to(1, sw.max_word))
                                for (const Word& w : words_up_to(r, sw.max_word)) {
                                    NCPoly pv = NCPoly::from_word(v);
                                    NCPoly pw = NCPoly::from_word(w);
                                    expect_eq(rep,
                                              describe(r, {{"s", std::to_string(sj)},
                                                           {"t", std::to_string(tj)},
                                                           {"v", to_text(v)},
                                                           {"w", to_text(w)}}),
                                              table.diamond(s, z1 * pv, zdt * pw),
                                              z * table.diamond(s, pv, zdt * pw) +
                                                  zdt * table.diamond(t, z1 * pv, pw) -
                                                  z * zdt * table.diamond(t, pv, pw));
                                }
                        }
                }
            });

        add("lem2_vii", "tau commutes with diamond against 1", LawSweep{},
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    DiamondTable table;
                    NCPoly unit = NCPoly::one(r);
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        for (const Word& v : words_up_to(1, sw.max_word)) {
                            NCPoly pv = NCPoly::from_word(v);
                            expect_eq(rep,
                                      describe(r, {{"s", std::to_string(sj)},
                                                   {"v", to_text(v)}}),
                                      apply_tau(table.diamond(s, pv, unit)),
                                      table.diamond(s, apply_tau(pv), unit));
                        }
                    }
                }
            });

        LawSweep rtm_sweep;
        rtm_sweep.max_forest = 2;
        rtm_sweep.max_word = 2;

        add("thm1", "forest maps factor through the diamond on z-delta heads", rtm_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                        NCPoly ff = ctx.f_poly(f);
                        for (int sj = 0; sj < r; ++sj) {
                            RootIndex s(sj, r);
                            NCPoly zd = z_delta(s);
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pw = NCPoly::from_word(w);
                                expect_eq(rep,
                                          describe(r, {{"f", to_text(f)},
                                                       {"s", std::to_string(sj)},
                                                       {"w", to_text(w)}}),
                                          ctx.apply(f, zd * pw),
                                          zd * ctx.diamonds().diamond(s, ff, pw));
                            }
                        }
                    }
                }
            });

        add("thm2", "antipode maps factor through the companion polynomials", rtm_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                        ForestSum sf = antipode(f);
                        NCPoly gf = ctx.g_poly(f);
                        for (int sj = 0; sj < r; ++sj) {
                            RootIndex s(sj, r);
                            NCPoly zd = z_delta(s);
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pw = NCPoly::from_word(w);
                                expect_eq(rep,
                                          describe(r, {{"f", to_text(f)},
                                                       {"s", std::to_string(sj)},
                                                       {"w", to_text(w)}}),
                                          ctx.apply(sf, zd * pw),
                                          zd * ctx.diamonds().diamond(s, gf, pw));
                            }
                        }
                    }
                }
            });

        add("thm3", "the tau-conjugate of a forest map is its antipode map", rtm_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                        ForestSum sf = antipode(f);
                        for (const Word& w : words_up_to(r, sw.max_word)) {
                            NCPoly pw = NCPoly::from_word(w);
                            expect_eq(rep,
                                      describe(r, {{"f", to_text(f)}, {"w", to_text(w)}}),
                                      ctx.apply(sf, pw),
                                      apply_tau(ctx.apply(f, apply_tau(pw))));
                        }
                    }
                }
            });

        LawSweep fg_sweep;
        fg_sweep.max_forest = 4;

        add("mt45", "the F and G polynomials convolve to zero", fg_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                RtmContext ctx(1);
                RootIndex one(0, 1);
                for (int d = 1; d <= sw.max_forest; ++d)
                    for (const Forest& f : enumerate_forests(d)) {
                        NCPoly acc(1);
                        const TensorSum split = coproduct(f);
                        for (const auto& [k, c] : split.terms())
                            acc += c * ctx.diamonds().diamond(one, ctx.f_poly(k.first),
                                                              ctx.g_poly(k.second));
                        expect_zero(rep, "f=" + to_text(f), acc);
                    }
            });

        add("mt51", "F of a forest mirrors F of its antipode", fg_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                RtmContext ctx(1);
                NCPoly y = letter_y(1, 0);
                for (int d = 1; d <= sw.max_forest; ++d)
                    for (const Forest& f : enumerate_forests(d)) {
                        NCPoly fsf = ctx.f_poly(antipode(f));
                        NCPoly rhs = -(apply_tau(right_divide(fsf, y)) * y);
                        expect_eq(rep, "f=" + to_text(f), ctx.f_poly(ForestSum(f)), rhs);
                    }
            });

        add("g_eq_f_of_antipode", "G equals F after the antipode", fg_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                RtmContext ctx(1);
                for (const Forest& f : enumerate_forests_up_to(sw.max_forest))
                    expect_eq(rep, "f=" + to_text(f), ctx.g_poly(ForestSum(f)),
                              ctx.f_poly(antipode(f)));
            });

        add("rtm_commute", "forest maps commute with each other", rtm_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    auto forests = enumerate_forests_up_to(sw.max_forest);
                    for (std::size_t i = 0; i < forests.size(); ++i)
                        for (std::size_t j = i; j < forests.size(); ++j)
                            for (const Word& w : words_up_to(r, sw.max_word)) {
                                NCPoly pw = NCPoly::from_word(w);
                                expect_eq(rep,
                                          describe(r, {{"f", to_text(forests[i])},
                                                       {"g", to_text(forests[j])},
                                                       {"w", to_text(w)}}),
                                          ctx.apply(forests[i], ctx.apply(forests[j], pw)),
                                          ctx.apply(forests[j], ctx.apply(forests[i], pw)));
                            }
                }
            });

        add("rtm_split_independence", "composite forests act independently of the split",
            rtm_sweep, [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest)) {
                        const auto& trees = f.trees();
                        if (trees.size() < 2) continue;
                        // distinct proper sub-multisets, by bitmask with dedup
                        std::vector<std::pair<Forest, Forest>> splits;
                        std::vector<std::string> seen;
                        for (unsigned mask = 1; mask + 1 < (1u << trees.size()); ++mask) {
                            std::vector<Tree> a, b;
                            for (std::size_t i = 0; i < trees.size(); ++i)
                                ((mask >> i) & 1u ? a : b).push_back(trees[i]);
                            Forest fa(std::move(a)), fb(std::move(b));
                            std::string sig = fa.code() + "|" + fb.code();
                            if (std::find(seen.begin(), seen.end(), sig) != seen.end())
                                continue;
                            seen.push_back(sig);
                            splits.emplace_back(std::move(fa), std::move(fb));
                        }
                        for (const Word& w : words_up_to(r, sw.max_word)) {
                            NCPoly pw = NCPoly::from_word(w);
                            NCPoly direct = ctx.apply(f, pw);
                            for (const auto& [fa, fb] : splits)
                                expect_eq(rep,
                                          describe(r, {{"f", to_text(f)},
                                                       {"g", to_text(fa)},
                                                       {"h", to_text(fb)},
                                                       {"w", to_text(w)}}),
                                          ctx.apply(fa, ctx.apply(fb, pw)), direct);
                        }
                    }
                }
            });

        add("rtm_rz_commute", "right multiplication by z commutes with forest maps",
            rtm_sweep, [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values) {
                    RtmContext ctx(r);
                    NCPoly z = z_full(r);
                    for (const Forest& f : enumerate_forests_up_to(sw.max_forest))
                        for (const Word& w : words_up_to(r, sw.max_word)) {
                            NCPoly pw = NCPoly::from_word(w);
                            expect_eq(rep,
                                      describe(r, {{"f", to_text(f)}, {"w", to_text(w)}}),
                                      ctx.apply(f, pw * z), ctx.apply(f, pw) * z);
                        }
                }
            });

        LawSweep word_sweep;
        word_sweep.r_values = {1, 2, 3, 4};
        word_sweep.max_word = 3;

        add("phi_tau_involutions", "phi and tau square to the identity", word_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values)
                    for (const Word& w : words_up_to(r, sw.max_word)) {
                        NCPoly pw = NCPoly::from_word(w);
                        expect_eq(rep, describe(r, {{"w", to_text(w)}, {"map", "phi"}}),
                                  apply_phi(apply_phi(pw)), pw);
                        expect_eq(rep, describe(r, {{"w", to_text(w)}, {"map", "tau"}}),
                                  apply_tau(apply_tau(pw)), pw);
                    }
            });

        add("psi_bijectivity", "psi and its inverse cancel in both orders", word_sweep,
            [](const LawSweep& sw, LawReport& rep) {
                for (int r : sw.r_values)
                    for (int sj = 0; sj < r; ++sj) {
                        RootIndex s(sj, r);
                        for (const Word& w : words_up_to(r, sw.max_word)) {
                            NCPoly pw = NCPoly::from_word(w);
                            expect_eq(rep,
                                      describe(r, {{"s", std::to_string(sj)},
                                                   {"w", to_text(w)},
                                                   {"dir", "inv.psi"}}),
                                      apply_psi_inv(s, apply_psi(s, pw)), pw);
                            expect_eq(rep,
                                      describe(r, {{"s", std::to_string(sj)},
                                                   {"w", to_text(w)},
                                                   {"dir", "psi.inv"}}),
                                      apply_psi(s, apply_psi_inv(s, pw)), pw);
                        }
                    }
            });

        return laws;
    }();
    return registry;
}

}  // namespace rtmlv

#endif
