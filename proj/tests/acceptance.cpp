// Acceptance suite: runs every shipped criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rtmlv/laws.hpp"
#include "rtmlv/mlv.hpp"
#include "rtmlv/parse.hpp"
#include "rtmlv/rtm.hpp"

using namespace rtmlv;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void law(const std::string& name, const SweepOverrides& over) {
        LawReport rep = run_law(name, over);
        std::ostringstream note;
        note << name << " cases=" << rep.cases << " (" << rep.ms << " ms)";
        if (!rep.ok()) {
            note << " first failure: " << rep.failures.front().input
                 << " lhs=" << rep.failures.front().lhs
                 << " rhs=" << rep.failures.front().rhs;
            require(false, note.str());
        } else {
            require(rep.cases > 0, name + ": empty sweep");
            trace += (trace.empty() ? "" : "; ") + note.str();
        }
    }

    std::string trace;
};

int run(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " ("
              << ms << " ms)";
    if (!c.ok) std::cout << "\n       " << c.detail;
    if (c.ok && !c.trace.empty()) std::cout << "\n       " << c.trace;
    std::cout << "\n";
    return c.ok ? 0 : 1;
}

const Tree dot{};
const Tree ladder2{std::vector<Tree>{dot}};
const Tree cherry{std::vector<Tree>{dot, dot}};

std::vector<int> rvals(int top) {
    std::vector<int> out;
    for (int i = 1; i <= top; ++i) out.push_back(i);
    return out;
}

}  // namespace

int main() {
    int failures = 0;

    failures += run(1, "grafting and coproduct displays reproduce exactly", [](Check& c) {
        c.require(b_plus(ForestSum::unit()) == ForestSum(dot), "graft of the unit");
        c.require(b_plus(ForestSum(Forest({dot, cherry}))) == ForestSum(Tree({dot, cherry})),
                  "graft of vertex + two-leaf tree");
        c.require(b_plus(parse_forest("[] [] [] - 2*[[]] [[]]")) ==
                      parse_forest("[[][][]] - 2*[[[]][[]]]"),
                  "graft of the signed combination");

        TensorSum d_unit;
        d_unit.add(Forest{}, Forest{}, 1);
        c.require(coproduct(ForestSum::unit()) == d_unit, "coproduct of the unit");

        TensorSum d_dot;
        d_dot.add(Forest(dot), Forest{}, 1);
        d_dot.add(Forest{}, Forest(dot), 1);
        c.require(coproduct(dot) == d_dot, "coproduct of the vertex");

        Forest pair({dot, dot});
        TensorSum d_pair;
        d_pair.add(pair, Forest{}, 1);
        d_pair.add(Forest(dot), Forest(dot), 2);
        d_pair.add(Forest{}, pair, 1);
        c.require(coproduct(pair) == d_pair, "coproduct of two vertices");

        TensorSum d_l2;
        d_l2.add(Forest(ladder2), Forest{}, 1);
        d_l2.add(Forest(dot), Forest(dot), 1);
        d_l2.add(Forest{}, Forest(ladder2), 1);
        c.require(coproduct(ladder2) == d_l2, "coproduct of the two-chain");

        TensorSum d_ch;
        d_ch.add(Forest(cherry), Forest{}, 1);
        d_ch.add(pair, Forest(dot), 1);
        d_ch.add(Forest(dot), Forest(ladder2), 2);
        d_ch.add(Forest{}, Forest(cherry), 1);
        c.require(coproduct(cherry) == d_ch, "coproduct of the two-leaf tree");
    });

    failures += run(2, "vertex map conditions; two-vertex values satisfy the factorization",
                    [](Check& c) {
                        for (int r = 1; r <= 4; ++r) {
                            RtmContext ctx(r);
                            c.require(ctx.apply(Forest(dot), z_full(r)).is_zero(),
                                      "vertex map kills z");
                            for (int j = 0; j < r; ++j) {
                                RootIndex s(j, r);
                                NCPoly zd = z_delta(s);
                                NCPoly zm = z_full(r) - zd;
                                c.require(ctx.apply(Forest(dot), zd) == zd * zm,
                                          "vertex map on zd");
                                // two-vertex values: the minus variant, which is the
                                // one consistent with the factorization theorem
                                NCPoly minus_variant = zd * zm * zm - zd * zd * zm;
                                NCPoly plus_variant = zd * zm * zm + zd * zd * zm;
                                NCPoly got = ctx.apply(Forest({dot, dot}), zd);
                                c.require(got == minus_variant, "two vertices on zd");
                                c.require(got != plus_variant,
                                          "two-vertex value must differ from the plus variant");
                                NCPoly ff = ctx.f_poly(Forest({dot, dot}));
                                c.require(got == zd * ctx.diamonds().diamond(s, ff,
                                                                             NCPoly::one(r)),
                                          "two-vertex value factors");
                                NCPoly two = Rational(2) * z_full(r) - zd;
                                c.require(ctx.apply(Forest(Tree({dot, dot})), zd) ==
                                              zd * zm * two * zm - zd * zd * two * zm,
                                          "grafted pair on zd");
                            }
                        }
                    });

    failures += run(3, "factorization suite over all forests/words within the sweep",
                    [](Check& c) {
                        SweepOverrides over;
                        over.r_values = rvals(3);
                        over.max_forest = 3;
                        over.max_word = 3;
                        c.law("thm1", over);
                    });

    failures += run(4, "antipode factorization and tau-conjugation suites", [](Check& c) {
        SweepOverrides over;
        over.r_values = rvals(3);
        over.max_forest = 3;
        over.max_word = 3;
        c.law("thm2", over);
        c.law("thm3", over);
        SweepOverrides wide;
        wide.r_values = rvals(2);
        wide.max_forest = 3;
        wide.max_word = 4;
        c.law("thm3", wide);
    });

    failures += run(5, "lemma and proposition suites, two independent diamond routes",
                    [](Check& c) {
                        SweepOverrides w3;
                        w3.r_values = rvals(3);
                        w3.max_word = 3;
                        c.law("harmonic_lemma_i_ii", w3);
                        c.law("lem_xplusy", w3);
                        c.law("lem6", w3);
                        c.law("prop0", w3);  // recursion vs closed form, v up to 4, w up to 3
                        c.law("lem1_mixed_assoc", w3);

                        SweepOverrides w2;
                        w2.r_values = rvals(3);
                        w2.max_word = 2;
                        c.law("lem_y", w2);
                        c.law("prop_main3", w2);
                        for (const char* name : {"lem2_i", "lem2_ii", "lem2_iii", "lem2_iv",
                                                 "lem2_v", "lem2_vi", "lem2_vii"})
                            c.law(name, w2);

                        SweepOverrides pr7;
                        pr7.r_values = rvals(2);
                        pr7.max_forest = 2;
                        pr7.max_word = 2;
                        c.law("prop7", pr7);

                        SweepOverrides fg;
                        fg.max_forest = 4;
                        c.law("mt45", fg);
                        c.law("mt51", fg);
                        c.law("g_eq_f_of_antipode", fg);
                    });

    failures += run(6, "Hopf axioms at degree 5 and tree counts 1,1,2,4,9", [](Check& c) {
        SweepOverrides over;
        over.max_forest = 5;
        c.law("hopf_coassoc", over);
        c.law("hopf_counit", over);
        c.law("hopf_antipode_axiom", over);
        // multiplicativity of the coproduct and antipode
        for (const Forest& g : enumerate_forests_up_to(3))
            for (const Forest& h : enumerate_forests_up_to(2)) {
                if (g.degree() + h.degree() > 5) continue;
                c.require(coproduct(ForestSum(g) * ForestSum(h)) ==
                              coproduct(g) * coproduct(h),
                          "coproduct multiplicativity at " + to_text(g) + " x " + to_text(h));
                c.require(antipode(ForestSum(g) * ForestSum(h)) ==
                              antipode(g) * antipode(h),
                          "antipode multiplicativity at " + to_text(g) + " x " + to_text(h));
            }
        const long expected[] = {1, 1, 2, 4, 9};
        for (int d = 1; d <= 5; ++d)
            c.require(static_cast<long>(enumerate_trees(d).size()) == expected[d - 1],
                      "tree count at degree " + std::to_string(d));
    });

    failures += run(7, "forest maps commute and act independently of the split", [](Check& c) {
        SweepOverrides over;
        over.r_values = rvals(2);
        over.max_forest = 2;
        over.max_word = 3;
        c.law("rtm_commute", over);
        c.law("rtm_split_independence", over);
    });

    failures += run(8, "canonical depth-two relation and numeric sanity", [](Check& c) {
        RtmContext ctx(1);
        auto rels = generate_relations(ctx, 1, 2, RelationVariant::direct);
        c.require(rels.size() == 1, "exactly one relation at (d=1, wt=2, r=1)");
        c.require(rels[0].output == parse_word_poly("x y0 y0 - x x y0", 1),
                  "the relation is x y0 y0 - x x y0");

        EvalOptions opts;
        opts.max_terms = 100000;
        opts.tolerance = 1e-3;
        KernelReport rep = check_kernel(rels[0].output, opts);
        c.require(rep.pass && std::abs(rep.sum) < 1e-3, "depth-two identity within 1e-3");

        const double pi = std::acos(-1.0);
        MLVIndex z2;
        z2.k = {2};
        z2.j = {0};
        z2.r = 1;
        c.require(std::abs(evaluate_L(z2, opts).value.real() - pi * pi / 6) < 1e-4,
                  "value at (2;1)");
        MLVIndex lm;
        lm.k = {1};
        lm.j = {1};
        lm.r = 2;
        c.require(std::abs(evaluate_L(lm, opts).value.real() + std::log(2.0)) < 1e-4,
                  "value at (1;-1)");
    });

    failures += run(9, "every generated relation passes the numeric kernel check",
                    [](Check& c) {
                        EvalOptions opts;
                        opts.max_terms = 100000;
                        opts.tolerance = 1e-3;
                        long counted = 0;
                        for (int r = 1; r <= 2; ++r) {
                            RtmContext ctx(r);
                            for (RelationVariant v :
                                 {RelationVariant::direct, RelationVariant::tau_conjugate})
                                for (int d = 1; d <= 2; ++d)
                                    for (int wt = 1; wt <= 3; ++wt)
                                        for (const Relation& rel :
                                             generate_relations(ctx, d, wt, v)) {
                                            ++counted;
                                            KernelReport rep = check_kernel(rel.output, opts);
                                            if (!rep.pass)
                                                c.require(false,
                                                          "relation failed: r=" +
                                                              std::to_string(r) + " " +
                                                              to_text(rel.forest) + " on " +
                                                              to_text(rel.input) + " |sum|=" +
                                                              std::to_string(std::abs(rep.sum)));
                                        }
                        }
                        c.require(counted > 0, "no relations generated");
                        c.trace = std::to_string(counted) + " relations checked";
                    });

    failures += run(10, "harness self-test: an injected sign fault is detected", [](Check& c) {
        SweepOverrides small;
        small.r_values = rvals(1);
        small.max_forest = 2;
        small.max_word = 2;
        small.sample_budget = 0;
        c.require(run_law("prop0", small).ok(), "prop0 clean before the fault");
        c.require(run_law("thm1", small).ok(), "thm1 clean before the fault");
        MutationGuard guard(Mutation::diamond_rule_3_sign);
        c.require(run_law("prop0", small).failures.size() >= 1,
                  "prop0 must catch the sign fault");
        c.require(run_law("thm1", small).failures.size() >= 1,
                  "thm1 must catch the sign fault");
    });

    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
              << (failures == 0 ? "" : std::to_string(failures)) << "\n";
    return failures == 0 ? 0 : 1;
}
