#include <catch2/catch_amalgamated.hpp>

#include "rtmlv/parse.hpp"
#include "rtmlv/products.hpp"

using namespace rtmlv;

namespace {

NCPoly wp(const char* text, int r) { return parse_word_poly(text, r); }

}  // namespace

TEST_CASE("harmonic base cases") {
    NCPoly w = wp("x y0 y0", 1);
    CHECK(harmonic(NCPoly::one(1), w) == w);
    CHECK(harmonic(w, NCPoly::one(1)) == w);
    // y * y = 2 yy + xy
    CHECK(harmonic(wp("y0", 1), wp("y0", 1)) == wp("2*y0 y0 + x y0", 1));
    // x-tails pull out on either side
    CHECK(harmonic(wp("x", 1), wp("x", 1)) == wp("x x", 1));
    CHECK(harmonic(wp("y0 x", 2), wp("y1", 2)) ==
          wp("y0 y1 x + y1 y0 x + x y1 x", 2));
}

TEST_CASE("harmonic stuffle of full z-letters") {
    // z_{2,s} * z_{3,t} = z_{2,s} z_{3,t} + z_{3,t} z_{2,s} + z_{5,st}  (r=3)
    NCPoly z2s = NCPoly::from_word(z_word(3, 2, 1));
    NCPoly z3t = NCPoly::from_word(z_word(3, 3, 2));
    NCPoly expect = z2s * z3t + z3t * z2s + NCPoly::from_word(z_word(3, 5, 0));
    CHECK(harmonic(z2s, z3t) == expect);
}

TEST_CASE("harmonic preserves the ending subalgebras") {
    for (int r : {1, 2}) {
        for (const Word& a : words_up_to(r, 3))
            for (const Word& b : words_up_to(r, 3)) {
                if (!a.in_a1() || !b.in_a1()) continue;
                CHECK(harmonic(a, b).in_a1());
                if (a.admissible() && b.admissible())
                    CHECK(harmonic(a, b).admissible());
            }
    }
}

TEST_CASE("diamond base cases") {
    NCPoly w = wp("y1 x y0", 2);
    CHECK(diamond(RootIndex(1, 2), NCPoly::one(1), w) == w);

    // y <> 1 = z - zd_s, x <> 1 = zd_s
    for (int r = 1; r <= 4; ++r)
        for (int j = 0; j < r; ++j) {
            RootIndex s(j, r);
            CHECK(diamond(s, wp("y0", 1), NCPoly::one(r)) == z_full(r) - z_delta(s));
            CHECK(diamond(s, wp("x", 1), NCPoly::one(r)) == z_delta(s));
        }

    // y <>_1 y = yy - xy at r=1
    CHECK(diamond(RootIndex(0, 1), wp("y0", 1), wp("y0", 1)) == wp("y0 y0 - x y0", 1));
}

TEST_CASE("one is only a left unit") {
    // v <> 1 agrees with the morphism route everywhere...
    for (int r : {1, 2, 3})
        for (int j = 0; j < r; ++j)
            for (const Word& v : words_up_to(1, 3)) {
                RootIndex s(j, r);
                NCPoly pv = NCPoly::from_word(v);
                CHECK(diamond(s, pv, NCPoly::one(r)) ==
                      apply_psi(s, apply_phi(embed_into(pv, r))));
            }
    // ...and genuinely moves y when the twist is nontrivial
    CHECK(diamond(RootIndex(1, 2), wp("y0", 1), NCPoly::one(2)) != wp("y0", 2));
    // at s = 1 it is the identity on that side
    CHECK(diamond(RootIndex(0, 2), wp("y0", 1), NCPoly::one(2)) == wp("y0", 2));
}

TEST_CASE("diamond agrees with the closed form on a sample") {
    for (int r : {1, 2}) {
        DiamondTable table;
        for (int j = 0; j < r; ++j) {
            RootIndex s(j, r);
            for (const Word& v : words_up_to(1, 3))
                for (const Word& w : words_up_to(r, 2)) {
                    NCPoly pv = NCPoly::from_word(v), pw = NCPoly::from_word(w);
                    CHECK(table.diamond(s, pv, pw) == diamond_oracle(s, pv, pw));
                }
        }
    }
}

TEST_CASE("z slides across the diamond") {
    DiamondTable table;
    RootIndex s(1, 2);
    for (const Word& v : words_up_to(1, 2))
        for (const Word& w : words_up_to(2, 2)) {
            NCPoly pv = NCPoly::from_word(v), pw = NCPoly::from_word(w);
            NCPoly base = table.diamond(s, pv, pw) * z_full(2);
            CHECK(table.diamond(s, pv * z_full(1), pw) == base);
            CHECK(table.diamond(s, pv, pw * z_full(2)) == base);
        }
}

TEST_CASE("modulus checks") {
    CHECK_THROWS_AS(diamond(RootIndex(0, 2), wp("y1", 2), wp("y0", 2)), ModulusMismatch);
    CHECK_THROWS_AS(diamond(RootIndex(0, 3), wp("y0", 1), wp("y0", 2)), ModulusMismatch);
    CHECK_THROWS_AS(harmonic(wp("x", 1), wp("x", 2)), ModulusMismatch);
}

TEST_CASE("the labelled sign fault is visible") {
    RootIndex s(0, 1);
    NCPoly x = wp("x", 1);
    NCPoly clean = diamond(s, x, x);
    CHECK(clean == diamond_oracle(s, x, x));
    {
        MutationGuard guard(Mutation::diamond_rule_3_sign);
        CHECK(diamond(s, x, x) != clean);
        CHECK(diamond(s, x, x) != diamond_oracle(s, x, x));
    }
    CHECK(diamond(s, x, x) == clean);
    CHECK_THROWS_AS(mutation_from_label("bogus"), UnknownMutation);
    CHECK(mutation_from_label("diamond_rule_3_sign") == Mutation::diamond_rule_3_sign);
}
