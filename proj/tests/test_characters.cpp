#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "branchkit/characters.hpp"
#include "branchkit/harmonics.hpp"
#include "oracles.hpp"

using namespace branchkit;

TEST_CASE("small irreducible characters", "[characters]") {
    CHECK(irreducible_character(SU2(), {2}) ==
          monomial(1, {2}) + monomial(1, {0}) + monomial(1, {-2}));
    CHECK(irreducible_character(U(2), {1, 0}) == monomial(2, {1, 0}) + monomial(2, {0, 1}));
    CHECK(irreducible_character(Sp(1), {1}) == monomial(1, {1}) + monomial(1, {-1}));
    CHECK(irreducible_character(SO(2), {-3}) == monomial(1, {-3}));
    CHECK(irreducible_character(O(2), {3}) == monomial(1, {3}) + monomial(1, {-3}));
}

TEST_CASE("character value at identity equals weyl_dim", "[characters]") {
    struct Case {
        GroupLabel g;
        Weight w;
    };
    const Case cases[] = {
        {U(2), {4, -1}},  {U(3), {2, 1, -1}}, {U(4), {2, 0, 0, -2}}, {Sp(2), {3, 1}},
        {Sp(3), {2, 2, 0}}, {SO(3), {5}},     {SO(4), {3, -2}},      {SO(5), {2, 2}},
        {SO(6), {2, 1, -1}}, {SU2(), {7}},    {O(4), {2, 1}},
        {product({U(2), U(2)}), {2, 0, 1, -1}},
    };
    for (const auto& c : cases) {
        auto ch = irreducible_character(c.g, c.w);
        CHECK(ch.eval_ones() == weyl_dim(c.g, c.w));
        CHECK(weyl_symmetric(ch, c.g));
    }
}

TEST_CASE("character coefficients match the Freudenthal oracle", "[characters][oracle]") {
    // Spot: weight multiplicities of Sp(2) hw (2,0) at a few lattice points.
    auto ch = irreducible_character(Sp(2), {2, 0});
    CHECK(ch.coeff({2, 0}) == 1);
    CHECK(ch.coeff({1, 1}) == 1);
    CHECK(ch.coeff({0, 0}) == 2);
    CHECK(ch.eval_ones() == oracles::freudenthal_dim(Sp(2), {2, 0}));
}

TEST_CASE("decompose round trip", "[characters]") {
    struct Case {
        GroupLabel g;
        Weight w;
    };
    const Case cases[] = {
        {U(2), {3, -1}}, {U(3), {2, 0, -1}}, {Sp(2), {2, 1}},  {SO(4), {2, -1}},
        {SO(5), {2, 1}}, {SU2(), {5}},       {O(4), {2, 1}},   {SO(2), {-4}},
        {product({U(2), U(1)}), {1, 0, -2}},
    };
    for (const auto& c : cases) {
        auto d = decompose(irreducible_character(c.g, c.w), c.g);
        REQUIRE(d.entries.size() == 1);
        CHECK(d.multiplicity(c.w) == 1);
    }
}

TEST_CASE("tensor square of the U(2) standard representation", "[characters]") {
    auto std2 = irreducible_character(U(2), {1, 0});
    auto d = decompose(std2 * std2, U(2));
    CHECK(d.entries.size() == 2);
    CHECK(d.multiplicity({2, 0}) == 1);
    CHECK(d.multiplicity({1, 1}) == 1);
}

TEST_CASE("restriction of the U(2) adjoint to the diagonal torus", "[characters]") {
    auto adj = irreducible_character(U(2), {1, -1});
    auto res = restrict_char(adj, emb::u_block(1, 1));
    auto d = decompose(res, product({U(1), U(1)}));
    CHECK(d.multiplicity({1, -1}) == 1);
    CHECK(d.multiplicity({0, 0}) == 1);
    CHECK(d.multiplicity({-1, 1}) == 1);
}

TEST_CASE("restriction along named embeddings", "[characters]") {
    // Vector character of SO(4) restricted to U(2): same exponents.
    auto vec = real_harmonic_char(2, standard_eigenvalues(SO(4)), 1);
    auto res = restrict_char(vec, emb::u_in_so(2));
    CHECK(res == monomial(2, {1, 0}) + monomial(2, {-1, 0}) + monomial(2, {0, 1}) +
                     monomial(2, {0, -1}));

    // H^1(R^4) over U(2): standard plus dual-standard.
    auto d = decompose(res, U(2));
    CHECK(d.entries.size() == 2);
    CHECK(d.multiplicity({1, 0}) == 1);
    CHECK(d.multiplicity({0, -1}) == 1);

    // (z1+z2) under the diagonal torus split of U(2).
    auto stdu2 = irreducible_character(U(2), {1, 0});
    auto split = restrict_char(stdu2, emb::u_block(1, 1));
    CHECK(split == monomial(2, {1, 0}) + monomial(2, {0, 1}));

    // Standard U(2m) character under Sp(m) for m = 1: z + z^-1.
    auto stdu = irreducible_character(U(2), {1, 0});
    CHECK(restrict_char(stdu, emb::sp_in_u(1)) == monomial(1, {1}) + monomial(1, {-1}));
}

TEST_CASE("restriction preserves dimension", "[characters]") {
    struct Case {
        GroupLabel amb;
        Weight w;
        TorusEmbedding e;
        GroupLabel sub;
    };
    const Case cases[] = {
        {U(4), {2, 0, 0, -1}, emb::u_block(2, 2), product({U(2), U(2)})},
        {U(4), {1, 1, 0, 0}, emb::sp_in_u(2), Sp(2)},
        {U(3), {2, 0, -1}, emb::so_in_u(3), SO(3)},
        {SO(6), {2, 1, 0}, emb::u_in_so(3), U(3)},
        {Sp(2), {2, 1}, emb::sp1_block(2), product({Sp(1), Sp(1)})},
        {SO(4), {2, -1}, emb::so2_block(4), product({SO(2), SO(2)})},
        {SU2(), {4}, emb::u1_in_su2(), U(1)},
    };
    for (const auto& c : cases) {
        auto ch = irreducible_character(c.amb, c.w);
        auto res = restrict_char(ch, c.e);
        CHECK(res.eval_ones() == ch.eval_ones());
        CHECK(weyl_symmetric(res, c.sub));
        // and the restriction decomposes cleanly over the subgroup
        auto d = decompose(res, c.sub);
        CHECK(d.dimension() == ch.eval_ones());
    }
}

TEST_CASE("frobenius multiplicity", "[characters]") {
    // Sp(1) V_j over U(1): weight -k occurs once iff j >= |k| and j = k mod 2.
    auto e = emb::u1_in_su2();
    for (int j = 0; j <= 8; ++j)
        for (int k = -4; k <= 4; ++k) {
            Int expected = (j >= std::abs(k) && (j - k) % 2 == 0) ? 1 : 0;
            CHECK(frobenius_multiplicity(Sp(1), {j}, U(1),
                                         emb::custom("U(1) in Sp(1)", Sp(1), U(1), {{1}}),
                                         {-k}) == expected);
            (void)e;
        }

    CHECK(frobenius_multiplicity(U(2), {1, 0}, product({U(1), U(1)}), emb::u_block(1, 1),
                                 {1, 0}) == 1);
    CHECK(frobenius_multiplicity(SO(4), {1, 0}, product({SO(2), SO(2)}), emb::so2_block(4),
                                 {1, 0}) == 1);
}

TEST_CASE("decompose is independent of term insertion order", "[characters]") {
    auto ch = irreducible_character(Sp(2), {2, 1});
    std::vector<std::pair<Weight, Int>> terms(ch.terms.begin(), ch.terms.end());
    std::mt19937 rng(12345);
    std::shuffle(terms.begin(), terms.end(), rng);
    LaurentChar shuffled(ch.nvars);
    for (const auto& [e, c] : terms) shuffled.add_term(e, c);
    CHECK(decompose(shuffled, Sp(2)) == decompose(ch, Sp(2)));
}

TEST_CASE("decompose rejects non-characters", "[characters]") {
    // Not Weyl-symmetric: z1 alone is not a U(2)-character restricted tail.
    LaurentChar p(2);
    p.add_term({0, 1}, 1);  // leading exponent (0,1) is not dominant
    CHECK_THROWS_AS(decompose(p, U(2)), NotACharacterError);

    // Negative multiplicity on a dominant leading term.
    auto neg = Int(-1) * irreducible_character(U(2), {1, 0});
    CHECK_THROWS_AS(decompose(neg, U(2)), NotACharacterError);
}

TEST_CASE("degree budget and caps", "[characters]") {
    Config tight;
    tight.degree_budget = 5;
    CHECK_THROWS_AS(irreducible_character(U(2), {4, -4}, tight), ResourceLimitError);
    CHECK_NOTHROW(irreducible_character(U(2), {3, -2}, tight));
}

TEST_CASE("variable count mismatches are rejected", "[characters]") {
    auto ch = irreducible_character(U(3), {1, 0, 0});
    CHECK_THROWS_AS(restrict_char(ch, emb::u_block(1, 1)), DomainError);
}
