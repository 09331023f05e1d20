#include "opcalc/graded_family.hpp"
#include "opcalc/normal_series.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"
#include "opcalc/word.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

using namespace opcalc;

namespace {

// independent reducers for the confluence check
Word reduce_leftmost(Word w) {
    for (;;) {
        auto pos = w.find("yx");
        if (pos == Word::npos) return w;
        w.erase(pos, 2);
    }
}

Word reduce_rightmost(Word w) {
    for (;;) {
        auto pos = w.rfind("yx");
        if (pos == Word::npos) return w;
        w.erase(pos, 2);
    }
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w += bit(rng) ? 'x' : 'y';
    return w;
}

NormalWord to_normal(const Word& reduced) {
    std::size_t i = 0;
    while (i < reduced.size() && reduced[i] == 'x') ++i;
    return NormalWord{i, reduced.size() - i};
}

}  // namespace

TEST_CASE("word normal forms") {
    REQUIRE(word_nf("yx") == NormalWord{0, 0});
    REQUIRE(word_nf("xy") == NormalWord{1, 1});
    REQUIRE(word_nf("yyxyxx") == NormalWord{0, 0});
    REQUIRE(word_nf("") == NormalWord{0, 0});
    REQUIRE(word_nf("xxyyy") == NormalWord{2, 3});
    REQUIRE(word_nf("yxyxyx") == NormalWord{0, 0});
    REQUIRE_THROWS_AS(word_nf("xzy"), ParseError);
}

TEST_CASE("word reduction is confluent and preserves the operator") {
    Ring q = Ring::rationals();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, 12);
        Word l = reduce_leftmost(w), r = reduce_rightmost(w);
        REQUIRE(l == r);
        NormalWord nf = word_nf(w);
        REQUIRE(nf == to_normal(l));
        for (Index m = 0; m <= 15; ++m) {
            Vector em = Vector::basis(q, m);
            REQUIRE(word_apply(w, em) == word_apply(nf.word(), em));
        }
    }
}

TEST_CASE("pi-hat is the monoid homomorphism with x -> U, y -> D") {
    Ring q = Ring::rationals();
    for (Index m = 0; m <= 10; ++m)
        REQUIRE(word_apply("yx", Vector::basis(q, m)) == Vector::basis(q, m));
    REQUIRE(word_apply("xy", Vector::basis(q, 0)).is_zero());
    Vector v = Vector::basis(q, 2) + Vector::basis(q, 5).scaled(q.from_rational(1, 3));
    REQUIRE(word_apply("", v) == v);

    // homomorphism: pi(uv) = pi(u) o pi(v)
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        Word u = random_word(rng, 6), w = random_word(rng, 6);
        for (Index m = 0; m <= 8; ++m) {
            Vector em = Vector::basis(q, m);
            REQUIRE(word_apply(u + w, em) == word_apply(u, word_apply(w, em)));
        }
    }
}

TEST_CASE("graded family acceptance and rejection") {
    Ring q = Ring::rationals();

    GradedFamily diag = family_from_pattern(q, "x^{n} y^{n}");
    REQUIRE(diag.check(20).accepted);

    GradedFamily bad = family_from_pattern(q, "y^{n} x^{n}");
    FamilyCheckResult r = bad.check(10);
    REQUIRE(!r.accepted);
    REQUIRE(r.index == 1);
    REQUIRE(r.ydeg == 0);

    GradedFamily single = GradedFamily::finite(q, {{q.one(), "yx"}});
    REQUIRE(single.check(10).accepted);

    // finite combinations are summable regardless of grading
    GradedFamily combo = GradedFamily::finite(
        q, {{q.from_integer(2), "xy"}, {q.from_rational(-1, 2), "yxy"}, {q.one(), ""}});
    REQUIRE(combo.check(5).accepted);
}

TEST_CASE("family to series: diagonal, single words") {
    Ring q = Ring::rationals();

    // sum x^n y^n has P_n = x^n and denotes e_m -> (m+1) e_m
    NormalSeries diag = family_from_pattern(q, "x^{n} y^{n}").to_series();
    for (Index n = 0; n <= 12; ++n)
        REQUIRE(diag.coeff(n) == Polynomial::monomial(q, static_cast<std::size_t>(n)));
    REQUIRE(eq_up_to(diag, NormalSeries::diagonal_identity(q), 12));

    NormalSeries one = GradedFamily::finite(q, {{q.one(), "yx"}}).to_series();
    REQUIRE(eq_up_to(one, NormalSeries::one(q), 10));

    NormalSeries xy = GradedFamily::finite(q, {{q.one(), "xy"}}).to_series();
    REQUIRE(eq_up_to(xy, NormalSeries::monomial(q, 1, Polynomial::monomial(q, 1)), 10));

    // a rejected family surfaces its witness when a coefficient is demanded
    NormalSeries broken = family_from_pattern(q, "y^{n} x^{n}").to_series();
    REQUIRE_THROWS_AS(broken.coeff(3), FamilyRejectionError);
}

TEST_CASE("graded family evaluation agrees with the word sum") {
    Ring q = Ring::rationals();
    // sum x^{2n+1} y^n : ydeg(nf) = n, xdeg = 2n+1
    GradedFamily f = family_from_pattern(q, "x^{2*n+1} y^{n}");
    REQUIRE(f.check(10).accepted);
    Operator op = f.as_operator();
    for (Index m = 0; m <= 8; ++m) {
        Vector expected(q);
        for (Index n = 0; n <= m; ++n) {
            Word w = Word(2 * n + 1, 'x') + Word(n, 'y');
            expected = expected + word_apply(w, Vector::basis(q, m));
        }
        REQUIRE(op.image(m) == expected);
    }
}

TEST_CASE("family pattern parsing") {
    Ring q = Ring::rationals();
    REQUIRE(parse_family_pattern("x^{n} y^{n}").size() == 2);
    auto blocks = parse_family_pattern("x^{2*n+1} y^{n} x^3");
    REQUIRE(blocks.size() == 3);
    REQUIRE(blocks[0].exponent.eval(2) == 5);
    REQUIRE(blocks[1].exponent.eval(2) == 2);
    REQUIRE(blocks[2].exponent.eval(7) == 3);
    REQUIRE(parse_family_pattern("xy").size() == 2);
    REQUIRE(parse_family_pattern("y^{n - 1} x^{n}")[0].exponent.eval(3) == 2);

    REQUIRE_THROWS_AS(parse_family_pattern(""), ParseError);
    REQUIRE_THROWS_AS(parse_family_pattern("z^{n}"), ParseError);
    REQUIRE_THROWS_AS(parse_family_pattern("x^{n"), ParseError);
    REQUIRE_THROWS_AS(parse_family_pattern("x^{2n}"), ParseError);

    // negative evaluated exponent is a per-index domain error
    GradedFamily shifted = family_from_pattern(q, "x^{n} y^{n - 1}");
    REQUIRE_THROWS_AS(shifted.term(0), std::domain_error);
}
