#include "opcalc/expr.hpp"
#include "opcalc/normal_series.hpp"
#include "opcalc/operators.hpp"
#include "opcalc/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace opcalc;

namespace {

Expr::Ptr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 10);
    switch (pick(rng)) {
        case 0: return Expr::atom(Expr::Kind::atom_u);
        case 1: return Expr::atom(Expr::Kind::atom_d);
        case 2: return Expr::atom(Expr::Kind::atom_id);
        case 3: return Expr::atom(Expr::Kind::atom_partial);
        case 4: return Expr::atom(Expr::Kind::atom_integ);
        case 5: return Expr::binary(Expr::Kind::add, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 6: return Expr::binary(Expr::Kind::sub, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 7: return Expr::binary(Expr::Kind::comp, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 8: return Expr::binary(Expr::Kind::comm, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 9: {
            std::uniform_int_distribution<int> k(0, 4);
            return Expr::power(random_expr(rng, depth - 1), static_cast<Index>(k(rng)));
        }
        default: {
            std::uniform_int_distribution<int> num(-9, 9);
            std::uniform_int_distribution<int> den(1, 9);
            return Expr::scalar(num(rng), den(rng), random_expr(rng, depth - 1));
        }
    }
}

}  // namespace

TEST_CASE("parsing the calculus expressions") {
    Expr::Ptr com = parse_expr("com(D,U)");
    REQUIRE(com->kind == Expr::Kind::comm);
    REQUIRE(com->left->kind == Expr::Kind::atom_d);
    REQUIRE(com->right->kind == Expr::Kind::atom_u);

    Expr::Ptr sum = parse_expr("U o D + I");
    REQUIRE(sum->kind == Expr::Kind::add);
    REQUIRE(sum->left->kind == Expr::Kind::comp);
    REQUIRE(sum->right->kind == Expr::Kind::atom_id);

    Expr::Ptr scaled = parse_expr("1/2 * U^3 o D");
    REQUIRE(scaled->kind == Expr::Kind::scalar_mul);
    REQUIRE(scaled->num == 1);
    REQUIRE(scaled->den == 2);
    REQUIRE(scaled->left->kind == Expr::Kind::comp);
    REQUIRE(scaled->left->left->kind == Expr::Kind::pow);
    REQUIRE(scaled->left->left->exponent == 3);
}

TEST_CASE("grammar shape: precedence and associativity") {
    // sum is left associative
    Expr::Ptr e = parse_expr("U + D - I");
    REQUIRE(e->kind == Expr::Kind::sub);
    REQUIRE(e->left->kind == Expr::Kind::add);

    // composition binds tighter than sum, power tighter than composition
    Expr::Ptr f = parse_expr("U o D^2 + I");
    REQUIRE(f->kind == Expr::Kind::add);
    REQUIRE(f->left->kind == Expr::Kind::comp);
    REQUIRE(f->left->right->kind == Expr::Kind::pow);

    // parens override
    Expr::Ptr g = parse_expr("U o (D + I)");
    REQUIRE(g->kind == Expr::Kind::comp);
    REQUIRE(g->right->kind == Expr::Kind::add);

    // unary minus folds into the scalar
    Expr::Ptr h = parse_expr("-2 * U + D");
    REQUIRE(h->kind == Expr::Kind::add);
    REQUIRE(h->left->kind == Expr::Kind::scalar_mul);
    REQUIRE(h->left->num == -2);
    Expr::Ptr i = parse_expr("-U");
    REQUIRE(i->kind == Expr::Kind::scalar_mul);
    REQUIRE(i->num == -1);
}

TEST_CASE("parse errors carry position and expectation") {
    try {
        parse_expr("U o");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position == 3);
        REQUIRE(!e.expected.empty());
    }
    REQUIRE_THROWS_AS(parse_expr("com(U D)"), ParseError);
    REQUIRE_THROWS_AS(parse_expr("U + * D"), ParseError);
    REQUIRE_THROWS_AS(parse_expr("2 U"), ParseError);     // scalar needs '*'
    REQUIRE_THROWS_AS(parse_expr("U ^ x"), ParseError);   // power needs a natural
    REQUIRE_THROWS_AS(parse_expr("(U o D"), ParseError);  // unbalanced
    REQUIRE_THROWS_AS(parse_expr("Q"), ParseError);       // unknown atom
    REQUIRE_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("print/parse round trip on random expressions") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        Expr::Ptr e = random_expr(rng, 4);
        Expr::Ptr back = parse_expr(print_expr(e));
        REQUIRE(expr_equal(e, back));
    }
}

TEST_CASE("eval: the commutator example has normal form 1 - xy") {
    Ring q = Ring::rationals();
    Operator op = eval_expr(parse_expr("I - U o D"), q);
    NormalSeries s = normalize(op);
    REQUIRE(s.coeff(0) == Polynomial::constant(q.one()));
    REQUIRE(s.coeff(1) == Polynomial::monomial(q, 1, -q.one()));
    for (Index n = 2; n <= 10; ++n) REQUIRE(s.coeff(n).is_zero());

    // com(D, U) denotes the same operator
    Operator com = eval_expr(parse_expr("com(D,U)"), q);
    REQUIRE(agree_on_basis(op, com, 12));
}

TEST_CASE("eval: named atoms and capability errors") {
    Ring q = Ring::rationals();
    Operator integ = eval_expr(parse_expr("integ"), q);
    REQUIRE(integ.image(0) == Vector::basis(q, 1));
    REQUIRE(integ.image(1) == Vector::basis(q, 2).scaled(q.from_rational(1, 2)));

    REQUIRE_THROWS_AS(eval_expr(parse_expr("integ"), Ring::integers()), CapabilityError);
    REQUIRE_THROWS_AS(eval_expr(parse_expr("1/2 * U"), Ring::integers()), CapabilityError);
    // partial is fine over Z
    Operator partial = eval_expr(parse_expr("partial"), Ring::integers());
    REQUIRE(partial.image(2) == Vector::basis(Ring::integers(), 1).scaled(
                                    Ring::integers().from_integer(2)));
}

TEST_CASE("eval distributes over the AST") {
    Ring q = Ring::rationals();
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        Expr::Ptr e = random_expr(rng, 3);
        bool uses_integ = false;
        std::function<void(const Expr::Ptr&)> scan = [&](const Expr::Ptr& p) {
            if (!p) return;
            if (p->kind == Expr::Kind::atom_integ) uses_integ = true;
            scan(p->left);
            scan(p->right);
        };
        scan(e);
        Operator op = eval_expr(e, q);
        // sanity: evaluation is deterministic and linear on a couple of probes
        Vector v = Vector::basis(q, 1) + Vector::basis(q, 3).scaled(q.from_integer(2));
        REQUIRE(op.apply(v) == op.apply(Vector::basis(q, 1)) +
                                   op.apply(Vector::basis(q, 3)).scaled(q.from_integer(2)));
        (void)uses_integ;
    }
}
