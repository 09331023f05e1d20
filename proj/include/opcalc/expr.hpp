#pragma once

/**
 * @file expr.hpp
 * @brief Operator expressions: parser, printer, evaluator.
 *
 * Grammar (left associative within a level):
 *
 *   expr := sum
 *   sum  := ["-"] prod (("+"|"-") prod)*
 *   prod := [scalar "*"] comp
 *   comp := pow ("o" pow)*
 *   pow  := atom ["^" nat]
 *   atom := "U" | "D" | "I" | "partial" | "integ"
 *         | "com(" expr "," expr ")" | "(" expr ")"
 *
 * Scalars are integer or rational literals; whether a rational literal is
 * admissible depends on the ring chosen at evaluation time, so the AST keeps
 * the raw numerator/denominator.
 */

#include "opcalc/operators.hpp"
#include "opcalc/ring.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opcalc {

struct Expr {
    using Ptr = std::shared_ptr<const Expr>;

    enum class Kind { atom_u, atom_d, atom_id, atom_partial, atom_integ,
                      scalar_mul, add, sub, comp, pow, comm };

    Kind kind;
    Integer num = 0, den = 1;  // scalar_mul
    Index exponent = 0;        // pow
    Ptr left, right;           // children (left only for unary)

    static Ptr atom(Kind k) { return std::make_shared<Expr>(Expr{k, 0, 1, 0, nullptr, nullptr}); }
    static Ptr scalar(Integer n, Integer d, Ptr e) {
        return std::make_shared<Expr>(
            Expr{Kind::scalar_mul, std::move(n), std::move(d), 0, std::move(e), nullptr});
    }
    static Ptr binary(Kind k, Ptr a, Ptr b) {
        return std::make_shared<Expr>(Expr{k, 0, 1, 0, std::move(a), std::move(b)});
    }
    static Ptr power(Ptr e, Index k) {
        return std::make_shared<Expr>(Expr{Kind::pow, 0, 1, k, std::move(e), nullptr});
    }
};

inline bool expr_equal(const Expr::Ptr& a, const Expr::Ptr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->num != b->num || a->den != b->den || a->exponent != b->exponent)
        return false;
    return expr_equal(a->left, b->left) && expr_equal(a->right, b->right);
}

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr::Ptr parse() {
        Expr::Ptr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& expected) {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, expected,
                         "syntax error at column " + std::to_string(pos_ + 1) + ": expected " +
                             expected + ", found " + found);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
    }

    Integer parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view peek_word() {
        skip_ws();
        std::size_t start = pos_, end = pos_;
        while (end < text_.size() &&
               ((text_[end] >= 'a' && text_[end] <= 'z') || (text_[end] >= 'A' && text_[end] <= 'Z')))
            ++end;
        return text_.substr(start, end - start);
    }

    bool eat_word(std::string_view w) {
        if (peek_word() == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Expr::Ptr parse_sum() {
        skip_ws();
        Expr::Ptr e = eat('-') ? parse_prod(true) : parse_prod(false);
        for (;;) {
            skip_ws();
            if (eat('+'))
                e = Expr::binary(Expr::Kind::add, e, parse_prod(false));
            else if (eat('-'))
                e = Expr::binary(Expr::Kind::sub, e, parse_prod(false));
            else
                return e;
        }
    }

    Expr::Ptr parse_prod(bool negated) {
        if (peek_digit()) {
            Integer num = parse_nat();
            Integer den = 1;
            if (eat('/')) den = parse_nat();
            skip_ws();
            if (!eat('*')) fail("'*' after scalar");
            if (negated) num = -num;
            return Expr::scalar(std::move(num), std::move(den), parse_comp());
        }
        Expr::Ptr e = parse_comp();
        return negated ? Expr::scalar(-1, 1, std::move(e)) : e;
    }

    Expr::Ptr parse_comp() {
        Expr::Ptr e = parse_pow();
        while (eat_word("o")) e = Expr::binary(Expr::Kind::comp, e, parse_pow());
        return e;
    }

    Expr::Ptr parse_pow() {
        Expr::Ptr e = parse_atom();
        if (eat('^')) {
            Integer k = parse_nat();
            e = Expr::power(e, static_cast<Index>(k.convert_to<std::uint64_t>()));
        }
        return e;
    }

    Expr::Ptr parse_atom() {
        skip_ws();
        if (eat('(')) {
            Expr::Ptr e = parse_sum();
            if (!eat(')')) fail("')'");
            return e;
        }
        std::string_view w = peek_word();
        if (w == "U") { pos_ += 1; return Expr::atom(Expr::Kind::atom_u); }
        if (w == "D") { pos_ += 1; return Expr::atom(Expr::Kind::atom_d); }
        if (w == "I") { pos_ += 1; return Expr::atom(Expr::Kind::atom_id); }
        if (w == "partial") { pos_ += 7; return Expr::atom(Expr::Kind::atom_partial); }
        if (w == "integ") { pos_ += 5; return Expr::atom(Expr::Kind::atom_integ); }
        if (w == "com") {
            pos_ += 3;
            if (!eat('(')) fail("'('");
            Expr::Ptr a = parse_sum();
            if (!eat(',')) fail("','");
            Expr::Ptr b = parse_sum();
            if (!eat(')')) fail("')'");
            return Expr::binary(Expr::Kind::comm, a, b);
        }
        fail("one of U, D, I, partial, integ, com(,), '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr::Ptr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Prints with enough parentheses to reparse to an equal AST.
inline std::string to_string(const Expr::Ptr& e) {
    switch (e->kind) {
        case Expr::Kind::atom_u: return "U";
        case Expr::Kind::atom_d: return "D";
        case Expr::Kind::atom_id: return "I";
        case Expr::Kind::atom_partial: return "partial";
        case Expr::Kind::atom_integ: return "integ";
        case Expr::Kind::scalar_mul: {
            std::string s = e->num.str();
            if (e->den != 1) s += "/" + e->den.str();
            return "(" + s + " * (" + to_string(e->left) + "))";
        }
        case Expr::Kind::add: return "(" + to_string(e->left) + " + " + to_string(e->right) + ")";
        case Expr::Kind::sub: return "(" + to_string(e->left) + " - " + to_string(e->right) + ")";
        case Expr::Kind::comp: return "(" + to_string(e->left) + " o " + to_string(e->right) + ")";
        case Expr::Kind::pow:
            return "(" + to_string(e->left) + ")^" + std::to_string(e->exponent);
        case Expr::Kind::comm:
            return "com(" + to_string(e->left) + ", " + to_string(e->right) + ")";
    }
    return "?";
}

/// Evaluates to an Operator over the given ring. Capability violations name
/// the offending atom.
inline Operator eval_expr(const Expr::Ptr& e, const Ring& ring) {
    switch (e->kind) {
        case Expr::Kind::atom_u: return Operator::raising(ring);
        case Expr::Kind::atom_d: return Operator::lowering(ring);
        case Expr::Kind::atom_id: return Operator::identity(ring);
        case Expr::Kind::atom_partial: return Operator::derivative(ring);
        case Expr::Kind::atom_integ: return Operator::integration(ring);
        case Expr::Kind::scalar_mul: {
            RingValue c = ring.from_rational(e->num, e->den);  // throws over Z, Z/m for p/q
            return scale(c, eval_expr(e->left, ring));
        }
        case Expr::Kind::add: return eval_expr(e->left, ring) + eval_expr(e->right, ring);
        case Expr::Kind::sub: return eval_expr(e->left, ring) - eval_expr(e->right, ring);
        case Expr::Kind::comp: return compose(eval_expr(e->left, ring), eval_expr(e->right, ring));
        case Expr::Kind::pow: return power(eval_expr(e->left, ring), e->exponent);
        case Expr::Kind::comm:
            return commutator(eval_expr(e->left, ring), eval_expr(e->right, ring));
    }
    throw std::logic_error("unreachable expression kind");
}

/// Scalar literals like "-1" need the unary-minus form when printed back;
/// expose the printer used by the CLI round-trip tests.
inline std::string print_expr(const Expr::Ptr& e) { return to_string(e); }

}  // namespace opcalc
