// Tour of the calculus: normal forms of the named operators, the rewriting
// view of words in U and D, and a Sheffer sequence.

#include "opcalc/opcalc.hpp"

#include <iostream>

using namespace opcalc;

static void show(const std::string& label, const NormalSeries& s, Index order) {
    std::cout << label << " = ";
    for (Index n = 0; n <= order; ++n) {
        if (n > 0) std::cout << " + ";
        std::cout << "(" << s.coeff(n).to_string() << ")y^" << n;
    }
    std::cout << " + ...\n";
}

int main() {
    Ring q = Ring::rationals();

    std::cout << "-- normal forms s(phi) = sum P_n(x) y^n --\n";
    show("s(id)", normalize(Operator::identity(q)), 3);
    show("s([D,U])", normalize(commutator(Operator::lowering(q), Operator::raising(q))), 3);
    show("s(partial)", normalize(Operator::derivative(q)), 4);
    show("s(integ)", normalize(Operator::integration(q)), 4);

    std::cout << "\n-- the star product recomposes operators --\n";
    NormalSeries x = NormalSeries::x(q), y = NormalSeries::y(q);
    show("y * x", star(y, x), 2);
    show("x * y", star(x, y), 2);

    std::cout << "\n-- word rewriting: yx -> (empty) --\n";
    for (const Word w : {"yx", "xy", "yyxyxx", "xxyxy"}) {
        NormalWord nf = word_nf(w);
        std::cout << "nf(" << w << ") = x^" << nf.x_exp << " y^" << nf.y_exp << "\n";
    }

    std::cout << "\n-- the summable family sum x^n y^n --\n";
    NormalSeries diag = family_from_pattern(q, "x^{n} y^{n}").to_series();
    for (Index m = 0; m <= 4; ++m)
        std::cout << "(sum U^n D^n)(e" << m << ") = "
                  << diag.apply(Vector::basis(q, m)).to_string() << "\n";

    std::cout << "\n-- Laguerre, a Sheffer sequence --\n";
    for (Index n = 0; n <= 4; ++n)
        std::cout << "L_" << n << "(x) = " << laguerre(q, n).to_string() << "\n";
    return 0;
}
