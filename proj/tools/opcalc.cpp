// opcalc: normal forms, application, equality, summability and Sheffer
// constructions for ladder-operator expressions, from the command line.
//
// Exit codes: 0 success/equal/accepted, 1 unequal/rejected, 2 usage or
// parse error, 3 capability error (operation unavailable over the ring).

#include "opcalc/opcalc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCapability = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

opcalc::Ring parse_ring_flag(const std::string& text) {
    if (text == "Q") return opcalc::Ring::rationals();
    if (text == "Z") return opcalc::Ring::integers();
    if (text.rfind("Zmod:", 0) == 0) {
        std::string mod = text.substr(5);
        for (char c : mod)
            if (c < '0' || c > '9') throw UsageError("bad modulus in --ring " + text);
        if (mod.empty()) throw UsageError("bad modulus in --ring " + text);
        return opcalc::Ring::integers_mod(opcalc::Integer(mod));
    }
    throw UsageError("unknown ring '" + text + "' (expected Q, Z or Zmod:m)");
}

// comma-separated coefficient literals, lowest degree first, zero-padded to
// the requested order
opcalc::PowerSeries parse_series_literal(const opcalc::Ring& ring, const std::string& text,
                                         std::size_t order) {
    std::vector<opcalc::RingValue> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(ring.parse(item));
    if (coeffs.empty()) throw UsageError("empty series literal");
    while (coeffs.size() <= order) coeffs.push_back(ring.zero());
    coeffs.resize(order + 1, ring.zero());
    return opcalc::PowerSeries(ring, std::move(coeffs));
}

opcalc::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    opcalc::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string series_text(const opcalc::NormalSeries& s, opcalc::Index order) {
    std::string out;
    for (opcalc::Index n = 0; n <= order; ++n) {
        if (n > 0) out += ", ";
        out += "P" + std::to_string(n) + " = " + s.coeff(n).to_string();
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace opcalc;

    CLI::App app{"exact normal-form calculus for operators on the free module over the naturals"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string ring_flag = "Q";
    app.add_option("--ring", ring_flag, "coefficient ring: Q, Z or Zmod:m (default Q)")
        ->capture_default_str();

    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    std::function<int()> run;

    // nf EXPR --order N
    {
        auto* cmd = app.add_subcommand("nf", "normal form sum P_n(x) y^n of an operator expression");
        auto expr_arg = std::make_shared<std::string>();
        auto order = std::make_shared<Index>();
        cmd->add_option("expr", *expr_arg, "operator expression, e.g. \"com(D,U)\"")->required();
        cmd->add_option("--order", *order, "number of coefficients to print (P_0..P_N)")->required();
        cmd->callback([&, expr_arg, order] {
            run = [&, expr_arg, order]() {
                Ring ring = parse_ring_flag(ring_flag);
                NormalSeries s = normalize(eval_expr(parse_expr(*expr_arg), ring));
                std::string out = json_out ? series_to_json(s, *order).dump() : series_text(s, *order);
                std::cout << out << "\n";
                return kOk;
            };
        });
    }

    // apply EXPR VECTOR
    {
        auto* cmd = app.add_subcommand("apply", "apply an operator expression to a vector");
        auto expr_arg = std::make_shared<std::string>();
        auto vec_arg = std::make_shared<std::string>();
        cmd->add_option("expr", *expr_arg, "operator expression")->required();
        cmd->add_option("vector", *vec_arg, "vector literal, e.g. \"3*e0 + 1/2*e5\"")->required();
        cmd->callback([&, expr_arg, vec_arg] {
            run = [&, expr_arg, vec_arg]() {
                Ring ring = parse_ring_flag(ring_flag);
                Vector v = Vector::parse(ring, *vec_arg);
                Vector result = eval_expr(parse_expr(*expr_arg), ring).apply(v);
                std::cout << (json_out ? vector_to_json(result).dump() : result.to_string()) << "\n";
                return kOk;
            };
        });
    }

    // eq EXPR1 EXPR2 --order N
    {
        auto* cmd = app.add_subcommand("eq", "compare normal forms up to an order");
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        auto order = std::make_shared<Index>();
        cmd->add_option("expr1", *lhs)->required();
        cmd->add_option("expr2", *rhs)->required();
        cmd->add_option("--order", *order, "compare coefficients 0..N")->required();
        cmd->callback([&, lhs, rhs, order] {
            run = [&, lhs, rhs, order]() {
                Ring ring = parse_ring_flag(ring_flag);
                NormalSeries a = normalize(eval_expr(parse_expr(*lhs), ring));
                NormalSeries b = normalize(eval_expr(parse_expr(*rhs), ring));
                if (auto n = first_difference(a, b, *order)) {
                    std::cout << "differ at n = " << *n << ": " << a.coeff(*n).to_string()
                              << " vs " << b.coeff(*n).to_string() << "\n";
                    return kNegative;
                }
                std::cout << "equal up to order " << *order << "\n";
                return kOk;
            };
        });
    }

    // summable PATTERN --upto N
    {
        auto* cmd = app.add_subcommand("summable", "check the grading of a word-family pattern");
        auto pattern = std::make_shared<std::string>();
        auto upto = std::make_shared<Index>();
        cmd->add_option("pattern", *pattern, "family pattern, e.g. \"x^{n} y^{n}\"")->required();
        cmd->add_option("--upto", *upto, "verify indices 0..N")->required();
        cmd->callback([&, pattern, upto] {
            run = [&, pattern, upto]() {
                Ring ring = parse_ring_flag(ring_flag);
                FamilyCheckResult result = family_from_pattern(ring, *pattern).check(*upto);
                if (result.accepted) {
                    std::cout << "accepted up to n = " << *upto << "\n";
                    return kOk;
                }
                std::cout << "rejected at n = " << result.index << " (ydeg " << result.ydeg
                          << ", expected " << result.index << ")\n";
                return kNegative;
            };
        });
    }

    // sheffer --mu S --sigma S --order N
    {
        auto* cmd = app.add_subcommand("sheffer", "Sheffer sequence of a pair (mu, sigma)");
        auto mu = std::make_shared<std::string>();
        auto sigma = std::make_shared<std::string>();
        auto order = std::make_shared<Index>();
        cmd->add_option("--mu", *mu, "mu coefficients, e.g. \"1,1,1\" (zero-padded)")->required();
        cmd->add_option("--sigma", *sigma, "sigma coefficients, e.g. \"0,1\"")->required();
        cmd->add_option("--order", *order, "compute p_0..p_N")->required();
        cmd->callback([&, mu, sigma, order] {
            run = [&, mu, sigma, order]() {
                Ring ring = parse_ring_flag(ring_flag);
                ShefferPair pair(parse_series_literal(ring, *mu, *order),
                                 parse_series_literal(ring, *sigma, *order));
                ShefferSequence seq = sheffer_sequence(pair, *order);
                if (json_out) {
                    std::cout << sheffer_sequence_to_json(seq).dump() << "\n";
                } else {
                    std::string out;
                    for (std::size_t n = 0; n <= seq.order(); ++n)
                        out += "p" + std::to_string(n) + " = " + seq.poly(n).to_string() + "\n";
                    std::cout << out;
                }
                return kOk;
            };
        });
    }

    // star/umbral SFILE TFILE --order N
    auto add_product = [&](const std::string& name, const std::string& help,
                           NormalSeries (*product)(const NormalSeries&, const NormalSeries&)) {
        auto* cmd = app.add_subcommand(name, help);
        auto sfile = std::make_shared<std::string>();
        auto tfile = std::make_shared<std::string>();
        auto order = std::make_shared<Index>();
        cmd->add_option("sfile", *sfile, "left series JSON file")->required();
        cmd->add_option("tfile", *tfile, "right series JSON file")->required();
        cmd->add_option("--order", *order, "coefficients 0..N of the product")->required();
        cmd->callback([&, sfile, tfile, order, product] {
            run = [&, sfile, tfile, order, product]() {
                Ring ring = parse_ring_flag(ring_flag);
                NormalSeries s = series_from_json(ring, read_json_file(*sfile));
                NormalSeries t = series_from_json(ring, read_json_file(*tfile));
                std::cout << series_to_json(product(s, t), *order).dump() << "\n";
                return kOk;
            };
        });
    };
    add_product("star", "composition product S * T = s(pi(S) o pi(T))", &star);
    add_product("umbral", "umbral product S # T (coefficientwise substitution)", &umbral);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kCapability;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (expected " << e.expected << ")\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FamilyRejectionError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
