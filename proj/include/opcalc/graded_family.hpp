#pragma once

/**
 * @file graded_family.hpp
 * @brief The implemented fragment of R{{x,y}}: summable word families.
 *
 * A family (alpha_n w_n)_n of scalar multiples of words is summable when,
 * applied to any fixed vector, only finitely many terms are nonzero. Two
 * decidable shapes cover every example of interest:
 *
 *   - finite families: always summable;
 *   - graded families: ydeg(nf(w_n)) = n for every n, so term n kills every
 *     e_m with m < n and at most m+1 terms act on e_m.
 *
 * The grading is verified lazily: each materialized index is checked, and a
 * violation raises FamilyRejectionError with the witness index. check()
 * performs the same verification eagerly up to a requested bound.
 *
 * to_series() is the normalization map N restricted to these families:
 * coefficient n of the result is coefficient n of normalize(pi-tilde(F)) and
 * only consults family members 0..n.
 */

#include "opcalc/normal_series.hpp"
#include "opcalc/operators.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/word.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

struct FamilyRejectionError : std::runtime_error {
    Index index;
    Index ydeg;

    FamilyRejectionError(Index n, Index yd)
        : std::runtime_error("family not summable: ydeg(nf(w_" + std::to_string(n) +
                             ")) = " + std::to_string(yd) + ", expected " + std::to_string(n)),
          index(n),
          ydeg(yd) {}
};

struct FamilyCheckResult {
    bool accepted = true;
    Index index = 0;  // first violating index when rejected
    Index ydeg = 0;   // its actual y-degree
};

class GradedFamily {
  public:
    using Term = std::pair<RingValue, Word>;

    /// Finite linear combination of words; summable unconditionally.
    static GradedFamily finite(const Ring& ring, std::vector<Term> terms) {
        for (const auto& [c, w] : terms) {
            require_same_ring(ring, c.ring());
            validate_word(w);
        }
        GradedFamily f(ring);
        f.finite_terms_ = std::make_shared<std::vector<Term>>(std::move(terms));
        return f;
    }

    /// Lazy family with declared grading ydeg(nf(w_n)) = n.
    static GradedFamily graded(const Ring& ring, std::function<Term(Index)> generator) {
        GradedFamily f(ring);
        f.generator_ = std::move(generator);
        f.cache_ = std::make_shared<Cache>();
        return f;
    }

    const Ring& ring() const { return ring_; }
    bool is_finite() const { return finite_terms_ != nullptr; }

    const std::vector<Term>& finite_terms() const {
        if (!is_finite()) throw std::logic_error("not a finite family");
        return *finite_terms_;
    }

    /// Term n of a graded family, memoized, grading verified.
    Term term(Index n) const {
        if (is_finite()) throw std::logic_error("term() is for graded families");
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->memo.find(n);
            if (it != cache_->memo.end()) return it->second;
        }
        Term t = generator_(n);
        require_same_ring(ring_, t.first.ring());
        Index yd = word_nf(t.second).y_exp;
        if (yd != n) throw FamilyRejectionError(n, yd);
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->memo.emplace(n, std::move(t)).first->second;
    }

    /// Verifies the grading for all n <= upto; acceptance licenses exact
    /// evaluation of coefficients 0..upto.
    FamilyCheckResult check(Index upto) const {
        if (is_finite()) return {};
        for (Index n = 0; n <= upto; ++n) {
            try {
                term(n);
            } catch (const FamilyRejectionError& e) {
                return {false, e.index, e.ydeg};
            }
        }
        return {};
    }

    /// pi-tilde(F): the summed operator. For graded families the image of
    /// e_m only involves terms 0..m.
    Operator as_operator() const {
        GradedFamily self = *this;
        return Operator(ring_, "family", [self](Index m) {
            Vector em = Vector::basis(self.ring_, m);
            Vector out(self.ring_);
            if (self.is_finite()) {
                for (const auto& [c, w] : *self.finite_terms_)
                    out = out + word_apply(w, em).scaled(c);
            } else {
                for (Index n = 0; n <= m; ++n) {
                    const auto& [c, w] = self.term(n);
                    out = out + word_apply(w, em).scaled(c);
                }
            }
            return out;
        });
    }

    /// N(F) = s(pi-tilde(F)). Grading violations surface as
    /// FamilyRejectionError when the offending coefficient is demanded.
    NormalSeries to_series() const { return normalize(as_operator()); }

  private:
    explicit GradedFamily(Ring ring) : ring_(std::move(ring)) {}

    struct Cache {
        std::mutex mutex;
        std::map<Index, Term> memo;
    };

    Ring ring_;
    std::shared_ptr<std::vector<Term>> finite_terms_;
    std::function<Term(Index)> generator_;
    std::shared_ptr<Cache> cache_;
};

// -- family patterns ---------------------------------------------------------

/// Exponent affine in n: coef * n + offset (offset may be negative as long as
/// the evaluated exponent is nonnegative).
struct AffineExponent {
    Integer coef;    // multiplier of n
    Integer offset;  // constant part

    Index eval(Index n) const {
        Integer v = coef * Integer(n) + offset;
        if (v < 0)
            throw std::domain_error("family pattern exponent negative at n = " + std::to_string(n));
        return static_cast<Index>(v.convert_to<std::uint64_t>());
    }
};

struct PatternBlock {
    char letter;  // 'x' or 'y'
    AffineExponent exponent;
};

/// Parses "x^{a*n+b} y^{c*n+d} ..." into alternating blocks. Also accepts
/// bare letters ("xy" = x^{1} y^{1}) and constant exponents ("x^3").
inline std::vector<PatternBlock> parse_family_pattern(std::string_view text) {
    std::vector<PatternBlock> blocks;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto parse_nat = [&]() -> Integer {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw ParseError(i, "number", "expected number in family pattern");
        return Integer(std::string(text.substr(start, i - start)));
    };
    auto parse_affine = [&]() -> AffineExponent {
        // [int '*'] 'n' [('+'|'-') nat]  |  int
        skip_ws();
        bool neg = false;
        if (i < text.size() && text[i] == '-') { neg = true; ++i; }
        Integer first = 0;
        bool have_num = i < text.size() && text[i] >= '0' && text[i] <= '9';
        if (have_num) first = parse_nat();
        if (neg) first = -first;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != 'n')
                throw ParseError(i, "'n'", "expected 'n' after '*' in family pattern");
            ++i;
        } else if (i < text.size() && text[i] == 'n' && !have_num) {
            first = neg ? -1 : 1;
            ++i;
        } else {
            return {0, first};  // constant exponent
        }
        skip_ws();
        Integer offset = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            bool oneg = text[i] == '-';
            ++i;
            skip_ws();
            offset = parse_nat();
            if (oneg) offset = -offset;
        }
        return {first, offset};
    };

    skip_ws();
    while (i < text.size()) {
        char letter = text[i];
        if (letter != 'x' && letter != 'y')
            throw ParseError(i, "'x' or 'y'", "expected block letter in family pattern");
        ++i;
        AffineExponent e{0, 1};
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i < text.size() && text[i] == '{') {
                ++i;
                e = parse_affine();
                skip_ws();
                if (i >= text.size() || text[i] != '}')
                    throw ParseError(i, "'}'", "unterminated exponent in family pattern");
                ++i;
            } else {
                e = AffineExponent{0, parse_nat()};
            }
        }
        blocks.push_back({letter, e});
        skip_ws();
    }
    if (blocks.empty()) throw ParseError(0, "pattern block", "empty family pattern");
    return blocks;
}

/// Graded family with w_n read off the pattern at index n and alpha_n = 1.
inline GradedFamily family_from_pattern(const Ring& ring, std::string_view text) {
    auto blocks = std::make_shared<std::vector<PatternBlock>>(parse_family_pattern(text));
    return GradedFamily::graded(ring, [ring, blocks](Index n) -> GradedFamily::Term {
        Word w;
        for (const auto& b : *blocks) w += Word(b.exponent.eval(n), b.letter);
        return {ring.one(), std::move(w)};
    });
}

}  // namespace opcalc
