#pragma once

/**
 * @file word.hpp
 * @brief Words over {x, y}, the rewriting system yx -> (empty), and pi-hat.
 *
 * pi-hat sends x to U and y to D and extends as a monoid homomorphism under
 * composition, so in a word the rightmost letter acts first. Since
 * D o U = id, the factor "yx" may be erased anywhere without changing the
 * denoted operator; the rewriting terminates (length decreases) and is
 * confluent, leaving normal forms of shape x^a y^b.
 */

#include "opcalc/operators.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace opcalc {

using Word = std::string;

/// x^a y^b.
struct NormalWord {
    Index x_exp = 0;
    Index y_exp = 0;

    bool operator==(const NormalWord&) const = default;

    Word word() const { return Word(x_exp, 'x') + Word(y_exp, 'y'); }
};

inline void validate_word(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 'x' && w[i] != 'y')
            throw ParseError(i, "'x' or 'y'", "invalid letter in word: " + std::string(w));
}

/// Exhaustive rewriting of "yx" to the empty word; the reduction order does
/// not matter (confluence), so a single stack pass suffices.
inline NormalWord word_nf(std::string_view w) {
    validate_word(w);
    std::string out;
    out.reserve(w.size());
    for (char c : w) {
        if (c == 'x' && !out.empty() && out.back() == 'y')
            out.pop_back();
        else
            out.push_back(c);
    }
    NormalWord nf;
    std::size_t i = 0;
    while (i < out.size() && out[i] == 'x') ++i;
    nf.x_exp = i;
    nf.y_exp = out.size() - i;
    // reduced words have shape x^a y^b; anything else would be a "yx" redex
    for (std::size_t j = i; j < out.size(); ++j)
        if (out[j] != 'y') throw std::logic_error("word reduction left a redex");
    return nf;
}

/// pi-hat(w)(v): letters act right to left.
inline Vector word_apply(std::string_view w, const Vector& v) {
    validate_word(w);
    Vector out = v;
    for (std::size_t i = w.size(); i-- > 0;) out = w[i] == 'x' ? raise(out) : lower(out);
    return out;
}

/// pi-hat(w) as an Operator.
inline Operator word_operator(const Ring& ring, Word w) {
    validate_word(w);
    return Operator(ring, w.empty() ? "1" : w,
                    [ring, w = std::move(w)](Index n) { return word_apply(w, Vector::basis(ring, n)); });
}

}  // namespace opcalc
