#pragma once

/**
 * @file vector.hpp
 * @brief The free module V = R^(N): finitely supported maps index -> coefficient.
 *
 * Basis vectors e_n are indexed by naturals. The support never stores a zero
 * coefficient, so equality is support equality and degree(v) is the largest
 * stored index (undefined for the zero vector).
 *
 * The module structure of interest lives in the free functions below:
 * the ladder operators U (raise) and D (lower), the two monoid products
 * mu (e_m (x) e_n -> e_{m+n}) and mu_prime (-> e_{mn}), evaluation of
 * polynomials in U, and the basis isomorphism with R[x] given by
 * e_n <-> x^n.
 */

#include "opcalc/polynomial.hpp"
#include "opcalc/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace opcalc {

using Index = std::uint64_t;

class Vector {
  public:
    explicit Vector(Ring ring) : ring_(std::move(ring)) {}

    static Vector basis(const Ring& ring, Index n) {
        Vector v(ring);
        v.support_.emplace(n, ring.one());
        return v;
    }

    const Ring& ring() const { return ring_; }
    const std::map<Index, RingValue>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    /// d(v): maximum support index; nullopt for the zero vector.
    std::optional<Index> degree() const {
        if (support_.empty()) return std::nullopt;
        return support_.rbegin()->first;
    }

    RingValue coeff(Index n) const {
        auto it = support_.find(n);
        return it == support_.end() ? ring_.zero() : it->second;
    }

    /// Accumulates c onto the coefficient at index n, pruning zeros.
    Vector& add_term(Index n, const RingValue& c) {
        require_same_ring(ring_, c.ring());
        if (c.is_zero()) return *this;
        auto [it, inserted] = support_.emplace(n, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) support_.erase(it);
        }
        return *this;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        require_same_ring(a.ring_, b.ring_);
        Vector out = a;
        for (const auto& [n, c] : b.support_) out.add_term(n, c);
        return out;
    }

    friend Vector operator-(const Vector& a, const Vector& b) {
        return a + b.scaled(-a.ring_.one());
    }

    Vector scaled(const RingValue& c) const {
        require_same_ring(ring_, c.ring());
        Vector out(ring_);
        for (const auto& [n, v] : support_) out.add_term(n, v * c);
        return out;
    }

    /// U^k: every index shifted up by k.
    Vector shifted_up(Index k) const {
        Vector out(ring_);
        for (const auto& [n, c] : support_) out.support_.emplace(n + k, c);
        return out;
    }

    bool operator==(const Vector& o) const { return ring_ == o.ring_ && support_ == o.support_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    /// "3*e0 + 1/2*e5"; "0" when empty.
    std::string to_string() const {
        if (support_.empty()) return "0";
        std::string out;
        for (const auto& [n, c] : support_) {
            RingValue mag = c.abs();
            if (out.empty()) {
                if (c.is_negative()) out += "-";
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += "e" + std::to_string(n);
        }
        return out;
    }

    /// Parses the to_string form; accepts "e_5" as well as "e5" and a bare "0".
    static Vector parse(const Ring& ring, std::string_view text);

  private:
    Ring ring_;
    std::map<Index, RingValue> support_;
};

/// U: e_n -> e_{n+1}, extended linearly.
inline Vector raise(const Vector& v) { return v.shifted_up(1); }

/// D: e_0 -> 0, e_{n+1} -> e_n, extended linearly.
inline Vector lower(const Vector& v) {
    Vector out(v.ring());
    for (const auto& [n, c] : v.support())
        if (n > 0) out.add_term(n - 1, c);
    return out;
}

/// mu(e_m (x) e_n) = e_{m+n}: Cauchy convolution on supports.
inline Vector mu(const Vector& a, const Vector& b) {
    require_same_ring(a.ring(), b.ring());
    Vector out(a.ring());
    for (const auto& [m, c] : a.support())
        for (const auto& [n, d] : b.support()) out.add_term(m + n, c * d);
    return out;
}

/// mu'(e_m (x) e_n) = e_{mn}: index-multiplication convolution.
inline Vector mu_prime(const Vector& a, const Vector& b) {
    require_same_ring(a.ring(), b.ring());
    Vector out(a.ring());
    for (const auto& [m, c] : a.support())
        for (const auto& [n, d] : b.support()) out.add_term(m * n, c * d);
    return out;
}

/// P(U)(v) = sum_k <P|x^k> U^k(v).
inline Vector apply_poly(const Polynomial& P, const Vector& v) {
    require_same_ring(P.ring(), v.ring());
    Vector out(v.ring());
    for (std::size_t k = 0; k < P.size(); ++k) {
        const RingValue c = P.coeff(k);
        if (c.is_zero()) continue;
        for (const auto& [n, d] : v.support()) out.add_term(n + k, c * d);
    }
    return out;
}

/// The module isomorphism V -> R[x], e_n -> x^n.
inline Polynomial to_poly(const Vector& v) {
    if (v.is_zero()) return Polynomial(v.ring());
    std::vector<RingValue> coeffs(static_cast<std::size_t>(*v.degree()) + 1, v.ring().zero());
    for (const auto& [n, c] : v.support()) coeffs[static_cast<std::size_t>(n)] = c;
    return Polynomial(v.ring(), std::move(coeffs));
}

/// Inverse isomorphism R[x] -> V, x^n -> e_n.
inline Vector from_poly(const Polynomial& P) {
    Vector out(P.ring());
    for (std::size_t k = 0; k < P.size(); ++k) out.add_term(k, P.coeff(k));
    return out;
}

inline Vector Vector::parse(const Ring& ring, std::string_view text) {
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    Vector out(ring);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (text.substr(i) == "0") return out;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        bool neg = false;
        if (!first || (i < text.size() && (text[i] == '+' || text[i] == '-'))) {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw ParseError(i, "'+' or '-'", "expected term separator in vector literal");
            neg = text[i] == '-';
            ++i;
            skip_ws();
        }
        // optional coefficient: digits [/ digits] followed by '*'
        std::size_t start = i;
        while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
        RingValue c = ring.one();
        if (i > start) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                c = ring.parse(text.substr(start, i - start));
                ++i;
                skip_ws();
            } else {
                i = start;  // digits belonged to nothing; fall through to 'e'
            }
        }
        if (i >= text.size() || text[i] != 'e')
            throw ParseError(i, "'e<index>'", "expected basis term in vector literal");
        ++i;
        if (i < text.size() && text[i] == '_') ++i;
        start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw ParseError(i, "basis index", "expected basis index after 'e'");
        Index n = std::stoull(std::string(text.substr(start, i - start)));
        out.add_term(n, neg ? -c : c);
        first = false;
        skip_ws();
    }
    return out;
}

}  // namespace opcalc
