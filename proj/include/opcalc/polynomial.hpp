#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials R[x] with exact coefficients.
 *
 * Canonical form: no trailing zero coefficients, so the zero polynomial is
 * the empty coefficient list and equality is coefficient-list equality.
 */

#include "opcalc/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

class Polynomial {
  public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    Polynomial(Ring ring, std::vector<RingValue> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) require_same_ring(ring_, c.ring());
        trim();
    }

    static Polynomial constant(RingValue c) {
        Ring r = c.ring();
        return Polynomial(r, {std::move(c)});
    }

    /// c * x^k (c defaults to 1).
    static Polynomial monomial(const Ring& ring, std::size_t k) {
        return monomial(ring, k, ring.one());
    }
    static Polynomial monomial(const Ring& ring, std::size_t k, RingValue c) {
        std::vector<RingValue> cs(k, ring.zero());
        cs.push_back(std::move(c));
        return Polynomial(ring, std::move(cs));
    }

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// <P | x^k>: coefficient of x^k, zero beyond the degree.
    RingValue coeff(std::size_t k) const {
        if (k >= coeffs_.size()) return ring_.zero();
        return coeffs_[k];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        std::vector<RingValue> out;
        std::size_t n = std::max(a.size(), b.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
        return Polynomial(a.ring_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + b.scaled(-a.ring_.one());
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        std::vector<RingValue> out(a.size() + b.size() - 1, a.ring_.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(a.ring_, std::move(out));
    }

    Polynomial scaled(const RingValue& c) const {
        require_same_ring(ring_, c.ring());
        std::vector<RingValue> out;
        out.reserve(size());
        for (const auto& v : coeffs_) out.push_back(v * c);
        return Polynomial(ring_, std::move(out));
    }

    /// P * x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) return k == 0 ? *this : Polynomial(ring_);
        std::vector<RingValue> out(k, ring_.zero());
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(ring_, std::move(out));
    }

    bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Human form, e.g. "1 - 2*x + 1/2*x^2"; "0" for the zero polynomial.
    std::string to_string(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const RingValue& c = coeffs_[k];
            if (c.is_zero()) continue;
            RingValue mag = c.abs();
            if (out.empty()) {
                if (c.is_negative()) out += "-";
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            bool unit = mag.is_one();
            if (k == 0) {
                out += mag.to_string();
            } else {
                if (!unit) out += mag.to_string() + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Ring ring_;
    std::vector<RingValue> coeffs_;
};

}  // namespace opcalc
