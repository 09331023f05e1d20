#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated one-variable commutative power series.
 *
 * A PowerSeries of order N stores exactly the coefficients c_0..c_N and
 * never claims precision beyond N: binary operations truncate to the
 * minimum operand order instead of erroring.
 */

#include "opcalc/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

class PowerSeries {
  public:
    PowerSeries(Ring ring, std::vector<RingValue> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("power series needs at least the constant term");
        for (const auto& c : coeffs_) require_same_ring(ring_, c.ring());
    }

    static PowerSeries zero(const Ring& ring, std::size_t order) {
        return PowerSeries(ring, std::vector<RingValue>(order + 1, ring.zero()));
    }
    static PowerSeries one(const Ring& ring, std::size_t order) {
        auto s = zero(ring, order);
        s.coeffs_[0] = ring.one();
        return s;
    }
    /// The series "y" (truncated identity), handy for building pairs.
    static PowerSeries identity(const Ring& ring, std::size_t order) {
        auto s = zero(ring, order);
        if (order >= 1) s.coeffs_[1] = ring.one();
        return s;
    }

    const Ring& ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size() - 1; }

    const RingValue& coeff(std::size_t k) const {
        if (k >= coeffs_.size())
            throw std::out_of_range("power series coefficient beyond stored order");
        return coeffs_[k];
    }

    PowerSeries truncated(std::size_t new_order) const {
        if (new_order >= order()) return *this;
        return PowerSeries(ring_, {coeffs_.begin(), coeffs_.begin() + new_order + 1});
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RingValue& c) { return c.is_zero(); });
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        require_same_ring(a.ring_, b.ring_);
        std::size_t n = std::min(a.order(), b.order());
        std::vector<RingValue> out;
        out.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) out.push_back(a.coeffs_[i] + b.coeffs_[i]);
        return PowerSeries(a.ring_, std::move(out));
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        return a + b.scaled(-a.ring_.one());
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        require_same_ring(a.ring_, b.ring_);
        std::size_t n = std::min(a.order(), b.order());
        std::vector<RingValue> out(n + 1, a.ring_.zero());
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return PowerSeries(a.ring_, std::move(out));
    }

    PowerSeries scaled(const RingValue& c) const {
        std::vector<RingValue> out;
        out.reserve(coeffs_.size());
        for (const auto& v : coeffs_) out.push_back(v * c);
        return PowerSeries(ring_, std::move(out));
    }

    /// a(b(y)); requires b(0) = 0 so every coefficient is a finite sum.
    friend PowerSeries compose(const PowerSeries& a, const PowerSeries& b) {
        require_same_ring(a.ring_, b.ring_);
        if (!b.coeff(0).is_zero())
            throw std::domain_error("series composition requires inner constant term 0");
        std::size_t n = std::min(a.order(), b.order());
        PowerSeries bt = b.truncated(n);
        PowerSeries result = zero(a.ring_, n);
        // Horner: ((a_K b + a_{K-1}) b + ...) b + a_0
        for (std::size_t k = a.order() + 1; k-- > 0;) {
            result = result * bt;
            result.coeffs_[0] = result.coeffs_[0] + a.coeffs_[k];
        }
        return result;
    }

    /// exp(a) = sum a^k / k!; requires a(0) = 0 and a ring containing Q.
    friend PowerSeries exp(const PowerSeries& a) {
        if (!a.ring_.contains_rationals())
            throw CapabilityError("series exp over " + a.ring_.to_string());
        if (!a.coeff(0).is_zero()) throw std::domain_error("series exp requires constant term 0");
        std::size_t n = a.order();
        PowerSeries result = one(a.ring_, n);
        PowerSeries term = one(a.ring_, n);
        RingValue k_factorial = a.ring_.one();
        for (std::size_t k = 1; k <= n; ++k) {
            term = term * a;
            k_factorial = k_factorial * a.ring_.from_integer(static_cast<long long>(k));
            result = result + term.scaled(k_factorial.inverse());
        }
        return result;
    }

    /// Multiplicative inverse to the stored order; requires an invertible
    /// constant term (used over Q only).
    PowerSeries inverse() const {
        RingValue c0 = coeff(0).inverse();
        std::size_t n = order();
        PowerSeries out = zero(ring_, n);
        out.coeffs_[0] = c0;
        for (std::size_t k = 1; k <= n; ++k) {
            RingValue acc = ring_.zero();
            for (std::size_t j = 1; j <= k; ++j) acc = acc + coeffs_[j] * out.coeffs_[k - j];
            out.coeffs_[k] = -(acc * c0);
        }
        return out;
    }

    bool operator==(const PowerSeries& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    std::string to_string(std::string_view var = "y") const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!out.empty()) out += " + ";
            out += coeffs_[k].to_string();
            if (k >= 1) out += "*" + std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return out + " + O(" + std::string(var) + "^" + std::to_string(order() + 1) + ")";
    }

  private:
    Ring ring_;
    std::vector<RingValue> coeffs_;
};

}  // namespace opcalc
