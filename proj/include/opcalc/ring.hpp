#pragma once

/**
 * @file ring.hpp
 * @brief Exact coefficient arithmetic over Z, Q and Z/m.
 *
 * A RingValue is an element of one of three commutative unital rings,
 * selected at runtime:
 *
 *   - integers      (arbitrary precision)
 *   - rationals     (stored fully reduced, denominator > 0)
 *   - residues mod m (value in [0, m), any modulus m >= 2)
 *
 * Equality is representation equality: every value has exactly one stored
 * form, so downstream exactness tests reduce to direct comparison.
 * Mixing values from different rings throws RingMismatchError; operations
 * that only exist over the rationals (division, exp, formal integration)
 * are gated on Ring::contains_rationals() and throw CapabilityError
 * elsewhere.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opcalc {

using Integer = boost::multiprecision::cpp_int;

struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a capability the selected ring does not have
/// (typically: rationals).
struct CapabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    std::string expected;

    ParseError(std::size_t pos, std::string exp, const std::string& msg)
        : std::runtime_error(msg), position(pos), expected(std::move(exp)) {}
};

enum class RingKind { integers, rationals, residues };

class RingValue;

/// Descriptor of the coefficient ring in effect. Cheap to copy and compare;
/// acts as the factory for its elements.
class Ring {
  public:
    static Ring integers() { return Ring(RingKind::integers, 0); }
    static Ring rationals() { return Ring(RingKind::rationals, 0); }
    static Ring integers_mod(Integer m) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        return Ring(RingKind::residues, std::move(m));
    }

    RingKind kind() const { return kind_; }
    const Integer& modulus() const { return modulus_; }
    bool contains_rationals() const { return kind_ == RingKind::rationals; }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind_) {
            case RingKind::integers: return "Z";
            case RingKind::rationals: return "Q";
            case RingKind::residues: return "Z/" + modulus_.str();
        }
        return "?";
    }

    RingValue zero() const;
    RingValue one() const;
    RingValue from_integer(Integer n) const;
    RingValue from_integer(long long n) const;
    RingValue from_rational(Integer num, Integer den) const;

    /// Parses "p" or (rationals only) "p/q" with optional leading '-'.
    RingValue parse(std::string_view text) const;

  private:
    Ring(RingKind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    Integer modulus_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b)
        throw RingMismatchError("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

/// One exact ring element. Canonical form invariants:
///   integers:  den == 1
///   rationals: gcd(num, den) == 1, den > 0 (zero stored as 0/1)
///   residues:  den == 1, 0 <= num < modulus
class RingValue {
  public:
    const Ring& ring() const { return ring_; }
    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// Sign in the natural order on Z and Q; residues are never negative.
    bool is_negative() const { return num_ < 0; }

    bool operator==(const RingValue& o) const {
        return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RingValue& o) const { return !(*this == o); }

    RingValue operator-() const {
        if (ring_.kind() == RingKind::residues)
            return RingValue(ring_, reduce_mod(-num_, ring_.modulus()), 1);
        return RingValue(ring_, -num_, den_);
    }

    RingValue abs() const { return is_negative() ? -*this : *this; }

    friend RingValue operator+(const RingValue& a, const RingValue& b) {
        require_same_ring(a.ring_, b.ring_);
        switch (a.ring_.kind()) {
            case RingKind::integers: return RingValue(a.ring_, a.num_ + b.num_, 1);
            case RingKind::residues:
                return RingValue(a.ring_, reduce_mod(a.num_ + b.num_, a.ring_.modulus()), 1);
            case RingKind::rationals:
                return make_rational(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        }
        throw std::logic_error("unreachable");
    }

    friend RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

    friend RingValue operator*(const RingValue& a, const RingValue& b) {
        require_same_ring(a.ring_, b.ring_);
        switch (a.ring_.kind()) {
            case RingKind::integers: return RingValue(a.ring_, a.num_ * b.num_, 1);
            case RingKind::residues:
                return RingValue(a.ring_, reduce_mod(a.num_ * b.num_, a.ring_.modulus()), 1);
            case RingKind::rationals:
                return make_rational(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
        }
        throw std::logic_error("unreachable");
    }

    /// Multiplicative inverse. Only rationals are a field; over Z only
    /// the units +1/-1 invert. Residue inverses are never needed here.
    RingValue inverse() const {
        switch (ring_.kind()) {
            case RingKind::rationals:
                if (num_ == 0) throw std::domain_error("inverse of zero");
                return make_rational(ring_, den_, num_);
            case RingKind::integers:
                if (num_ == 1 || num_ == -1) return *this;
                throw CapabilityError("inverse of non-unit integer " + num_.str());
            case RingKind::residues:
                throw CapabilityError("inverse over " + ring_.to_string());
        }
        throw std::logic_error("unreachable");
    }

    friend RingValue operator/(const RingValue& a, const RingValue& b) { return a * b.inverse(); }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

  private:
    friend class Ring;

    RingValue(Ring ring, Integer num, Integer den)
        : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {}

    static Integer reduce_mod(Integer v, const Integer& m) {
        Integer r = v % m;
        if (r < 0) r += m;
        return r;
    }

    static RingValue make_rational(const Ring& ring, Integer num, Integer den) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) return RingValue(ring, 0, 1);
        Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
        return RingValue(ring, num / g, den / g);
    }

    Ring ring_;
    Integer num_;
    Integer den_;
};

inline RingValue Ring::zero() const { return RingValue(*this, 0, 1); }
inline RingValue Ring::one() const { return from_integer(Integer(1)); }

inline RingValue Ring::from_integer(Integer n) const {
    if (kind_ == RingKind::residues) return RingValue(*this, RingValue::reduce_mod(n, modulus_), 1);
    return RingValue(*this, std::move(n), 1);
}

inline RingValue Ring::from_integer(long long n) const { return from_integer(Integer(n)); }

inline RingValue Ring::from_rational(Integer num, Integer den) const {
    if (den != 1 && !contains_rationals())
        throw CapabilityError("rational literal over " + to_string());
    if (kind_ == RingKind::rationals) return RingValue::make_rational(*this, std::move(num), std::move(den));
    if (den == 0) throw std::domain_error("zero denominator");
    if (den == -1) num = -num;
    return from_integer(std::move(num));
}

inline RingValue Ring::parse(std::string_view text) const {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw ParseError(0, "integer or rational literal",
                         "cannot parse '" + std::string(text) + "' as an element of " + to_string());
    Integer n{std::string(num)}, d{std::string(den)};
    if (neg) n = -n;
    return from_rational(std::move(n), std::move(d));
}

}  // namespace opcalc
