#pragma once

/**
 * @file sheffer.hpp
 * @brief Sheffer sequences, series and operators.
 *
 * A pair (mu(y), sigma(y)) with mu(0) != 0, sigma(0) = 0, sigma'(0) != 0
 * generates the Sheffer sequence p_n(x) = n! [y^n] mu(y) e^{x sigma(y)}
 * (so deg p_n = n), the Sheffer series sum_n p_n(x)/n! y^n, and the Sheffer
 * operator sum_n (1/n!) p_n(U) o D^n. Everything here requires a coefficient
 * ring containing the rationals.
 *
 * is_sheffer() is the recognizer: it reads the candidate sequence off a
 * normal series, recovers (mu, sigma) from the x^0 and x^1 rows, and checks
 * the full generating identity to the requested order.
 *
 * umbral_group_check() exercises the group of Sheffer sequences under umbral
 * composition. The composition is computed with the # product applied to the
 * n!-rescaled series sum_n p_n(x) y^n — on those the # product acts exactly
 * as umbral composition of the sequences, and the group closes; applying #
 * directly to the 1/n!-normalized Sheffer series does not stay Sheffer, and
 * the report records that fact separately.
 */

#include "opcalc/normal_series.hpp"
#include "opcalc/polynomial.hpp"
#include "opcalc/power_series.hpp"
#include "opcalc/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

namespace detail {
inline Integer factorial(Index n) {
    Integer f = 1;
    for (Index i = 2; i <= n; ++i) f *= Integer(i);
    return f;
}

inline Integer binomial(Index n, Index k) {
    if (k > n) return 0;
    Integer b = 1;
    for (Index i = 0; i < k; ++i) b = b * Integer(n - i) / Integer(i + 1);
    return b;
}
}  // namespace detail

struct ShefferPair {
    PowerSeries mu;
    PowerSeries sigma;

    ShefferPair(PowerSeries mu_series, PowerSeries sigma_series)
        : mu(std::move(mu_series)), sigma(std::move(sigma_series)) {
        require_same_ring(mu.ring(), sigma.ring());
        if (!mu.ring().contains_rationals())
            throw CapabilityError("Sheffer pair requires a ring containing the rationals");
        if (mu.coeff(0).is_zero()) throw std::domain_error("Sheffer pair needs mu(0) != 0");
        if (!sigma.coeff(0).is_zero()) throw std::domain_error("Sheffer pair needs sigma(0) = 0");
        if (sigma.order() < 1 || sigma.coeff(1).is_zero())
            throw std::domain_error("Sheffer pair needs sigma'(0) != 0");
    }

    const Ring& ring() const { return mu.ring(); }
    std::size_t order() const { return std::min(mu.order(), sigma.order()); }

    bool operator==(const ShefferPair& o) const { return mu == o.mu && sigma == o.sigma; }
};

/// p_0..p_N with deg p_n = n enforced.
class ShefferSequence {
  public:
    explicit ShefferSequence(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
        if (polys_.empty()) throw std::invalid_argument("empty Sheffer sequence");
        for (std::size_t n = 0; n < polys_.size(); ++n)
            if (polys_[n].degree() != std::optional<std::size_t>(n))
                throw std::domain_error("Sheffer sequence needs deg p_" + std::to_string(n) +
                                        " = " + std::to_string(n));
    }

    const Ring& ring() const { return polys_.front().ring(); }
    std::size_t order() const { return polys_.size() - 1; }
    const Polynomial& poly(std::size_t n) const { return polys_.at(n); }
    const std::vector<Polynomial>& polys() const { return polys_; }

    bool operator==(const ShefferSequence& o) const { return polys_ == o.polys_; }

  private:
    std::vector<Polynomial> polys_;
};

/// p_n(x) = n! [y^n] mu(y) e^{x sigma(y)} for n = 0..N.
inline ShefferSequence sheffer_sequence(const ShefferPair& pair, std::size_t N) {
    const Ring& ring = pair.ring();
    PowerSeries mu = pair.mu.truncated(std::min(N, pair.mu.order()));
    PowerSeries sigma = pair.sigma.truncated(std::min(N, pair.sigma.order()));
    if (mu.order() < N || sigma.order() < N)
        throw std::domain_error("Sheffer pair order too small for requested sequence length");

    // powers sigma^k to order N; sigma^k has valuation >= k so k <= N suffices
    std::vector<PowerSeries> sigma_pow;
    sigma_pow.reserve(N + 1);
    sigma_pow.push_back(PowerSeries::one(ring, N));
    for (std::size_t k = 1; k <= N; ++k) sigma_pow.push_back(sigma_pow.back() * sigma);

    // E_n(x) = [y^n] e^{x sigma(y)} = sum_k x^k [y^n] sigma^k / k!
    std::vector<Polynomial> E(N + 1, Polynomial(ring));
    RingValue k_factorial = ring.one();
    for (std::size_t k = 0; k <= N; ++k) {
        if (k > 0) k_factorial = k_factorial * ring.from_integer(static_cast<long long>(k));
        RingValue inv = k_factorial.inverse();
        for (std::size_t n = k; n <= N; ++n) {
            RingValue c = sigma_pow[k].coeff(n) * inv;
            if (!c.is_zero()) E[n] = E[n] + Polynomial::monomial(ring, k, c);
        }
    }

    // p_n = n! sum_{j<=n} mu_j E_{n-j}
    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial g(ring);
        for (std::size_t j = 0; j <= n; ++j) g = g + E[n - j].scaled(mu.coeff(j));
        polys.push_back(g.scaled(ring.from_integer(detail::factorial(n))));
    }
    return ShefferSequence(std::move(polys));
}

/// L_n(x) = sum_{k=0}^n C(n,k) (-1)^k / k! x^k.
inline Polynomial laguerre(const Ring& ring, Index n) {
    if (!ring.contains_rationals())
        throw CapabilityError("Laguerre polynomials require a ring containing the rationals");
    Polynomial p(ring);
    for (Index k = 0; k <= n; ++k) {
        Integer num = detail::binomial(n, k);
        if (k % 2 == 1) num = -num;
        p = p + Polynomial::monomial(ring, static_cast<std::size_t>(k),
                                     ring.from_rational(num, detail::factorial(k)));
    }
    return p;
}

/// The Sheffer series sum_n p_n(x)/n! y^n (coefficients zero beyond N).
inline NormalSeries sheffer_series(const ShefferSequence& seq) {
    const Ring& ring = seq.ring();
    if (!ring.contains_rationals())
        throw CapabilityError("Sheffer series require a ring containing the rationals");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(seq.order() + 1);
    for (std::size_t n = 0; n <= seq.order(); ++n) {
        RingValue inv = ring.from_integer(detail::factorial(n)).inverse();
        coeffs.push_back(seq.poly(n).scaled(inv));
    }
    return NormalSeries::from_coeffs(ring, std::move(coeffs));
}

/// The n!-rescaled series sum_n p_n(x) y^n; on these the # product acts as
/// umbral composition of the underlying sequences.
inline NormalSeries sequence_series(const ShefferSequence& seq) {
    return NormalSeries::from_coeffs(seq.ring(), seq.polys());
}

struct ShefferRecognition {
    bool accepted = false;
    std::string reason;                   // failed check when rejected
    std::optional<ShefferPair> pair;      // recovered (mu, sigma) when accepted
    std::vector<Polynomial> sequence;     // p_n = n! coeff(S, n), as far as computed

    explicit operator bool() const { return accepted; }
};

/// Recognizes a Sheffer series: reads p_n = n! coeff(S, n) for n <= N, checks
/// deg p_n = n, recovers mu from the constant terms and sigma from the x^1
/// row divided by mu, then verifies the generating identity to order N.
inline ShefferRecognition is_sheffer(const NormalSeries& S, std::size_t N) {
    const Ring& ring = S.ring();
    if (!ring.contains_rationals())
        throw CapabilityError("is_sheffer requires a ring containing the rationals");
    ShefferRecognition rec;
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial p = S.coeff(n).scaled(ring.from_integer(detail::factorial(n)));
        if (p.degree() != std::optional<std::size_t>(n)) {
            rec.reason = "deg p_" + std::to_string(n) + " != " + std::to_string(n);
            return rec;
        }
        rec.sequence.push_back(std::move(p));
    }
    std::vector<RingValue> mu_coeffs, x1_coeffs;
    RingValue n_factorial = ring.one();
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) n_factorial = n_factorial * ring.from_integer(static_cast<long long>(n));
        RingValue inv = n_factorial.inverse();
        mu_coeffs.push_back(rec.sequence[n].coeff(0) * inv);
        x1_coeffs.push_back(rec.sequence[n].coeff(1) * inv);
    }
    PowerSeries mu(ring, std::move(mu_coeffs));
    if (mu.coeff(0).is_zero()) {
        rec.reason = "mu(0) = 0";
        return rec;
    }
    PowerSeries sigma = PowerSeries(ring, std::move(x1_coeffs)) * mu.inverse();
    if (!sigma.coeff(0).is_zero()) {
        rec.reason = "sigma(0) != 0";
        return rec;
    }
    if (N < 1 || sigma.coeff(1).is_zero()) {
        rec.reason = "sigma'(0) = 0";
        return rec;
    }
    ShefferPair pair(mu, sigma);
    ShefferSequence regen = sheffer_sequence(pair, N);
    for (std::size_t n = 0; n <= N; ++n) {
        if (regen.poly(n) != rec.sequence[n]) {
            rec.reason = "generating identity fails at n = " + std::to_string(n);
            return rec;
        }
    }
    rec.accepted = true;
    rec.pair = std::move(pair);
    return rec;
}

struct UmbralGroupReport {
    bool closed = false;               // group-law composite is Sheffer
    ShefferRecognition recognition;    // recognition of the composite
    std::vector<Polynomial> composite; // composite sequence r_n
    bool raw_series_sheffer = false;   // whether # on the 1/n! series stays Sheffer
    std::string raw_series_reason;
};

/// Umbral-composition group check: composes A and B with the # product on
/// their n!-rescaled series, re-normalizes, and recognizes the result. Also
/// reports whether the # product of the 1/n! Sheffer series themselves
/// happens to be Sheffer (it does not in general; the factorial placement
/// in the series normalization is not preserved by #).
inline UmbralGroupReport umbral_group_check(const ShefferSequence& A, const ShefferSequence& B,
                                            std::size_t N) {
    const Ring& ring = A.ring();
    require_same_ring(ring, B.ring());
    UmbralGroupReport report;

    NormalSeries composed = umbral(sequence_series(A), sequence_series(B));
    std::vector<Polynomial> renormalized;
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial r = composed.coeff(n);
        report.composite.push_back(r);
        renormalized.push_back(r.scaled(ring.from_integer(detail::factorial(n)).inverse()));
    }
    report.recognition = is_sheffer(NormalSeries::from_coeffs(ring, std::move(renormalized)), N);
    report.closed = report.recognition.accepted;

    ShefferRecognition raw =
        is_sheffer(umbral(sheffer_series(A), sheffer_series(B)), N);
    report.raw_series_sheffer = raw.accepted;
    report.raw_series_reason = raw.reason;
    return report;
}

}  // namespace opcalc
