#pragma once

/**
 * @file normal_series.hpp
 * @brief The normal-form calculus: R<x,y>> and the maps between it and R-Mod(V,V).
 *
 * A NormalSeries is an element sum_n P_n(x) y^n of R<x,y>>, held as a lazy
 * memoized coefficient oracle n -> P_n. There is no global truncation:
 * coefficient n is always exact, and observation depth enters only through
 * eq_up_to and friends. The sum it denotes is the operator
 *
 *     v  |->  sum_{n=0}^{d(v)} P_n(U) (D^n v)
 *
 * which is a finite sum because D is topologically nilpotent.
 *
 * normalize() inverts this correspondence: given any operator phi it
 * reconstructs the unique coefficient sequence by the recursion
 *
 *     P_0(U)(e_0)     = phi(e_0)
 *     P_{n+1}(U)(e_0) = phi(e_{n+1}) - sum_{k=0}^{n} P_k(U)(e_{n+1-k})
 *
 * star(S, T) is composition of the denoted operators followed by
 * normalize; umbral(S, T) is the coefficientwise substitution product
 *     sum_n ( sum_k <P_n|x^k> Q_k(x) ) y^n.
 */

#include "opcalc/operators.hpp"
#include "opcalc/polynomial.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

class NormalSeries {
  public:
    NormalSeries(Ring ring, std::function<Polynomial(Index)> coeff_oracle,
                 std::optional<Index> support_bound = std::nullopt)
        : ring_(std::move(ring)),
          oracle_(std::move(coeff_oracle)),
          bound_(support_bound),
          cache_(std::make_shared<Cache>()) {}

    const Ring& ring() const { return ring_; }

    /// All coefficients beyond the bound (when present) are zero.
    std::optional<Index> support_bound() const { return bound_; }

    /// P_n, exact, memoized.
    Polynomial coeff(Index n) const {
        if (bound_ && n > *bound_) return Polynomial(ring_);
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->memo.find(n);
            if (it != cache_->memo.end()) return it->second;
        }
        Polynomial p = oracle_(n);
        require_same_ring(ring_, p.ring());
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->memo.emplace(n, std::move(p)).first->second;
    }

    /// (sum_n P_n(U) D^n)(v): finite sum over n = 0..d(v); zero maps to zero.
    Vector apply(const Vector& v) const {
        require_same_ring(ring_, v.ring());
        if (v.is_zero()) return v;
        Vector out(ring_);
        Vector dn = v;  // D^n(v)
        Index d = *v.degree();
        for (Index n = 0; n <= d; ++n) {
            out = out + apply_poly(coeff(n), dn);
            dn = lower(dn);
        }
        return out;
    }

    /// The isomorphism pi: the operator this series denotes.
    Operator as_operator(std::string name = "") const {
        NormalSeries self = *this;
        return Operator(ring_, name.empty() ? "series" : std::move(name),
                        [self](Index n) { return self.apply(Vector::basis(self.ring_, n)); });
    }

    // -- constructors for common literals ------------------------------------

    static NormalSeries zero(const Ring& ring) {
        return NormalSeries(ring, [ring](Index) { return Polynomial(ring); }, 0);
    }

    static NormalSeries one(const Ring& ring) {
        return from_coeffs(ring, {Polynomial::constant(ring.one())});
    }

    /// P(x) y^n.
    static NormalSeries monomial(const Ring& ring, Index n, Polynomial P) {
        return NormalSeries(
            ring, [ring, n, P](Index k) { return k == n ? P : Polynomial(ring); }, n);
    }

    /// The series x (= x y^0), denoting U.
    static NormalSeries x(const Ring& ring) {
        return monomial(ring, 0, Polynomial::monomial(ring, 1));
    }

    /// The series y (= 1 y^1), denoting D.
    static NormalSeries y(const Ring& ring) {
        return monomial(ring, 1, Polynomial::constant(ring.one()));
    }

    /// Finitely many coefficients, zero beyond.
    static NormalSeries from_coeffs(const Ring& ring, std::vector<Polynomial> coeffs) {
        Index bound = coeffs.empty() ? 0 : static_cast<Index>(coeffs.size()) - 1;
        auto shared = std::make_shared<std::vector<Polynomial>>(std::move(coeffs));
        return NormalSeries(
            ring,
            [ring, shared](Index n) {
                return n < shared->size() ? (*shared)[static_cast<std::size_t>(n)]
                                          : Polynomial(ring);
            },
            bound);
    }

    /// sum_n x^n y^n: the two-sided identity of the umbral product; denotes
    /// the operator e_n -> (n+1) e_n.
    static NormalSeries diagonal_identity(const Ring& ring) {
        return NormalSeries(ring,
                            [ring](Index n) { return Polynomial::monomial(ring, static_cast<std::size_t>(n)); });
    }

  private:
    struct Cache {
        std::mutex mutex;
        std::map<Index, Polynomial> memo;
    };

    Ring ring_;
    std::function<Polynomial(Index)> oracle_;
    std::optional<Index> bound_;
    std::shared_ptr<Cache> cache_;
};

/// s(phi): the unique normal form of an operator, built lazily by the
/// decomposition recursion. Coefficient n demands phi(e_0..e_n) only.
inline NormalSeries normalize(const Operator& phi) {
    struct State {
        explicit State(Operator p) : phi(std::move(p)) {}
        Operator phi;
        std::mutex mutex;
        std::vector<Polynomial> coeffs;  // P_0..P_{k-1} so far
    };
    auto state = std::make_shared<State>(phi);
    const Ring ring = phi.ring();
    return NormalSeries(ring, [state, ring](Index n) {
        std::lock_guard<std::mutex> lock(state->mutex);
        while (state->coeffs.size() <= n) {
            Index k = state->coeffs.size();
            Vector residual = state->phi.image(k);
            for (Index j = 0; j < k; ++j)
                residual = residual - from_poly(state->coeffs[static_cast<std::size_t>(j)])
                                          .shifted_up(k - j);
            state->coeffs.push_back(to_poly(residual));
        }
        return state->coeffs[static_cast<std::size_t>(n)];
    });
}

/// S * T = s(pi(S) o pi(T)): composition of the denoted operators,
/// re-normalized. Coefficient n only ever consults finitely many
/// coefficients of S and T.
inline NormalSeries star(const NormalSeries& S, const NormalSeries& T) {
    require_same_ring(S.ring(), T.ring());
    return normalize(compose(S.as_operator(), T.as_operator()));
}

/// S # T: coefficient n = sum_k <P_n|x^k> Q_k(x), a finite sum.
inline NormalSeries umbral(const NormalSeries& S, const NormalSeries& T) {
    require_same_ring(S.ring(), T.ring());
    const Ring ring = S.ring();
    return NormalSeries(
        ring,
        [S, T, ring](Index n) {
            Polynomial P = S.coeff(n);
            Polynomial acc(ring);
            for (std::size_t k = 0; k < P.size(); ++k) {
                RingValue c = P.coeff(k);
                if (c.is_zero()) continue;
                acc = acc + T.coeff(k).scaled(c);
            }
            return acc;
        },
        S.support_bound());
}

inline NormalSeries operator+(const NormalSeries& a, const NormalSeries& b) {
    require_same_ring(a.ring(), b.ring());
    std::optional<Index> bound;
    if (a.support_bound() && b.support_bound())
        bound = std::max(*a.support_bound(), *b.support_bound());
    return NormalSeries(
        a.ring(), [a, b](Index n) { return a.coeff(n) + b.coeff(n); }, bound);
}

inline NormalSeries operator-(const NormalSeries& a, const NormalSeries& b) {
    require_same_ring(a.ring(), b.ring());
    std::optional<Index> bound;
    if (a.support_bound() && b.support_bound())
        bound = std::max(*a.support_bound(), *b.support_bound());
    return NormalSeries(
        a.ring(), [a, b](Index n) { return a.coeff(n) - b.coeff(n); }, bound);
}

inline NormalSeries scale(const RingValue& c, const NormalSeries& a) {
    require_same_ring(c.ring(), a.ring());
    return NormalSeries(
        a.ring(), [c, a](Index n) { return a.coeff(n).scaled(c); }, a.support_bound());
}

/// Exact equality of coefficients 0..upto. (Equality of lazy series is only
/// semi-decidable; this is the decidable observation.)
inline bool eq_up_to(const NormalSeries& S, const NormalSeries& T, Index upto) {
    for (Index n = 0; n <= upto; ++n)
        if (S.coeff(n) != T.coeff(n)) return false;
    return true;
}

/// First n <= upto with differing coefficients, if any.
inline std::optional<Index> first_difference(const NormalSeries& S, const NormalSeries& T,
                                             Index upto) {
    for (Index n = 0; n <= upto; ++n)
        if (S.coeff(n) != T.coeff(n)) return n;
    return std::nullopt;
}

}  // namespace opcalc
