#pragma once

/**
 * @file operators.hpp
 * @brief Linear endomorphisms of V as basis-image oracles.
 *
 * An Operator is the unique linear extension of a deterministic total map
 * n -> phi(e_n). The represented objects are genuinely infinite-dimensional;
 * truncation happens only when a caller observes finitely many images.
 * Basis images are memoized; cache insertion is idempotent (the oracle is
 * deterministic) and guarded by a mutex so concurrent evaluation of the
 * same oracle is race-free.
 */

#include "opcalc/polynomial.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace opcalc {

class Operator {
  public:
    Operator(Ring ring, std::string name, std::function<Vector(Index)> image)
        : ring_(std::move(ring)),
          name_(std::move(name)),
          oracle_(std::move(image)),
          cache_(std::make_shared<Cache>()) {}

    const Ring& ring() const { return ring_; }
    const std::string& name() const { return name_; }

    /// phi(e_n), memoized.
    Vector image(Index n) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->memo.find(n);
            if (it != cache_->memo.end()) return it->second;
        }
        Vector v = oracle_(n);
        require_same_ring(ring_, v.ring());
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->memo.emplace(n, std::move(v)).first->second;
    }

    /// Linear extension to all of V.
    Vector apply(const Vector& v) const {
        require_same_ring(ring_, v.ring());
        Vector out(ring_);
        for (const auto& [n, c] : v.support()) out = out + image(n).scaled(c);
        return out;
    }

    // -- the named operators of the calculus --------------------------------

    static Operator zero(const Ring& ring) {
        return Operator(ring, "0", [ring](Index) { return Vector(ring); });
    }

    static Operator identity(const Ring& ring) {
        return Operator(ring, "I", [ring](Index n) { return Vector::basis(ring, n); });
    }

    /// U: e_n -> e_{n+1}.
    static Operator raising(const Ring& ring) {
        return Operator(ring, "U", [ring](Index n) { return Vector::basis(ring, n + 1); });
    }

    /// D: e_0 -> 0, e_{n+1} -> e_n.
    static Operator lowering(const Ring& ring) {
        return Operator(ring, "D", [ring](Index n) {
            return n == 0 ? Vector(ring) : Vector::basis(ring, n - 1);
        });
    }

    /// The formal derivative: e_0 -> 0, e_{n+1} -> (n+1) e_n. Any ring.
    static Operator derivative(const Ring& ring) {
        return Operator(ring, "partial", [ring](Index n) {
            if (n == 0) return Vector(ring);
            Vector v(ring);
            v.add_term(n - 1, ring.from_integer(Integer(n)));
            return v;
        });
    }

    /// The formal integration: e_n -> e_{n+1}/(n+1). Requires rationals.
    static Operator integration(const Ring& ring) {
        if (!ring.contains_rationals())
            throw CapabilityError("integ requires a ring containing the rationals, got " +
                                  ring.to_string());
        return Operator(ring, "integ", [ring](Index n) {
            Vector v(ring);
            v.add_term(n + 1, ring.from_rational(1, Integer(n + 1)));
            return v;
        });
    }

  private:
    struct Cache {
        std::mutex mutex;
        std::map<Index, Vector> memo;
    };

    Ring ring_;
    std::string name_;
    std::function<Vector(Index)> oracle_;
    std::shared_ptr<Cache> cache_;
};

// -- closure of Operator under the algebra of R-Mod(V,V) --------------------

inline Operator operator+(const Operator& a, const Operator& b) {
    require_same_ring(a.ring(), b.ring());
    return Operator(a.ring(), "(" + a.name() + " + " + b.name() + ")",
                    [a, b](Index n) { return a.image(n) + b.image(n); });
}

inline Operator operator-(const Operator& a, const Operator& b) {
    require_same_ring(a.ring(), b.ring());
    return Operator(a.ring(), "(" + a.name() + " - " + b.name() + ")",
                    [a, b](Index n) { return a.image(n) - b.image(n); });
}

inline Operator scale(const RingValue& c, const Operator& a) {
    require_same_ring(c.ring(), a.ring());
    return Operator(a.ring(), c.to_string() + "*" + a.name(),
                    [c, a](Index n) { return a.image(n).scaled(c); });
}

/// a after b.
inline Operator compose(const Operator& a, const Operator& b) {
    require_same_ring(a.ring(), b.ring());
    return Operator(a.ring(), "(" + a.name() + " o " + b.name() + ")",
                    [a, b](Index n) { return a.apply(b.image(n)); });
}

inline Operator power(const Operator& a, Index k) {
    return Operator(a.ring(), a.name() + "^" + std::to_string(k), [a, k](Index n) {
        Vector v = Vector::basis(a.ring(), n);
        for (Index i = 0; i < k; ++i) v = a.apply(v);
        return v;
    });
}

inline Operator commutator(const Operator& a, const Operator& b) {
    return Operator(a.ring(), "com(" + a.name() + ", " + b.name() + ")", [a, b](Index n) {
        Vector en = Vector::basis(a.ring(), n);
        return a.apply(b.apply(en)) - b.apply(a.apply(en));
    });
}

/// P(U) as an operator.
inline Operator poly_in_raising(const Polynomial& P) {
    return Operator(P.ring(), "(" + P.to_string() + ")(U)",
                    [P](Index n) { return apply_poly(P, Vector::basis(P.ring(), n)); });
}

/// Initiality: the unique linear map with phi(e_0) = w and phi o U = S o phi,
/// i.e. phi(e_n) = S^n(w). Iterates of S are built incrementally and shared.
inline Operator induction_morphism(const Vector& w, const Operator& S) {
    require_same_ring(w.ring(), S.ring());
    struct Iterates {
        std::mutex mutex;
        std::vector<Vector> values;
    };
    auto state = std::make_shared<Iterates>();
    state->values.push_back(w);
    return Operator(w.ring(), "induction(" + w.to_string() + "; " + S.name() + ")",
                    [state, S](Index n) {
                        std::lock_guard<std::mutex> lock(state->mutex);
                        while (state->values.size() <= n)
                            state->values.push_back(S.apply(state->values.back()));
                        return state->values[static_cast<std::size_t>(n)];
                    });
}

/// True when a and b have identical basis images for n = 0..upto (inclusive).
inline bool agree_on_basis(const Operator& a, const Operator& b, Index upto) {
    for (Index n = 0; n <= upto; ++n)
        if (a.image(n) != b.image(n)) return false;
    return true;
}

}  // namespace opcalc
