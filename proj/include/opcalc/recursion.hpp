#pragma once

/**
 * @file recursion.hpp
 * @brief Linear primitive recursion on tensor powers of V.
 *
 * A MultilinearMap of arity k is the unique linear map V^(x)k -> V extending
 * a basis rule (n_1, .., n_k) -> Vector; a Tensor is a finitely supported
 * element of V^(x)k. primrec(g, h) realizes the linear primitive recursion
 * theorem: the unique map with
 *
 *   phi(e_0   (x) e_{n_1} (x) .. (x) e_{n_k}) = g(n_1, .., n_k)
 *   phi(e_{n+1} (x) ..)                       = h-hat(e_{n_1} (x) .. (x) e_{n_k}
 *                                                     (x) e_n (x) phi(e_n (x) ..))
 *
 * where the last slot of h-hat receives a general vector and is expanded by
 * linearity over its support. The recursion variable occupies tensor slot 1;
 * evaluation is iterative (no recursion on the call stack) and memoized on
 * full index tuples.
 *
 * Caution: because h-hat is linear, a trajectory that reaches the zero
 * vector is annihilated from then on — with g = 0 the whole map is zero, so
 * the lowering operator D (base case 0) is NOT of the form primrec(0, h).
 * primrec_classical() keeps the classical set-level trajectory instead,
 * feeding the previous value to the step rule as a whole vector; D is its
 * linear extension with the step (n, prev) -> e_n. The two constructions
 * coincide whenever the step rule is linear in the previous value.
 */

#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

struct ArityMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using IndexTuple = std::vector<Index>;

class Tensor {
  public:
    Tensor(Ring ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {}

    /// Arity-0 tensor: a bare scalar.
    static Tensor scalar(const Ring& ring, RingValue c) {
        Tensor t(ring, 0);
        t.add_term({}, std::move(c));
        return t;
    }

    /// e_{n_1} (x) .. (x) e_{n_k}.
    static Tensor basis(const Ring& ring, IndexTuple indices) {
        Tensor t(ring, indices.size());
        t.add_term(std::move(indices), ring.one());
        return t;
    }

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const std::map<IndexTuple, RingValue>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    Tensor& add_term(IndexTuple indices, const RingValue& c) {
        if (indices.size() != arity_) throw ArityMismatchError("tensor term arity mismatch");
        require_same_ring(ring_, c.ring());
        if (c.is_zero()) return *this;
        auto [it, inserted] = support_.emplace(std::move(indices), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) support_.erase(it);
        }
        return *this;
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.arity_ != b.arity_) throw ArityMismatchError("tensor sum arity mismatch");
        Tensor out = a;
        for (const auto& [idx, c] : b.support_) out.add_term(idx, c);
        return out;
    }

    Tensor scaled(const RingValue& c) const {
        Tensor out(ring_, arity_);
        for (const auto& [idx, v] : support_) out.add_term(idx, v * c);
        return out;
    }

    /// a (x) b: concatenates index tuples.
    friend Tensor outer(const Tensor& a, const Tensor& b) {
        require_same_ring(a.ring_, b.ring_);
        Tensor out(a.ring_, a.arity_ + b.arity_);
        for (const auto& [ia, ca] : a.support_)
            for (const auto& [ib, cb] : b.support_) {
                IndexTuple idx = ia;
                idx.insert(idx.end(), ib.begin(), ib.end());
                out.add_term(std::move(idx), ca * cb);
            }
        return out;
    }

    bool operator==(const Tensor& o) const {
        return ring_ == o.ring_ && arity_ == o.arity_ && support_ == o.support_;
    }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

  private:
    Ring ring_;
    std::size_t arity_;
    std::map<IndexTuple, RingValue> support_;
};

class MultilinearMap {
  public:
    MultilinearMap(Ring ring, std::size_t arity, std::string name,
                   std::function<Vector(std::span<const Index>)> oracle)
        : ring_(std::move(ring)),
          arity_(arity),
          name_(std::move(name)),
          oracle_(std::move(oracle)),
          cache_(std::make_shared<Cache>()) {}

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const std::string& name() const { return name_; }

    /// Image of a basis tuple, memoized.
    Vector image(std::span<const Index> indices) const {
        if (indices.size() != arity_) throw ArityMismatchError("basis tuple arity mismatch");
        IndexTuple key(indices.begin(), indices.end());
        if (auto hit = lookup(key)) return *hit;
        Vector v = oracle_(indices);
        require_same_ring(ring_, v.ring());
        return store(std::move(key), std::move(v));
    }

    Vector image(const IndexTuple& indices) const { return image(std::span<const Index>(indices)); }

    /// Linear extension to tensors.
    Vector apply(const Tensor& t) const {
        require_same_ring(ring_, t.ring());
        if (t.arity() != arity_) throw ArityMismatchError("tensor arity mismatch");
        Vector out(ring_);
        for (const auto& [idx, c] : t.support()) out = out + image(idx).scaled(c);
        return out;
    }

    static MultilinearMap zero(const Ring& ring, std::size_t arity) {
        return MultilinearMap(ring, arity, "0", [ring](std::span<const Index>) { return Vector(ring); });
    }

    /// pi_i^(n): (e_{j_1} (x) .. (x) e_{j_n}) -> e_{j_i}; i is 1-based.
    static MultilinearMap projection(const Ring& ring, std::size_t i, std::size_t n) {
        if (i < 1 || i > n) throw std::out_of_range("projection index out of range");
        return MultilinearMap(ring, n, "pi_" + std::to_string(i) + "^(" + std::to_string(n) + ")",
                              [ring, i](std::span<const Index> idx) {
                                  return Vector::basis(ring, idx[i - 1]);
                              });
    }

    /// f-tilde for a set-theoretic f: N^k -> N.
    static MultilinearMap lift(const Ring& ring, std::size_t k,
                               std::function<Index(std::span<const Index>)> f) {
        return MultilinearMap(ring, k, "lift", [ring, f = std::move(f)](std::span<const Index> idx) {
            return Vector::basis(ring, f(idx));
        });
    }

  private:
    struct Cache {
        std::mutex mutex;
        std::map<IndexTuple, Vector> memo;
    };

    std::optional<Vector> lookup(const IndexTuple& key) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->memo.find(key);
        if (it == cache_->memo.end()) return std::nullopt;
        return it->second;
    }

    Vector store(IndexTuple key, Vector v) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->memo.emplace(std::move(key), std::move(v)).first->second;
    }

    Ring ring_;
    std::size_t arity_;
    std::string name_;
    std::function<Vector(std::span<const Index>)> oracle_;
    std::shared_ptr<Cache> cache_;
};

/// h-hat applied to e_{rest} (x) e_n (x) v, the last slot expanded by
/// linearity over the support of v.
inline Vector step_apply(const MultilinearMap& h, std::span<const Index> rest, Index n,
                         const Vector& v) {
    Vector out(h.ring());
    IndexTuple idx(rest.begin(), rest.end());
    idx.push_back(n);
    idx.push_back(0);  // placeholder for the recursive slot
    for (const auto& [p, c] : v.support()) {
        idx.back() = p;
        out = out + h.image(idx).scaled(c);
    }
    return out;
}

/// Step rule of a classical recursion trajectory: (n_1..n_k, n, previous
/// value) -> next value. The previous value arrives as a whole vector.
using StepRule = std::function<Vector(std::span<const Index> rest, Index n, const Vector& prev)>;

/// Linear extension of the classical primitive recursion trajectory
///
///   f(0, rest)   = g(rest)
///   f(n+1, rest) = step(rest, n, f(n, rest))
///
/// across the basis tensors. This is the R-hat construction itself; the
/// ĥ-linear reformulation below agrees with it exactly when the step is
/// linear in the previous value, which fails when a trajectory passes
/// through the zero vector (D's base case does). Iterative in the recursion
/// variable, memoized on full index tuples.
inline MultilinearMap primrec_classical(const MultilinearMap& g, StepRule step,
                                        std::string step_name = "step") {
    struct State {
        std::mutex mutex;
        std::map<IndexTuple, Vector> values;  // key: full (n, rest) tuple
    };
    auto state = std::make_shared<State>();
    const Ring ring = g.ring();
    std::size_t arity = g.arity() + 1;
    return MultilinearMap(
        ring, arity, "primrec(" + g.name() + ", " + std::move(step_name) + ")",
        [state, g, step = std::move(step), ring](std::span<const Index> indices) {
            const Index n = indices[0];
            std::span<const Index> rest = indices.subspan(1);
            IndexTuple key(indices.begin(), indices.end());
            // resume from the largest cached recursion depth
            Index start = 0;
            Vector cur(ring);
            {
                std::lock_guard<std::mutex> lock(state->mutex);
                for (Index j = n + 1; j-- > 0;) {
                    key[0] = j;
                    auto it = state->values.find(key);
                    if (it != state->values.end()) {
                        cur = it->second;
                        start = j + 1;
                        break;
                    }
                    if (j == 0) break;
                }
            }
            if (start == 0) cur = g.image(rest);
            for (Index j = start; j <= n; ++j) {
                if (j > 0) cur = step(rest, j - 1, cur);
                std::lock_guard<std::mutex> lock(state->mutex);
                key[0] = j;
                state->values.emplace(key, cur);
            }
            return cur;
        });
}

/// R-hat(g, h) with the step given as a linear map: the recursion equations
///
///   phi(e_0 (x) e_rest)     = g-hat(e_rest)
///   phi(e_{n+1} (x) e_rest) = h-hat(e_rest (x) e_n (x) phi(e_n (x) e_rest))
///
/// with h-hat's last slot expanded by linearity over the recursive value.
inline MultilinearMap primrec(const MultilinearMap& g, const MultilinearMap& h) {
    require_same_ring(g.ring(), h.ring());
    if (h.arity() != g.arity() + 2)
        throw ArityMismatchError("primrec requires arity(h) = arity(g) + 2");
    return primrec_classical(
        g,
        [h](std::span<const Index> rest, Index n, const Vector& prev) {
            return step_apply(h, rest, n, prev);
        },
        h.name());
}

/// Superposition f(g_1, .., g_m): basis tuple t -> f-hat(g_1(t) (x) .. (x) g_m(t)),
/// expanded by multilinearity of f over the (generally non-basis) g_i outputs.
inline MultilinearMap superpose(const MultilinearMap& f, std::vector<MultilinearMap> gs) {
    if (gs.size() != f.arity()) throw ArityMismatchError("superposition needs arity(f) inner maps");
    if (gs.empty()) throw ArityMismatchError("superposition needs at least one inner map");
    std::size_t n = gs.front().arity();
    for (const auto& gmap : gs) {
        require_same_ring(f.ring(), gmap.ring());
        if (gmap.arity() != n) throw ArityMismatchError("inner maps must share an arity");
    }
    const Ring ring = f.ring();
    auto inner = std::make_shared<std::vector<MultilinearMap>>(std::move(gs));
    return MultilinearMap(ring, n, "superpose(" + f.name() + ")",
                          [f, inner, ring](std::span<const Index> idx) {
                              std::vector<Vector> outputs;
                              outputs.reserve(inner->size());
                              for (const auto& gmap : *inner) outputs.push_back(gmap.image(idx));
                              // expand f over the product of supports
                              Vector out(ring);
                              IndexTuple choice(inner->size(), 0);
                              std::function<void(std::size_t, RingValue)> expand =
                                  [&](std::size_t slot, RingValue coeff) {
                                      if (slot == outputs.size()) {
                                          out = out + f.image(choice).scaled(coeff);
                                          return;
                                      }
                                      for (const auto& [p, c] : outputs[slot].support()) {
                                          choice[slot] = p;
                                          expand(slot + 1, coeff * c);
                                      }
                                  };
                              expand(0, ring.one());
                              return out;
                          });
}

}  // namespace opcalc
