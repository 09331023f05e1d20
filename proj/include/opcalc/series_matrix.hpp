#pragma once

/**
 * @file series_matrix.hpp
 * @brief Normal forms for endomorphisms of V^k: k x k matrices over R<x,y>>.
 *
 * A block operator is addressed by slot-index pairs: block_image(i, n) is the
 * image of the tuple with e_n in slot i and zero elsewhere, given as the k
 * output components. Entry (i, j) of the matrix is the normal form of the
 * component map e_n -> (output j of the image of e_n placed in slot i), and
 * application of the matrix reproduces the block operator:
 * out_j = sum_i entry(i, j).apply(in_i). Storage is row-major.
 */

#include "opcalc/normal_series.hpp"
#include "opcalc/operators.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/vector.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opcalc {

class SeriesMatrix {
  public:
    SeriesMatrix(std::size_t k, std::vector<NormalSeries> entries) : k_(k), entries_(std::move(entries)) {
        if (k_ == 0 || entries_.size() != k_ * k_)
            throw std::invalid_argument("series matrix must be square and non-empty");
        for (const auto& e : entries_) require_same_ring(ring(), e.ring());
    }

    std::size_t dim() const { return k_; }
    const Ring& ring() const { return entries_.front().ring(); }

    const NormalSeries& entry(std::size_t i, std::size_t j) const {
        if (i >= k_ || j >= k_) throw std::out_of_range("series matrix entry");
        return entries_[i * k_ + j];
    }

    /// Applies the represented endomorphism of V^k to a k-tuple.
    std::vector<Vector> apply(const std::vector<Vector>& in) const {
        if (in.size() != k_) throw std::invalid_argument("tuple size mismatch");
        std::vector<Vector> out(k_, Vector(ring()));
        for (std::size_t i = 0; i < k_; ++i) {
            if (in[i].is_zero()) continue;
            for (std::size_t j = 0; j < k_; ++j) out[j] = out[j] + entry(i, j).apply(in[i]);
        }
        return out;
    }

  private:
    std::size_t k_;
    std::vector<NormalSeries> entries_;
};

using BlockOracle = std::function<std::vector<Vector>(std::size_t slot, Index n)>;

/// Decomposes a block operator on V^k into its matrix of normal forms.
inline SeriesMatrix matrix_normalize(const Ring& ring, std::size_t k, BlockOracle phi) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    auto shared = std::make_shared<BlockOracle>(std::move(phi));
    std::vector<NormalSeries> entries;
    entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Operator component(ring, "block(" + std::to_string(i) + "," + std::to_string(j) + ")",
                               [shared, i, j, k, ring](Index n) {
                                   auto outputs = (*shared)(i, n);
                                   if (outputs.size() != k)
                                       throw std::invalid_argument("block oracle arity mismatch");
                                   return outputs[j];
                               });
            entries.push_back(normalize(component));
        }
    }
    return SeriesMatrix(k, std::move(entries));
}

}  // namespace opcalc
