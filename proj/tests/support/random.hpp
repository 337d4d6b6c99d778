#pragma once

#include <ckindex/ck_algebra.hpp>

#include <random>

namespace ckindex::testing {

using Rng = std::mt19937_64;

/// Random path of length <= max_len ending at `range`, built by walking
/// backwards along in-edges. Stops early at a source.
Path random_path_ending_at(const Graph& g, VertexId range, std::size_t max_len, Rng& rng);
Path random_path(const Graph& g, std::size_t max_len, Rng& rng);

GaussianRational random_coefficient(Rng& rng, bool gaussian = true);

/// Random combination of up to max_terms words with |mu|, |nu| <= max_len.
Element random_element(const GraphPtr& g, std::size_t max_terms, std::size_t max_len, Rng& rng,
                       bool gaussian = true);
/// Same, restricted to |mu| = |nu|.
Element random_core_element(const GraphPtr& g, std::size_t max_terms, std::size_t max_len, Rng& rng);

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, Rng& rng);

}  // namespace ckindex::testing
