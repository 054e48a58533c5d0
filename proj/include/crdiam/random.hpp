#pragma once

#include <cstdint>
#include <random>

#include "crdiam/rmatrix.hpp"

namespace crdiam {

using Rng = std::mt19937_64;

/// Uniform element of R.
RingElement random_element(const QuotientRing& R, Rng& rng);
/// Random element of the maximal ideal; zero with probability zero_percent/100.
RingElement random_in_maximal_ideal(const QuotientRing& R, Rng& rng, int zero_percent = 0);
/// Random invertible n x n matrix over R.
RMatrix random_invertible(const RingPtr& R, std::size_t n, Rng& rng);
/// rows x cols matrix with entries in the maximal ideal.
RMatrix random_maximal_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, Rng& rng, int zero_percent);

}  // namespace crdiam
