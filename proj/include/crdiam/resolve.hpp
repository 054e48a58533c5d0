#pragma once

#include <optional>
#include <vector>

#include "crdiam/complexes.hpp"

namespace crdiam {

/// M = coker(relations), relations a b x a matrix over R.
struct ModulePresentation {
  RingPtr ring;
  RMatrix relations;

  std::size_t generators() const { return relations.rows(); }
  /// No relation entry is a unit.
  bool is_minimal() const { return !relations.has_unit_entry(); }
};

/// coker of an arbitrary matrix.
ModulePresentation present(const RMatrix& relations);
/// R^rank, no relations.
ModulePresentation free_module(const RingPtr& ring, std::size_t rank);
/// k = R / m.
ModulePresentation residue_field(const RingPtr& ring);
std::size_t module_dim(const ModulePresentation& m);
/// Same module on a minimal set of generators.
ModulePresentation minimal_presentation(const ModulePresentation& m);

/// F_0 <- F_1 <- ... <- F_length with coker diff(1) = M, every entry in m.
FreeComplex minimal_free_resolution(const ModulePresentation& m, int length);

/// Generators of M* = Hom(M, R) as columns of a b x g matrix whose columns span ker relations^T.
struct DualModule {
  ModulePresentation module;
  RMatrix embedding;
};
DualModule dual_module_with_embedding(const ModulePresentation& m);
ModulePresentation dual_module(const ModulePresentation& m);

struct CompleteResolutionBundle {
  FreeComplex complex;
  ModulePresentation module;
  /// The complex agrees with the minimal free resolution of M in degrees >= this.
  int comparison_degree = 0;
  /// Rank of the contractible part removed when M has free summands.
  std::size_t stripped_rank = 0;
};

/// Splices the resolution of M with the dual resolution of M* on [lo, hi].
/// Needs lo <= -3 and hi >= 3 (TooNarrow); throws SpliceFailure when the result is not
/// totally acyclic with image of diff(0) of the right size.
CompleteResolutionBundle complete_resolution(const ModulePresentation& m, int lo, int hi);

/// Presentation of Im diff(n), namely coker diff(n+1); n in [lo, hi-1], else OutOfWindow.
ModulePresentation syzygy(const CompleteResolutionBundle& b, int n);
std::vector<std::size_t> betti(const CompleteResolutionBundle& b);

struct ComplexityEstimate {
  int value = 0;
  bool ambiguous = false;
  bool operator==(const ComplexityEstimate&) const = default;
};
/// Polynomial growth of the tail of the rank sequence, even and odd degrees separately.
ComplexityEstimate estimate_complexity(const std::vector<std::size_t>& ranks, int codim);
ComplexityEstimate estimate_complexity(const CompleteResolutionBundle& b);

}  // namespace crdiam
