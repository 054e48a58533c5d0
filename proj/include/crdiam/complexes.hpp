#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crdiam/rmatrix.hpp"

namespace crdiam {

/// Complex of free R-modules C_lo <- ... <- C_hi. diff(n): C_n -> C_{n-1}
/// is a rank(n-1) x rank(n) matrix, defined for lo < n <= hi.
/// Copies share the underlying data.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// diffs[k] is diff(lo + 1 + k). Throws InvariantBreach when shapes or d^2 = 0 fail.
  FreeComplex(RingPtr ring, int lo, int hi, std::vector<std::size_t> ranks, std::vector<RMatrix> diffs);
  static FreeComplex zero(RingPtr ring, int lo, int hi);

  const RingPtr& ring() const { return d_->ring; }
  int lo() const { return d_->lo; }
  int hi() const { return d_->hi; }
  bool contains(int n) const { return d_ && n >= d_->lo && n <= d_->hi; }
  /// Throws OutOfWindow.
  std::size_t rank(int n) const;
  const RMatrix& diff(int n) const;
  bool has_diff(int n) const { return d_ && n > d_->lo && n <= d_->hi; }
  const std::vector<std::size_t>& ranks() const { return d_->ranks; }
  std::size_t total_rank() const;
  /// No differential entry is a unit.
  bool is_minimal() const;
  FreeComplex restrict(int lo, int hi) const;

  bool operator==(const FreeComplex& o) const;
  bool operator!=(const FreeComplex& o) const { return !(*this == o); }

 private:
  struct Data {
    RingPtr ring;
    int lo = 0, hi = -1;
    std::vector<std::size_t> ranks;
    std::vector<RMatrix> diffs;
  };
  std::shared_ptr<const Data> d_;
};

/// (shift C)_n = C_{n-m} with differential (-1)^m diff(n-m).
FreeComplex shift(const FreeComplex& c, int m);
/// C*_n = (C_{-n})^*, differential diff(1-n)^T.
FreeComplex dualize(const FreeComplex& c);
/// Block-diagonal sum over the intersection of the two windows.
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
/// c with R --1--> R added in each listed degree n (one extra rank in C_n and C_{n-1}).
FreeComplex add_contractible(const FreeComplex& c, const std::vector<int>& degrees);
/// The same complex in new bases: diff'(n) = g_{n-1} diff(n) g_n^{-1}; g[k] acts on C_{lo+k}.
FreeComplex change_basis(const FreeComplex& c, const std::vector<RMatrix>& g);
/// Interior exactness of C and C*, by k-dimensions.
bool is_totally_acyclic(const FreeComplex& c);
/// Ranks row plus every differential.
std::string to_text(const FreeComplex& c);

/// mat(n): source_n -> target_{n+degree}, for first <= n <= last().
struct ChainMap {
  FreeComplex source, target;
  int degree = 0;
  int first = 0;
  std::vector<RMatrix> mats;

  int last() const { return first + static_cast<int>(mats.size()) - 1; }
  bool defined_at(int n) const { return n >= first && n <= last(); }
  /// Throws OutOfWindow.
  const RMatrix& at(int n) const;
};

ChainMap identity_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& source, const FreeComplex& target, int degree);
/// g o f wherever both are defined.
ChainMap compose(const ChainMap& g, const ChainMap& f);
/// sum_k coeffs[k] * maps[k]; the maps must share source, target, degree and range.
ChainMap linear_combination(const std::vector<ChainMap>& maps, const std::vector<Elem>& coeffs);
ChainMap operator-(const ChainMap& f, const ChainMap& g);
/// f*: target* -> source*, (f*)_m = (f_{-m-d})^T.
ChainMap dualize(const ChainMap& f);
/// Strict commutation diff o f = f o diff wherever every term is defined.
bool is_chain_map(const ChainMap& f);
/// f - g = diff h + h diff wherever every term is defined.
bool is_homotopy(const ChainMap& f, const ChainMap& g, const ChainMap& h);

/// Reduction of mat(n) mod m has full row rank. Throws OutOfWindow.
bool surjective_at(const ChainMap& f, int n);
/// Reduction of mat(n) mod m has full column rank. Throws OutOfWindow.
bool split_injective_at(const ChainMap& f, int n);

struct MinimalizeResult {
  FreeComplex complex;
  ChainMap projection;  // C -> minimal
  ChainMap inclusion;   // minimal -> C
  ChainMap homotopy;    // degree +1 on C with inclusion o projection - id = diff h + h diff
  std::size_t steps = 0;
};

MinimalizeResult minimalize(const FreeComplex& c);

/// Some h of degree d+1 with f - g = diff h + h diff on the window, or nothing.
std::optional<ChainMap> solve_homotopy(const ChainMap& f, const ChainMap& g);

}  // namespace crdiam
