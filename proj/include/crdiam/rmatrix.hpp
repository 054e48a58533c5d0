#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crdiam/ffield.hpp"
#include "crdiam/polynomial.hpp"
#include "crdiam/quotient_ring.hpp"

namespace crdiam {

/// Dense matrix over R. Entry (i, j) occupies dim_k R consecutive field elements.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static RMatrix identity(RingPtr ring, std::size_t n);
  /// Row-major entries given as polynomial text.
  static RMatrix parse(RingPtr ring, std::size_t rows, std::size_t cols, const std::vector<std::string>& entries);
  static RMatrix from_polynomials(RingPtr ring, std::size_t rows, std::size_t cols,
                                  const std::vector<Polynomial>& entries);
  /// Scalar matrix viewed over R.
  static RMatrix from_constants(RingPtr ring, const KMatrix& m);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Elem* entry(std::size_t i, std::size_t j) const { return data_.data() + (i * cols_ + j) * d_; }
  Elem* entry(std::size_t i, std::size_t j) { return data_.data() + (i * cols_ + j) * d_; }
  RingElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const RingElement& a);

  bool is_zero() const;
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool has_unit_entry() const;

  RMatrix transpose() const;
  RMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RMatrix& b);
  RMatrix without_row(std::size_t r) const;
  RMatrix without_col(std::size_t c) const;
  static RMatrix hstack(const RMatrix& a, const RMatrix& b);
  static RMatrix vstack(const RMatrix& a, const RMatrix& b);
  static RMatrix block_diag(const RMatrix& a, const RMatrix& b);

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator-(const RMatrix& a, const RMatrix& b);
  RMatrix operator-() const;
  RMatrix scaled(Elem c) const;
  RMatrix scaled(const RingElement& a) const;

  /// Reduction modulo the maximal ideal.
  KMatrix constant_part() const;
  /// The k-linear map R^cols -> R^rows on (entry, staircase) coordinates.
  KMatrix flatten() const;
  /// Same entries over another ring sharing the staircase (a scalar extension).
  RMatrix over(RingPtr ring) const;

  /// Column j as a coordinate vector of length rows * dim_k R.
  std::vector<Elem> column_coords(std::size_t j) const;
  static RMatrix from_column_coords(RingPtr ring, std::size_t rows, const std::vector<std::vector<Elem>>& cols);

  std::vector<Polynomial> lifts() const;
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  bool operator==(const RMatrix& o) const;
  bool operator!=(const RMatrix& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0, d_ = 0;
  std::vector<Elem> data_;
};

/// Some X with a * X = b.
std::optional<RMatrix> solve_left(const RMatrix& a, const RMatrix& b);
/// Some X with X * a = b.
std::optional<RMatrix> solve_right(const RMatrix& a, const RMatrix& b);
/// Inverse of a square matrix whose constant part is invertible.
std::optional<RMatrix> inverse(const RMatrix& m);

/// A k-basis of {v in R^cols : a v = 0}, as coordinate vectors.
std::vector<std::vector<Elem>> kernel_coords(const RMatrix& a);
/// Minimal generators (as columns) of the submodule of R^rows spanned over k by the given
/// coordinate vectors, which must be closed under multiplication by R.
RMatrix minimal_generators(const RingPtr& ring, std::size_t rows, const std::vector<std::vector<Elem>>& span);
/// dim_k of the image of a.
std::size_t image_dim(const RMatrix& a);

/// Linear system in unknown matrices X_u over R with equations
/// sum over terms of L * X_u * Rm = rhs; absent L or Rm stands for an identity.
class RLinearSystem {
 public:
  explicit RLinearSystem(RingPtr ring) : ring_(std::move(ring)) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols);
  struct Term {
    std::size_t unknown;
    std::optional<RMatrix> left;
    std::optional<RMatrix> right;
  };
  void add_equation(std::vector<Term> terms, const RMatrix& rhs);

  /// A particular solution, or nothing.
  std::optional<std::vector<RMatrix>> solve() const;
  /// A k-basis of the homogeneous solution space.
  std::vector<std::vector<RMatrix>> nullspace() const;

 private:
  KMatrix coefficient_matrix() const;
  KMatrix rhs_vector() const;
  std::vector<RMatrix> unpack(const std::vector<Elem>& x) const;

  RingPtr ring_;
  struct Shape {
    std::size_t rows, cols, offset;
  };
  std::vector<Shape> unknowns_;
  std::size_t n_unknowns_ = 0;
  struct Equation {
    std::vector<Term> terms;
    RMatrix rhs;
    std::size_t offset;
  };
  std::vector<Equation> equations_;
  std::size_t n_rows_ = 0;
};

}  // namespace crdiam
