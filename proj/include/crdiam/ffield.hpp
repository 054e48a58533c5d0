#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crdiam {

/// Field elements are small integers. Over F_p this is the residue itself;
/// over F_{p^e} it is the base-p encoding of the coefficient vector
/// (lowest coefficient = lowest digit) modulo the field's irreducible polynomial.
using Elem = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  int e = 1;
  bool operator==(const FieldSpec&) const = default;
};

class Field {
 public:
  /// F_2.
  Field();
  explicit Field(FieldSpec spec);
  Field(std::uint32_t p, int e = 1) : Field(FieldSpec{p, e}) {}

  FieldSpec spec() const { return {p_, e_}; }
  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients (low to high, monic) of the defining polynomial. {0, 1} for e = 1.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return mul_slow(a, b);
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;
  bool in_prime_subfield(Elem a) const { return a < p_; }
  /// Inverse of from_int on the prime subfield.
  long long to_int(Elem a) const { return static_cast<long long>(a); }
  bool is_valid(Elem a) const { return a < q_; }

  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Tables;
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 2;
  int e_ = 1;
  std::uint32_t q_ = 2;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint32_t n);

class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  KMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  static KMatrix identity(const Field& f, std::size_t n);
  /// Row-major integer entries, reduced into the prime subfield.
  static KMatrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                           const std::vector<long long>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Elem>& data() const { return data_; }
  Elem* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  KMatrix transpose() const;
  std::vector<Elem> column(std::size_t j) const;
  bool is_zero() const;
  /// Column vectors glued side by side.
  static KMatrix from_columns(const Field& f, std::size_t rows,
                              const std::vector<std::vector<Elem>>& cols);
  static KMatrix hstack(const KMatrix& a, const KMatrix& b);
  static KMatrix vstack(const KMatrix& a, const KMatrix& b);

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b);
  KMatrix scaled(Elem s) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;

  bool operator==(const KMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  KMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan; pivot is the first nonzero entry scanning columns left to right.
Echelon rref(KMatrix m);
std::size_t rank(const KMatrix& m);
std::vector<std::vector<Elem>> kernel_basis(const KMatrix& m);
/// Some x with a*x = b, or nothing.
std::optional<KMatrix> solve(const KMatrix& a, const KMatrix& b);
/// Two-sided inverse of a square matrix, or nothing when singular.
std::optional<KMatrix> inverse(const KMatrix& m);

/// Incrementally grown subspace of F^n kept in reduced echelon form.
class SubspaceBasis {
 public:
  SubspaceBasis(Field f, std::size_t ambient) : field_(std::move(f)), n_(ambient) {}

  /// Reduces v against the basis. Returns the residue.
  std::vector<Elem> reduce(std::vector<Elem> v) const;
  bool contains(const std::vector<Elem>& v) const;
  /// Adds v if independent. Returns whether it was added.
  bool add(const std::vector<Elem>& v);
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }

 private:
  Field field_;
  std::size_t n_;
  std::vector<std::vector<Elem>> rows_;  // each row normalised so its pivot is 1
  std::vector<std::size_t> pivots_;
};

}  // namespace crdiam
