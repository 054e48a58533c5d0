#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crdiam/ffield.hpp"
#include "crdiam/polynomial.hpp"

namespace crdiam {

/// Coordinates on the staircase basis of R; length dim_k R.
using RingElement = std::vector<Elem>;

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Reduction of g by the list `by`, always dividing by the first element whose
/// leading monomial fits.
DivisionResult divide(const Polynomial& g, const std::vector<Polynomial>& by);

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// R = k[x1..xn]/(f1..fc), Artinian complete intersection with homogeneous generators.
class QuotientRing {
 public:
  /// Throws RingRejected.
  static RingPtr build(const Field& field, int nvars, std::vector<Polynomial> f);
  static RingPtr parse(const Field& field, int nvars, const std::vector<std::string>& f);

  const Field& field() const { return field_; }
  int nvars() const { return n_; }
  int codim() const { return static_cast<int>(f_.size()); }
  const std::vector<Polynomial>& generators() const { return f_; }
  const std::vector<Polynomial>& groebner() const { return gb_; }
  /// cofactors()[i][j] is u_j with groebner()[i] = sum_j u_j f_j.
  const std::vector<std::vector<Polynomial>>& cofactors() const { return cof_; }
  const std::vector<Monomial>& staircase() const { return stair_; }
  std::size_t dim() const { return stair_.size(); }
  int basis_degree(std::size_t k) const { return stair_deg_[k]; }

  RingElement normal_form(const Polynomial& g) const;
  /// h with g = sum_j h_j f_j exactly. Throws NotInIdeal.
  std::vector<Polynomial> express_in_ideal(const Polynomial& g) const;
  /// Canonical lift: the staircase-supported polynomial.
  Polynomial lift(const RingElement& a) const;
  RingElement parse_element(const std::string& text) const;
  std::string to_string(const RingElement& a) const;

  RingElement zero() const { return RingElement(dim(), 0); }
  RingElement one() const;
  RingElement scalar(Elem c) const;
  RingElement variable(int i) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement scale(const RingElement& a, Elem c) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  /// out += a*b, all arrays of length dim().
  void mul_acc(const Elem* a, const Elem* b, Elem* out) const;
  bool is_zero(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return a[0] != 0; }
  Elem constant_term(const RingElement& a) const { return a[0]; }
  /// Throws std::domain_error when a is not a unit.
  RingElement inverse(const RingElement& a) const;
  /// Matrix of b -> a*b on staircase coordinates.
  KMatrix left_multiplication(const Elem* a) const;

  /// The same ring with scalars extended to F_{p^e}.
  RingPtr extend(int e) const;

  /// Short text description, e.g. "F_2[x,y]/(x^2, y^2)".
  std::string description() const;

 private:
  QuotientRing() = default;

  Field field_;
  int n_ = 0;
  std::vector<Polynomial> f_;
  std::vector<Polynomial> gb_;
  std::vector<std::vector<Polynomial>> cof_;
  std::vector<Monomial> stair_;
  std::vector<int> stair_deg_;
  std::map<Monomial, std::size_t> stair_index_;
  // products of staircase monomials: mult_[i * D + j] = sparse normal form
  std::vector<std::vector<std::pair<std::size_t, Elem>>> mult_;
};

}  // namespace crdiam
