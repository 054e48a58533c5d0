#pragma once

#include <string>
#include <vector>

#include "crdiam/ffield.hpp"

namespace crdiam {

using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);
/// Degree-reverse-lexicographic comparison: negative, zero or positive as a <, =, > b.
int compare_drl(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// b / a, assuming a divides b.
Monomial monomial_quotient(const Monomial& b, const Monomial& a);

/// Names used by the text grammar: x, y, z when n <= 3, otherwise x1..xn.
std::string variable_name(int i, int nvars);
std::string monomial_to_string(const Monomial& m);

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Elem coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(Field f, int nvars) : field_(std::move(f)), n_(nvars) {}

  static Polynomial constant(const Field& f, int nvars, Elem c);
  static Polynomial monomial(const Field& f, Monomial m, Elem c = 1);
  static Polynomial variable(const Field& f, int nvars, int i);
  /// Throws ParseError.
  static Polynomial parse(const std::string& text, const Field& f, int nvars);

  const Field& field() const { return field_; }
  int nvars() const { return n_; }
  /// Sorted strictly descending in degrevlex; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Elem coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial scaled(Elem c) const;
  Polynomial times_term(const Monomial& m, Elem c) const;
  /// Same coefficients viewed over another field of the same characteristic.
  Polynomial over(const Field& f) const;

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Field field_;
  int n_ = 0;
  std::vector<Term> terms_;
};

std::string element_to_string(const Field& f, Elem c);

}  // namespace crdiam
