#pragma once

#include <string>
#include <vector>

#include "crdiam/complexes.hpp"

namespace crdiam {

/// Coefficients a_1..a_c over the ring's field.
using LinearForm = std::vector<Elem>;

/// Matrix over the polynomial ring Q, row-major.
struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;
};

/// The c degree -2 operators t_j on a complex, defined on [lo+2, hi].
struct CIOperatorFamily {
  FreeComplex base;
  std::vector<ChainMap> ops;
  /// lifts[j][n - lo - 2] is the Q-matrix whose reduction is t_j(n).
  std::vector<std::vector<QMatrix>> lifts;

  int codim() const { return static_cast<int>(ops.size()); }
  int first() const { return base.lo() + 2; }
};

/// Lift the differential to Q, multiply consecutive maps, divide by f_1..f_c.
/// Throws DivisionFailure when a product entry is not in the ideal.
CIOperatorFamily eisenbud_operators(const FreeComplex& c);

/// sum_j a_j t_j. Rejects the zero form and forms of the wrong length.
ChainMap linear_form_operator(const CIOperatorFamily& fam, const LinearForm& a);

/// One representative per projective point of F^c, first nonzero coordinate 1, in lex order.
std::vector<LinearForm> enumerate_linear_forms(const Field& field, int codim);
std::string form_to_string(const Field& field, const LinearForm& a);

struct OperatorAudit {
  bool division = true;
  bool strict_commutation = true;
  bool homotopy_commutation = true;
  bool ok() const { return division && strict_commutation && homotopy_commutation; }
  bool operator==(const OperatorAudit&) const = default;
};
/// Re-checks the division identity in Q, strict chain-map identities, and t_i t_j ~ t_j t_i.
OperatorAudit audit(const CIOperatorFamily& fam, bool homotopy = true);
/// Lifted matrices per degree and operator, plus the ring's cofactor table.
std::string audit_dump(const CIOperatorFamily& fam);

}  // namespace crdiam
