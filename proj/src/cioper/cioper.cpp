#include "crdiam/cioper.hpp"

#include <sstream>

#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

QMatrix lift(const RMatrix& m) { return {m.rows(), m.cols(), m.lifts()}; }

QMatrix product(const QMatrix& a, const QMatrix& b, const Field& f, int nvars) {
  QMatrix out{a.rows, b.cols, std::vector<Polynomial>(a.rows * b.cols, Polynomial(f, nvars))};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const Polynomial& x = a.entries[i * a.cols + l];
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols; ++k) out.entries[i * b.cols + k] += x * b.entries[l * b.cols + k];
    }
  return out;
}

}  // namespace

CIOperatorFamily eisenbud_operators(const FreeComplex& c) {
  const RingPtr& R = c.ring();
  const int cd = R->codim();
  CIOperatorFamily fam{c, {}, std::vector<std::vector<QMatrix>>(cd)};
  std::vector<std::vector<RMatrix>> mats(cd);
  for (int n = c.lo() + 2; n <= c.hi(); ++n) {
    QMatrix sq = product(lift(c.diff(n - 1)), lift(c.diff(n)), R->field(), R->nvars());
    std::vector<QMatrix> parts(cd, QMatrix{sq.rows, sq.cols, {}});
    for (std::size_t e = 0; e < sq.entries.size(); ++e) {
      std::vector<Polynomial> q;
      try {
        q = R->express_in_ideal(sq.entries[e]);
      } catch (const NotInIdeal&) {
        throw DivisionFailure("square of the differential at degree " + std::to_string(n) +
                              " has an entry outside the ideal: " + sq.entries[e].to_string());
      }
      for (int j = 0; j < cd; ++j) parts[j].entries.push_back(q[j]);
    }
    for (int j = 0; j < cd; ++j) {
      mats[j].push_back(RMatrix::from_polynomials(R, sq.rows, sq.cols, parts[j].entries));
      fam.lifts[j].push_back(std::move(parts[j]));
    }
  }
  for (int j = 0; j < cd; ++j) fam.ops.push_back(ChainMap{c, c, -2, c.lo() + 2, std::move(mats[j])});
  return fam;
}

ChainMap linear_form_operator(const CIOperatorFamily& fam, const LinearForm& a) {
  if (static_cast<int>(a.size()) != fam.codim()) throw std::invalid_argument("linear form has the wrong length");
  bool nonzero = false;
  for (Elem x : a) nonzero |= x != 0;
  if (!nonzero) throw std::invalid_argument("zero linear form");
  return linear_combination(fam.ops, a);
}

std::vector<LinearForm> enumerate_linear_forms(const Field& field, int codim) {
  const Elem q = field.order();
  std::vector<LinearForm> out;
  // leading 1 in position lead; odometer over the coordinates after it
  for (int lead = codim - 1; lead >= 0; --lead) {
    LinearForm a(codim, 0);
    a[lead] = 1;
    while (true) {
      out.push_back(a);
      int k = codim - 1;
      while (k > lead && a[k] == q - 1) a[k--] = 0;
      if (k == lead) break;
      ++a[k];
    }
  }
  return out;
}

std::string form_to_string(const Field& field, const LinearForm& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += field.in_prime_subfield(a[i]) ? std::to_string(a[i]) : "{" + std::to_string(a[i]) + "}";
  }
  return s + ")";
}

OperatorAudit audit(const CIOperatorFamily& fam, bool homotopy) {
  OperatorAudit out;
  const FreeComplex& c = fam.base;
  const RingPtr& R = c.ring();
  const int cd = fam.codim();
  for (int n = fam.first(); n <= c.hi(); ++n) {
    QMatrix sq = product(lift(c.diff(n - 1)), lift(c.diff(n)), R->field(), R->nvars());
    for (std::size_t e = 0; e < sq.entries.size(); ++e) {
      Polynomial sum(R->field(), R->nvars());
      for (int j = 0; j < cd; ++j) sum += R->generators()[j] * fam.lifts[j][n - fam.first()].entries[e];
      if (sum != sq.entries[e]) out.division = false;
    }
  }
  for (const auto& t : fam.ops) out.strict_commutation &= is_chain_map(t);
  if (homotopy) {
    for (int i = 0; i < cd; ++i)
      for (int j = i + 1; j < cd; ++j) {
        ChainMap a = compose(fam.ops[i], fam.ops[j]);
        ChainMap b = compose(fam.ops[j], fam.ops[i]);
        if (a.mats.empty()) continue;
        auto h = solve_homotopy(a, b);
        if (!h) out.homotopy_commutation = false;
      }
  }
  return out;
}

std::string audit_dump(const CIOperatorFamily& fam) {
  const RingPtr& R = fam.base.ring();
  std::ostringstream os;
  os << "ring " << R->description() << "\n";
  const auto& gb = R->groebner();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    os << "groebner " << i << ": " << gb[i].to_string() << " =";
    for (std::size_t j = 0; j < R->cofactors()[i].size(); ++j)
      os << (j ? " + " : " ") << "(" << R->cofactors()[i][j].to_string() << ")*f" << j + 1;
    os << "\n";
  }
  for (int n = fam.first(); n <= fam.base.hi(); ++n) {
    for (int j = 0; j < fam.codim(); ++j) {
      const QMatrix& q = fam.lifts[j][n - fam.first()];
      os << "lift t" << j + 1 << "(" << n << ") " << q.rows << "x" << q.cols << " [";
      for (std::size_t e = 0; e < q.entries.size(); ++e) {
        if (e) os << (e % q.cols == 0 ? "; " : ", ");
        os << q.entries[e].to_string();
      }
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace crdiam
