#include <charconv>

#include "crdiam/critical.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

std::string ExtInt::to_string() const {
  switch (kind) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    default:
      return std::to_string(value);
  }
}

ExtInt ExtInt::parse(const std::string& s) {
  if (s == "-inf") return neg_inf();
  if (s == "+inf") return pos_inf();
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("not an extended integer: " + s);
  return finite(v);
}

ExtInt ExtInt::operator-() const {
  if (kind == Kind::NegInf) return pos_inf();
  if (kind == Kind::PosInf) return neg_inf();
  return finite(-value);
}

ExtInt ExtInt::operator+(int n) const { return is_finite() ? finite(value + n) : *this; }

bool ExtInt::operator<(const ExtInt& o) const {
  auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; };
  if (kind != o.kind) return rank(kind) < rank(o.kind);
  return is_finite() && value < o.value;
}

ExtInt difference(const ExtInt& a, const ExtInt& b) {
  if (a.kind == ExtInt::Kind::NegInf || b.kind == ExtInt::Kind::PosInf) return ExtInt::neg_inf();
  if (a.kind == ExtInt::Kind::PosInf || b.kind == ExtInt::Kind::NegInf) return ExtInt::pos_inf();
  return ExtInt::finite(a.value - b.value);
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ExactInWindow:
      return "exact-in-window";
    case VerdictStatus::Stabilized:
      return "stabilized";
    default:
      return "inconclusive";
  }
}

VerdictStatus parse_status(const std::string& s) {
  if (s == "exact-in-window") return VerdictStatus::ExactInWindow;
  if (s == "stabilized") return VerdictStatus::Stabilized;
  if (s == "inconclusive") return VerdictStatus::Inconclusive;
  throw ParseError("unknown verdict status: " + s);
}

VerdictStatus weaker(VerdictStatus a, VerdictStatus b) {
  if (a == VerdictStatus::Inconclusive || b == VerdictStatus::Inconclusive) return VerdictStatus::Inconclusive;
  if (a == VerdictStatus::Stabilized || b == VerdictStatus::Stabilized) return VerdictStatus::Stabilized;
  return VerdictStatus::ExactInWindow;
}

std::string to_string(DegreeKind k) {
  switch (k) {
    case DegreeKind::Crdeg:
      return "crdeg";
    case DegreeKind::Cocrdeg:
      return "cocrdeg";
    default:
      return "diameter";
  }
}

std::string to_string(Method m) {
  switch (m) {
    case Method::MatrixLevel:
      return "matrix-level";
    case Method::Cohomological:
      return "cohomological";
    default:
      return "both-agree";
  }
}

DegreeKind parse_kind(const std::string& s) {
  if (s == "crdeg") return DegreeKind::Crdeg;
  if (s == "cocrdeg") return DegreeKind::Cocrdeg;
  if (s == "diameter") return DegreeKind::Diameter;
  throw ParseError("unknown degree kind: " + s);
}

Method parse_method(const std::string& s) {
  if (s == "matrix-level") return Method::MatrixLevel;
  if (s == "cohomological") return Method::Cohomological;
  if (s == "both-agree") return Method::BothAgree;
  throw ParseError("unknown method: " + s);
}

bool SuiteReport::all_passed() const {
  for (const auto& l : laws)
    if (!l.passed) return false;
  return true;
}

}  // namespace crdiam
