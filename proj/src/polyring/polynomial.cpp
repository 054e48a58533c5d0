#include "crdiam/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "crdiam/errors.hpp"

namespace crdiam {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

int compare_drl(const Monomial& a, const Monomial& b) {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

std::string variable_name(int i, int nvars) {
  if (nvars <= 3) return std::string(1, static_cast<char>('x' + i));
  return "x" + std::to_string(i + 1);
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(i, n);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string monomial_to_string(const Monomial& m) {
  std::string s = monomial_text(m);
  return s.empty() ? "1" : s;
}

std::string element_to_string(const Field& f, Elem c) {
  if (f.in_prime_subfield(c)) return std::to_string(c);
  return "{" + std::to_string(c) + "}";
}

Polynomial Polynomial::constant(const Field& f, int nvars, Elem c) {
  Polynomial p(f, nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(const Field& f, Monomial m, Elem c) {
  Polynomial p(f, static_cast<int>(m.size()));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::variable(const Field& f, int nvars, int i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(f, std::move(m), 1);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = monomial_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (monomial_degree(t.mono) != d) return false;
  return true;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return compare_drl(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials over different rings");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check_compatible(a, b);
  const Field& f = a.field_;
  Polynomial r(f, a.n_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == a.terms_.size()) cmp = -1;
    else if (j == b.terms_.size()) cmp = 1;
    else cmp = compare_drl(a.terms_[i].mono, b.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Elem c = f.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (c != 0) r.terms_.push_back({a.terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  check_compatible(a, b);
  const Field& f = a.field_;
  Polynomial r(f, a.n_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back({monomial_mul(s.mono, t.mono), f.mul(s.coeff, t.coeff)});
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(Elem c) const {
  if (c == 0) return Polynomial(field_, n_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Elem c) const {
  if (c == 0) return Polynomial(field_, n_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.mono = monomial_mul(t.mono, m);
    t.coeff = field_.mul(t.coeff, c);
  }
  return r;
}

Polynomial Polynomial::over(const Field& f) const {
  if (f.characteristic() != field_.characteristic())
    throw std::invalid_argument("change of field across characteristics");
  if (f == field_) return *this;
  Polynomial r(f, n_);
  r.terms_ = terms_;
  for (const auto& t : r.terms_)
    if (!field_.in_prime_subfield(t.coeff)) throw std::invalid_argument("coefficient outside the prime field");
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string m = monomial_text(t.mono);
    if (m.empty()) {
      s += element_to_string(field_, t.coeff);
    } else if (t.coeff == 1) {
      s += m;
    } else {
      s += element_to_string(field_, t.coeff) + "*" + m;
    }
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Field& f, int n) : s_(text), f_(f), n_(n) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Polynomial expr() {
    Polynomial acc(f_, n_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      long long k = integer();
      if (k > 1000) fail("exponent too large");
      Polynomial r = Polynomial::constant(f_, n_, 1);
      for (long long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '{') {
      ++pos_;
      long long v = integer();
      if (!eat('}')) fail("expected '}'");
      if (v < 0 || v >= static_cast<long long>(f_.order())) fail("field element out of range");
      return Polynomial::constant(f_, n_, static_cast<Elem>(v));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(f_, n_, f_.from_int(integer()));
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      int idx;
      if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        long long k = integer();
        if (k < 1 || k > n_) fail("variable index out of range");
        idx = static_cast<int>(k - 1);
      } else {
        if (n_ > 3) fail("letter aliases need at most 3 variables");
        idx = c - 'x';
        if (idx >= n_) fail("variable out of range");
      }
      return Polynomial::variable(f_, n_, idx);
    }
    fail("unexpected character");
  }

  std::string s_;
  const Field& f_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const Field& f, int nvars) {
  if (nvars < 1) throw ParseError("polynomial ring needs at least one variable");
  return Parser(text, f, nvars).run();
}

}  // namespace crdiam
