#include "crdiam/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crdiam {

struct Field::Tables {
  std::vector<std::uint32_t> modulus;  // low to high, monic
  std::vector<Elem> exp;               // length 2(q-1)
  std::vector<std::uint32_t> log;      // log[0] unused
  std::vector<Elem> inv;
};

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t sub = (std::uint64_t{lead} * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly decode(Elem a, std::uint32_t p, int e) {
  Poly r(e, 0);
  for (int i = 0; i < e; ++i) {
    r[i] = a % p;
    a /= p;
  }
  trim(r);
  return r;
}

Elem encode(const Poly& a, std::uint32_t p) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
  return r;
}

// No monic factor of degree 1..deg/2.
bool irreducible(const Poly& f, std::uint32_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, int e) {
  std::uint64_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[e] = 1;
    if (f[0] == 0) continue;
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field::Field() : Field(FieldSpec{2, 1}) {}

Field::Field(FieldSpec spec) : p_(spec.p), e_(spec.e) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (e_ < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (int i = 0; i < e_; ++i) {
    q *= p_;
    if (q > (1u << 16)) throw std::invalid_argument("field order above 65536 is not supported");
  }
  q_ = static_cast<std::uint32_t>(q);

  auto t = std::make_shared<Tables>();
  t->modulus = e_ == 1 ? Poly{0, 1} : smallest_irreducible(p_, e_);
  t->inv.assign(q_, 0);
  if (e_ == 1) {
    for (Elem a = 1; a < q_; ++a) {
      // Fermat: a^{p-2}
      std::uint64_t r = 1, b = a, k = p_ - 2;
      while (k) {
        if (k & 1) r = r * b % p_;
        b = b * b % p_;
        k >>= 1;
      }
      t->inv[a] = static_cast<Elem>(r);
    }
  } else {
    // Find a primitive element, then tabulate powers.
    const std::uint32_t order = q_ - 1;
    for (Elem g = 2; g < q_; ++g) {
      Poly gp = decode(g, p_, e_);
      std::vector<Elem> pw;
      pw.reserve(order);
      Poly cur{1};
      bool ok = true;
      for (std::uint32_t k = 0; k < order; ++k) {
        Elem code = encode(cur, p_);
        if (k > 0 && code == 1) {
          ok = false;
          break;
        }
        pw.push_back(code);
        cur = poly_mulmod(cur, gp, t->modulus, p_);
      }
      if (!ok) continue;
      t->exp.assign(2 * order, 0);
      t->log.assign(q_, 0);
      for (std::uint32_t k = 0; k < order; ++k) {
        t->exp[k] = pw[k];
        t->exp[k + order] = pw[k];
        t->log[pw[k]] = k;
      }
      break;
    }
    if (t->exp.empty()) throw std::logic_error("no primitive element found");
    for (Elem a = 1; a < q_; ++a) t->inv[a] = t->exp[(order - t->log[a]) % order];
  }
  tables_ = std::move(t);
}

const std::vector<std::uint32_t>& Field::modulus() const { return tables_->modulus; }

Elem Field::add_slow(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < e_; ++i) {
    Elem d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::neg_slow(Elem a) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < e_; ++i) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return tables_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string Field::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (e_ > 1) os << "^" << e_;
  return os.str();
}

// ---------------------------------------------------------------- KMatrix

KMatrix::KMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("KMatrix: entry count mismatch");
  for (Elem x : data_)
    if (!field_.is_valid(x)) throw std::invalid_argument("KMatrix: entry out of range");
}

KMatrix KMatrix::identity(const Field& f, std::size_t n) {
  KMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

KMatrix KMatrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                           const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("KMatrix: entry count mismatch");
  KMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = f.from_int(entries[i]);
  return m;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Elem> KMatrix::column(std::size_t j) const {
  std::vector<Elem> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool KMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

KMatrix KMatrix::from_columns(const Field& f, std::size_t rows,
                              const std::vector<std::vector<Elem>>& cols) {
  KMatrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

KMatrix KMatrix::hstack(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  KMatrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols_, m.row_ptr(i));
    std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols_, m.row_ptr(i) + a.cols_);
  }
  return m;
}

KMatrix KMatrix::vstack(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  KMatrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
  return m;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("KMatrix product: shape mismatch");
  const Field& f = a.field_;
  KMatrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Elem* out = r.row_ptr(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Elem s = a(i, k);
      if (s == 0) continue;
      const Elem* in = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (in[j]) out[j] = f.add(out[j], f.mul(s, in[j]));
    }
  }
  return r;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("KMatrix sum: shape mismatch");
  KMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return r;
}

KMatrix operator-(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("KMatrix difference: shape mismatch");
  KMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return r;
}

KMatrix KMatrix::scaled(Elem s) const {
  KMatrix r = *this;
  for (Elem& x : r.data_) x = field_.mul(x, s);
  return r;
}

std::vector<Elem> KMatrix::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("KMatrix apply: length mismatch");
  std::vector<Elem> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem s = 0;
    const Elem* row = row_ptr(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] && v[j]) s = field_.add(s, field_.mul(row[j], v[j]));
    r[i] = s;
  }
  return r;
}

std::string KMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- elimination

Echelon rref(KMatrix m) {
  const Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(m.row_ptr(piv), m.row_ptr(piv) + cols, m.row_ptr(r));
    Elem* prow = m.row_ptr(r);
    const Elem iv = f.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = m.row_ptr(i);
      const Elem s = row[c];
      if (s == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = f.sub(row[j], f.mul(s, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const KMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

std::vector<std::vector<Elem>> kernel_basis(const KMatrix& m) {
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<KMatrix> solve(const KMatrix& a, const KMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Field& f = a.field();
  const std::size_t n = a.cols(), k = b.cols();
  KMatrix x(f, n, k);
  if (k == 0) return x;
  if (a.rows() == 0) return x;
  Echelon e = rref(KMatrix::hstack(a, b));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t c = e.pivots[r];
    if (c >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t j = 0; j < k; ++j) x(c, j) = e.reduced(r, n + j);
  }
  return x;
}

std::optional<KMatrix> inverse(const KMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (rank(m) != n) return std::nullopt;
  return solve(m, KMatrix::identity(m.field(), n));
}

// ---------------------------------------------------------------- SubspaceBasis

std::vector<Elem> SubspaceBasis::reduce(std::vector<Elem> v) const {
  if (v.size() != n_) throw std::invalid_argument("SubspaceBasis: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem s = v[pivots_[i]];
    if (s == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(s, row[j]));
  }
  return v;
}

bool SubspaceBasis::contains(const std::vector<Elem>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool SubspaceBasis::add(const std::vector<Elem>& v) {
  auto r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Elem iv = field_.inv(r[piv]);
  for (std::size_t j = piv; j < n_; ++j) r[j] = field_.mul(r[j], iv);
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace crdiam
