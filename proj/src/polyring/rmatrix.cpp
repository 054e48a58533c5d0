#include "crdiam/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "crdiam/errors.hpp"

namespace crdiam {

RMatrix::RMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), d_(ring_->dim()), data_(rows * cols * d_, 0) {}

RMatrix RMatrix::identity(RingPtr ring, std::size_t n) {
  RMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

RMatrix RMatrix::parse(RingPtr ring, std::size_t rows, std::size_t cols, const std::vector<std::string>& entries) {
  if (entries.size() != rows * cols) throw ParseError("matrix entry count does not match its shape");
  RMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, ring->parse_element(entries[i * cols + j]));
  return m;
}

RMatrix RMatrix::from_polynomials(RingPtr ring, std::size_t rows, std::size_t cols,
                                  const std::vector<Polynomial>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match its shape");
  RMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, ring->normal_form(entries[i * cols + j]));
  return m;
}

RMatrix RMatrix::from_constants(RingPtr ring, const KMatrix& k) {
  RMatrix m(std::move(ring), k.rows(), k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) m.entry(i, j)[0] = k(i, j);
  return m;
}

RingElement RMatrix::at(std::size_t i, std::size_t j) const {
  const Elem* e = entry(i, j);
  return RingElement(e, e + d_);
}

void RMatrix::set(std::size_t i, std::size_t j, const RingElement& a) {
  if (a.size() != d_) throw std::invalid_argument("ring element of the wrong length");
  std::copy(a.begin(), a.end(), entry(i, j));
}

bool RMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool RMatrix::entry_is_zero(std::size_t i, std::size_t j) const {
  const Elem* e = entry(i, j);
  return std::all_of(e, e + d_, [](Elem x) { return x == 0; });
}

bool RMatrix::has_unit_entry() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (entry(i, j)[0] != 0) return true;
  return false;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) std::copy(entry(i, j), entry(i, j) + d_, t.entry(j, i));
  return t;
}

RMatrix RMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RMatrix block");
  RMatrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) std::copy(entry(r0 + i, c0 + j), entry(r0 + i, c0 + j) + d_, b.entry(i, j));
  return b;
}

void RMatrix::set_block(std::size_t r0, std::size_t c0, const RMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("RMatrix set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) std::copy(b.entry(i, j), b.entry(i, j) + d_, entry(r0 + i, c0 + j));
}

RMatrix RMatrix::without_row(std::size_t r) const {
  RMatrix m(ring_, rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::copy(entry(i, j), entry(i, j) + d_, m.entry(k, j));
    ++k;
  }
  return m;
}

RMatrix RMatrix::without_col(std::size_t c) const {
  RMatrix m(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j == c) continue;
      std::copy(entry(i, j), entry(i, j) + d_, m.entry(i, k));
      ++k;
    }
  return m;
}

RMatrix RMatrix::hstack(const RMatrix& a, const RMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  RMatrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

RMatrix RMatrix::vstack(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  RMatrix m(a.ring_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

RMatrix RMatrix::block_diag(const RMatrix& a, const RMatrix& b) {
  RMatrix m(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RMatrix product: shape mismatch");
  RMatrix r(a.ring_, a.rows_, b.cols_);
  const QuotientRing& R = *a.ring_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.entry_is_zero(i, k)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.entry_is_zero(k, j)) continue;
        R.mul_acc(a.entry(i, k), b.entry(k, j), r.entry(i, j));
      }
    }
  return r;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RMatrix sum: shape mismatch");
  RMatrix r = a;
  const Field& f = a.ring_->field();
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f.add(a.data_[i], b.data_[i]);
  return r;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RMatrix difference: shape mismatch");
  RMatrix r = a;
  const Field& f = a.ring_->field();
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f.sub(a.data_[i], b.data_[i]);
  return r;
}

RMatrix RMatrix::operator-() const {
  RMatrix r = *this;
  const Field& f = ring_->field();
  for (Elem& x : r.data_) x = f.neg(x);
  return r;
}

RMatrix RMatrix::scaled(Elem c) const {
  RMatrix r = *this;
  const Field& f = ring_->field();
  for (Elem& x : r.data_) x = f.mul(x, c);
  return r;
}

RMatrix RMatrix::scaled(const RingElement& a) const {
  RMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) ring_->mul_acc(a.data(), entry(i, j), r.entry(i, j));
  return r;
}

KMatrix RMatrix::constant_part() const {
  KMatrix k(ring_->field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) k(i, j) = entry(i, j)[0];
  return k;
}

KMatrix RMatrix::flatten() const {
  KMatrix f(ring_->field(), rows_ * d_, cols_ * d_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (entry_is_zero(i, j)) continue;
      KMatrix l = ring_->left_multiplication(entry(i, j));
      for (std::size_t a = 0; a < d_; ++a)
        for (std::size_t b = 0; b < d_; ++b) f(i * d_ + a, j * d_ + b) = l(a, b);
    }
  return f;
}

RMatrix RMatrix::over(RingPtr ring) const {
  if (ring->dim() != d_) throw std::invalid_argument("rings with different staircases");
  RMatrix m = *this;
  m.ring_ = std::move(ring);
  return m;
}

std::vector<Elem> RMatrix::column_coords(std::size_t j) const {
  std::vector<Elem> v(rows_ * d_);
  for (std::size_t i = 0; i < rows_; ++i) std::copy(entry(i, j), entry(i, j) + d_, v.begin() + i * d_);
  return v;
}

RMatrix RMatrix::from_column_coords(RingPtr ring, std::size_t rows, const std::vector<std::vector<Elem>>& cols) {
  RMatrix m(std::move(ring), rows, cols.size());
  const std::size_t d = m.d_;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows * d) throw std::invalid_argument("coordinate vector of the wrong length");
    for (std::size_t i = 0; i < rows; ++i) std::copy(cols[j].begin() + i * d, cols[j].begin() + (i + 1) * d, m.entry(i, j));
  }
  return m;
}

std::vector<Polynomial> RMatrix::lifts() const {
  std::vector<Polynomial> out;
  out.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(ring_->lift(at(i, j)));
  return out;
}

std::vector<std::string> RMatrix::to_strings() const {
  std::vector<std::string> out;
  for (const auto& p : lifts()) out.push_back(p.to_string());
  return out;
}

std::string RMatrix::to_string() const {
  std::string s = "[";
  auto e = to_strings();
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + e[i * cols_ + j];
  }
  return s + "]";
}

bool RMatrix::operator==(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (rows_ * cols_ == 0) return true;
  return ring_->field() == o.ring_->field() && d_ == o.d_ && data_ == o.data_;
}

// ---------------------------------------------------------------- solving

namespace {

KMatrix columns_as_coords(const RMatrix& b) {
  std::vector<std::vector<Elem>> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column_coords(j));
  return KMatrix::from_columns(b.ring()->field(), b.rows() * b.ring()->dim(), cols);
}

}  // namespace

std::optional<RMatrix> solve_left(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_left: row mismatch");
  auto x = solve(a.flatten(), columns_as_coords(b));
  if (!x) return std::nullopt;
  std::vector<std::vector<Elem>> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(x->column(j));
  return RMatrix::from_column_coords(a.ring(), a.cols(), cols);
}

std::optional<RMatrix> solve_right(const RMatrix& a, const RMatrix& b) {
  auto x = solve_left(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

std::optional<RMatrix> inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m.constant_part()) != m.rows()) return std::nullopt;
  return solve_left(m, RMatrix::identity(m.ring(), m.rows()));
}

std::vector<std::vector<Elem>> kernel_coords(const RMatrix& a) { return kernel_basis(a.flatten()); }

std::size_t image_dim(const RMatrix& a) { return rank(a.flatten()); }

RMatrix minimal_generators(const RingPtr& ring, std::size_t rows, const std::vector<std::vector<Elem>>& span) {
  const Field& f = ring->field();
  const std::size_t D = ring->dim();
  const std::size_t len = rows * D;
  std::vector<std::vector<Elem>> echelon;
  if (!span.empty()) {
    KMatrix m(f, span.size(), len);
    for (std::size_t r = 0; r < span.size(); ++r) std::copy(span[r].begin(), span[r].end(), m.row_ptr(r));
    Echelon e = rref(std::move(m));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      echelon.emplace_back(e.reduced.row_ptr(r), e.reduced.row_ptr(r) + len);
  }
  SubspaceBasis mk(f, len);
  std::vector<RingElement> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  for (const auto& v : echelon) {
    for (const auto& x : vars) {
      std::vector<Elem> w(len, 0);
      for (std::size_t i = 0; i < rows; ++i) ring->mul_acc(x.data(), v.data() + i * D, w.data() + i * D);
      mk.add(w);
    }
  }
  std::vector<std::vector<Elem>> gens;
  for (const auto& v : echelon)
    if (mk.add(v)) gens.push_back(v);
  return RMatrix::from_column_coords(ring, rows, gens);
}

// ---------------------------------------------------------------- RLinearSystem

std::size_t RLinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  unknowns_.push_back({rows, cols, n_unknowns_});
  n_unknowns_ += rows * cols * ring_->dim();
  return unknowns_.size() - 1;
}

void RLinearSystem::add_equation(std::vector<Term> terms, const RMatrix& rhs) {
  for (const auto& t : terms) {
    const Shape& s = unknowns_.at(t.unknown);
    const std::size_t lr = t.left ? t.left->rows() : s.rows;
    const std::size_t lc = t.left ? t.left->cols() : s.rows;
    const std::size_t rr = t.right ? t.right->rows() : s.cols;
    const std::size_t rc = t.right ? t.right->cols() : s.cols;
    if (lc != s.rows || rr != s.cols || lr != rhs.rows() || rc != rhs.cols())
      throw std::invalid_argument("RLinearSystem: term shape mismatch");
  }
  equations_.push_back({std::move(terms), rhs, n_rows_});
  n_rows_ += rhs.rows() * rhs.cols() * ring_->dim();
}

KMatrix RLinearSystem::coefficient_matrix() const {
  const QuotientRing& R = *ring_;
  const Field& f = R.field();
  const std::size_t D = R.dim();
  KMatrix A(f, n_rows_, n_unknowns_);
  const RingElement one = R.one();
  for (const auto& eq : equations_) {
    const std::size_t er = eq.rhs.rows(), ec = eq.rhs.cols();
    for (const auto& t : eq.terms) {
      const Shape& s = unknowns_[t.unknown];
      for (std::size_t i = 0; i < er; ++i)
        for (std::size_t a = 0; a < s.rows; ++a) {
          const Elem* la;
          if (t.left) {
            if (t.left->entry_is_zero(i, a)) continue;
            la = t.left->entry(i, a);
          } else {
            if (i != a) continue;
            la = one.data();
          }
          for (std::size_t j = 0; j < ec; ++j)
            for (std::size_t b = 0; b < s.cols; ++b) {
              const Elem* rb;
              if (t.right) {
                if (t.right->entry_is_zero(b, j)) continue;
                rb = t.right->entry(b, j);
              } else {
                if (b != j) continue;
                rb = one.data();
              }
              RingElement p = R.zero();
              R.mul_acc(la, rb, p.data());
              if (R.is_zero(p)) continue;
              KMatrix l = R.left_multiplication(p.data());
              const std::size_t row0 = eq.offset + (i * ec + j) * D;
              const std::size_t col0 = s.offset + (a * s.cols + b) * D;
              for (std::size_t u = 0; u < D; ++u)
                for (std::size_t v = 0; v < D; ++v)
                  if (l(u, v)) A(row0 + u, col0 + v) = f.add(A(row0 + u, col0 + v), l(u, v));
            }
        }
    }
  }
  return A;
}

KMatrix RLinearSystem::rhs_vector() const {
  const std::size_t D = ring_->dim();
  KMatrix b(ring_->field(), n_rows_, 1);
  for (const auto& eq : equations_)
    for (std::size_t i = 0; i < eq.rhs.rows(); ++i)
      for (std::size_t j = 0; j < eq.rhs.cols(); ++j) {
        const Elem* e = eq.rhs.entry(i, j);
        for (std::size_t u = 0; u < D; ++u) b(eq.offset + (i * eq.rhs.cols() + j) * D + u, 0) = e[u];
      }
  return b;
}

std::vector<RMatrix> RLinearSystem::unpack(const std::vector<Elem>& x) const {
  const std::size_t D = ring_->dim();
  std::vector<RMatrix> out;
  for (const auto& s : unknowns_) {
    RMatrix m(ring_, s.rows, s.cols);
    for (std::size_t a = 0; a < s.rows; ++a)
      for (std::size_t b = 0; b < s.cols; ++b)
        std::copy(x.begin() + s.offset + (a * s.cols + b) * D, x.begin() + s.offset + (a * s.cols + b + 1) * D,
                  m.entry(a, b));
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::vector<RMatrix>> RLinearSystem::solve() const {
  auto x = crdiam::solve(coefficient_matrix(), rhs_vector());
  if (!x) return std::nullopt;
  return unpack(x->column(0));
}

std::vector<std::vector<RMatrix>> RLinearSystem::nullspace() const {
  std::vector<std::vector<RMatrix>> out;
  for (const auto& v : kernel_basis(coefficient_matrix())) out.push_back(unpack(v));
  return out;
}

}  // namespace crdiam
