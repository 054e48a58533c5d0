#include <numeric>
#include <sstream>

#include "crdiam/complexes.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

FreeComplex::FreeComplex(RingPtr ring, int lo, int hi, std::vector<std::size_t> ranks, std::vector<RMatrix> diffs) {
  if (hi < lo) throw std::invalid_argument("empty complex window");
  if (ranks.size() != static_cast<std::size_t>(hi - lo + 1) || diffs.size() != ranks.size() - 1)
    throw InvariantBreach("complex: window, ranks and differentials disagree");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].rows() != ranks[k] || diffs[k].cols() != ranks[k + 1])
      throw InvariantBreach("complex: differential " + std::to_string(lo + 1 + static_cast<int>(k)) +
                            " has the wrong shape");
    if (diffs[k].rows() * diffs[k].cols() > 0 && diffs[k].ring()->field() != ring->field())
      throw InvariantBreach("complex: differential over another ring");
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!(diffs[k] * diffs[k + 1]).is_zero())
      throw InvariantBreach("complex: consecutive differentials do not compose to zero at degree " +
                            std::to_string(lo + 1 + static_cast<int>(k)));
  d_ = std::make_shared<Data>(Data{std::move(ring), lo, hi, std::move(ranks), std::move(diffs)});
}

FreeComplex FreeComplex::zero(RingPtr ring, int lo, int hi) {
  std::vector<std::size_t> ranks(hi - lo + 1, 0);
  std::vector<RMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) diffs.emplace_back(ring, 0, 0);
  return FreeComplex(std::move(ring), lo, hi, std::move(ranks), std::move(diffs));
}

std::size_t FreeComplex::rank(int n) const {
  if (!contains(n)) throw OutOfWindow("degree " + std::to_string(n) + " outside the complex window");
  return d_->ranks[n - d_->lo];
}

const RMatrix& FreeComplex::diff(int n) const {
  if (!has_diff(n)) throw OutOfWindow("differential " + std::to_string(n) + " outside the complex window");
  return d_->diffs[n - d_->lo - 1];
}

std::size_t FreeComplex::total_rank() const { return std::accumulate(d_->ranks.begin(), d_->ranks.end(), std::size_t{0}); }

bool FreeComplex::is_minimal() const {
  for (const auto& m : d_->diffs)
    if (m.has_unit_entry()) return false;
  return true;
}

FreeComplex FreeComplex::restrict(int lo, int hi) const {
  if (lo < this->lo() || hi > this->hi() || hi < lo) throw OutOfWindow("restriction outside the complex window");
  std::vector<std::size_t> ranks(d_->ranks.begin() + (lo - this->lo()), d_->ranks.begin() + (hi - this->lo() + 1));
  std::vector<RMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) diffs.push_back(diff(n));
  return FreeComplex(ring(), lo, hi, std::move(ranks), std::move(diffs));
}

bool FreeComplex::operator==(const FreeComplex& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->ring->field() == o.d_->ring->field() && d_->ring->dim() == o.d_->ring->dim() && d_->lo == o.d_->lo &&
         d_->hi == o.d_->hi && d_->ranks == o.d_->ranks && d_->diffs == o.d_->diffs;
}

FreeComplex shift(const FreeComplex& c, int m) {
  std::vector<RMatrix> diffs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs.push_back(m % 2 == 0 ? c.diff(n) : -c.diff(n));
  return FreeComplex(c.ring(), c.lo() + m, c.hi() + m, c.ranks(), std::move(diffs));
}

FreeComplex dualize(const FreeComplex& c) {
  std::vector<std::size_t> ranks(c.ranks().rbegin(), c.ranks().rend());
  std::vector<RMatrix> diffs;
  // new degree n in (-hi, -lo]: transpose of diff(1 - n)
  for (int n = -c.hi() + 1; n <= -c.lo(); ++n) diffs.push_back(c.diff(1 - n).transpose());
  return FreeComplex(c.ring(), -c.hi(), -c.lo(), std::move(ranks), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
  if (a.ring()->field() != b.ring()->field() || a.ring()->dim() != b.ring()->dim() ||
      a.ring()->generators() != b.ring()->generators())
    throw std::invalid_argument("direct sum of complexes over different rings");
  const int lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  if (hi < lo) throw OutOfWindow("direct sum of complexes with disjoint windows");
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(a.rank(n) + b.rank(n));
  std::vector<RMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) diffs.push_back(RMatrix::block_diag(a.diff(n), b.diff(n)));
  return FreeComplex(a.ring(), lo, hi, std::move(ranks), std::move(diffs));
}

FreeComplex add_contractible(const FreeComplex& c, const std::vector<int>& degrees) {
  const RingPtr& R = c.ring();
  std::vector<std::size_t> ranks = c.ranks();
  std::vector<RMatrix> diffs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs.push_back(c.diff(n));
  for (int n : degrees) {
    if (n <= c.lo() || n > c.hi()) throw OutOfWindow("contractible summand outside the window");
    const int k = n - c.lo();
    // new basis vectors go last in C_n and C_{n-1}
    RMatrix& dn = diffs[k - 1];
    RMatrix grown(R, dn.rows() + 1, dn.cols() + 1);
    grown.set_block(0, 0, dn);
    grown.entry(dn.rows(), dn.cols())[0] = 1;
    dn = grown;
    if (k < static_cast<int>(diffs.size())) {
      RMatrix& up = diffs[k];
      RMatrix g(R, up.rows() + 1, up.cols());
      g.set_block(0, 0, up);
      up = g;
    }
    if (k >= 2) {
      RMatrix& down = diffs[k - 2];
      RMatrix g(R, down.rows(), down.cols() + 1);
      g.set_block(0, 0, down);
      down = g;
    }
    ranks[k] += 1;
    ranks[k - 1] += 1;
  }
  return FreeComplex(R, c.lo(), c.hi(), std::move(ranks), std::move(diffs));
}

FreeComplex change_basis(const FreeComplex& c, const std::vector<RMatrix>& g) {
  if (g.size() != c.ranks().size()) throw std::invalid_argument("change_basis: one matrix per degree");
  std::vector<RMatrix> inv;
  for (const auto& m : g) {
    auto i = inverse(m);
    if (!i) throw std::invalid_argument("change_basis: matrix not invertible");
    inv.push_back(std::move(*i));
  }
  std::vector<RMatrix> diffs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const int k = n - c.lo();
    diffs.push_back(g[k - 1] * c.diff(n) * inv[k]);
  }
  return FreeComplex(c.ring(), c.lo(), c.hi(), c.ranks(), std::move(diffs));
}

namespace {

bool interior_exact(const FreeComplex& c) {
  const std::size_t D = c.ring()->dim();
  for (int n = c.lo() + 1; n < c.hi(); ++n) {
    const std::size_t ker = c.rank(n) * D - image_dim(c.diff(n));
    if (ker != image_dim(c.diff(n + 1))) return false;
  }
  return true;
}

}  // namespace

bool is_totally_acyclic(const FreeComplex& c) { return interior_exact(c) && interior_exact(dualize(c)); }

std::string to_text(const FreeComplex& c) {
  std::ostringstream os;
  os << "ring " << c.ring()->description() << "\n";
  os << "window [" << c.lo() << ", " << c.hi() << "]\n";
  os << "ranks";
  for (int n = c.lo(); n <= c.hi(); ++n) os << " " << n << ":" << c.rank(n);
  os << "\n";
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const RMatrix& d = c.diff(n);
    os << "d" << n << " (" << d.rows() << "x" << d.cols() << ") " << d.to_string() << "\n";
  }
  return os.str();
}

}  // namespace crdiam
