#include "crdiam/random.hpp"

namespace crdiam {

RingElement random_element(const QuotientRing& R, Rng& rng) {
  std::uniform_int_distribution<Elem> pick(0, R.field().order() - 1);
  RingElement a(R.dim());
  for (auto& x : a) x = pick(rng);
  return a;
}

RingElement random_in_maximal_ideal(const QuotientRing& R, Rng& rng, int zero_percent) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < zero_percent) return R.zero();
  RingElement a = random_element(R, rng);
  a[0] = 0;
  return a;
}

RMatrix random_invertible(const RingPtr& R, std::size_t n, Rng& rng) {
  const Field& f = R->field();
  for (;;) {
    KMatrix k(f, n, n);
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k(i, j) = pick(rng);
    if (rank(k) != n) continue;
    RMatrix m = RMatrix::from_constants(R, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RingElement e = random_in_maximal_ideal(*R, rng, 50);
        m.set(i, j, R->add(m.at(i, j), e));
      }
    return m;
  }
}

RMatrix random_maximal_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, Rng& rng, int zero_percent) {
  RMatrix m(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_in_maximal_ideal(*R, rng, zero_percent));
  return m;
}

}  // namespace crdiam
