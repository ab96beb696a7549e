#include "theta/indexcalc.hpp"

#include <algorithm>
#include <cmath>

namespace theta {

using modp::Mat;
using modp::Rng;

IndexReport index_of(const ModTable& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  const uint64_t p = t.p;
  IndexReport rep;
  rep.dimension = t.dim;
  rep.trials = trials;
  rep.seed = seed;
  rep.lower_bound = lower_bound;
  Rng rng(seed);
  int best = 0;
  for (int tr = 0; tr < trials; ++tr) {
    std::vector<uint64_t> xi(t.dim);
    for (auto& v : xi) v = rng.below(p);
    Mat b = coadjoint_pencil(t, xi);
    int r = modp::rank(std::move(b), p);
    if (r % 2 != 0) throw std::logic_error("antisymmetric rank must be even");
    best = std::max(best, r);
  }
  rep.computed_index = t.dim - best;
  rep.certified = lower_bound && rep.computed_index == *lower_bound;
  rep.note = rep.certified ? "certified" : "observed value, not certified";
  return rep;
}

IndexReport index_of(const LieTable<long long>& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound) {
  return index_of(reduce_table(t, modp::MERSENNE61), trials, seed, lower_bound);
}

IndexReport index_of(const LieTable<Cyc3>& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound) {
  return index_of(reduce_table(t, modp::MERSENNE61), trials, seed, lower_bound);
}

namespace {

template <class S>
OrbitData orbit_impl(const Graded<S>& g, int trials, unsigned long long seed) {
  const uint64_t p = modp::MERSENNE61;
  ModTable t = reduce_table(g.alg, p);
  const int n = g.alg.dim;
  const int d0 = static_cast<int>(g.pieces[0].size());
  const int d1 = g.m > 1 ? static_cast<int>(g.pieces[1].size()) : 0;
  if (d1 == 0) return {d0, 0};
  Rng rng(seed);
  int best = 0;
  for (int tr = 0; tr < trials; ++tr) {
    std::vector<uint64_t> x(n, 0);
    for (int i : g.pieces[1]) x[i] = rng.below(p);
    // columns: ad_y x for y in the g_0 basis
    Mat m(n, d0);
    for (int col = 0; col < d0; ++col) {
      int y = g.pieces[0][col];
      for (int b = 0; b < n; ++b) {
        if (!x[b] || y == b) continue;
        int lo = std::min(y, b), hi = std::max(y, b);
        for (const auto& [c, v] : t.entry(lo, hi)) {
          uint64_t term = modp::mul(x[b], v, p);
          if (y > b) term = modp::sub(0, term, p);
          m.at(c, col) = modp::add(m.at(c, col), term, p);
        }
      }
    }
    best = std::max(best, modp::rank(std::move(m), p));
  }
  return {d0 - best, d1 - best};
}

}  // namespace

OrbitData generic_orbit_data(const GradedZ& g, int trials, unsigned long long seed) {
  return orbit_impl(g, trials, seed);
}
OrbitData generic_orbit_data(const GradedC& g, int trials, unsigned long long seed) {
  return orbit_impl(g, trials, seed);
}

namespace {

std::vector<std::vector<long long>> dense_ad(const LieTable<long long>& L,
                                             const std::vector<long long>& x) {
  const int n = L.dim;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  std::vector<long long> col(n);
  std::vector<int> touched;
  for (int b = 0; b < n; ++b) {
    std::fill(col.begin(), col.end(), 0);
    touched.clear();
    for (int a = 0; a < n; ++a)
      if (x[a]) L.bracket_acc(a, b, x[a], col, touched);
    for (int r = 0; r < n; ++r) m[r][b] = col[r];
  }
  return m;
}

}  // namespace

bool is_nilpotent(const LieTable<long long>& L, const std::vector<long long>& x) {
  const int n = L.dim;
  if (n == 0) return true;
  auto ad = dense_ad(L, x);
  long long maxent = 1;
  for (const auto& row : ad)
    for (long long v : row) maxent = std::max(maxent, std::abs(v));
  // |charpoly coeff| <= 2^n (sqrt(n) maxent)^n
  double bits = n * (1.0 + 0.5 * std::log2(static_cast<double>(n)) +
                     std::log2(static_cast<double>(maxent)));
  int nprimes = static_cast<int>(bits / 60.0) + 2;
  auto primes = modp::big_primes(nprimes);
  for (uint64_t p : primes) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = modp::from_ll(ad[i][j], p);
    auto cp = modp::charpoly(std::move(m), p);
    for (int k = 0; k < n; ++k)
      if (cp[k] != 0) return false;
  }
  return true;
}

bool is_regular(const LieTable<long long>& L, const std::vector<long long>& x, int l) {
  auto primes = modp::big_primes(2);
  int best = L.dim;
  for (uint64_t p : primes) {
    ModTable t = reduce_table(L, p);
    std::vector<uint64_t> xm(L.dim);
    for (int i = 0; i < L.dim; ++i) xm[i] = modp::from_ll(x[i], p);
    Mat ad = ad_matrix(t, xm);
    best = std::min(best, L.dim - modp::rank(std::move(ad), p));
    if (best == l) return true;
  }
  return best == l;
}

namespace {

template <class S>
bool semisimple_impl(const Graded<S>& g, int trials, unsigned long long seed) {
  if (g.m == 1 || g.pieces[1].empty())
    throw std::invalid_argument("generic_semisimple needs a nonempty g_1");
  // three large primes = 1 mod 3 (so Cyc3 reduces everywhere)
  std::vector<uint64_t> primes;
  for (uint64_t p : modp::big_primes(12)) {
    if ((p - 1) % 3 == 0) primes.push_back(p);
    if (primes.size() == 3) break;
  }
  Rng rng(seed);
  int yes = 0, no = 0;
  for (int tr = 0; tr < trials; ++tr) {
    // small integer coordinates on the g_1 piece; zero coordinates put the
    // sample on a proper subvariety far too often in low dimensions, so the
    // range is wide enough to keep that rare and the zero vector is rejected
    std::vector<long long> x(g.alg.dim, 0);
    bool nonzero = false;
    do {
      for (int i : g.pieces[1]) {
        x[i] = static_cast<long long>(rng.below(101)) - 50;
        nonzero = nonzero || x[i] != 0;
      }
    } while (!nonzero);
    int sf = 0, nsf = 0;
    for (uint64_t p : primes) {
      ModTable t = reduce_table(g.alg, p);
      std::vector<uint64_t> xm(g.alg.dim);
      for (int i = 0; i < g.alg.dim; ++i) xm[i] = modp::from_ll(x[i], p);
      Mat ad = ad_matrix(t, xm);
      Rng prng(rng.next());
      auto mp = modp::minpoly(ad, p, prng);
      if (modp::poly_squarefree(mp, p))
        ++sf;
      else
        ++nsf;
    }
    if (sf == static_cast<int>(primes.size()))
      ++yes;
    else if (nsf == static_cast<int>(primes.size()))
      ++no;
  }
  if (yes > trials / 2) return true;
  if (no > trials / 2) return false;
  throw std::runtime_error("generic_semisimple: inconclusive after max trials");
}

}  // namespace

bool generic_semisimple(const GradedZ& g, int trials, unsigned long long seed) {
  return semisimple_impl(g, trials, seed);
}
bool generic_semisimple(const GradedC& g, int trials, unsigned long long seed) {
  return semisimple_impl(g, trials, seed);
}

}  // namespace theta
