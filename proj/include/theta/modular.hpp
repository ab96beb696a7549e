#ifndef THETA_MODULAR_HPP
#define THETA_MODULAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "theta/lietable.hpp"

namespace theta {
namespace modp {

constexpr uint64_t MERSENNE61 = (1ull << 61) - 1;

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);
inline uint64_t inv(uint64_t a, uint64_t p) { return pow(a, p - 2, p); }
inline uint64_t from_ll(long long v, uint64_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}
/// Image of a Cyc3 scalar under zeta -> w, a fixed element of order 3.
uint64_t order3_element(uint64_t p);
inline uint64_t from_cyc(const Cyc3& v, uint64_t p, uint64_t w) {
  return add(from_ll(v.a, p), mul(from_ll(v.b, p), w, p), p);
}

/// Deterministic counter-based generator (splitmix64).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n);  // uniform in [0, n)
};

/// Splits a top-level seed per check id, for reproducible reports.
uint64_t split_seed(uint64_t seed, const std::string& id);

/// Dense row-major matrix over F_p.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<uint64_t> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int rank(Mat m, uint64_t p);

/// Basis of the right kernel, as rows of the returned matrix.
Mat kernel(Mat m, uint64_t p);

/// Rank of the stack of two row spaces.
int rank_stacked(const Mat& x, const Mat& y, uint64_t p);

/// Characteristic polynomial (monic, ascending coefficients, size n+1)
/// via Hessenberg reduction.
std::vector<uint64_t> charpoly(Mat m, uint64_t p);

/// Minimal polynomial via Krylov spaces of a few random vectors (lcm).
/// Monte Carlo: result divides the true minimal polynomial mod p.
std::vector<uint64_t> minpoly(const Mat& m, uint64_t p, Rng& rng);

std::vector<uint64_t> poly_gcd(std::vector<uint64_t> x, std::vector<uint64_t> y, uint64_t p);
std::vector<uint64_t> poly_derivative(const std::vector<uint64_t>& f, uint64_t p);
bool poly_squarefree(const std::vector<uint64_t>& f, uint64_t p);

/// First n primes strictly below 2^61, largest first (deterministic
/// Miller-Rabin).
std::vector<uint64_t> big_primes(int n);

}  // namespace modp

/// Structure constants reduced mod p, as a flat dense tensor accessor.
struct ModTable {
  int dim = 0;
  uint64_t p = 0;
  // sparse rows for pairs a<b
  std::vector<std::vector<std::pair<int, uint64_t>>> ent;

  const std::vector<std::pair<int, uint64_t>>& entry(int a, int b) const {
    return ent[static_cast<size_t>(a) * dim + b];
  }
};

ModTable reduce_table(const LieTable<long long>& t, uint64_t p);
ModTable reduce_table(const LieTable<Cyc3>& t, uint64_t p);

/// ad x as a dense matrix over F_p (columns indexed by basis).
modp::Mat ad_matrix(const ModTable& t, const std::vector<uint64_t>& x);

/// B(xi)_{ab} = xi([x_a, x_b]).
modp::Mat coadjoint_pencil(const ModTable& t, const std::vector<uint64_t>& xi);

}  // namespace theta

#endif
