#include "theta/modular.hpp"

#include <algorithm>

namespace theta {
namespace modp {

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t order3_element(uint64_t p) {
  if ((p - 1) % 3 != 0) throw std::invalid_argument("p = 1 mod 3 required");
  for (uint64_t x = 2;; ++x) {
    uint64_t w = pow(x, (p - 1) / 3, p);
    if (w != 1) return w;
  }
}

uint64_t Rng::next() {
  // splitmix64
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
  // rejection sampling for an unbiased draw
  uint64_t lim = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= lim);
  return v % n;
}

uint64_t split_seed(uint64_t seed, const std::string& id) {
  uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  Rng r(h);
  return r.next();
}

int rank(Mat m, uint64_t p) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint64_t iv = inv(m.at(r, c), p);
    for (int i = r + 1; i < m.rows; ++i) {
      uint64_t f = m.at(i, c);
      if (!f) continue;
      uint64_t fi = mul(f, iv, p);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = sub(m.at(i, j), mul(fi, m.at(r, j), p), p);
    }
    ++r;
  }
  return r;
}

Mat kernel(Mat m, uint64_t p) {
  const int n = m.cols;
  // reduced row echelon
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint64_t iv = inv(m.at(r, c), p);
    for (int j = c; j < n; ++j) m.at(r, j) = mul(m.at(r, j), iv, p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint64_t f = m.at(i, c);
      if (!f) continue;
      for (int j = c; j < n; ++j) m.at(i, j) = sub(m.at(i, j), mul(f, m.at(r, j), p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<int> is_piv(n, 0);
  for (int c : pivot_col) is_piv[c] = 1;
  Mat k(n - r, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    k.at(row, f) = 1;
    for (int i = 0; i < r; ++i) k.at(row, pivot_col[i]) = sub(0, m.at(i, f), p);
    ++row;
  }
  return k;
}

int rank_stacked(const Mat& x, const Mat& y, uint64_t p) {
  Mat s(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), s.a.begin());
  std::copy(y.a.begin(), y.a.end(), s.a.begin() + x.a.size());
  return rank(std::move(s), p);
}

std::vector<uint64_t> charpoly(Mat m, uint64_t p) {
  const int n = m.rows;
  // Hessenberg reduction
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int r = c + 1; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, c + 1));
    }
    uint64_t iv = inv(m.at(c + 1, c), p);
    for (int r = c + 2; r < n; ++r) {
      uint64_t f = mul(m.at(r, c), iv, p);
      if (!f) continue;
      for (int j = 0; j < n; ++j) m.at(r, j) = sub(m.at(r, j), mul(f, m.at(c + 1, j), p), p);
      for (int i = 0; i < n; ++i) m.at(i, c + 1) = add(m.at(i, c + 1), mul(f, m.at(i, r), p), p);
    }
  }
  // recurrence on leading principal minors of (tI - H)
  std::vector<std::vector<uint64_t>> f(n + 1);
  f[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // f_k = (t - h_{k-1,k-1}) f_{k-1} - sum_{i<k-1} h_{i,k-1} (prod b) f_i
    f[k].assign(k + 1, 0);
    uint64_t d = m.at(k - 1, k - 1);
    for (int j = 0; j < k; ++j) {
      f[k][j + 1] = add(f[k][j + 1], f[k - 1][j], p);
      f[k][j] = sub(f[k][j], mul(d, f[k - 1][j], p), p);
    }
    uint64_t prod = 1;
    for (int i = k - 2; i >= 0; --i) {
      prod = mul(prod, m.at(i + 1, i), p);
      uint64_t coef = mul(m.at(i, k - 1), prod, p);
      if (!coef) continue;
      for (int j = 0; j <= i; ++j) f[k][j] = sub(f[k][j], mul(coef, f[i][j], p), p);
    }
  }
  return f[n];
}

namespace {

std::vector<uint64_t> poly_trim(std::vector<uint64_t> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<uint64_t> poly_lcm(const std::vector<uint64_t>& x, const std::vector<uint64_t>& y,
                               uint64_t p) {
  auto g = poly_gcd(x, y, p);
  // lcm = x * y / g
  std::vector<uint64_t> prod(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) prod[i + j] = add(prod[i + j], mul(x[i], y[j], p), p);
  // exact division
  std::vector<uint64_t> q(prod.size() - g.size() + 1, 0);
  std::vector<uint64_t> rem = prod;
  uint64_t lead_inv = inv(g.back(), p);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    uint64_t c = mul(rem[i + g.size() - 1], lead_inv, p);
    q[i] = c;
    if (!c) continue;
    for (size_t j = 0; j < g.size(); ++j)
      rem[i + j] = sub(rem[i + j], mul(c, g[j], p), p);
  }
  return q;
}

}  // namespace

std::vector<uint64_t> minpoly(const Mat& m, uint64_t p, Rng& rng) {
  const int n = m.rows;
  std::vector<uint64_t> result{1};
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<uint64_t> v(n);
    for (auto& x : v) x = rng.below(p);
    // Krylov matrix rows: v, Mv, M^2 v, ...
    Mat kry(n + 1, n);
    for (int i = 0; i < n; ++i) kry.at(0, i) = v[i];
    for (int k = 1; k <= n; ++k)
      for (int i = 0; i < n; ++i) {
        unsigned __int128 s = 0;
        for (int j = 0; j < n; ++j)
          s += static_cast<unsigned __int128>(m.at(i, j)) * kry.at(k - 1, j) % p;
        kry.at(k, i) = static_cast<uint64_t>(s % p);
      }
    // first linear dependency by elimination with row order kept
    Mat work = kry;
    std::vector<std::vector<uint64_t>> combo(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) combo[i][i] = 1;
    std::vector<int> col_of_row;
    int deg = -1;
    for (int k = 0; k <= n && deg < 0; ++k) {
      // eliminate row k against previous pivot rows
      for (int r = 0; r < static_cast<int>(col_of_row.size()); ++r) {
        int c = col_of_row[r];
        uint64_t f = work.at(k, c);
        if (!f) continue;
        uint64_t fi = mul(f, inv(work.at(r, c), p), p);
        for (int j = 0; j < n; ++j)
          work.at(k, j) = sub(work.at(k, j), mul(fi, work.at(r, j), p), p);
        for (int j = 0; j <= n; ++j)
          combo[k][j] = sub(combo[k][j], mul(fi, combo[r][j], p), p);
      }
      int c = -1;
      for (int j = 0; j < n; ++j)
        if (work.at(k, j) != 0) {
          c = j;
          break;
        }
      if (c < 0) {
        deg = k;
        break;
      }
      // move row k into pivot position k (rows processed in order)
      col_of_row.push_back(c);
      if (k != static_cast<int>(col_of_row.size()) - 1)
        throw std::logic_error("krylov elimination order");
    }
    if (deg < 0) throw std::logic_error("no Krylov dependency found");
    std::vector<uint64_t> f(combo[deg].begin(), combo[deg].begin() + deg + 1);
    uint64_t li = inv(f.back(), p);
    for (auto& c : f) c = mul(c, li, p);
    result = poly_trim(poly_lcm(result, f, p));
  }
  uint64_t li = inv(result.back(), p);
  for (auto& c : result) c = mul(c, li, p);
  return result;
}

std::vector<uint64_t> poly_gcd(std::vector<uint64_t> x, std::vector<uint64_t> y, uint64_t p) {
  x = poly_trim(std::move(x));
  y = poly_trim(std::move(y));
  while (!y.empty()) {
    // x mod y
    uint64_t li = inv(y.back(), p);
    while (x.size() >= y.size()) {
      uint64_t c = mul(x.back(), li, p);
      size_t off = x.size() - y.size();
      for (size_t j = 0; j < y.size(); ++j)
        x[off + j] = sub(x[off + j], mul(c, y[j], p), p);
      x = poly_trim(std::move(x));
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  if (x.empty()) return {1};
  uint64_t li = inv(x.back(), p);
  for (auto& c : x) c = mul(c, li, p);
  return x;
}

std::vector<uint64_t> poly_derivative(const std::vector<uint64_t>& f, uint64_t p) {
  std::vector<uint64_t> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p, p));
  return d;
}

bool poly_squarefree(const std::vector<uint64_t>& f, uint64_t p) {
  auto d = poly_trim(poly_derivative(f, p));
  if (d.empty()) return false;  // p-th power; cannot happen for our sizes
  return poly_gcd(f, d, p).size() == 1;
}

namespace {

bool miller_rabin(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = pow(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

}  // namespace

std::vector<uint64_t> big_primes(int n) {
  std::vector<uint64_t> out;
  uint64_t c = MERSENNE61;
  while (static_cast<int>(out.size()) < n) {
    if (miller_rabin(c)) out.push_back(c);
    c -= 2;
  }
  return out;
}

}  // namespace modp

ModTable reduce_table(const LieTable<long long>& t, uint64_t p) {
  ModTable m;
  m.dim = t.dim;
  m.p = p;
  m.ent.assign(static_cast<size_t>(t.dim) * t.dim, {});
  for (int a = 0; a < t.dim; ++a)
    for (int b = a + 1; b < t.dim; ++b)
      for (const auto& [c, v] : t.entry(a, b)) {
        uint64_t r = modp::from_ll(v, p);
        if (r) m.ent[static_cast<size_t>(a) * t.dim + b].emplace_back(c, r);
      }
  return m;
}

ModTable reduce_table(const LieTable<Cyc3>& t, uint64_t p) {
  uint64_t w = modp::order3_element(p);
  ModTable m;
  m.dim = t.dim;
  m.p = p;
  m.ent.assign(static_cast<size_t>(t.dim) * t.dim, {});
  for (int a = 0; a < t.dim; ++a)
    for (int b = a + 1; b < t.dim; ++b)
      for (const auto& [c, v] : t.entry(a, b)) {
        uint64_t r = modp::from_cyc(v, p, w);
        if (r) m.ent[static_cast<size_t>(a) * t.dim + b].emplace_back(c, r);
      }
  return m;
}

modp::Mat ad_matrix(const ModTable& t, const std::vector<uint64_t>& x) {
  const int n = t.dim;
  modp::Mat m(n, n);
  for (int a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int lo = std::min(a, b), hi = std::max(a, b);
      for (const auto& [c, v] : t.entry(lo, hi)) {
        uint64_t term = modp::mul(x[a], v, t.p);
        if (a > b) term = modp::sub(0, term, t.p);
        m.at(c, b) = modp::add(m.at(c, b), term, t.p);
      }
    }
  }
  return m;
}

modp::Mat coadjoint_pencil(const ModTable& t, const std::vector<uint64_t>& xi) {
  const int n = t.dim;
  modp::Mat m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      unsigned __int128 s = 0;
      for (const auto& [c, v] : t.entry(a, b))
        s += static_cast<unsigned __int128>(v) * xi[c] % t.p;
      uint64_t val = static_cast<uint64_t>(s % t.p);
      m.at(a, b) = val;
      m.at(b, a) = modp::sub(0, val, t.p);
    }
  return m;
}

}  // namespace theta
