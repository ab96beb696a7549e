#include "theta/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace theta {

using modp::Mat;
using modp::Rng;

namespace {

int mod_pos(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

IMat zero_mat(int n) { return IMat(n, std::vector<long long>(n, 0)); }

// ---- conjugation models --------------------------------------------------

// 2 * degrees of the defining basis vectors from the Kac labels
std::vector<int> defining_v2(const KacDiagram& d) {
  const SimpleType t = d.diagram->base;
  const int l = t.rank;
  const auto& p = d.labels;
  if (d.twist() == 1) {
    if (t.family == 'A') {
      std::vector<int> v2(l + 1, 0);
      for (int k = 1; k <= l; ++k) v2[k] = v2[k - 1] - 2 * p[k];
      return v2;
    }
    if (t.family == 'B') {
      // v = (u_1..u_l, 0, -u_l..-u_1), u_l = p_l, u_k = u_{k+1} + p_k
      std::vector<int> u(l + 1, 0);
      u[l] = 2 * p[l];
      for (int k = l - 1; k >= 1; --k) u[k] = u[k + 1] + 2 * p[k];
      std::vector<int> v2;
      for (int k = 1; k <= l; ++k) v2.push_back(u[k]);
      v2.push_back(0);
      for (int k = l; k >= 1; --k) v2.push_back(-u[k]);
      return v2;
    }
    if (t.family == 'C') {
      std::vector<int> u(l + 1, 0);
      u[l] = p[l];  // 2 u_l = p_l
      for (int k = l - 1; k >= 1; --k) u[k] = u[k + 1] + 2 * p[k];
      std::vector<int> v2;
      for (int k = 1; k <= l; ++k) v2.push_back(u[k]);
      for (int k = l; k >= 1; --k) v2.push_back(-u[k]);
      return v2;
    }
    // D: 2u_{l-1} = p_{l-1} + p_l, 2u_l = p_l - p_{l-1}
    std::vector<int> u(l + 1, 0);
    u[l] = p[l] - p[l - 1];
    u[l - 1] = p[l - 1] + p[l];
    for (int k = l - 2; k >= 1; --k) u[k] = u[k + 1] + 2 * p[k];
    std::vector<int> v2;
    for (int k = 1; k <= l; ++k) v2.push_back(u[k]);
    for (int k = l; k >= 1; --k) v2.push_back(-u[k]);
    return v2;
  }
  // twist 2, type D: v = (u_1..u_{l-1}, 0, m/2, -u_{l-1}..-u_1)
  const int m = d.order();
  std::vector<int> u(l, 0);  // u_1..u_{l-1}
  for (int k = l - 1; k >= 1; --k) u[k] = (k == l - 1 ? 0 : u[k + 1]) + p[k];
  std::vector<int> v2;
  for (int k = 1; k <= l - 1; ++k) v2.push_back(2 * u[k]);
  v2.push_back(0);
  v2.push_back(m);
  for (int k = l - 1; k >= 1; --k) v2.push_back(-2 * u[k]);
  return v2;
}

IMat form_matrix(const SimpleType& t, int twist, int N) {
  IMat b = zero_mat(N);
  if (twist == 2) {  // so outer: antidiagonal with an identity middle block
    int l = N / 2;
    for (int a = 0; a < N; ++a) b[a][N - 1 - a] = 1;
    b[l - 1][N - l] = 0;
    b[l][N - 1 - l] = 0;
    b[l - 1][l - 1] = 1;
    b[l][l] = 1;
    return b;
  }
  for (int a = 0; a < N; ++a) b[a][N - 1 - a] = (t.family == 'C' && a >= N / 2) ? -1 : 1;
  return b;
}

// x = B^{-1} A for the antisymmetric/symmetric generators A
MatrixRealization conjugation_model(const KacDiagram& d) {
  const SimpleType t = d.diagram->base;
  MatrixRealization r;
  r.type = t;
  r.twist = d.twist();
  r.m = d.order();
  const int l = t.rank;
  r.N = t.family == 'A' ? l + 1 : (t.family == 'B' ? 2 * l + 1 : 2 * l);
  r.form = t.family == 'A' ? 'n' : (t.family == 'C' ? 'a' : 's');
  r.v2 = defining_v2(d);
  bool odd = false, even = false;
  for (int v : r.v2) (v % 2 != 0 ? odd : even) = true;
  if (odd && even) throw std::logic_error("mixed defining-degree parity");
  r.half = odd;

  const int N = r.N;
  auto zdeg2 = [&](int a, int b) { return r.v2[a] - r.v2[b]; };  // doubled, mod 2m

  if (r.form == 'n') {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        if (a == b) continue;
        IMat mtx = zero_mat(N);
        mtx[a][b] = 1;
        r.basis.push_back(std::move(mtx));
        r.degree.push_back(mod_pos(zdeg2(a, b) / 2, r.m));
        r.zdegree.push_back(zdeg2(a, b) / 2);
      }
    for (int a = 0; a + 1 < N; ++a) {
      IMat mtx = zero_mat(N);
      mtx[a][a] = 1;
      mtx[a + 1][a + 1] = -1;
      r.basis.push_back(std::move(mtx));
      r.degree.push_back(0);
      r.zdegree.push_back(0);
    }
  } else {
    r.formB = form_matrix(t, r.twist, N);
    // B^{-1}: antidiagonal forms square to +-1; the outer form is symmetric
    // with B^2 = I in all cases used here except sp where B^2 = -I.
    IMat binv = r.formB;
    if (r.form == 'a')
      for (auto& row : binv)
        for (auto& v : row) v = -v;
    // transpose for the sp case (B antisymmetric): B^{-1} = -B = B^T
    // generators
    std::vector<IMat> gens;
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        IMat g = zero_mat(N);
        g[a][b] = 1;
        g[b][a] = r.form == 's' ? -1 : 1;
        gens.push_back(std::move(g));
      }
    if (r.form == 'a')
      for (int a = 0; a < N; ++a) {
        IMat g = zero_mat(N);
        g[a][a] = 1;
        gens.push_back(std::move(g));
      }
    for (const auto& g : gens) {
      IMat x = zero_mat(N);
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
          if (binv[i][k])
            for (int j = 0; j < N; ++j) x[i][j] += binv[i][k] * g[k][j];
      // theta-degree from any nonzero entry; homogeneity is asserted
      int dg2 = 0;
      bool found = false;
      long long zsum = 0;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (x[i][j]) {
            int e = mod_pos(zdeg2(i, j), 2 * r.m);
            if (!found) {
              dg2 = e;
              found = true;
              zsum = r.v2[i] - r.v2[j];
            } else if (e != dg2) {
              throw std::logic_error("non-homogeneous so/sp basis element");
            }
          }
      if (!found) throw std::logic_error("zero so/sp basis element");
      if (dg2 % 2 != 0) throw std::logic_error("odd doubled degree");
      r.basis.push_back(std::move(x));
      r.degree.push_back((dg2 / 2) % r.m);
      if (r.twist == 1) r.zdegree.push_back(static_cast<int>(zsum / 2));
    }
  }
  return r;
}

// ---- abstract Chevalley basis of sl_n as matrices -------------------------

std::vector<IMat> chevalley_matrices(const Chevalley& ch) {
  const RootSystem& rs = ch.rs;
  const int l = rs.rank;
  const int n = l + 1;
  std::vector<IMat> img(ch.table.dim);
  auto unit = [&](int a, int b) {
    IMat m = zero_mat(n);
    m[a][b] = 1;
    return m;
  };
  auto bracket = [&](const IMat& x, const IMat& y) {
    IMat z = zero_mat(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (x[i][k])
          for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        if (y[i][k])
          for (int j = 0; j < n; ++j) z[i][j] -= y[i][k] * x[k][j];
      }
    return z;
  };
  auto n_const = [&](int x, int y, int z) -> long long {
    bool flip = x > y;
    if (flip) std::swap(x, y);
    for (const auto& [c, v] : ch.table.entry(x, y))
      if (c == z) return flip ? -v : v;
    return 0;
  };
  for (int i = 0; i < l; ++i) {
    IMat h = zero_mat(n);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    img[ch.cartan_index(i)] = std::move(h);
  }
  for (int sgn = 0; sgn < 2; ++sgn)
    for (int k = 0; k < rs.n_positive; ++k) {
      int idx = sgn == 0 ? k : k + rs.n_positive;
      const Coords& g = rs.roots[k];
      if (rs.height(k) == 1) {
        int i = 0;
        while (g[i] == 0) ++i;
        img[idx] = sgn == 0 ? unit(i, i + 1) : unit(i + 1, i);
        continue;
      }
      bool done = false;
      for (int i = 0; i < l && !done; ++i) {
        Coords beta = g;
        beta[i] -= 1;
        int bidx = rs.index_of(beta);
        if (bidx < 0) continue;
        Coords simple(l, 0);
        simple[i] = 1;
        int s = rs.index_of(simple);
        int sb = sgn == 0 ? s : rs.negative_of(s);
        int bb = sgn == 0 ? bidx : rs.negative_of(bidx);
        long long c = n_const(sb, bb, idx);
        if (c == 0) continue;
        IMat z = bracket(img[sb], img[bb]);
        for (auto& row : z)
          for (auto& v : row) {
            if (v % c != 0) throw std::logic_error("non-integral matrix image");
            v /= c;
          }
        img[idx] = std::move(z);
        done = true;
      }
      if (!done) throw std::logic_error("no decomposition for composite root");
    }
  // verify the map is a homomorphism on every basis pair
  for (int a = 0; a < ch.table.dim; ++a)
    for (int b = a + 1; b < ch.table.dim; ++b) {
      IMat lhs = bracket(img[a], img[b]);
      for (const auto& [c, v] : ch.table.entry(a, b))
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) lhs[i][j] -= v * img[c][i][j];
      for (const auto& row : lhs)
        for (long long v : row)
          if (v != 0) throw std::logic_error("matrix model mismatch");
    }
  return img;
}

MatrixRealization outer_sl_model(const KacDiagram& d) {
  const SimpleType t = d.diagram->base;
  const OuterSetup& s = outer_setup(t, 2);
  MatrixRealization r;
  r.type = t;
  r.twist = 2;
  r.m = d.order();
  r.N = t.rank + 1;
  r.form = 'n';
  auto img = chevalley_matrices(s.ch);
  auto eb = sigma_eigenbasis2(s.ch, s.sigma);
  for (size_t i = 0; i < eb.vectors.size(); ++i) {
    IMat mtx = zero_mat(r.N);
    for (int b = 0; b < s.ch.table.dim; ++b) {
      long long c = eb.vectors[i][b];
      if (!c) continue;
      for (int x = 0; x < r.N; ++x)
        for (int y = 0; y < r.N; ++y) mtx[x][y] += c * img[b][x][y];
    }
    r.basis.push_back(std::move(mtx));
    r.degree.push_back(mod_pos(outer_zdegree(d, s.residue[i], s.weight[i]), r.m));
  }
  return r;
}

}  // namespace

MatrixRealization realize(const KacDiagram& d) {
  check_valid(d);
  const SimpleType t = d.diagram->base;
  MatrixRealization r;
  if (d.twist() == 1 && (t.family == 'A' || t.family == 'B' || t.family == 'C' ||
                         t.family == 'D')) {
    r = conjugation_model(d);
  } else if (d.twist() == 2 && t.family == 'A') {
    r = outer_sl_model(d);
  } else if (d.twist() == 2 && t.family == 'D') {
    r = conjugation_model(d);
  } else {
    throw std::invalid_argument("no matrix realization for " + to_string(d));
  }
  // the induced dimension vector must equal the abstract grading's
  std::vector<int> dims(r.m, 0);
  for (int dg : r.degree) dims[dg]++;
  if (dims != dimension_vector_fast(d))
    throw std::logic_error("realization dimension vector mismatch for " + to_string(d));
  return r;
}

EigenMultiplicities eigen_multiplicities(const MatrixRealization& r) {
  if (r.v2.empty())
    throw std::invalid_argument("eigenvalue multiplicities need a conjugation model");
  EigenMultiplicities e;
  e.m = r.m;
  e.half = r.half;
  e.b.assign(r.m, 0);
  for (int v : r.v2) {
    int w = ((v % (2 * r.m)) + 2 * r.m) % (2 * r.m);
    int idx = r.half ? (w - 1) / 2 : w / 2;
    e.b[idx % r.m]++;
  }
  // dim V(lambda) = dim V(lambda^{-1})
  if (!e.half)
    for (int j = 1; j < e.m; ++j)
      if (e.b[j] != e.b[e.m - j]) throw std::logic_error("eigenvalue symmetry broken");
  return e;
}

int vinberg_rank_so(const EigenMultiplicities& e) {
  if (e.half) throw std::invalid_argument("Vinberg rank formula needs type I (A^m = I)");
  int mn = e.b[0];
  for (int j = 1; j <= e.m / 2; ++j) mn = std::min(mn, e.b[j]);
  return mn;
}

std::vector<Invariant> invariant_family(const MatrixRealization& r) {
  std::vector<Invariant> out;
  const int N = r.N;
  const int m = r.m;
  if (r.form == 'n') {
    for (int dg = 2; dg <= N; ++dg) {
      Invariant h;
      h.degree = dg;
      h.residue = (r.twist == 2 && dg % 2 == 1) ? m / 2 : 0;
      out.push_back(h);
    }
  } else if (r.form == 'a') {
    for (int dg = 2; dg <= N; dg += 2) out.push_back({dg, false, 0});
  } else {
    int top = N % 2 == 1 ? N - 1 : N - 2;
    for (int dg = 2; dg <= top; dg += 2) out.push_back({dg, false, 0});
    if (N % 2 == 0) {
      Invariant pf;
      pf.degree = N / 2;
      pf.pfaffian = true;
      pf.residue = r.twist == 2 ? m / 2 : 0;
      out.push_back(pf);
    }
  }
  // degrees = exponents + 1
  std::vector<int> degs;
  for (const auto& h : out) degs.push_back(h.degree - 1);
  std::sort(degs.begin(), degs.end());
  if (degs != build_root_system(r.type).exponents)
    throw std::logic_error("invariant degrees do not match the exponents");
  return out;
}

uint64_t pfaffian(Mat s, uint64_t p) {
  const int n = s.rows;
  if (n % 2 != 0) return 0;
  uint64_t pf = 1;
  for (int k = 0; k + 1 < n; k += 2) {
    int piv = -1;
    for (int j = k + 1; j < n; ++j)
      if (s.at(k, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k + 1) {
      for (int c = 0; c < n; ++c) std::swap(s.at(k + 1, c), s.at(piv, c));
      for (int r2 = 0; r2 < n; ++r2) std::swap(s.at(r2, k + 1), s.at(r2, piv));
      pf = modp::sub(0, pf, p);
    }
    uint64_t a = s.at(k, k + 1);
    pf = modp::mul(pf, a, p);
    uint64_t ai = modp::inv(a, p);
    for (int i = k + 2; i < n; ++i) {
      // eliminate s[k][i] using row/col k+1
      uint64_t f = modp::mul(s.at(k, i), ai, p);
      if (f) {
        for (int c = 0; c < n; ++c)
          s.at(i, c) = modp::sub(s.at(i, c), modp::mul(f, s.at(k + 1, c), p), p);
        for (int r2 = 0; r2 < n; ++r2)
          s.at(r2, i) = modp::sub(s.at(r2, i), modp::mul(f, s.at(r2, k + 1), p), p);
      }
      // eliminate s[k+1][i] using row/col k
      f = modp::mul(s.at(k + 1, i), modp::inv(modp::sub(0, a, p), p), p);
      if (f) {
        for (int c = 0; c < n; ++c)
          s.at(i, c) = modp::sub(s.at(i, c), modp::mul(f, s.at(k, c), p), p);
        for (int r2 = 0; r2 < n; ++r2)
          s.at(r2, i) = modp::sub(s.at(r2, i), modp::mul(f, s.at(r2, k), p), p);
      }
    }
  }
  return pf;
}

namespace {

Mat to_fp(const IMat& x, uint64_t p) {
  Mat m(static_cast<int>(x.size()), static_cast<int>(x.size()));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) m.at(i, j) = modp::from_ll(x[i][j], p);
  return m;
}

// Newton interpolation; returns monomial coefficients, ascending.
std::vector<uint64_t> interpolate(const std::vector<uint64_t>& ts,
                                  const std::vector<uint64_t>& ys, uint64_t p) {
  const int n = static_cast<int>(ts.size());
  std::vector<uint64_t> dd = ys;  // divided differences
  for (int k = 1; k < n; ++k)
    for (int i = n - 1; i >= k; --i)
      dd[i] = modp::mul(modp::sub(dd[i], dd[i - 1], p),
                        modp::inv(modp::sub(ts[i], ts[i - k], p), p), p);
  // expand Newton form
  std::vector<uint64_t> coef(n, 0), base{1};
  for (int k = 0; k < n; ++k) {
    for (size_t j = 0; j < base.size(); ++j)
      coef[j] = modp::add(coef[j], modp::mul(dd[k], base[j], p), p);
    // base *= (t - ts[k])
    base.push_back(0);
    for (int j = static_cast<int>(base.size()) - 1; j >= 1; --j)
      base[j] = modp::sub(base[j - 1], modp::mul(ts[k], base[j], p), p);
    base[0] = modp::mul(modp::sub(0, ts[k], p), base[0], p);
  }
  return coef;
}

struct Profile {
  std::vector<uint64_t> ts;
  std::vector<std::vector<uint64_t>> cp;  // charpoly per point
  std::vector<uint64_t> pf;               // Pfaffian per point (so even)
};

// one random x in g over F_p; evaluations of all invariants at phi(t) x,
// scaling basis element b by t^{weight(b)}
Profile make_profile(const MatrixRealization& r, Rng& rng, int npoints,
                     const std::vector<int>& weights, uint64_t p) {
  Profile out;
  const int N = r.N;
  std::vector<uint64_t> coords(r.basis.size());
  for (auto& c : coords) c = rng.below(p);
  Mat bform;
  bool want_pf = false;
  for (const auto& row : r.formB)
    for (long long v : row) want_pf = want_pf || v;
  if (want_pf && r.form == 's' && N % 2 == 0) bform = to_fp(r.formB, p);
  else want_pf = false;

  for (int s = 0; s < npoints; ++s) {
    uint64_t t = s + 1;
    out.ts.push_back(t);
    // powers of t
    int maxw = 0;
    for (int w : weights) maxw = std::max(maxw, w);
    std::vector<uint64_t> tp(maxw + 1, 1);
    for (int k = 1; k <= maxw; ++k) tp[k] = modp::mul(tp[k - 1], t, p);
    Mat x(N, N);
    for (size_t b = 0; b < r.basis.size(); ++b) {
      uint64_t c = modp::mul(coords[b], tp[weights[b]], p);
      if (!c) continue;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (r.basis[b][i][j])
            x.at(i, j) = modp::add(x.at(i, j),
                                   modp::mul(c, modp::from_ll(r.basis[b][i][j], p), p), p);
    }
    if (want_pf) {
      // S = B x is skew-symmetric for x in so(B)
      Mat sk(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          unsigned __int128 acc = 0;
          for (int k = 0; k < N; ++k)
            acc += static_cast<unsigned __int128>(bform.at(i, k)) * x.at(k, j) % p;
          sk.at(i, j) = static_cast<uint64_t>(acc % p);
        }
      out.pf.push_back(pfaffian(std::move(sk), p));
    }
    out.cp.push_back(modp::charpoly(std::move(x), p));
  }
  return out;
}

uint64_t value_of(const Invariant& h, const Profile& pr, int s, int N) {
  if (h.pfaffian) return pr.pf[s];
  return pr.cp[s][N - h.degree];
}

int top_degree(const std::vector<uint64_t>& coef) {
  for (int j = static_cast<int>(coef.size()) - 1; j >= 0; --j)
    if (coef[j]) return j;
  return -1;
}

}  // namespace

uint64_t eval_invariant(const Invariant& H, const MatrixRealization& r, const Mat& x,
                        uint64_t p) {
  if (H.pfaffian) {
    Mat bform = to_fp(r.formB, p);
    const int N = r.N;
    Mat sk(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        unsigned __int128 acc = 0;
        for (int k = 0; k < N; ++k)
          acc += static_cast<unsigned __int128>(bform.at(i, k)) * x.at(k, j) % p;
        sk.at(i, j) = static_cast<uint64_t>(acc % p);
      }
    return pfaffian(std::move(sk), p);
  }
  Mat copy = x;
  auto cp = modp::charpoly(std::move(copy), p);
  return cp[r.N - H.degree];
}

int phi_degree(const Invariant& H, const MatrixRealization& r, int trials,
               unsigned long long seed) {
  const uint64_t p = modp::MERSENNE61;
  Rng rng(seed);
  const int bound = (r.m - 1) * H.degree;
  int best = 0;
  for (int tr = 0; tr < trials; ++tr) {
    Profile pr = make_profile(r, rng, bound + 1, r.degree, p);
    std::vector<uint64_t> ys;
    for (int s = 0; s <= bound; ++s) ys.push_back(value_of(H, pr, s, r.N));
    best = std::max(best, top_degree(interpolate(pr.ts, ys, p)));
  }
  return std::max(best, 0);
}

GgsCheck ggs_sum_check(const MatrixRealization& r, const std::vector<int>& dims, int trials,
                       unsigned long long seed) {
  const uint64_t p = modp::MERSENNE61;
  auto family = invariant_family(r);
  Rng rng(seed);
  int maxdeg = 0;
  for (const auto& h : family) maxdeg = std::max(maxdeg, h.degree);
  const int bound = (r.m - 1) * maxdeg;
  std::vector<int> best(family.size(), 0);
  for (int tr = 0; tr < trials; ++tr) {
    Profile pr = make_profile(r, rng, bound + 1, r.degree, p);
    for (size_t j = 0; j < family.size(); ++j) {
      std::vector<uint64_t> ys;
      for (int s = 0; s <= bound; ++s) ys.push_back(value_of(family[j], pr, s, r.N));
      best[j] = std::max(best[j], top_degree(interpolate(pr.ts, ys, p)));
    }
  }
  GgsCheck out;
  for (int b : best) out.sum_phi += std::max(b, 0);
  long long total = 0, s = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    total += dims[i];
    s += static_cast<long long>(i) * dims[i];
  }
  (void)total;
  out.d_theta = s;
  out.certified = out.sum_phi == out.d_theta;
  return out;
}

std::set<int> bihom_support(const Invariant& H, const MatrixRealization& r, int trials,
                            unsigned long long seed) {
  const uint64_t p = modp::MERSENNE61;
  Rng rng(seed);
  const int bound = (r.m - 1) * H.degree;
  std::set<int> support;
  for (int tr = 0; tr < trials; ++tr) {
    Profile pr = make_profile(r, rng, bound + 1, r.degree, p);
    std::vector<uint64_t> ys;
    for (int s = 0; s <= bound; ++s) ys.push_back(value_of(H, pr, s, r.N));
    auto coef = interpolate(pr.ts, ys, p);
    for (int j = 0; j <= bound; ++j)
      if (coef[j]) support.insert(j);
  }
  return support;
}

int nminus_degree(const Invariant& H, const MatrixRealization& r, int trials,
                  unsigned long long seed) {
  if (r.zdegree.empty())
    throw std::invalid_argument("n^- degrees need an inner conjugation model");
  const uint64_t p = modp::MERSENNE61;
  Rng rng(seed);
  std::vector<int> weights(r.basis.size());
  for (size_t b = 0; b < weights.size(); ++b) weights[b] = r.zdegree[b] < 0 ? 1 : 0;
  const int bound = H.degree;
  int best = 0;
  for (int tr = 0; tr < trials; ++tr) {
    Profile pr = make_profile(r, rng, bound + 1, weights, p);
    std::vector<uint64_t> ys;
    for (int s = 0; s <= bound; ++s) ys.push_back(value_of(H, pr, s, r.N));
    best = std::max(best, top_degree(interpolate(pr.ts, ys, p)));
  }
  return std::max(best, 0);
}

int restricted_jacobian_rank(const MatrixRealization& r, int trials,
                             unsigned long long seed) {
  const uint64_t p = modp::MERSENNE61;
  Rng rng(seed);
  auto family = invariant_family(r);
  const int m = r.m;
  std::vector<int> g1;
  for (size_t b = 0; b < r.basis.size(); ++b)
    if (r.degree[b] == 1 % m) g1.push_back(static_cast<int>(b));
  if (g1.empty()) return 0;

  auto random_g1 = [&]() {
    Mat x(r.N, r.N);
    for (int b : g1) {
      uint64_t c = rng.below(p);
      for (int i = 0; i < r.N; ++i)
        for (int j = 0; j < r.N; ++j)
          if (r.basis[b][i][j])
            x.at(i, j) =
                modp::add(x.at(i, j), modp::mul(c, modp::from_ll(r.basis[b][i][j], p), p), p);
    }
    return x;
  };

  // invariants of type (m-1) survive on g_1; the others must vanish there
  std::vector<Invariant> live;
  for (const auto& h : family) {
    bool type_m1 = ((h.degree - 1) + h.residue) % m == (m - 1) % m;
    if (type_m1) {
      live.push_back(h);
      continue;
    }
    for (int probe = 0; probe < 2; ++probe)
      if (eval_invariant(h, r, random_g1(), p) != 0)
        throw std::logic_error("invariant of wrong type does not vanish on g_1");
  }
  int best = 0;
  for (int tr = 0; tr < trials; ++tr) {
    Mat z = random_g1();
    Mat jac(static_cast<int>(live.size()), static_cast<int>(g1.size()));
    for (size_t col = 0; col < g1.size(); ++col) {
      const IMat& y = r.basis[g1[col]];
      int maxdeg = 0;
      for (const auto& h : live) maxdeg = std::max(maxdeg, h.degree);
      std::vector<uint64_t> ts;
      std::vector<std::vector<uint64_t>> vals(live.size());
      for (int s = 0; s <= maxdeg; ++s) {
        uint64_t t = s + 1;
        ts.push_back(t);
        Mat x = z;
        for (int i = 0; i < r.N; ++i)
          for (int j = 0; j < r.N; ++j)
            if (y[i][j])
              x.at(i, j) =
                  modp::add(x.at(i, j), modp::mul(t, modp::from_ll(y[i][j], p), p), p);
        for (size_t j = 0; j < live.size(); ++j)
          vals[j].push_back(eval_invariant(live[j], r, x, p));
      }
      for (size_t j = 0; j < live.size(); ++j) {
        auto coef = interpolate(ts, vals[j], p);
        jac.at(static_cast<int>(j), static_cast<int>(col)) = coef.size() > 1 ? coef[1] : 0;
      }
    }
    best = std::max(best, modp::rank(std::move(jac), p));
  }
  return best;
}

}  // namespace theta
