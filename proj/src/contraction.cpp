#include "theta/contraction.hpp"

#include "theta/modular.hpp"

namespace theta {

LieTable<long long> parabolic_contraction(const Chevalley& ch,
                                          const std::vector<int>& zlabels) {
  if (static_cast<int>(zlabels.size()) != ch.rs.rank)
    throw std::invalid_argument("need one label per simple root");
  for (int p : zlabels)
    if (p < 0) throw std::invalid_argument("labels must be nonnegative");
  const int nr = ch.n_roots();
  const int n = ch.table.dim;
  std::vector<long long> zdeg(n, 0);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ch.rs.rank; ++j)
      zdeg[i] += static_cast<long long>(ch.rs.roots[i][j]) * zlabels[j];

  auto in_p = [&](int i) { return zdeg[i] >= 0; };  // Cartan has zdeg 0
  LieTable<long long> out;
  out.init(n);
  out.labels = ch.table.labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& e = ch.table.entry(a, b);
      if (e.empty()) continue;
      if (in_p(a) && in_p(b)) {
        out.set_entry(a, b, e);
      } else if (!in_p(a) && !in_p(b)) {
        // n^- is abelian
      } else {
        // mixed: project the true bracket to n^-
        LieTable<long long>::Entry kept;
        for (const auto& [c, v] : e)
          if (!in_p(c)) kept.emplace_back(c, v);
        if (!kept.empty()) out.set_entry(a, b, std::move(kept));
      }
    }
  return out;
}

bool verify_centralizer_contraction(const GradedZ& g, const std::vector<long long>& x,
                                    unsigned long long seed) {
  (void)seed;
  const uint64_t p = modp::MERSENNE61;
  const int n = g.alg.dim;
  ModTable full = reduce_table(g.alg, p);
  std::vector<uint64_t> xm(n);
  for (int i = 0; i < n; ++i) {
    xm[i] = modp::from_ll(x[i], p);
    if (xm[i] && g.degree[i] != 1 % g.m)
      throw std::invalid_argument("x must be homogeneous of degree 1");
  }

  // side 1: g^x = ker(ad x) in g
  modp::Mat adx = ad_matrix(full, xm);
  modp::Mat cent = modp::kernel(adx, p);

  // side 2: stabilizer of xi_x = kappa(x, .) in the contraction g_(0)
  auto kappa = killing(g.alg);
  std::vector<uint64_t> xi(n, 0);
  for (int i = 0; i < n; ++i) {
    unsigned __int128 s = 0;
    for (int j = 0; j < n; ++j)
      if (x[j]) s += static_cast<unsigned __int128>(modp::from_ll(x[j], p)) *
                     modp::from_ll(kappa[j][i], p) % p;
    xi[i] = static_cast<uint64_t>(s % p);
  }
  LieTable<long long> c0 = contract_zero(g);
  ModTable contr = reduce_table(c0, p);
  modp::Mat pencil = coadjoint_pencil(contr, xi);
  modp::Mat stab = modp::kernel(pencil, p);

  // subspace equality over F_p
  int rc = modp::rank(cent, p), rst = modp::rank(stab, p);
  if (rc != rst) return false;
  if (modp::rank_stacked(cent, stab, p) != rc) return false;

  // the common subspace is closed under the contracted bracket
  std::vector<std::vector<uint64_t>> basis(cent.rows, std::vector<uint64_t>(n));
  for (int r = 0; r < cent.rows; ++r)
    for (int c = 0; c < n; ++c) basis[r][c] = cent.at(r, c);
  modp::Mat closure(cent.rows * (cent.rows - 1) / 2 + cent.rows, n);
  int row = 0;
  for (int r = 0; r < cent.rows; ++r, ++row)
    for (int c = 0; c < n; ++c) closure.at(row, c) = basis[r][c];
  for (int r1 = 0; r1 < cent.rows; ++r1)
    for (int r2 = r1 + 1; r2 < cent.rows; ++r2, ++row)
      for (int a = 0; a < n; ++a) {
        if (!basis[r1][a]) continue;
        for (int b = 0; b < n; ++b) {
          if (!basis[r2][b] || a == b) continue;
          int lo = std::min(a, b), hi = std::max(a, b);
          for (const auto& [c, v] : contr.entry(lo, hi)) {
            uint64_t t = modp::mul(modp::mul(basis[r1][a], basis[r2][b], p), v, p);
            if (a > b) t = modp::sub(0, t, p);
            closure.at(row, c) = modp::add(closure.at(row, c), t, p);
          }
        }
      }
  return modp::rank(std::move(closure), p) == rc;
}

}  // namespace theta
