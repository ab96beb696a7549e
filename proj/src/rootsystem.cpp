#include "theta/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace theta {

namespace {

// Cartan matrix A[i][j] = <alpha_j, alpha_i^vee> plus root lengths
// (alpha_i, alpha_i)/2, Bourbaki numbering except F4 (see below).
void cartan_and_lengths(const SimpleType& t, std::vector<std::vector<int>>& a,
                        std::vector<int>& len) {
  const int l = t.rank;
  a.assign(l, std::vector<int>(l, 0));
  len.assign(l, 1);
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // single edge, equal lengths
    a[i][j] = a[j][i] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_l short
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      for (int i = 0; i + 1 < l; ++i) len[i] = 2;
      len[l - 1] = 1;
      a[l - 2][l - 1] = -1;
      a[l - 1][l - 2] = -2;
      break;
    case 'C':  // alpha_l long
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      len[l - 1] = 2;
      a[l - 2][l - 1] = -2;
      a[l - 1][l - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'F':
      // numbering with marks (4,3,2,2): path a3 - a2 <= a1 - a4,
      // a1 and a4 short.  The affine node attaches to a3.
      len = {1, 2, 2, 1};
      bond(0, 3);
      bond(1, 2);
      a[0][1] = -2;
      a[1][0] = -1;
      break;
    case 'G':  // alpha_1 short, marks (3,2)
      len = {1, 3};
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
}

// internal builder that also accepts D3 ~ A3 and B1 ~ A1 (needed for folding
// and for the twisted fixed types); public rank validation happens in
// build_root_system.
RootSystem build_unchecked(const SimpleType& t) {
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  const int l = t.rank;
  if (t.family == 'B' && l == 1) {
    cartan_and_lengths({'A', 1}, rs.cartan, rs.root_len);
  } else if (t.family == 'D' && l == 3) {
    rs.cartan.assign(3, std::vector<int>(3, 0));
    for (int i = 0; i < 3; ++i) rs.cartan[i][i] = 2;
    rs.cartan[0][1] = rs.cartan[1][0] = -1;
    rs.cartan[0][2] = rs.cartan[2][0] = -1;
    rs.root_len.assign(3, 1);
  } else {
    cartan_and_lengths(t, rs.cartan, rs.root_len);
  }

  // Close the simple roots under the reflections s_i.
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Coords c = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int pair = 0;
      for (int j = 0; j < l; ++j) pair += rs.cartan[i][j] * c[j];
      Coords refl = c;
      refl[i] -= pair;
      if (seen.insert(refl).second) queue.push_back(refl);
    }
  }

  std::vector<Coords> pos;
  for (const auto& c : seen) {
    int s = std::accumulate(c.begin(), c.end(), 0);
    if (s > 0) pos.push_back(c);
  }
  auto ht = [](const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const Coords& x, const Coords& y) {
    if (ht(x) != ht(y)) return ht(x) < ht(y);
    return x < y;
  });
  rs.n_positive = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& c : pos) {
    Coords neg(c);
    for (int& v : neg) v = -v;
    rs.roots.push_back(neg);
  }
  rs.dim = static_cast<int>(rs.roots.size()) + l;
  for (int i = 0; i < static_cast<int>(rs.roots.size()); ++i) rs.lookup[rs.roots[i]] = i;

  rs.highest_root = pos.back();
  if (pos.size() >= 2 && ht(pos[pos.size() - 2]) == ht(pos.back()))
    throw std::logic_error("highest root is not unique");
  rs.coxeter_number = ht(rs.highest_root) + 1;
  rs.exponents = exponents_of(rs);

  // self-validation: dim g = sum (2 m_j + 1), sum m_j = |positive roots|
  int s1 = 0, s2 = 0;
  for (int m : rs.exponents) s1 += 2 * m + 1, s2 += m;
  if (s1 != rs.dim || s2 != rs.n_positive)
    throw std::logic_error("root system self-check failed for " + to_string(t));
  return rs;
}

}  // namespace

int RootSystem::index_of(const Coords& c) const {
  auto it = lookup.find(c);
  return it == lookup.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  return idx < n_positive ? idx + n_positive : idx - n_positive;
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots[idx].begin(), roots[idx].end(), 0);
}

int RootSystem::pairing(int idx, int i) const {
  int p = 0;
  for (int j = 0; j < rank; ++j) p += cartan[i][j] * roots[idx][j];
  return p;
}

int RootSystem::inner(const Coords& a, const Coords& b) const {
  // (alpha_i, alpha_j) = A[i][j] * len[i]
  long long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += static_cast<long long>(a[i]) * b[j] * cartan[i][j] * root_len[i];
  }
  return static_cast<int>(s);
}

RootSystem build_root_system(const SimpleType& t) {
  check_simple_type(t);
  return build_unchecked(t);
}

RootSystem build_root_system_any(const SimpleType& t) {
  if (is_valid_simple_type(t)) return build_unchecked(t);
  if ((t.family == 'D' && t.rank == 3) || (t.family == 'B' && t.rank == 1))
    return build_unchecked(t);
  check_simple_type(t);
  return build_unchecked(t);
}

std::vector<int> exponents_of(const RootSystem& rs) {
  const int maxht = rs.coxeter_number > 1 ? rs.coxeter_number - 1 : 1;
  std::vector<int> hist(maxht + 1, 0);
  for (int i = 0; i < rs.n_positive; ++i) hist[rs.height(i)]++;
  std::vector<int> exps;
  for (int j = 1; j <= rs.rank; ++j) {
    int m = 0;
    for (int c = 1; c <= maxht; ++c)
      if (hist[c] >= j) ++m;
    exps.push_back(m);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

SimpleType fixed_subalgebra_type(const SimpleType& t, int twist) {
  if (twist == 1) return t;
  if (twist == 2) {
    if (t.family == 'A' && t.rank >= 2) {
      int r = t.rank % 2 == 0 ? t.rank / 2 : (t.rank + 1) / 2;
      if (t.rank % 2 == 0) return r == 1 ? SimpleType{'A', 1} : SimpleType{'B', r};
      return SimpleType{'C', r};
    }
    if (t.family == 'D') return SimpleType{'B', t.rank - 1};
    if (t.family == 'E' && t.rank == 6) return SimpleType{'F', 4};
  }
  if (twist == 3 && t.family == 'D' && t.rank == 4) return SimpleType{'G', 2};
  throw std::invalid_argument("unsupported twist " + std::to_string(twist) + " for " +
                              to_string(t));
}

namespace {

// delta_1 = highest weight of g_1^(sigma) in simple-root coordinates of the
// fixed type.
Coords delta1_coords(const SimpleType& base, int twist, const SimpleType& fixed) {
  const int r = fixed.rank;
  Coords d(r, 0);
  if (twist == 3) return {2, 1};  // G2: first fundamental weight
  if (base.family == 'A' && base.rank % 2 == 0) {
    for (int i = 0; i < r; ++i) d[i] = 2;  // B_r: 2 omega_1
    return d;
  }
  if (base.family == 'A') {  // C_r: omega_2
    for (int i = 0; i < r; ++i) d[i] = 2;
    d[0] = 1;
    d[r - 1] = 1;
    return d;
  }
  if (base.family == 'D') {  // B_r: omega_1
    for (int i = 0; i < r; ++i) d[i] = 1;
    return d;
  }
  // E6 -> F4 in our numbering: highest short root
  return {3, 2, 1, 2};
}

}  // namespace

std::vector<std::vector<int>> cartan_automorphisms(const std::vector<std::vector<int>>& a,
                                                   const std::vector<int>& marks) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> result;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);

  // node signature: mark plus sorted multiset of off-diagonal pairs
  auto signature = [&](int i) {
    std::vector<std::pair<int, int>> s;
    for (int j = 0; j < n; ++j)
      if (j != i && (a[i][j] != 0 || a[j][i] != 0)) s.emplace_back(a[i][j], a[j][i]);
    std::sort(s.begin(), s.end());
    return std::make_pair(marks.empty() ? 0 : marks[i], s);
  };
  std::vector<decltype(signature(0))> sig(n);
  for (int i = 0; i < n; ++i) sig[i] = signature(i);

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      result.push_back(img);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || sig[i] != sig[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = a[img[k]][j] == a[k][i] && a[j][img[k]] == a[i][k];
      if (!ok) continue;
      img[i] = j;
      used[j] = true;
      self(self, i + 1);
      used[j] = false;
      img[i] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

AffineDiagram affine_diagram(const SimpleType& t, int twist) {
  check_simple_type(t);
  if (twist != 1 && twist != 2 && twist != 3)
    throw std::invalid_argument("twist must be 1, 2 or 3");
  AffineDiagram d;
  d.base = t;
  d.twist = twist;
  d.fixed_type = fixed_subalgebra_type(t, twist);  // throws if unsupported

  RootSystem rs = twist == 1 ? build_root_system(t) : build_root_system_any(d.fixed_type);
  const int r = rs.rank;
  d.nodes = r + 1;

  // node vectors: -delta (or -delta_1), then the simple roots
  std::vector<Coords> node(d.nodes, Coords(r, 0));
  Coords top = twist == 1 ? rs.highest_root : delta1_coords(t, twist, d.fixed_type);
  for (int j = 0; j < r; ++j) node[0][j] = -top[j];
  for (int i = 1; i <= r; ++i) node[i][i - 1] = 1;

  d.marks.assign(d.nodes, 1);
  for (int i = 1; i <= r; ++i) d.marks[i] = top[i - 1];

  d.cartan.assign(d.nodes, std::vector<int>(d.nodes, 0));
  for (int i = 0; i < d.nodes; ++i) {
    int nii = rs.inner(node[i], node[i]);
    for (int j = 0; j < d.nodes; ++j) {
      int num = 2 * rs.inner(node[i], node[j]);
      if (num % nii != 0) throw std::logic_error("non-integral affine Cartan entry");
      d.cartan[i][j] = num / nii;
    }
  }
  // marks are a right null vector of the affine Cartan matrix
  for (int i = 0; i < d.nodes; ++i) {
    long long s = 0;
    for (int j = 0; j < d.nodes; ++j) s += static_cast<long long>(d.cartan[i][j]) * d.marks[j];
    if (s != 0) throw std::logic_error("affine marks are not a null vector");
  }
  d.symmetry = cartan_automorphisms(d.cartan, d.marks);
  if (twist != 1) d.delta1 = top;
  return d;
}

SimpleType classify_connected_cartan(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return {'A', 1};
  std::vector<SimpleType> candidates = {{'A', n}, {'C', n}};
  if (n >= 3) candidates.push_back({'B', n});
  if (n >= 4) candidates.push_back({'D', n});
  if (n >= 6 && n <= 8) candidates.push_back({'E', n});
  if (n == 4) candidates.push_back({'F', 4});
  if (n == 2) candidates.push_back({'G', 2});
  for (const auto& t : candidates) {
    std::vector<std::vector<int>> ct;
    std::vector<int> len;
    cartan_and_lengths(t, ct, len);
    // isomorphism test: try to map a onto ct
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == n) return true;
      for (int j = 0; j < n; ++j) {
        if (used[j] || ct[j][j] != a[i][i]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
          ok = ct[img[k]][j] == a[k][i] && ct[j][img[k]] == a[i][k];
        if (!ok) continue;
        img[i] = j;
        used[j] = true;
        if (self(self, i + 1)) return true;
        used[j] = false;
        img[i] = -1;
      }
      return false;
    };
    if (rec(rec, 0)) return t;
  }
  throw std::invalid_argument("not a simple Cartan matrix");
}

}  // namespace theta
