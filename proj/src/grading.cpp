#include "theta/grading.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace theta {

namespace {

int mod_pos(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

const RootSystem& shared_rs(const SimpleType& t) { return shared_chevalley(t).rs; }

// standard diagram automorphism of the simply laced base, as a node
// permutation (0-based), plus the node orbits in fixed-type order
void outer_nodes(const SimpleType& base, int twist, std::vector<int>& perm,
                 std::vector<std::vector<int>>& orbits) {
  const int l = base.rank;
  perm.resize(l);
  orbits.clear();
  if (twist == 3) {
    perm = {2, 1, 3, 0};
    orbits = {{0, 2, 3}, {1}};
    return;
  }
  if (base.family == 'A') {
    for (int i = 0; i < l; ++i) perm[i] = l - 1 - i;
    if (l % 2 == 0) {  // A_{2r}:  nu_i <-> {i, l-1-i}, nu_{r-1} short
      for (int i = 0; i < l / 2; ++i) orbits.push_back({i, l - 1 - i});
    } else {  // A_{2r-1}: C_r, nu_{r-1} = fixed middle node, long
      for (int i = 0; i < (l - 1) / 2; ++i) orbits.push_back({i, l - 1 - i});
      orbits.push_back({(l - 1) / 2});
    }
    return;
  }
  if (base.family == 'D') {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[l - 2], perm[l - 1]);
    for (int i = 0; i + 2 < l; ++i) orbits.push_back({i});
    orbits.push_back({l - 2, l - 1});
    return;
  }
  // E6 -> F4 in our numbering
  perm = {5, 1, 4, 3, 2, 0};
  orbits = {{2, 4}, {3}, {1}, {0, 5}};
}

}  // namespace

const Chevalley& shared_chevalley(const SimpleType& t) {
  static std::map<std::pair<char, int>, Chevalley> cache;
  auto key = std::make_pair(t.family, t.rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_chevalley(build_root_system_any(t))).first;
  return it->second;
}

GradedZ inner_grading(const Chevalley& ch, const KacDiagram& d) {
  check_valid(d);
  if (d.twist() != 1) throw std::invalid_argument("inner_grading needs an inner diagram");
  if (!(d.diagram->base == ch.rs.type))
    throw std::invalid_argument("diagram/algebra type mismatch");
  const int m = d.order();
  const int nr = ch.n_roots();
  GradedZ g;
  g.inner = true;
  g.m = m;
  g.alg = ch.table;
  g.zdegree.assign(ch.table.dim, 0);
  g.degree.assign(ch.table.dim, 0);
  for (int i = 0; i < nr; ++i) {
    long long zd = 0;
    for (int j = 0; j < ch.rs.rank; ++j)
      zd += static_cast<long long>(ch.rs.roots[i][j]) * d.labels[j + 1];
    g.zdegree[i] = static_cast<int>(zd);
    g.degree[i] = mod_pos(zd, m);
  }
  g.pieces.assign(m, {});
  for (int i = 0; i < ch.table.dim; ++i) g.pieces[g.degree[i]].push_back(i);

  // Eq. (vysota): max d over positive roots = sum n_i p_i = m - p_0
  int maxd = 0;
  for (int i = 0; i < ch.rs.n_positive; ++i) maxd = std::max(maxd, g.zdegree[i]);
  if (maxd != m - d.labels[0]) throw std::logic_error("Z-degree bound violated");
  return g;
}

const OuterSetup& outer_setup(const SimpleType& base, int twist) {
  static std::map<std::tuple<char, int, int>, OuterSetup> cache;
  auto key = std::make_tuple(base.family, base.rank, twist);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  OuterSetup s;
  s.base = base;
  s.twist = twist;
  s.fixed_type = fixed_subalgebra_type(base, twist);
  s.ch = build_chevalley(build_root_system(base));
  std::vector<int> perm;
  std::vector<std::vector<int>> orbits;
  outer_nodes(base, twist, perm, orbits);
  s.sigma = diagram_automorphism(s.ch, perm);
  if (s.sigma.order != twist) throw std::logic_error("sigma order mismatch");

  const int nr = s.ch.n_roots();
  const int r = static_cast<int>(orbits.size());
  auto weight_of_rep = [&](int rep) {
    std::vector<int> w(r, 0);
    if (rep < nr)
      for (int i = 0; i < r; ++i)
        for (int j : orbits[i]) w[i] += s.ch.rs.roots[rep][j];
    return w;  // Cartan vectors have weight 0
  };

  if (twist == 2) {
    auto eb = sigma_eigenbasis2(s.ch, s.sigma);
    s.table2 = table_in_eigenbasis(s.ch.table, eb);
    for (size_t i = 0; i < eb.vectors.size(); ++i) {
      s.residue.push_back(eb.residue[i]);
      s.weight.push_back(weight_of_rep(eb.rep[i]));
    }
    s.labels = s.table2.labels;
  } else {
    auto eb = sigma_eigenbasis3(s.ch, s.sigma);
    s.table3 = table_in_eigenbasis_cyc(s.ch, eb);
    for (size_t i = 0; i < eb.vectors.size(); ++i) {
      s.residue.push_back(eb.residue[i]);
      s.weight.push_back(weight_of_rep(eb.rep[i]));
    }
    s.labels = s.table3.labels;
  }
  // sanity: the fixed part has the dimension of the fixed type
  int d0 = 0;
  for (int res : s.residue)
    if (res == 0) ++d0;
  if (d0 != dim_of(s.fixed_type)) throw std::logic_error("fixed subalgebra dimension off");
  return cache.emplace(key, std::move(s)).first->second;
}

int outer_zdegree(const KacDiagram& d, int k, const std::vector<int>& weight) {
  long long z = static_cast<long long>(k) * d.labels[0];
  const Coords& d1 = d.diagram->delta1;
  for (size_t i = 0; i < weight.size(); ++i)
    z += static_cast<long long>(weight[i] + k * d1[i]) * d.labels[i + 1];
  return static_cast<int>(z);
}

namespace {

template <class S>
Graded<S> outer_grading_impl(const KacDiagram& d, const OuterSetup& s,
                             const LieTable<S>& table) {
  check_valid(d);
  const int m = d.order();
  Graded<S> g;
  g.inner = false;
  g.m = m;
  g.alg = table;
  g.degree.resize(table.dim);
  for (int i = 0; i < table.dim; ++i)
    g.degree[i] = ((outer_zdegree(d, s.residue[i], s.weight[i]) % m) + m) % m;
  g.pieces.assign(m, {});
  for (int i = 0; i < table.dim; ++i) g.pieces[g.degree[i]].push_back(i);
  if (!degree_additive(g)) throw std::logic_error("outer grading is not additive");
  return g;
}

}  // namespace

GradedZ outer_grading2(const KacDiagram& d) {
  if (d.twist() != 2) throw std::invalid_argument("outer_grading2 needs twist 2");
  const OuterSetup& s = outer_setup(d.diagram->base, 2);
  return outer_grading_impl<long long>(d, s, s.table2);
}

GradedC outer_grading3(const KacDiagram& d) {
  if (d.twist() != 3) throw std::invalid_argument("outer_grading3 needs twist 3");
  const OuterSetup& s = outer_setup(d.diagram->base, 3);
  return outer_grading_impl<Cyc3>(d, s, s.table3);
}

std::vector<int> dimension_vector_fast(const KacDiagram& d) {
  check_valid(d);
  const int m = d.order();
  std::vector<int> dims(m, 0);
  if (d.twist() == 1) {
    const RootSystem& rs = shared_rs(d.diagram->base);
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      long long zd = 0;
      for (int j = 0; j < rs.rank; ++j)
        zd += static_cast<long long>(rs.roots[i][j]) * d.labels[j + 1];
      dims[mod_pos(zd, m)]++;
    }
    dims[0] += rs.rank;
  } else {
    const OuterSetup& s = outer_setup(d.diagram->base, d.twist());
    for (size_t i = 0; i < s.residue.size(); ++i)
      dims[((outer_zdegree(d, s.residue[i], s.weight[i]) % m) + m) % m]++;
  }
  return dims;
}

}  // namespace theta
