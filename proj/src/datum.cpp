#include "theta/datum.hpp"

#include <algorithm>
#include <numeric>

#include "theta/grading.hpp"

namespace theta {

Datum datum_of(const SimpleType& t, int twist, int m) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  if (twist != 1 && m % twist != 0)
    throw std::invalid_argument("order must be divisible by the twist");
  fixed_subalgebra_type(t, twist);  // validates the (type, twist) pair
  Datum d;
  d.m = m;
  d.twist = twist;
  d.exponents = build_root_system(t).exponents;
  const int l = static_cast<int>(d.exponents.size());
  d.residues.assign(l, 0);
  if (twist == 2) {
    if (t.family == 'A') {
      // odd-degree generators (even exponents) are negated
      for (int j = 0; j < l; ++j)
        if (d.exponents[j] % 2 == 0) d.residues[j] = m / 2;
    } else if (t.family == 'D') {
      // only the Pfaffian (degree l, exponent l-1) is negated; one copy
      int pf = t.rank - 1;
      for (int j = 0; j < l; ++j)
        if (d.exponents[j] == pf) {
          d.residues[j] = m / 2;
          break;
        }
    } else {  // E6: degrees 5 and 9, exponents 4 and 8
      for (int j = 0; j < l; ++j)
        if (d.exponents[j] == 4 || d.exponents[j] == 8) d.residues[j] = m / 2;
    }
  } else if (twist == 3) {
    // D4: exponents (1,3,3,5); the two 3s carry m/3 and 2m/3
    bool first = true;
    for (int j = 0; j < l; ++j)
      if (d.exponents[j] == 3) {
        d.residues[j] = first ? m / 3 : 2 * m / 3;
        first = false;
      }
  }
  d.k.assign(m, 0);
  for (int j = 0; j < l; ++j) d.k[(d.exponents[j] + d.residues[j]) % m]++;
  return d;
}

long long d_theta(const std::vector<int>& dims) {
  const int m = static_cast<int>(dims.size());
  long long total = 0, s = 0;
  for (int i = 0; i < m; ++i) {
    total += dims[i];
    s += static_cast<long long>(i) * dims[i];
  }
  long long alt = static_cast<long long>(m) * (total - dims[0]);
  if (alt % 2 != 0 || s != alt / 2)
    throw std::logic_error("D_theta identity failed: grading bug");
  return s;
}

long long upsilon(const Datum& d, int dim_g) {
  long long s = static_cast<long long>(d.m - 1) * dim_g;
  for (int i = 0; i < d.m; ++i) s += static_cast<long long>(2 * i + 1 - d.m) * d.k[i];
  if (s % 2 != 0) throw std::logic_error("upsilon is not an integer");
  return s / 2;
}

std::vector<int> nreg_dims(const Datum& d, int dim_g) {
  long long num = dim_g;
  for (int i = 0; i < d.m; ++i) num += static_cast<long long>(d.m - 1 - 2 * i) * d.k[i];
  if (num % d.m != 0) throw std::logic_error("nreg_dims: non-integer dim g_0");
  std::vector<int> dims(d.m);
  dims[0] = static_cast<int>(num / d.m);
  for (int i = 0; i + 1 < d.m; ++i)
    dims[i + 1] = dims[i] + d.k[d.m - 1 - i] - d.k[i];
  long long total = std::accumulate(dims.begin(), dims.end(), 0LL);
  // pieces vanish once m exceeds 2h - 2, so only negativity is a bug
  for (int v : dims)
    if (v < 0) throw std::logic_error("nreg_dims: negative piece");
  if (total != dim_g) throw std::logic_error("nreg_dims: wrong total");
  return dims;
}

long long b_value(int dim_g, int dim_g0, int rk_g, int rk_g0) {
  long long s = static_cast<long long>(dim_g) - dim_g0 + rk_g + rk_g0;
  if (s % 2 != 0) throw std::logic_error("b(g, theta) is not an integer");
  return s / 2;
}

std::vector<long long> bullet_degrees(const Datum& d) {
  std::vector<long long> out;
  for (size_t j = 0; j < d.exponents.size(); ++j)
    out.push_back(static_cast<long long>(d.m - 1) * d.exponents[j] +
                  (d.exponents[j] + d.residues[j]) % d.m);
  return out;
}

long long main2_sum(const Datum& d) {
  auto bullets = bullet_degrees(d);
  long long s = 0;
  for (size_t j = 0; j < bullets.size(); ++j) {
    long long num = bullets[j] - d.residues[j];
    if (num % d.m != 0) throw std::logic_error("main2_sum: divisibility failure");
    s += num / d.m + 1;
  }
  return s;
}

int rank_g0(const KacDiagram& d) { return d.diagram->nodes - 1; }

std::vector<FriendlyPair> friendly_pairs(const SimpleType& t, int twist, int m) {
  std::vector<FriendlyPair> out;
  auto diagrams = enumerate_diagrams(t, twist, m);
  if (diagrams.size() < 2) return out;

  std::vector<std::vector<int>> dims;
  for (const auto& d : diagrams) dims.push_back(dimension_vector_fast(d));

  std::vector<size_t> nreg_idx;
  bool candidate = twist != 1;
  if (twist == 1) {
    auto canonical = canonicalize(n_regular_inner(t, m)).labels;
    for (size_t i = 0; i < diagrams.size(); ++i)
      if (diagrams[i].labels == canonical) nreg_idx.push_back(i);
    if (nreg_idx.empty()) throw std::logic_error("N-regular diagram not enumerated");
  } else {
    // candidates: minimal dim g_0 (Thm main3(i) characterizes the N-regular
    // automorphism as the dim-g_0 minimizer)
    int best = dim_of(t) + 1;
    for (const auto& v : dims) best = std::min(best, v[0]);
    for (size_t i = 0; i < diagrams.size(); ++i)
      if (dims[i][0] == best) nreg_idx.push_back(i);
  }
  if (twist == 1) {
    size_t ni = nreg_idx[0];
    for (size_t i = 0; i < diagrams.size(); ++i) {
      if (i == ni || dims[i][0] != dims[ni][0]) continue;
      out.push_back({diagrams[ni], diagrams[i], candidate, dims[ni], dims[i]});
    }
  } else {
    // both members of an outer pair sit among the minimal-dim-g_0 candidates
    for (size_t a = 0; a < nreg_idx.size(); ++a)
      for (size_t b = a + 1; b < nreg_idx.size(); ++b)
        out.push_back({diagrams[nreg_idx[a]], diagrams[nreg_idx[b]], candidate,
                       dims[nreg_idx[a]], dims[nreg_idx[b]]});
  }
  return out;
}

LabelShapeReport nreg_label_shape_check(const KacDiagram& d) {
  if (d.twist() != 1)
    throw std::invalid_argument("label shape checks apply to inner diagrams");
  LabelShapeReport r;
  const auto& marks = d.diagram->marks;
  int big = 0;
  bool big_ok = true, rest_one = true;
  for (size_t i = 0; i < d.labels.size(); ++i) {
    if (d.labels[i] > 1) {
      ++big;
      if (marks[i] != 1) big_ok = false;
    }
  }
  if (big == 1)
    for (size_t i = 0; i < d.labels.size(); ++i)
      if (d.labels[i] <= 1 && d.labels[i] != 1) rest_one = false;
  r.at_most_one_big = big <= 1;
  r.big_at_mark1_rest_one = big == 0 || (big == 1 && big_ok && rest_one);
  const int h = build_root_system(d.diagram->base).coxeter_number;
  r.all01_when_small_order = d.order() > h || big == 0;
  r.pass = r.at_most_one_big && r.big_at_mark1_rest_one && r.all01_when_small_order;
  return r;
}

}  // namespace theta
