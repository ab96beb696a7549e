#ifndef THETA_GRADING_HPP
#define THETA_GRADING_HPP

#include "theta/chevalley.hpp"
#include "theta/kac.hpp"
#include "theta/lietable.hpp"

namespace theta {

/// A bracket table carrying a Z_m degree on each basis vector.
template <class S>
struct Graded {
  LieTable<S> alg;
  int m = 1;
  std::vector<int> degree;               // residue in [0, m)
  std::vector<int> zdegree;              // inner only: d(gamma), Cartan 0
  std::vector<std::vector<int>> pieces;  // basis indices per residue
  bool inner = true;

  std::vector<int> dims() const {
    std::vector<int> v;
    for (const auto& p : pieces) v.push_back(static_cast<int>(p.size()));
    return v;
  }
};

using GradedZ = Graded<long long>;
using GradedC = Graded<Cyc3>;

/// Checks deg([x,y]) = deg x + deg y mod m on every nonzero bracket entry.
template <class S>
bool degree_additive(const Graded<S>& g) {
  for (int a = 0; a < g.alg.dim; ++a)
    for (int b = a + 1; b < g.alg.dim; ++b)
      for (const auto& [c, v] : g.alg.entry(a, b))
        if (!is_zero(v) && (g.degree[a] + g.degree[b]) % g.m != g.degree[c]) return false;
  return true;
}

/// Shared immutable Chevalley tables, one per type.
const Chevalley& shared_chevalley(const SimpleType& t);

/// Z_m-grading attached to an inner diagram: d(gamma) = sum [gamma:alpha_i] p_i
/// glued mod m, with the Cartan in degree 0.
GradedZ inner_grading(const Chevalley& ch, const KacDiagram& d);

/// Cached per-(base, twist) data behind the outer gradings: the base Chevalley
/// table, the diagram automorphism, its eigenbasis with restricted weights,
/// and the bracket table rewritten in the eigenbasis.
struct OuterSetup {
  SimpleType base;
  int twist = 2;
  Chevalley ch;
  Automorphism sigma;
  SimpleType fixed_type;
  // one record per eigenbasis vector
  std::vector<int> residue;
  std::vector<std::vector<int>> weight;  // in nu-coordinates of fixed_type
  std::vector<std::string> labels;
  LieTable<long long> table2;  // twist 2
  LieTable<Cyc3> table3;       // twist 3
};

const OuterSetup& outer_setup(const SimpleType& base, int twist);

/// (Z,theta)-degree of the weight gamma of g_k^(sigma):
/// d_k(gamma) = k p_0 + sum [(gamma + k delta_1) : nu_i] p_i.
int outer_zdegree(const KacDiagram& d, int k, const std::vector<int>& weight);

/// Grading attached to a twist-2 outer diagram (integral eigenbasis).
GradedZ outer_grading2(const KacDiagram& d);
/// Grading attached to a D4^(3) diagram (Eisenstein scalars).
GradedC outer_grading3(const KacDiagram& d);

/// Per-residue dimensions; sums to dim g and dim g_i = dim g_{m-i}.
template <class S>
std::vector<int> dimension_vector(const Graded<S>& g) {
  return g.dims();
}

/// Dimension vector computed from weights alone, without building a table.
std::vector<int> dimension_vector_fast(const KacDiagram& d);

}  // namespace theta

#endif
