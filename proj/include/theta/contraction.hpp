#ifndef THETA_CONTRACTION_HPP
#define THETA_CONTRACTION_HPP

#include "theta/grading.hpp"

namespace theta {

/// theta-contraction g_(0): brackets of degrees i, j kept iff i + j <= m-1.
/// The output is N-graded by the same degrees.
template <class S>
LieTable<S> contract_zero(const Graded<S>& g) {
  LieTable<S> out;
  out.init(g.alg.dim);
  out.labels = g.alg.labels;
  for (int a = 0; a < g.alg.dim; ++a)
    for (int b = a + 1; b < g.alg.dim; ++b)
      if (g.degree[a] + g.degree[b] <= g.m - 1) out.set_entry(a, b, g.alg.entry(a, b));
  return out;
}

/// Complementary nilpotent contraction: [ , ]_inf = [ , ] - [ , ]_(0).
template <class S>
LieTable<S> contract_infinity(const Graded<S>& g) {
  LieTable<S> out;
  out.init(g.alg.dim);
  out.labels = g.alg.labels;
  for (int a = 0; a < g.alg.dim; ++a)
    for (int b = a + 1; b < g.alg.dim; ++b)
      if (g.degree[a] + g.degree[b] > g.m - 1) out.set_entry(a, b, g.alg.entry(a, b));
  return out;
}

/// Parabolic contraction p ltimes (n^-)^ab for the Z-grading defined by the
/// labels p_1..p_l (>= 0): brackets inside p = g(>=0) unchanged, inside
/// n^- = g(<0) zero, mixed brackets projected to n^-.
LieTable<long long> parabolic_contraction(const Chevalley& ch,
                                          const std::vector<int>& zlabels);

/// Checks Prop 1: with x homogeneous of degree 1 and xi_x = kappa(x, .), the
/// centralizer g^x (theta-contracted) and the coadjoint stabilizer of xi_x in
/// g_(0) coincide as subspaces, and the stabilizer is closed under the
/// contracted bracket.  Computed over F_p.
bool verify_centralizer_contraction(const GradedZ& g, const std::vector<long long>& x,
                                    unsigned long long seed);

}  // namespace theta

#endif
