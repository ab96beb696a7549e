#ifndef THETA_DATUM_HPP
#define THETA_DATUM_HPP

#include "theta/kac.hpp"

namespace theta {

/// The arithmetic shadow (m, k-vector) of a periodic automorphism: k_i counts
/// the invariant generators H_j with m_j + r_j = i mod m, where m_j are the
/// exponents and zeta^{r_j} the eigenvalue of theta on H_j.
struct Datum {
  int m = 1;
  int twist = 1;
  std::vector<int> exponents;  // m_1 <= ... <= m_l
  std::vector<int> residues;   // r_j in [0, m)
  std::vector<int> k;          // k_0..k_{m-1}
};

/// r_j depends only on the connected component of Aut(g): trivial for inner;
/// for twist 2 the odd-degree generators of the A family, the Pfaffian of the
/// D family and the degree-5,9 generators of E6 pick up zeta^{m/2}; for
/// (D4, 3) the two degree-4 generators carry zeta^{m/3} and zeta^{2m/3}.
Datum datum_of(const SimpleType& t, int twist, int m);

/// D_theta = sum i dim g_i, checked against (m/2)(dim g - dim g_0).
/// Throws std::logic_error on mismatch (a grading bug).
long long d_theta(const std::vector<int>& dims);

/// Upper bound Y(m, k) of Prop otsenka-summa:
/// ((m-1) dim g + sum (2i+1-m) k_i) / 2.
long long upsilon(const Datum& d, int dim_g);

/// Dimension vector of the N-regular automorphism from the datum:
/// dim g_0 = (dim g + sum (m-1-2i) k_i)/m, then successive differences
/// dim g_{i+1} - dim g_i = k_{m-1-i} - k_i.
std::vector<int> nreg_dims(const Datum& d, int dim_g);

/// b(g, theta) = (dim g - dim g_0 + rk g + rk g_0)/2.
long long b_value(int dim_g, int dim_g0, int rk_g, int rk_g0);

/// Expected top phi-degrees in the N-regular case:
/// d_j^bullet = (m-1) m_j + ((m_j + r_j) mod m).
std::vector<long long> bullet_degrees(const Datum& d);

/// sum_j ((d_j^bullet - r_j)/m + 1); equals b(g, theta) for N-regular data.
long long main2_sum(const Datum& d);

/// Rank of g_0 read off a diagram (= l inner, rk g^sigma outer).
int rank_g0(const KacDiagram& d);

/// A friendly pair: the N-regular diagram of this order paired with every
/// non-equivalent diagram of equal dim g_0 (hence, by Thm main3(ii), every
/// partner also admits a g.g.s.).  For outer components the N-regular member
/// is only a minimal-dim-g0 candidate and is flagged as such.
struct FriendlyPair {
  KacDiagram nreg;
  KacDiagram partner;
  bool nreg_is_candidate = false;  // outer: no exact construction available
  std::vector<int> dims_nreg;
  std::vector<int> dims_partner;
};

std::vector<FriendlyPair> friendly_pairs(const SimpleType& t, int twist, int m);

/// Label-shape constraints on N-regular inner diagrams (Thm p_i=0,1 and
/// Cor 0,1).
struct LabelShapeReport {
  bool at_most_one_big = false;       // at most one label exceeds 1
  bool big_at_mark1_rest_one = false; // a label > 1 sits at a mark-1 node, others = 1
  bool all01_when_small_order = false;  // m <= h implies labels in {0,1}
  bool pass = false;
};

LabelShapeReport nreg_label_shape_check(const KacDiagram& d);

}  // namespace theta

#endif
