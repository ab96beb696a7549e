#ifndef THETA_CLASSICAL_HPP
#define THETA_CLASSICAL_HPP

#include <set>

#include "theta/grading.hpp"
#include "theta/kac.hpp"
#include "theta/modular.hpp"

namespace theta {

using IMat = std::vector<std::vector<long long>>;

/// Matrix realization of theta for a classical type: a graded basis of g as
/// integer matrices.  Conjugation models (sl/so/sp inner, so outer) also carry
/// the defining-representation degrees 2*v (half-integers appear exactly when
/// A^m = -I, the `half` branch).
struct MatrixRealization {
  SimpleType type;
  int twist = 1;
  int N = 0;
  char form = 'n';  // 'n' sl, 's' so, 'a' sp
  int m = 1;
  bool half = false;          // A^m = -I
  std::vector<int> v2;        // 2 * deg of the defining basis vectors
  IMat formB;                 // bilinear form for so/sp
  std::vector<IMat> basis;    // basis of g
  std::vector<int> degree;    // theta-degree per basis element, in [0, m)
  std::vector<int> zdegree;   // Z-degree (inner conjugation models), else empty
};

/// Builds the realization and asserts that its dimension vector equals the
/// abstract grading's.  Throws std::invalid_argument for non-classical types.
MatrixRealization realize(const KacDiagram& d);

/// Multiplicities b_j = dim V(zeta^j) (or the A^m = -I variant, where index j
/// stands for the eigenvalue zeta_{2m}^{2j+1}).
struct EigenMultiplicities {
  int m = 1;
  bool half = false;
  std::vector<int> b;
};

EigenMultiplicities eigen_multiplicities(const MatrixRealization& r);

/// Vinberg rank dictionary for so_N of type I (A^m = I):
/// rk(g_0, g_1) = min{b_0, ..., b_{floor(m/2)}}.
int vinberg_rank_so(const EigenMultiplicities& e);

/// One basic invariant: a characteristic-polynomial coefficient of the given
/// degree, or the Pfaffian (so_{2l}).  residue = r_j, the theta-eigenvalue
/// exponent, fixed by the connected component of Aut(g).
struct Invariant {
  int degree = 2;
  bool pfaffian = false;
  int residue = 0;
};

/// Free generating set; degrees equal exponents + 1 (asserted).
std::vector<Invariant> invariant_family(const MatrixRealization& r);

/// Evaluates the invariant at an N x N matrix over F_p.
uint64_t eval_invariant(const Invariant& H, const MatrixRealization& r,
                        const modp::Mat& x, uint64_t p);

/// Top phi-degree of H at random x in g, by interpolation over F_p at
/// (m-1) deg H + 1 points; one-sided (reported <= true value).
int phi_degree(const Invariant& H, const MatrixRealization& r, int trials,
               unsigned long long seed);

struct GgsCheck {
  long long sum_phi = 0;
  long long d_theta = 0;
  bool certified = false;  // sum_phi == d_theta certifies a g.g.s.
};

/// Thm kokosik certificate: sum of phi-degrees against D_theta.
GgsCheck ggs_sum_check(const MatrixRealization& r, const std::vector<int>& dims,
                       int trials, unsigned long long seed);

/// phi-degrees with a nonzero bi-homogeneous component, union over trials.
std::set<int> bihom_support(const Invariant& H, const MatrixRealization& r, int trials,
                            unsigned long long seed);

/// Top n^- -degree of H for the parabolic split attached to the inner
/// Z-grading (Lemma sovpad compares this with phi_degree when p_0 > 0).
int nminus_degree(const Invariant& H, const MatrixRealization& r, int trials,
                  unsigned long long seed);

/// Rank of the Jacobian of the type-(m-1) invariants restricted to g_1 at a
/// random modular point; always <= k_{m-1}, equality certifies independence.
/// Checks first that the other invariants vanish on g_1.
int restricted_jacobian_rank(const MatrixRealization& r, int trials,
                             unsigned long long seed);

/// Pfaffian of a skew-symmetric matrix over F_p.
uint64_t pfaffian(modp::Mat s, uint64_t p);

}  // namespace theta

#endif
