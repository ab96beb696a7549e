#ifndef THETA_CHEVALLEY_HPP
#define THETA_CHEVALLEY_HPP

#include "theta/lietable.hpp"
#include "theta/rootsystem.hpp"

namespace theta {

/// Chevalley basis of a simple Lie algebra: basis vectors 0..|roots|-1 are the
/// root vectors e_gamma in RootSystem order, followed by h_1..h_l.
///
/// Simply laced types come from the lattice cocycle construction; B, C, F4 and
/// G2 are folded from D_{l+1}, A_{2l-1}, E6 and D4.
struct Chevalley {
  RootSystem rs;
  LieTable<long long> table;

  int n_roots() const { return static_cast<int>(rs.roots.size()); }
  int cartan_index(int i) const { return n_roots() + i; }  // h_{i+1}
};

Chevalley build_chevalley(const RootSystem& rs);

/// A basis automorphism acting as x_i -> sign[i] * x_{perm[i]}.
struct Automorphism {
  int order = 1;
  std::vector<int> perm;
  std::vector<long long> sign;
};

/// Extends the Dynkin-diagram symmetry `node_perm` (a permutation of the
/// simple roots, 0-indexed) to a Lie algebra automorphism by iterated
/// bracketing from the simple generators.  Throws std::invalid_argument if the
/// permutation is not a diagram symmetry, std::logic_error if the extension is
/// inconsistent (a structure-constant sign bug).
Automorphism diagram_automorphism(const Chevalley& ch, const std::vector<int>& node_perm);

/// Verifies bracket preservation on every basis pair.
bool preserves_brackets(const Chevalley& ch, const Automorphism& a);

/// One sigma-eigenvector: residue k means sigma v = zeta^k v.  Vectors are
/// stored over S (int64 when ord(sigma) <= 2, Cyc3 for triality) and each one
/// is supported on a single sigma-orbit with coefficient 1 at the orbit
/// representative.
template <class S>
struct EigenBasis {
  int t = 1;  // ord(sigma)
  std::vector<std::vector<S>> vectors;
  std::vector<int> residue;
  std::vector<int> rep;  // original basis index carrying coefficient 1
};

EigenBasis<long long> sigma_eigenbasis2(const Chevalley& ch, const Automorphism& a);
EigenBasis<Cyc3> sigma_eigenbasis3(const Chevalley& ch, const Automorphism& a);

/// Piece dimensions of the sigma-eigenspace decomposition g_0^(s), ...,
/// g_{t-1}^(s).
std::vector<int> sigma_decomposition_dims(const Chevalley& ch, const Automorphism& a);

/// Rewrites the bracket table of `ch` in an eigenbasis.  Entry (a,b) of the
/// result expresses [v_a, v_b] in the eigenbasis; residues add mod t.
template <class S>
LieTable<S> table_in_eigenbasis(const LieTable<S>& base, const EigenBasis<S>& eb);

LieTable<long long> table_in_eigenbasis(const LieTable<long long>& base,
                                        const EigenBasis<long long>& eb);
LieTable<Cyc3> table_in_eigenbasis_cyc(const Chevalley& ch, const EigenBasis<Cyc3>& eb);

/// Killing form kappa(x_a, x_b) = tr(ad x_a ad x_b) on the given table.
std::vector<std::vector<long long>> killing(const LieTable<long long>& L);

/// Modular full-rank check of the form; a degenerate Killing form signals
/// non-semisimple input.  Throws std::domain_error when rank < dim over two
/// independent large primes.
void check_killing_nondegenerate(const std::vector<std::vector<long long>>& k);

/// Checks ad-invariance kappa([x,y],z) + kappa(y,[x,z]) = 0 on basis triples.
bool killing_ad_invariant(const LieTable<long long>& L,
                          const std::vector<std::vector<long long>>& k);

/// Centralizer of an integer element: basis of ker(ad x) with the induced
/// bracket table.  Exact integer arithmetic; throws std::overflow_error if an
/// intermediate exceeds 128 bits and std::domain_error if the induced table is
/// not integral on the primitive kernel basis.
LieTable<long long> centralizer(const LieTable<long long>& L,
                                const std::vector<long long>& x);

}  // namespace theta

#endif
