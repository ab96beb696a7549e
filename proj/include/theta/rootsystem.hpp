#ifndef THETA_ROOTSYSTEM_HPP
#define THETA_ROOTSYSTEM_HPP

#include <map>
#include <vector>

#include "theta/simpletype.hpp"

namespace theta {

using Coords = std::vector<int>;  // coordinates in the simple-root basis

/// Exact root-system data for a simple type.
///
/// Roots are stored in simple-root integer coordinates; there is no Euclidean
/// embedding.  Positive roots come first, ordered by (height, lex), and the
/// negative of roots[k] is roots[k + n_positive].
struct RootSystem {
  SimpleType type;
  int rank = 0;
  int dim = 0;                          // dim g = |roots| + rank
  std::vector<Coords> roots;            // all roots
  int n_positive = 0;                   // roots[0..n_positive) are positive
  std::vector<std::vector<int>> cartan; // A[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> root_len;            // (alpha_i, alpha_i)/2 per simple root
  Coords highest_root;                  // coordinates = marks n_i
  std::vector<int> exponents;           // ascending
  int coxeter_number = 0;

  int index_of(const Coords& c) const;  // -1 if not a root
  int negative_of(int idx) const;
  int height(int idx) const;
  bool is_positive(int idx) const { return idx < n_positive; }

  /// <roots[idx], alpha_i^vee>
  int pairing(int idx, int i) const;
  /// (roots[a], roots[b]) in the normalization (alpha_short, alpha_short) = 2
  int inner(const Coords& a, const Coords& b) const;
  /// (gamma, gamma)/2 for a root
  int length2(const Coords& c) const { return inner(c, c) / 2; }

  std::map<Coords, int> lookup;  // coords -> root index, filled at build time
};

/// Builds the root system by closing the simple roots under Weyl reflections.
/// Throws std::invalid_argument for an invalid type.
RootSystem build_root_system(const SimpleType& t);

/// Same, but also accepts the degenerate D3 and B1 needed internally as
/// folding parents and twisted fixed types.
RootSystem build_root_system_any(const SimpleType& t);

/// Exponents recomputed from the height histogram of the positive roots
/// (column lengths of the dual partition).
std::vector<int> exponents_of(const RootSystem& rs);

/// Affine or twisted-affine Dynkin diagram with marks and symmetry group.
///
/// Node 0 represents -delta (untwisted) or -delta_1 (twisted); nodes 1..r are
/// the simple roots of g (untwisted) or of g^sigma (twisted).  The Cartan
/// matrix is the Gram-based one, so the marks are an exact right null vector.
struct AffineDiagram {
  SimpleType base;
  int twist = 1;
  int nodes = 0;
  std::vector<int> marks;                    // marks[0] = 1 always
  std::vector<std::vector<int>> cartan;      // nodes x nodes
  std::vector<std::vector<int>> symmetry;    // all mark-preserving graph autos
  SimpleType fixed_type;                     // g^sigma type; = base if twist 1
  Coords delta1;                             // twisted: delta_1 in fixed_type coords
};

/// Throws std::invalid_argument for unsupported (type, twist) pairs.
/// twist 2 requires A_n (n>=2), D_n or E6; twist 3 requires D4.
AffineDiagram affine_diagram(const SimpleType& t, int twist);

/// Type of the fixed-point subalgebra g^sigma for the given twist.
SimpleType fixed_subalgebra_type(const SimpleType& t, int twist);

/// Dynkin-type classification of a Cartan matrix of a connected simple
/// diagram, by graph isomorphism against the candidate types of that rank.
/// Used for the zero-label subdiagram readout.  B1 is reported as A1.
SimpleType classify_connected_cartan(const std::vector<std::vector<int>>& a);

/// Graph automorphisms of a labeled Cartan matrix (marks optional),
/// via backtracking search.
std::vector<std::vector<int>> cartan_automorphisms(
    const std::vector<std::vector<int>>& a, const std::vector<int>& marks);

}  // namespace theta

#endif
