#ifndef THETA_KAC_HPP
#define THETA_KAC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theta/rootsystem.hpp"

namespace theta {

/// A Kac diagram: affine (or twisted affine) diagram plus nonnegative labels,
/// the name of a finite-order automorphism.  Label 0 sits at the -delta
/// (resp. -delta_1) node.
struct KacDiagram {
  std::shared_ptr<const AffineDiagram> diagram;
  std::vector<int> labels;

  /// |theta| = p_0 + sum n_i p_i (inner), twist * sum a'_i p_i (outer).
  int order() const;
  int twist() const { return diagram->twist; }
};

enum class KacError { LabelsNegative, AllZero, NonCoprime, SizeMismatch };

std::string to_string(KacError e);

/// Accepts exactly the diagrams with some nonzero label and coprime labels.
/// NonCoprime inputs are rejected, not reduced: reduction changes the order.
std::optional<KacError> validate(const KacDiagram& d);

/// Throwing wrapper around validate().
void check_valid(const KacDiagram& d);

/// Reductive structure of g_0 plus the g_1 lowest-weight data read off the
/// diagram: the zero-label subdiagram is the Dynkin diagram of [g_0, g_0] and
/// the centre has dimension #nonzero - 1.
struct ReductiveReadout {
  std::vector<SimpleType> semisimple_part;  // sorted for determinism
  int center_dim = 0;
  std::vector<int> g1_lowest_weight_nodes;  // nodes with label = 1 mod order
  int dim_g0 = 0;
  int dim_g1 = 0;
};

ReductiveReadout readout(const KacDiagram& d);

/// Lexicographically smallest label vector over the diagram symmetry group.
KacDiagram canonicalize(const KacDiagram& d);

/// Affine-Weyl normalization of Kac coordinates: repeatedly reflect at the
/// smallest negative index until all coordinates are nonnegative.  Preserves
/// sum marks_i * coords_i at every step.  Requires that invariant positive.
KacDiagram normalize_alcove(const std::vector<int>& coords, const AffineDiagram& a);

/// Kac diagram of the unique inner N-regular automorphism of order m:
/// the alcove normalization of (m - (h-1), 1, ..., 1).  For m >= h this is
/// exactly (m+1-h, 1, ..., 1).
KacDiagram n_regular_inner(const SimpleType& t, int m);

/// All canonical valid diagrams of order exactly m, deterministically ordered.
std::vector<KacDiagram> enumerate_diagrams(const SimpleType& t, int twist, int m);

/// Labels mapped by p_i -> min(p_i, 1); same support, recomputed order.
KacDiagram collapse(const KacDiagram& d);

/// Text format "F4[0,1,0,0,0]", "A5^2[1,0,1]"; label order is node 0 first.
std::string to_string(const KacDiagram& d);

/// Parses the diagram grammar TYPE ['^' TWIST] '[' ints ']'.  Throws
/// std::invalid_argument with a position on malformed input.
KacDiagram parse_diagram(const std::string& text);

/// Shared AffineDiagram instances (they are immutable).
std::shared_ptr<const AffineDiagram> shared_affine(const SimpleType& t, int twist);

}  // namespace theta

#endif
