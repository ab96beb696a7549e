#ifndef THETA_INDEXCALC_HPP
#define THETA_INDEXCALC_HPP

#include <optional>

#include "theta/grading.hpp"
#include "theta/modular.hpp"

namespace theta {

/// Result of a Monte Carlo coadjoint-rank computation.
///
/// Soundness: the rank of B(xi) at a sample never exceeds the generic rank
/// over the rationals, so computed_index >= ind q always.  Combined with the
/// semi-continuity bound ind g_(0) >= ind g, computed_index == rk g certifies
/// equality; otherwise the value is only an observation.
struct IndexReport {
  int dimension = 0;
  int computed_index = 0;
  int trials = 0;
  unsigned long long seed = 0;
  bool certified = false;
  std::optional<int> lower_bound;
  std::string note;  // "certified" or "observed value, not certified"
};

IndexReport index_of(const ModTable& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound);
IndexReport index_of(const LieTable<long long>& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound);
IndexReport index_of(const LieTable<Cyc3>& t, int trials, unsigned long long seed,
                     std::optional<int> lower_bound);

/// Generic stabilizer and quotient dimensions for the G_0-action on g_1,
/// from max-rank sampling of ad(.)x : g_0 -> g_1 over F_p.
struct OrbitData {
  int stabilizer_dim = 0;
  int quotient_dim = 0;
};

template <class S>
OrbitData generic_orbit_data(const Graded<S>& g, int trials, unsigned long long seed);

OrbitData generic_orbit_data(const GradedZ& g, int trials, unsigned long long seed);
OrbitData generic_orbit_data(const GradedC& g, int trials, unsigned long long seed);

/// Exact nilpotency test: the characteristic polynomial of ad x equals t^n,
/// decided by computing it modulo enough large primes to cover the Hadamard
/// coefficient bound.
bool is_nilpotent(const LieTable<long long>& L, const std::vector<long long>& x);

/// Regularity: dim ker(ad x) equals the supplied reductive rank l.  The
/// modular kernel bounds dim ker from above; over a reductive algebra
/// dim g^x >= l always, so agreement certifies equality.
bool is_regular(const LieTable<long long>& L, const std::vector<long long>& x, int l);

/// Stability probe of Prop 3: whether the minimal polynomial of ad x at
/// random small x in g_1 is squarefree.  Modular consensus over three large
/// primes, majority over trials; throws std::runtime_error when inconclusive.
bool generic_semisimple(const GradedZ& g, int trials, unsigned long long seed);
bool generic_semisimple(const GradedC& g, int trials, unsigned long long seed);

}  // namespace theta

#endif
