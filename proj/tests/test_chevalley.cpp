#include <doctest.h>

#include <numeric>

#include "theta/chevalley.hpp"

using namespace theta;

namespace {

long long n_coeff(const Chevalley& ch, int a, int b, int c) {
  bool flip = a > b;
  if (flip) std::swap(a, b);
  for (const auto& [i, v] : ch.table.entry(a, b))
    if (i == c) return flip ? -v : v;
  return 0;
}

// root-string brute force: largest k with beta - k alpha a root
int string_p(const RootSystem& rs, int a, int b) {
  int p = 0;
  Coords c = rs.roots[b];
  while (true) {
    for (int i = 0; i < rs.rank; ++i) c[i] -= rs.roots[a][i];
    if (rs.index_of(c) < 0) break;
    ++p;
  }
  return p;
}

void check_chevalley_axioms(const SimpleType& t) {
  Chevalley ch = build_chevalley(build_root_system(t));
  const RootSystem& rs = ch.rs;
  const int nr = ch.n_roots();
  // [e_a, e_{-a}] = h_a, [h, e_g] = <g, a_i^vee> e_g
  for (int a = 0; a < rs.n_positive; ++a) {
    const auto& e = ch.table.entry(a, rs.negative_of(a));
    Coords got(rs.rank, 0);
    for (const auto& [c, v] : e) {
      REQUIRE(c >= nr);
      got[c - nr] = static_cast<int>(v);
    }
    // h_gamma = coroot of gamma: <beta, h_gamma> = <beta, gamma^vee>
    for (int b = 0; b < nr; ++b) {
      long long lhs = 0;
      for (int i = 0; i < rs.rank; ++i) lhs += static_cast<long long>(got[i]) * rs.pairing(b, i);
      long long rhs = 2LL * rs.inner(rs.roots[b], rs.roots[a]) / rs.inner(rs.roots[a], rs.roots[a]);
      REQUIRE(lhs == rhs);
    }
  }
  // |N_{a,b}| = p + 1 for every root pair with a + b a root
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (a == b || rs.negative_of(a) == b) continue;
      Coords s(rs.rank);
      for (int i = 0; i < rs.rank; ++i) s[i] = rs.roots[a][i] + rs.roots[b][i];
      int c = rs.index_of(s);
      if (c < 0) continue;
      REQUIRE(std::abs(n_coeff(ch, a, b, c)) == string_p(rs, a, b) + 1);
    }
  REQUIRE(jacobi_holds(ch.table));
}

}  // namespace

TEST_CASE("sl2 relations: [e,f]=h, [h,e]=2e, [h,f]=-2f") {
  Chevalley ch = build_chevalley(build_root_system({'A', 1}));
  // basis: e at 0, f at 1, h at 2
  CHECK(ch.table.entry(0, 1) == LieTable<long long>::Entry{{2, 1}});
  CHECK(ch.table.entry(0, 2) == LieTable<long long>::Entry{{0, -2}});
  CHECK(ch.table.entry(1, 2) == LieTable<long long>::Entry{{1, 2}});
}

TEST_CASE("Chevalley axioms and exhaustive Jacobi, one type per family") {
  check_chevalley_axioms({'A', 3});
  check_chevalley_axioms({'B', 3});
  check_chevalley_axioms({'C', 3});
  check_chevalley_axioms({'D', 4});
  check_chevalley_axioms({'G', 2});
  check_chevalley_axioms({'F', 4});
}

TEST_CASE("diagram automorphisms: fixed subalgebra dimensions") {
  // A3 flip -> C2, dim 10
  {
    Chevalley ch = build_chevalley(build_root_system({'A', 3}));
    Automorphism s = diagram_automorphism(ch, {2, 1, 0});
    CHECK(s.order == 2);
    auto dims = sigma_decomposition_dims(ch, s);
    CHECK(dims == std::vector<int>{10, 5});
  }
  // D4 triality -> G2, dims (14, 7, 7)
  {
    Chevalley ch = build_chevalley(build_root_system({'D', 4}));
    Automorphism s = diagram_automorphism(ch, {2, 1, 3, 0});
    CHECK(s.order == 3);
    auto dims = sigma_decomposition_dims(ch, s);
    CHECK(dims == std::vector<int>{14, 7, 7});
  }
  // trivial permutation -> identity map
  {
    Chevalley ch = build_chevalley(build_root_system({'A', 2}));
    Automorphism s = diagram_automorphism(ch, {0, 1});
    CHECK(s.order == 1);
    for (int i = 0; i < ch.table.dim; ++i) {
      CHECK(s.perm[i] == i);
      CHECK(s.sign[i] == 1);
    }
  }
  // non-symmetry rejected
  {
    Chevalley ch = build_chevalley(build_root_system({'B', 3}));
    CHECK_THROWS_AS(diagram_automorphism(ch, {2, 1, 0}), std::invalid_argument);
  }
}

TEST_CASE("A4 flip has fixed subalgebra B2 (dim 10, so_5)") {
  Chevalley ch = build_chevalley(build_root_system({'A', 4}));
  Automorphism s = diagram_automorphism(ch, {3, 2, 1, 0});
  auto dims = sigma_decomposition_dims(ch, s);
  CHECK(dims[0] == 10);
  CHECK(dims[0] + dims[1] == 24);
}

TEST_CASE("eigenbasis bracket table closes (A3 flip and D4 triality)") {
  {
    Chevalley ch = build_chevalley(build_root_system({'A', 3}));
    Automorphism s = diagram_automorphism(ch, {2, 1, 0});
    auto eb = sigma_eigenbasis2(ch, s);
    LieTable<long long> t = table_in_eigenbasis(ch.table, eb);
    CHECK(jacobi_holds(t));
  }
  {
    Chevalley ch = build_chevalley(build_root_system({'D', 4}));
    Automorphism s = diagram_automorphism(ch, {2, 1, 3, 0});
    auto eb = sigma_eigenbasis3(ch, s);
    LieTable<Cyc3> t = table_in_eigenbasis_cyc(ch, eb);
    CHECK(jacobi_holds(t));
  }
}

TEST_CASE("Killing form of sl2: k(h,h)=8, k(e,f)=4; ad-invariance") {
  Chevalley ch = build_chevalley(build_root_system({'A', 1}));
  auto k = killing(ch.table);
  CHECK(k[2][2] == 8);
  CHECK(k[0][1] == 4);
  CHECK(k[0][0] == 0);
  CHECK(killing_ad_invariant(ch.table, k));
}

TEST_CASE("Killing form: weight orthogonality k(e_a, e_b) = 0 unless b = -a") {
  Chevalley ch = build_chevalley(build_root_system({'A', 2}));
  auto k = killing(ch.table);
  const int nr = ch.n_roots();
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      if (b != ch.rs.negative_of(a)) CHECK(k[a][b] == 0);
  CHECK(killing_ad_invariant(ch.table, k));
}

TEST_CASE("centralizer: x = 0 gives the whole algebra") {
  Chevalley ch = build_chevalley(build_root_system({'A', 1}));
  std::vector<long long> x(3, 0);
  auto c = centralizer(ch.table, x);
  CHECK(c.dim == 3);
}

TEST_CASE("centralizer of e in sl2: span{e}, abelian") {
  Chevalley ch = build_chevalley(build_root_system({'A', 1}));
  std::vector<long long> x{1, 0, 0};
  auto c = centralizer(ch.table, x);
  CHECK(c.dim == 1);
}

TEST_CASE("centralizer of e1 + e2 in sl3: dim 2, abelian") {
  Chevalley ch = build_chevalley(build_root_system({'A', 2}));
  std::vector<long long> x(ch.table.dim, 0);
  // positive height-1 roots come first in root order
  x[0] = 1;
  x[1] = 1;
  auto c = centralizer(ch.table, x);
  CHECK(c.dim == 2);
  for (int a = 0; a < c.dim; ++a)
    for (int b = a + 1; b < c.dim; ++b) CHECK(c.entry(a, b).empty());
}

TEST_CASE("Killing nondegeneracy check accepts g and rejects a contraction-like table") {
  Chevalley ch = build_chevalley(build_root_system({'B', 2}));
  auto k = killing(ch.table);
  CHECK_NOTHROW(check_killing_nondegenerate(k));
  LieTable<long long> ab;
  ab.init(3);
  CHECK_THROWS_AS(check_killing_nondegenerate(killing(ab)), std::domain_error);
}

TEST_CASE("sigma decomposition of the identity is a single piece") {
  Chevalley ch = build_chevalley(build_root_system({'A', 2}));
  Automorphism id = diagram_automorphism(ch, {0, 1});
  CHECK(sigma_decomposition_dims(ch, id) == std::vector<int>{8});
}
