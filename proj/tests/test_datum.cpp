#include <doctest.h>

#include <numeric>

#include "theta/datum.hpp"
#include "theta/grading.hpp"

using namespace theta;

TEST_CASE("datum_of: inner examples") {
  Datum a23 = datum_of({'A', 2}, 1, 3);
  CHECK(a23.k == std::vector<int>{0, 1, 1});
  Datum a12 = datum_of({'A', 1}, 1, 2);
  CHECK(a12.k == std::vector<int>{0, 1});
  CHECK(std::accumulate(a23.k.begin(), a23.k.end(), 0) == 2);
}

TEST_CASE("datum_of: outer sl_{4n} example has k = (n, n, n-1, n)") {
  Datum d = datum_of({'A', 7}, 2, 4);  // n = 2
  CHECK(d.k == std::vector<int>{2, 2, 1, 2});
  CHECK(nreg_dims(d, dim_of({'A', 7})) == std::vector<int>{16, 16, 15, 16});
}

TEST_CASE("d_theta: both formulas agree") {
  CHECK(d_theta({2, 3, 3}) == 9);
  CHECK(d_theta({8}) == 0);
  CHECK(d_theta({4, 2, 3, 3, 2}) == 25);  // G2[0,1,1]
  CHECK_THROWS_AS(d_theta({3, 2, 4}), std::logic_error);
}

TEST_CASE("upsilon examples") {
  CHECK(upsilon(datum_of({'A', 2}, 1, 3), 8) == 9);
  CHECK(upsilon(datum_of({'A', 1}, 1, 2), 3) == 2);
}

TEST_CASE("nreg_dims: formula vector matches the height histogram") {
  Datum d = datum_of({'A', 2}, 1, 3);
  CHECK(nreg_dims(d, 8) == std::vector<int>{2, 3, 3});
  CHECK(nreg_dims(datum_of({'A', 2}, 1, 1), 8) == std::vector<int>{8});
  // cross-check against the actual grading of the N-regular diagram
  for (SimpleType t : std::vector<SimpleType>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    int h = build_root_system(t).coxeter_number;
    for (int m = 2; m <= h + 3; ++m) {
      auto formula = nreg_dims(datum_of(t, 1, m), dim_of(t));
      auto actual = dimension_vector_fast(n_regular_inner(t, m));
      CHECK(formula == actual);
    }
  }
}

TEST_CASE("b_value examples") {
  CHECK(b_value(8, 2, 2, 2) == 5);   // A2, all labels 1
  CHECK(b_value(8, 8, 2, 2) == 2);   // m = 1: b = rk g
  CHECK(b_value(3, 1, 1, 1) == 2);   // sl2 with theta = involution
}

TEST_CASE("bullet degrees and the main2 identity") {
  Datum a23 = datum_of({'A', 2}, 1, 3);
  CHECK(bullet_degrees(a23) == std::vector<long long>{3, 6});
  CHECK(main2_sum(a23) == 5);

  Datum a12 = datum_of({'A', 1}, 1, 2);
  CHECK(bullet_degrees(a12) == std::vector<long long>{2});
  CHECK(main2_sum(a12) == 2);

  Datum m1 = datum_of({'A', 3}, 1, 1);
  CHECK(bullet_degrees(m1) == std::vector<long long>{0, 0, 0});
  CHECK(main2_sum(m1) == 3);  // = l = b

  // sum of bullets = upsilon = D_theta on N-regular data
  for (SimpleType t : std::vector<SimpleType>{{'A', 4}, {'C', 3}, {'D', 4}, {'F', 4}}) {
    for (int m = 1; m <= 8; ++m) {
      Datum d = datum_of(t, 1, m);
      auto bullets = bullet_degrees(d);
      long long s = std::accumulate(bullets.begin(), bullets.end(), 0LL);
      CHECK(s == upsilon(d, dim_of(t)));
      CHECK(s == d_theta(nreg_dims(d, dim_of(t))));
    }
  }
}

TEST_CASE("main2_sum equals b_value on N-regular data, inner and outer") {
  struct Case {
    SimpleType t;
    int twist;
  };
  for (const Case& c : {Case{{'A', 4}, 1}, Case{{'B', 3}, 1}, Case{{'A', 5}, 2},
                        Case{{'A', 4}, 2}, Case{{'D', 5}, 2}, Case{{'E', 6}, 2},
                        Case{{'D', 4}, 3}}) {
    for (int m = c.twist; m <= 12; m += c.twist) {
      Datum d = datum_of(c.t, c.twist, m);
      auto dims = nreg_dims(d, dim_of(c.t));
      int rk0 = c.twist == 1 ? c.t.rank : fixed_subalgebra_type(c.t, c.twist).rank;
      CHECK(main2_sum(d) == b_value(dim_of(c.t), dims[0], c.t.rank, rk0));
    }
  }
}

TEST_CASE("friendly pairs: E7 order 4 dimension vectors") {
  auto pairs = friendly_pairs({'E', 7}, 1, 4);
  REQUIRE(!pairs.empty());
  bool found = false;
  for (const auto& p : pairs) {
    CHECK(!p.nreg_is_candidate);
    CHECK(p.dims_nreg == std::vector<int>{33, 35, 30, 35});
    if (p.dims_partner == std::vector<int>{33, 32, 36, 32}) found = true;
  }
  CHECK(found);
}

TEST_CASE("friendly pairs: E6 order 4 partner has the identical vector") {
  auto pairs = friendly_pairs({'E', 6}, 1, 4);
  REQUIRE(!pairs.empty());
  bool found = false;
  for (const auto& p : pairs)
    if (p.dims_nreg == std::vector<int>{20, 20, 18, 20} &&
        p.dims_partner == std::vector<int>{20, 20, 18, 20})
      found = true;
  CHECK(found);
}

TEST_CASE("friendly pairs: A1 order 2 has none; sl8 outer order 4 pair") {
  CHECK(friendly_pairs({'A', 1}, 1, 2).empty());
  auto pairs = friendly_pairs({'A', 7}, 2, 4);
  REQUIRE(!pairs.empty());
  for (const auto& p : pairs) {
    CHECK(p.nreg_is_candidate);
    CHECK(p.dims_nreg == std::vector<int>{16, 16, 15, 16});
    CHECK(p.dims_partner == std::vector<int>{16, 16, 15, 16});
  }
}

TEST_CASE("label shape checks") {
  CHECK(nreg_label_shape_check(n_regular_inner({'G', 2}, 5)).pass);
  CHECK(nreg_label_shape_check(n_regular_inner({'A', 2}, 7)).pass);
  KacDiagram bad = parse_diagram("G2[0,2,1]");
  CHECK(!nreg_label_shape_check(bad).pass);
}

TEST_CASE("upsilon dominates D_theta over enumerated diagrams") {
  for (SimpleType t : std::vector<SimpleType>{{'A', 3}, {'C', 3}, {'G', 2}}) {
    for (int m = 2; m <= 6; ++m) {
      Datum d = datum_of(t, 1, m);
      long long y = upsilon(d, dim_of(t));
      for (const auto& kd : enumerate_diagrams(t, 1, m))
        CHECK(y >= d_theta(dimension_vector_fast(kd)));
    }
  }
}

TEST_CASE("parabolic transcendence degree b(g) - b(l) + rk g, via both routes") {
  // A3 with Levi A1 (support {0,1,3} on the affine diagram): the theta-route
  // value b(g, theta) must agree with b(g) - b(l) + rk g
  KacDiagram d = parse_diagram("A3[1,1,0,1]");
  ReductiveReadout r = readout(d);
  long long b_theta = b_value(dim_of({'A', 3}), r.dim_g0, 3, rank_g0(d));
  long long b_g = b_value(dim_of({'A', 3}), 0, 3, 0);   // (dim g + rk g)/2
  long long b_l = b_value(r.dim_g0, 0, 3, 0);            // Levi has full rank
  CHECK(b_theta == b_g - b_l + 3);
  CHECK(b_theta == 8);
}
