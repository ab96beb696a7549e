#include <doctest.h>

#include "theta/grading.hpp"
#include "theta/kac.hpp"

using namespace theta;

TEST_CASE("validate: coprime nonzero labels") {
  KacDiagram g2 = parse_diagram("G2[0,1,1]");
  CHECK(!validate(g2));
  CHECK(g2.order() == 5);
  CHECK(validate(parse_diagram("G2[0,2,2]")) == KacError::NonCoprime);
  CHECK(validate(parse_diagram("G2[0,0,0]")) == KacError::AllZero);
  KacDiagram d43 = parse_diagram("D4^3[1,0,1]");
  CHECK(!validate(d43));
  CHECK(d43.order() == 6);
}

TEST_CASE("parser round-trips with printer") {
  for (const char* s : {"G2[0,1,1]", "A5^2[1,0,1,0]", "F4[0,1,0,0,0]", "D4^3[1,0,1]",
                        "A1[1,1]", "E7[1,0,0,0,0,0,1,0]"}) {
    CHECK(to_string(parse_diagram(s)) == s);
  }
  CHECK_THROWS_AS(parse_diagram("H2[1,0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("A2[1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("A2[1,0,0,0]"), std::invalid_argument);
}

TEST_CASE("readout: F4[0,1,0,0,0] is A3 + A1, semisimple, order 4") {
  KacDiagram d = parse_diagram("F4[0,1,0,0,0]");
  CHECK(d.order() == 4);
  ReductiveReadout r = readout(d);
  REQUIRE(r.semisimple_part.size() == 2);
  CHECK(r.semisimple_part[0] == SimpleType{'A', 1});
  CHECK(r.semisimple_part[1] == SimpleType{'A', 3});
  CHECK(r.center_dim == 0);
  CHECK(r.dim_g0 == 18);
}

TEST_CASE("readout: D4^3[1,0,1] is A1 + 1-dim centre") {
  ReductiveReadout r = readout(parse_diagram("D4^3[1,0,1]"));
  REQUIRE(r.semisimple_part.size() == 1);
  CHECK(r.semisimple_part[0] == SimpleType{'A', 1});
  CHECK(r.center_dim == 1);
  CHECK(r.dim_g0 == 4);
}

TEST_CASE("readout: all labels 1 gives abelian g_0 of dimension l") {
  ReductiveReadout r = readout(parse_diagram("A3[1,1,1,1]"));
  CHECK(r.semisimple_part.empty());
  CHECK(r.center_dim == 3);
  CHECK(r.dim_g0 == 3);
}

TEST_CASE("readout depends only on the support") {
  for (const char* s : {"C3[0,2,1,0]", "A3[2,3,0,1]", "G2[1,2,0]", "D4^2[1,2,0,1]"}) {
    KacDiagram d = parse_diagram(s);
    ReductiveReadout a = readout(d), b = readout(collapse(d));
    CHECK(a.semisimple_part == b.semisimple_part);
    CHECK(a.center_dim == b.center_dim);
    CHECK(a.dim_g0 == b.dim_g0);
  }
}

TEST_CASE("canonicalize: lexicographic minimum over the symmetry group") {
  CHECK(canonicalize(parse_diagram("A2[1,1,0]")).labels == std::vector<int>{0, 1, 1});
  CHECK(canonicalize(parse_diagram("A3[1,0,1,0]")).labels == std::vector<int>{0, 1, 0, 1});
  CHECK(canonicalize(parse_diagram("G2[1,2,3]")).labels == std::vector<int>{1, 2, 3});
  // idempotent
  KacDiagram c = canonicalize(parse_diagram("D4[1,0,0,1,0]"));
  CHECK(canonicalize(c).labels == c.labels);
}

TEST_CASE("order is symmetry-invariant") {
  KacDiagram d = parse_diagram("A4[2,1,0,3,0]");
  for (const auto& perm : d.diagram->symmetry) {
    std::vector<int> lab(d.labels.size());
    for (size_t i = 0; i < lab.size(); ++i) lab[perm[i]] = d.labels[i];
    KacDiagram moved{d.diagram, lab};
    CHECK(moved.order() == d.order());
  }
}

TEST_CASE("normalize_alcove") {
  auto aff = shared_affine({'A', 2}, 1);
  KacDiagram d = normalize_alcove({-1, 1, 1}, *aff);
  CHECK(d.labels == std::vector<int>{1, 0, 0});
  KacDiagram e = normalize_alcove({0, 1, 1}, *shared_affine({'G', 2}, 1));
  CHECK(e.labels == std::vector<int>{0, 1, 1});
  KacDiagram f = normalize_alcove({2, 0, 1}, *aff);
  CHECK(f.labels == std::vector<int>{2, 0, 1});
}

TEST_CASE("n_regular_inner: small worked examples") {
  CHECK(n_regular_inner({'G', 2}, 5).labels == std::vector<int>{0, 1, 1});
  CHECK(n_regular_inner({'A', 2}, 1).labels == std::vector<int>{1, 0, 0});
  KacDiagram a23 = n_regular_inner({'A', 2}, 3);
  CHECK(a23.labels == std::vector<int>{1, 1, 1});
  CHECK(dimension_vector_fast(a23) == std::vector<int>{2, 3, 3});
  CHECK(n_regular_inner({'A', 2}, 7).labels == std::vector<int>{5, 1, 1});
}

TEST_CASE("n_regular_inner: label shape across types and orders") {
  for (SimpleType t : std::vector<SimpleType>{{'A', 3}, {'B', 3}, {'C', 4}, {'D', 5},
                                              {'G', 2}, {'F', 4}}) {
    int h = build_root_system(t).coxeter_number;
    for (int m = 1; m <= 2 * h; ++m) {
      KacDiagram d = n_regular_inner(t, m);
      CHECK(d.order() == m);
      CHECK(!validate(d));
      int big = 0;
      for (size_t i = 0; i < d.labels.size(); ++i) {
        if (d.labels[i] > 1) {
          ++big;
          CHECK(d.diagram->marks[i] == 1);  // Thm p_i=0,1(ii) shape
        }
      }
      CHECK(big <= 1);
      if (m <= h)
        for (int p : d.labels) CHECK(p <= 1);
      if (m >= h) {
        CHECK(d.labels[0] == m + 1 - h);
        for (size_t i = 1; i < d.labels.size(); ++i) CHECK(d.labels[i] == 1);
      }
    }
  }
}

TEST_CASE("enumerate: small cases") {
  auto a1 = enumerate_diagrams({'A', 1}, 1, 2);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].labels == std::vector<int>{1, 1});

  auto g2 = enumerate_diagrams({'G', 2}, 1, 3);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].labels == std::vector<int>{0, 1, 0});
  CHECK(g2[1].labels == std::vector<int>{1, 0, 1});

  auto d43 = enumerate_diagrams({'D', 4}, 3, 3);
  bool has_sigma = false;
  for (const auto& d : d43) has_sigma = has_sigma || d.labels == std::vector<int>{1, 0, 0};
  CHECK(has_sigma);

  // every enumerated diagram is canonical, valid, of the right order
  for (const auto& d : enumerate_diagrams({'C', 3}, 1, 6)) {
    CHECK(!validate(d));
    CHECK(d.order() == 6);
    CHECK(canonicalize(d).labels == d.labels);
  }
}

TEST_CASE("collapse") {
  KacDiagram c = parse_diagram("C3[0,2,1,0]");
  CHECK(collapse(c).labels == std::vector<int>{0, 1, 1, 0});
  CHECK(collapse(collapse(c)).labels == collapse(c).labels);
  KacDiagram a = parse_diagram("A2[1,1,1]");
  CHECK(collapse(a).labels == a.labels);
  CHECK(collapse(a).order() == 3);
  // collapse commutes with canonicalize
  KacDiagram d = parse_diagram("A3[3,0,1,0]");
  CHECK(canonicalize(collapse(d)).labels == collapse(canonicalize(d)).labels);
}

TEST_CASE("readout dimensions agree with the grading dimensions, full sweeps") {
  struct Case {
    SimpleType t;
    int twist;
  };
  for (const Case& c : {Case{{'A', 4}, 1}, Case{{'B', 3}, 1}, Case{{'C', 3}, 1},
                        Case{{'D', 4}, 1}, Case{{'G', 2}, 1}, Case{{'F', 4}, 1},
                        Case{{'A', 5}, 2}, Case{{'D', 5}, 2}, Case{{'E', 6}, 2},
                        Case{{'D', 4}, 3}}) {
    for (int m = c.twist; m <= 6; m += c.twist) {
      for (const auto& d : enumerate_diagrams(c.t, c.twist, m)) {
        ReductiveReadout r = readout(d);
        auto dims = dimension_vector_fast(d);
        CHECK(r.dim_g0 == dims[0]);
        if (m > 1) CHECK(r.dim_g1 == dims[1]);
        // g_0 semisimple iff exactly one nonzero label; abelian iff all nonzero
        int nz = 0;
        for (int p : d.labels) nz += p != 0;
        CHECK((r.center_dim == 0) == (nz == 1));
        CHECK(r.semisimple_part.empty() == (nz == d.diagram->nodes));
      }
    }
  }
}
