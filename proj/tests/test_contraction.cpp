#include <doctest.h>

#include "theta/contraction.hpp"
#include "theta/modular.hpp"

using namespace theta;

namespace {

const Chevalley& chev(const SimpleType& t) {
  static std::map<std::pair<char, int>, Chevalley> cache;
  auto key = std::make_pair(t.family, t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_chevalley(build_root_system(t))).first;
  return it->second;
}

GradedZ graded(const char* s) {
  KacDiagram d = parse_diagram(s);
  if (d.twist() == 1) return inner_grading(chev(d.diagram->base), d);
  return outer_grading2(d);
}

}  // namespace

TEST_CASE("m = 1: contract_zero is the identity, contract_infinity abelian") {
  GradedZ g = graded("A2[1,0,0]");
  CHECK(same_bracket(contract_zero(g), g.alg));
  LieTable<long long> inf = contract_infinity(g);
  for (int a = 0; a < inf.dim; ++a)
    for (int b = a + 1; b < inf.dim; ++b) CHECK(inf.entry(a, b).empty());
}

TEST_CASE("m = 2: all brackets inside g_1 vanish in g_(0)") {
  GradedZ g = graded("A3[0,1,0,1]");
  CHECK(g.m == 2);
  LieTable<long long> c = contract_zero(g);
  for (int a : g.pieces[1])
    for (int b : g.pieces[1])
      if (a < b) CHECK(c.entry(a, b).empty());
  CHECK(jacobi_holds(c));
}

TEST_CASE("contract_zero + contract_infinity = original bracket") {
  for (const char* s : {"A2[1,1,1]", "G2[0,1,1]", "C3[0,2,1,0]", "A5^2[1,0,1,1]"}) {
    GradedZ g = graded(s);
    LieTable<long long> c0 = contract_zero(g), ci = contract_infinity(g);
    for (int a = 0; a < g.alg.dim; ++a)
      for (int b = a + 1; b < g.alg.dim; ++b) {
        auto е = g.alg.entry(a, b);
        auto sum = c0.entry(a, b);
        sum.insert(sum.end(), ci.entry(a, b).begin(), ci.entry(a, b).end());
        std::sort(sum.begin(), sum.end());
        std::sort(е.begin(), е.end());
        CHECK(sum == е);
      }
    CHECK(jacobi_holds(c0));
    CHECK(jacobi_holds(ci));
  }
}

TEST_CASE("contract_zero output is N-graded (no wraparound)") {
  GradedZ g = graded("G2[0,1,1]");
  LieTable<long long> c = contract_zero(g);
  for (int a = 0; a < c.dim; ++a)
    for (int b = a + 1; b < c.dim; ++b)
      for (const auto& [e, v] : c.entry(a, b)) {
        (void)v;
        CHECK(g.degree[e] == g.degree[a] + g.degree[b]);
      }
}

TEST_CASE("contract_infinity is nilpotent: (ad x)^{m+1} = 0 for basis x") {
  GradedZ g = graded("A2[1,1,1]");
  LieTable<long long> ci = contract_infinity(g);
  const int n = ci.dim;
  for (int x = 0; x < n; ++x) {
    // dense ad_x, exact integer powers (m small)
    std::vector<std::vector<long long>> mat(n, std::vector<long long>(n, 0));
    std::vector<long long> col(n);
    std::vector<int> touched;
    for (int b = 0; b < n; ++b) {
      std::fill(col.begin(), col.end(), 0);
      touched.clear();
      ci.bracket_acc(x, b, 1, col, touched);
      for (int r = 0; r < n; ++r) mat[r][b] = col[r];
    }
    auto cur = mat;
    for (int k = 1; k < g.m + 1; ++k) {
      std::vector<std::vector<long long>> nxt(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (cur[i][j])
            for (int r = 0; r < n; ++r) nxt[r][j] += mat[r][i] * cur[i][j];
      cur = nxt;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(cur[i][j] == 0);
  }
}

TEST_CASE("parabolic contraction: sl2 with label 1 (b + f^ab)") {
  const Chevalley& ch = chev({'A', 1});
  LieTable<long long> q = parabolic_contraction(ch, {1});
  // [e,f]_(p) = 0, [h,e] = 2e, [h,f] = -2f
  CHECK(q.entry(0, 1).empty());
  CHECK(q.entry(0, 2) == LieTable<long long>::Entry{{0, -2}});
  CHECK(q.entry(1, 2) == LieTable<long long>::Entry{{1, 2}});
}

TEST_CASE("parabolic contraction with all labels 0 is g itself") {
  const Chevalley& ch = chev({'A', 2});
  CHECK(same_bracket(parabolic_contraction(ch, {0, 0}), ch.table));
}

TEST_CASE("Thm semidir: contract_zero = parabolic contraction when p_0 > 0") {
  for (const char* s : {"A2[1,1,1]", "A3[2,1,0,1]", "B3[1,0,1,0]", "C3[1,1,1,0]",
                        "G2[1,1,0]", "F4[2,0,1,0,0]", "D4[1,1,0,0,0]"}) {
    KacDiagram d = parse_diagram(s);
    REQUIRE(d.labels[0] > 0);
    const Chevalley& ch = chev(d.diagram->base);
    GradedZ g = inner_grading(ch, d);
    std::vector<int> zl(d.labels.begin() + 1, d.labels.end());
    CHECK(same_bracket(contract_zero(g), parabolic_contraction(ch, zl)));
  }
}

TEST_CASE("A2[1,1,1] contraction equals the Borel parabolic contraction") {
  const Chevalley& ch = chev({'A', 2});
  GradedZ g = inner_grading(ch, parse_diagram("A2[1,1,1]"));
  CHECK(same_bracket(contract_zero(g), parabolic_contraction(ch, {1, 1})));
}

TEST_CASE("Thm change-to-1: contraction depends only on the support") {
  for (const char* s : {"C3[0,2,1,0]", "A3[0,3,2,0]", "G2[0,2,1]", "B3[2,0,3,1]",
                        "D4[0,2,0,1,1]"}) {
    KacDiagram d = parse_diagram(s);
    const Chevalley& ch = chev(d.diagram->base);
    CHECK(same_bracket(contract_zero(inner_grading(ch, d)),
                       contract_zero(inner_grading(ch, collapse(d)))));
  }
}

TEST_CASE("Thm change2: outer contraction depends only on the support") {
  for (const char* s : {"A5^2[0,2,1,0]", "D5^2[2,0,1,0,3]", "A4^2[0,2,3]",
                        "E6^2[0,1,0,2,0]"}) {
    KacDiagram d = parse_diagram(s);
    CHECK(same_bracket(contract_zero(outer_grading2(d)),
                       contract_zero(outer_grading2(collapse(d)))));
  }
  KacDiagram t = parse_diagram("D4^3[0,2,1]");
  CHECK(same_bracket(contract_zero(outer_grading3(t)),
                     contract_zero(outer_grading3(collapse(t)))));
}

TEST_CASE("same_bracket distinguishes different contractions") {
  GradedZ a = graded("A2[1,1,1]");
  CHECK(same_bracket(contract_zero(a), contract_zero(a)));
  CHECK(!same_bracket(contract_zero(a), a.alg));
  GradedZ b = graded("A2[0,1,1]");
  CHECK_THROWS_AS(same_bracket(contract_zero(a), contract_zero(outer_grading2(
                                                     parse_diagram("A3^2[1,0,0]")))),
                  std::invalid_argument);
  CHECK(!same_bracket(contract_zero(a), contract_zero(b)));
}

TEST_CASE("verify_centralizer_contraction: sl2 [1,1] with x = e") {
  GradedZ g = graded("A1[1,1]");
  std::vector<long long> x(3, 0);
  x[0] = 1;  // e has degree 1 here
  CHECK(verify_centralizer_contraction(g, x, 7));
}

TEST_CASE("verify_centralizer_contraction: A2[1,1,1] at random degree-1 x") {
  GradedZ g = graded("A2[1,1,1]");
  modp::Rng rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<long long> x(g.alg.dim, 0);
    for (int i : g.pieces[1]) x[i] = static_cast<long long>(rng.below(7)) - 3;
    CHECK(verify_centralizer_contraction(g, x, 99 + trial));
  }
}

TEST_CASE("verify_centralizer_contraction: x = 0 trivially true") {
  GradedZ g = graded("A1[1,1]");
  CHECK(verify_centralizer_contraction(g, std::vector<long long>(3, 0), 1));
}
