#include "theta/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "theta/classical.hpp"
#include "theta/contraction.hpp"
#include "theta/datum.hpp"
#include "theta/indexcalc.hpp"

namespace theta {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Recorder {
  SuiteResult* out;
  Clock::time_point t0 = Clock::now();

  void claim(const std::string& check, const std::string& item, bool pass,
             const std::string& values = {}) {
    out->records.push_back({check, item, values, true, pass, ms_since(t0)});
    t0 = Clock::now();
  }
  void info(const std::string& check, const std::string& item,
            const std::string& values) {
    out->records.push_back({check, item, values, false, true, ms_since(t0)});
    t0 = Clock::now();
  }
};

std::vector<SimpleType> all_types(int max_rank, bool exceptional) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({'A', l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({'B', l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({'C', l});
  for (int l = 4; l <= max_rank; ++l) out.push_back({'D', l});
  if (exceptional) {
    for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back({'E', l});
    if (max_rank >= 4) out.push_back({'F', 4});
    if (max_rank >= 2) out.push_back({'G', 2});
  }
  return out;
}

std::vector<std::pair<SimpleType, int>> twisted_pairs(int max_rank) {
  std::vector<std::pair<SimpleType, int>> out;
  for (int l = 2; l <= max_rank; ++l) out.push_back({{'A', l}, 2});
  for (int l = 4; l <= max_rank; ++l) out.push_back({{'D', l}, 2});
  if (max_rank >= 6) out.push_back({{'E', 6}, 2});
  if (max_rank >= 4) out.push_back({{'D', 4}, 3});
  return out;
}

// diagram moved by a graph symmetry so that the node-0 label is positive;
// requires some nonzero label on a mark-1 node
KacDiagram move_to_p0(const KacDiagram& d) {
  KacDiagram best = d;
  bool found = d.labels[0] > 0;
  for (const auto& perm : d.diagram->symmetry) {
    std::vector<int> lab(d.labels.size());
    for (size_t i = 0; i < lab.size(); ++i) lab[perm[i]] = d.labels[i];
    if (lab[0] > 0 && (!found || lab < best.labels)) {
      best.labels = lab;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("no symmetry moves a label to node 0");
  return best;
}

// all valid diagrams with every label <= cap, up to symmetry
std::vector<KacDiagram> diagrams_with_small_labels(const SimpleType& t, int twist,
                                                   int cap) {
  auto aff = shared_affine(t, twist);
  std::set<std::vector<int>> seen;
  std::vector<int> labels(aff->nodes, 0);
  std::vector<KacDiagram> out;
  std::function<void(int)> rec = [&](int node) {
    if (node == aff->nodes) {
      int g = 0;
      for (int p : labels) g = std::gcd(g, p);
      if (g != 1) return;
      KacDiagram d{aff, labels};
      auto canon = canonicalize(d).labels;
      if (seen.insert(canon).second) out.push_back(KacDiagram{aff, canon});
      return;
    }
    for (int p = 0; p <= cap; ++p) {
      labels[node] = p;
      rec(node + 1);
    }
    labels[node] = 0;
  };
  rec(0);
  return out;
}

std::vector<int> height_histogram_dims(const SimpleType& t, int m) {
  const RootSystem& rs = shared_chevalley(t).rs;
  std::vector<int> dims(m, 0);
  for (size_t i = 0; i < rs.roots.size(); ++i)
    dims[((rs.height(static_cast<int>(i)) % m) + m) % m]++;
  dims[0] += rs.rank;
  return dims;
}

// ---- individual suites -----------------------------------------------------

void suite_jacobi(Recorder& rec, const SuiteOptions& opt) {
  (void)opt;
  std::vector<SimpleType> types;
  for (int l = 1; l <= 14; ++l) types.push_back({'A', l});
  for (int l = 2; l <= 10; ++l) types.push_back({'B', l});
  for (int l = 2; l <= 10; ++l) types.push_back({'C', l});
  for (int l = 4; l <= 11; ++l) types.push_back({'D', l});
  types.push_back({'E', 6});
  types.push_back({'E', 7});
  types.push_back({'E', 8});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (const auto& t : types) {
    if (dim_of(t) > 250) continue;
    const Chevalley& ch = shared_chevalley(t);
    int a = -1, b = -1, c = -1;
    bool ok = jacobi_holds(ch.table, &a, &b, &c);
    rec.claim("jacobi", to_string(t), ok, "dim=" + std::to_string(ch.table.dim));
  }
}

void suite_dtheta(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 6;
  int max_order = opt.max_order ? opt.max_order : 10;
  auto types = all_types(max_rank, true);
  types.push_back({'E', 7});
  std::vector<std::pair<SimpleType, int>> cases;
  for (const auto& t : types) cases.push_back({t, 1});
  for (const auto& tw : twisted_pairs(max_rank)) cases.push_back(tw);
  for (const auto& [t, twist] : cases) {
    for (int m = twist; m <= max_order; m += twist) {
      int count = 0;
      bool ok = true;
      for (const auto& d : enumerate_diagrams(t, twist, m)) {
        ++count;
        try {
          d_theta(dimension_vector_fast(d));  // asserts both formulas agree
        } catch (const std::logic_error&) {
          ok = false;
        }
      }
      if (count)
        rec.claim("d-theta",
                  to_string(t) + (twist > 1 ? "^" + std::to_string(twist) : "") +
                      " m=" + std::to_string(m),
                  ok, "diagrams=" + std::to_string(count));
    }
  }
}

void suite_semidir(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 5;
  int max_order = opt.max_order ? opt.max_order : 8;
  auto types = all_types(max_rank, false);
  types.push_back({'G', 2});
  types.push_back({'F', 4});
  for (const auto& t : types) {
    const Chevalley& ch = shared_chevalley(t);
    for (int m = 2; m <= max_order; ++m) {
      for (const auto& d : enumerate_diagrams(t, 1, m)) {
        bool mark1 = false;
        for (size_t i = 0; i < d.labels.size(); ++i)
          if (d.diagram->marks[i] == 1 && d.labels[i] > 0) mark1 = true;
        if (!mark1) continue;
        KacDiagram moved = move_to_p0(d);
        GradedZ g = inner_grading(ch, moved);
        std::vector<int> zl(moved.labels.begin() + 1, moved.labels.end());
        bool ok = same_bracket(contract_zero(g), parabolic_contraction(ch, zl));
        rec.claim("semidir", to_string(d), ok, "moved=" + to_string(moved));
      }
    }
  }
}

void suite_collapse(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 5;
  const int cap = 3;
  for (const auto& t : all_types(max_rank, false)) {
    const Chevalley& ch = shared_chevalley(t);
    int count = 0;
    bool ok = true;
    for (const auto& d : diagrams_with_small_labels(t, 1, cap)) {
      ++count;
      if (!same_bracket(contract_zero(inner_grading(ch, d)),
                        contract_zero(inner_grading(ch, collapse(d)))))
        ok = false;
    }
    rec.claim("collapse", to_string(t), ok, "diagrams=" + std::to_string(count));
  }
  for (const auto& [t, twist] : twisted_pairs(opt.max_rank ? opt.max_rank : 5)) {
    int count = 0;
    bool ok = true;
    for (const auto& d : diagrams_with_small_labels(t, twist, cap)) {
      ++count;
      if (twist == 2) {
        if (!same_bracket(contract_zero(outer_grading2(d)),
                          contract_zero(outer_grading2(collapse(d)))))
          ok = false;
      } else {
        if (!same_bracket(contract_zero(outer_grading3(d)),
                          contract_zero(outer_grading3(collapse(d)))))
          ok = false;
      }
    }
    rec.claim("collapse", to_string(t) + "^" + std::to_string(twist), ok,
              "diagrams=" + std::to_string(count));
  }
}

// index battery helper: certify ind g_(0) = rk g over all diagrams of the
// given (type, twist) and orders
void index_battery(Recorder& rec, const std::string& check, const SimpleType& t,
                   int twist, const std::vector<int>& orders, const SuiteOptions& opt) {
  for (int m : orders) {
    for (const auto& d : enumerate_diagrams(t, twist, m)) {
      IndexReport r;
      unsigned long long seed = modp::split_seed(opt.seed, check + to_string(d));
      if (twist == 1) {
        GradedZ g = inner_grading(shared_chevalley(t), d);
        r = index_of(contract_zero(g), opt.trials, seed, t.rank);
      } else if (twist == 2) {
        GradedZ g = outer_grading2(d);
        r = index_of(contract_zero(g), opt.trials, seed, t.rank);
      } else {
        GradedC g = outer_grading3(d);
        r = index_of(contract_zero(g), opt.trials, seed, t.rank);
      }
      rec.claim(check, to_string(d), r.certified,
                "index=" + std::to_string(r.computed_index) +
                    " rk=" + std::to_string(t.rank));
    }
  }
}

std::vector<int> orders_up_to(int lo, int hi, int step = 1) {
  std::vector<int> v;
  for (int m = lo; m <= hi; m += step) v.push_back(m);
  return v;
}

void suite_index_sl(Recorder& rec, const SuiteOptions& opt) {
  int max_order = opt.max_order ? opt.max_order : 12;
  int max_n = opt.max_n ? opt.max_n : 8;
  for (int n = 2; n <= max_n; ++n)
    index_battery(rec, "index-sl", {'A', n - 1}, 1, orders_up_to(1, max_order), opt);
}

void suite_index_so(Recorder& rec, const SuiteOptions& opt) {
  int max_order = opt.max_order ? opt.max_order : 8;
  int max_n = opt.max_n ? opt.max_n : 12;
  for (int l = 2; 2 * l + 1 <= max_n; ++l)
    index_battery(rec, "index-so", {'B', l}, 1, orders_up_to(1, max_order), opt);
  for (int l = 4; 2 * l <= max_n; ++l) {
    index_battery(rec, "index-so", {'D', l}, 1, orders_up_to(1, max_order), opt);
    index_battery(rec, "index-so", {'D', l}, 2, orders_up_to(2, max_order, 2), opt);
  }
  if (max_n >= 8)
    index_battery(rec, "index-so", {'D', 4}, 3, orders_up_to(3, max_order, 3), opt);
}

void suite_index_sp(Recorder& rec, const SuiteOptions& opt) {
  int max_order = opt.max_order ? opt.max_order : 9;
  for (int l = 2; l <= 4; ++l)
    index_battery(rec, "index-sp", {'C', l}, 1, orders_up_to(1, max_order, 2), opt);
}

void suite_index_g2(Recorder& rec, const SuiteOptions& opt) {
  int max_order = opt.max_order ? opt.max_order : 10;
  index_battery(rec, "index-g2", {'G', 2}, 1, orders_up_to(1, max_order), opt);
}

void suite_index_m23(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 6;
  for (const auto& t : all_types(max_rank, true))
    index_battery(rec, "index-m23", t, 1, {2, 3}, opt);
  for (const auto& [t, twist] : twisted_pairs(max_rank)) {
    if (twist == 2) index_battery(rec, "index-m23", t, 2, {2}, opt);
    if (twist == 3) index_battery(rec, "index-m23", t, 3, {3}, opt);
  }
}

void suite_f4(Recorder& rec, const SuiteOptions& opt) {
  KacDiagram d = parse_diagram("F4[0,1,0,0,0]");
  GradedZ g = inner_grading(shared_chevalley({'F', 4}), d);
  IndexReport r = index_of(contract_zero(g), opt.trials,
                           modp::split_seed(opt.seed, "f4"), 4);
  // the criterion expects an uncertified observation here; report what the
  // computation actually produced either way
  bool pass = !r.certified && r.computed_index >= 4;
  std::string note = r.certified
                         ? "sound_certificate_fires_where_criterion_expected_unknown"
                         : "exact_value_unknown";
  rec.claim("f4", to_string(d), pass,
            "index_observed=" + std::to_string(r.computed_index) + " certified=" +
                (r.certified ? "true" : "false") +
                " criterion_expects=certified:false note=" + note);
}

void suite_nreg(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 8;
  for (const auto& t : all_types(max_rank, true)) {
    const int h = shared_chevalley(t).rs.coxeter_number;
    int max_order = opt.max_order ? opt.max_order : 2 * h;
    bool ok = true;
    std::string why;
    for (int m = 1; m <= max_order; ++m) {
      KacDiagram d = n_regular_inner(t, m);
      auto shape = nreg_label_shape_check(d);
      if (!shape.pass) {
        ok = false;
        why = "shape " + to_string(d);
        break;
      }
      if (m >= h) {
        bool exact = d.labels[0] == m + 1 - h;
        for (size_t i = 1; i < d.labels.size(); ++i) exact = exact && d.labels[i] == 1;
        if (!exact) {
          ok = false;
          why = "m>=h labels " + to_string(d);
          break;
        }
      }
      auto dims = dimension_vector_fast(d);
      if (dims != height_histogram_dims(t, m) ||
          dims != nreg_dims(datum_of(t, 1, m), dim_of(t))) {
        ok = false;
        why = "dims " + to_string(d);
        break;
      }
    }
    rec.claim("nreg", to_string(t), ok,
              ok ? "orders=1.." + std::to_string(max_order) : why);
  }
}

void suite_friendly(Recorder& rec, const SuiteOptions& opt) {
  (void)opt;
  {
    auto pairs = friendly_pairs({'E', 7}, 1, 4);
    bool ok = false;
    for (const auto& p : pairs)
      if (p.dims_nreg == std::vector<int>{33, 35, 30, 35} &&
          p.dims_partner == std::vector<int>{33, 32, 36, 32})
        ok = true;
    rec.claim("friendly", "E7 m=4", ok, "pairs=" + std::to_string(pairs.size()));
  }
  {
    auto pairs = friendly_pairs({'E', 6}, 1, 4);
    bool ok = false;
    for (const auto& p : pairs)
      if (p.dims_nreg == std::vector<int>{20, 20, 18, 20} &&
          p.dims_partner == std::vector<int>{20, 20, 18, 20})
        ok = true;
    rec.claim("friendly", "E6 m=4", ok, "pairs=" + std::to_string(pairs.size()));
  }
  {
    auto pairs = friendly_pairs({'A', 7}, 2, 4);
    bool ok = false;
    for (const auto& p : pairs)
      if (p.dims_nreg == std::vector<int>{16, 16, 15, 16} &&
          p.dims_partner == std::vector<int>{16, 16, 15, 16})
        ok = true;
    rec.claim("friendly", "A7^2 m=4", ok, "pairs=" + std::to_string(pairs.size()));
  }
}

void suite_ggs(Recorder& rec, const SuiteOptions& opt) {
  int max_order = opt.max_order ? opt.max_order : 8;
  int max_n = opt.max_n ? opt.max_n : 7;
  int trials = std::min(opt.trials, 3);
  for (int n = 2; n <= max_n; ++n) {
    SimpleType t{'A', n - 1};
    for (int m = 1; m <= max_order; ++m)
      for (const auto& d : enumerate_diagrams(t, 1, m)) {
        MatrixRealization r = realize(d);
        GgsCheck c = ggs_sum_check(r, dimension_vector_fast(d), trials,
                                   modp::split_seed(opt.seed, "ggs" + to_string(d)));
        rec.claim("ggs", to_string(d), c.certified,
                  "sum_phi=" + std::to_string(c.sum_phi) +
                      " D=" + std::to_string(c.d_theta));
        // Lemma sovpad on the p_0 > 0 representative
        KacDiagram moved = move_to_p0(d);
        MatrixRealization rm = realize(moved);
        bool sov = true;
        for (const auto& h : invariant_family(rm)) {
          unsigned long long s2 = modp::split_seed(opt.seed, "sov" + to_string(moved));
          if (phi_degree(h, rm, trials, s2) !=
              static_cast<long long>(m) * nminus_degree(h, rm, trials, s2))
            sov = false;
        }
        rec.claim("ggs-sovpad", to_string(moved), sov);
      }
  }
  for (int l = 2; l <= 3; ++l) {
    SimpleType t{'C', l};
    for (int m = 1; m <= max_order; ++m)
      for (const auto& d : enumerate_diagrams(t, 1, m)) {
        if (d.labels[0] == 0 && d.labels[l] == 0) continue;
        KacDiagram moved = move_to_p0(d);
        MatrixRealization r = realize(moved);
        GgsCheck c = ggs_sum_check(r, dimension_vector_fast(moved), trials,
                                   modp::split_seed(opt.seed, "ggs" + to_string(moved)));
        rec.claim("ggs", to_string(d), c.certified,
                  "sum_phi=" + std::to_string(c.sum_phi) +
                      " D=" + std::to_string(c.d_theta));
        bool sov = true;
        for (const auto& h : invariant_family(r)) {
          unsigned long long s2 = modp::split_seed(opt.seed, "sov" + to_string(moved));
          if (phi_degree(h, r, trials, s2) !=
              static_cast<long long>(m) * nminus_degree(h, r, trials, s2))
            sov = false;
        }
        rec.claim("ggs-sovpad", to_string(moved), sov);
      }
  }
}

void suite_sect7(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 8;
  int max_order = opt.max_order ? opt.max_order : 12;
  std::vector<std::pair<SimpleType, int>> cases;
  for (const auto& t : all_types(max_rank, true)) cases.push_back({t, 1});
  for (const auto& tw : twisted_pairs(max_rank)) cases.push_back(tw);
  for (const auto& [t, twist] : cases) {
    bool ok = true;
    std::string why;
    for (int m = twist; m <= max_order; m += twist) {
      Datum dat = datum_of(t, twist, m);
      auto dims = nreg_dims(dat, dim_of(t));
      auto bullets = bullet_degrees(dat);
      long long sum = std::accumulate(bullets.begin(), bullets.end(), 0LL);
      long long y = upsilon(dat, dim_of(t));
      long long dth = d_theta(dims);
      int rk0 = twist == 1 ? t.rank : fixed_subalgebra_type(t, twist).rank;
      long long b = b_value(dim_of(t), dims[0], t.rank, rk0);
      if (sum != y || y != dth || main2_sum(dat) != b) {
        ok = false;
        why = "m=" + std::to_string(m);
        break;
      }
    }
    rec.claim("sect7",
              to_string(t) + (twist > 1 ? "^" + std::to_string(twist) : ""), ok,
              ok ? "orders<=" + std::to_string(max_order) : why);
  }
}

void suite_vinberg(Recorder& rec, const SuiteOptions& opt) {
  int max_n = opt.max_n ? opt.max_n : 14;
  int count = 0;
  auto check_one = [&](const KacDiagram& d) {
    MatrixRealization r = realize(d);
    auto e = eigen_multiplicities(r);
    if (e.half) return;
    int vr = vinberg_rank_so(e);
    OrbitData o;
    unsigned long long seed = modp::split_seed(opt.seed, "vin" + to_string(d));
    if (d.twist() == 1) {
      GradedZ g = inner_grading(shared_chevalley(d.diagram->base), d);
      o = generic_orbit_data(g, opt.trials, seed);
    } else {
      GradedZ g = outer_grading2(d);
      o = generic_orbit_data(g, opt.trials, seed);
    }
    ++count;
    rec.claim("vinberg", to_string(d), vr == o.quotient_dim,
              "rank_formula=" + std::to_string(vr) +
                  " quotient_dim=" + std::to_string(o.quotient_dim));
  };
  // inner shapes of so_N with zeros at all mark-1 nodes (Lemma so-in)
  for (const auto& t : std::vector<SimpleType>{{'B', 3}, {'B', 4}, {'B', 5}, {'B', 6},
                                               {'D', 4}, {'D', 5}, {'D', 6}, {'D', 7}}) {
    int n_matrix = t.family == 'B' ? 2 * t.rank + 1 : 2 * t.rank;
    if (n_matrix > max_n) continue;
    auto aff = shared_affine(t, 1);
    std::vector<int> internal;
    for (int i = 0; i < aff->nodes; ++i)
      if (aff->marks[i] == 2) internal.push_back(i);
    for (int mask = 1; mask < (1 << internal.size()); ++mask) {
      KacDiagram d{aff, std::vector<int>(aff->nodes, 0)};
      for (size_t j = 0; j < internal.size(); ++j)
        if (mask & (1 << j)) d.labels[internal[j]] = 1;
      check_one(d);
    }
  }
  // outer shapes (Lemma so-ou): 0/1 labels on D_l^(2)
  for (int l = 4; 2 * l <= max_n; ++l) {
    auto aff = shared_affine({'D', l}, 2);
    for (int mask = 1; mask < (1 << aff->nodes); ++mask) {
      KacDiagram d{aff, std::vector<int>(aff->nodes, 0)};
      for (int j = 0; j < aff->nodes; ++j)
        if (mask & (1 << j)) d.labels[j] = 1;
      check_one(d);
    }
  }
  rec.claim("vinberg", "coverage", count >= 10, "cases=" + std::to_string(count));
}

void suite_pvklad(Recorder& rec, const SuiteOptions& opt) {
  int max_rank = opt.max_rank ? opt.max_rank : 6;
  int max_order = opt.max_order ? opt.max_order : 6;
  std::vector<std::pair<SimpleType, int>> cases;
  for (const auto& t : all_types(max_rank, true)) cases.push_back({t, 1});
  for (const auto& tw : twisted_pairs(max_rank)) cases.push_back(tw);
  for (const auto& [t, twist] : cases) {
    for (int m = twist; m <= max_order; m += twist) {
      Datum dat = datum_of(t, twist, m);
      int count = 0;
      bool ok = true;
      for (const auto& d : enumerate_diagrams(t, twist, m)) {
        ++count;
        OrbitData o;
        unsigned long long seed = modp::split_seed(opt.seed, "pv" + to_string(d));
        if (twist == 1)
          o = generic_orbit_data(inner_grading(shared_chevalley(t), d), opt.trials, seed);
        else if (twist == 2)
          o = generic_orbit_data(outer_grading2(d), opt.trials, seed);
        else
          o = generic_orbit_data(outer_grading3(d), opt.trials, seed);
        if (o.quotient_dim > dat.k[m - 1]) ok = false;
      }
      if (count)
        rec.claim("pvklad",
                  to_string(t) + (twist > 1 ? "^" + std::to_string(twist) : "") +
                      " m=" + std::to_string(m),
                  ok, "diagrams=" + std::to_string(count) +
                          " k(m-1)=" + std::to_string(dat.k[m - 1]));
    }
  }
  // equality on the N-regular classical cases in the sweep
  for (const auto& t : all_types(max_rank, false)) {
    for (int m = 2; m <= max_order; ++m) {
      KacDiagram d = n_regular_inner(t, m);
      Datum dat = datum_of(t, 1, m);
      unsigned long long seed = modp::split_seed(opt.seed, "pvn" + to_string(d));
      OrbitData o = generic_orbit_data(inner_grading(shared_chevalley(t), d),
                                       opt.trials, seed);
      int jrank = restricted_jacobian_rank(realize(d), std::min(opt.trials, 3), seed);
      bool ok = o.quotient_dim == dat.k[m - 1] && jrank == dat.k[m - 1];
      rec.claim("pvklad-nreg", to_string(d), ok,
                "quotient=" + std::to_string(o.quotient_dim) +
                    " jac_rank=" + std::to_string(jrank) +
                    " k=" + std::to_string(dat.k[m - 1]));
    }
  }
  // outer classical candidates whose dimension vector matches the formula
  for (const auto& [t, twist] : twisted_pairs(max_rank)) {
    if (twist != 2 || t.family == 'E') continue;
    for (int m = 2; m <= max_order; m += 2) {
      Datum dat = datum_of(t, twist, m);
      std::vector<int> formula;
      try {
        formula = nreg_dims(dat, dim_of(t));
      } catch (const std::logic_error&) {
        continue;
      }
      for (const auto& d : enumerate_diagrams(t, twist, m)) {
        if (dimension_vector_fast(d) != formula) continue;
        unsigned long long seed = modp::split_seed(opt.seed, "pvo" + to_string(d));
        OrbitData o = generic_orbit_data(outer_grading2(d), opt.trials, seed);
        int jrank = restricted_jacobian_rank(realize(d), std::min(opt.trials, 3), seed);
        bool ok = o.quotient_dim == dat.k[m - 1] && jrank == dat.k[m - 1];
        rec.claim("pvklad-nreg", to_string(d) + " (candidate)", ok,
                  "quotient=" + std::to_string(o.quotient_dim) +
                      " jac_rank=" + std::to_string(jrank) +
                      " k=" + std::to_string(dat.k[m - 1]));
      }
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"jacobi",   "d-theta",  "semidir",  "collapse", "index-sl", "index-so",
          "index-sp", "index-g2", "index-m23", "f4",       "nreg",     "friendly",
          "ggs",      "sect7",    "vinberg",  "pvklad"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteResult out;
  out.name = name;
  Recorder rec{&out};
  auto t0 = Clock::now();
  if (name == "jacobi") suite_jacobi(rec, opt);
  else if (name == "d-theta") suite_dtheta(rec, opt);
  else if (name == "semidir") suite_semidir(rec, opt);
  else if (name == "collapse") suite_collapse(rec, opt);
  else if (name == "index-sl") suite_index_sl(rec, opt);
  else if (name == "index-so") suite_index_so(rec, opt);
  else if (name == "index-sp") suite_index_sp(rec, opt);
  else if (name == "index-g2") suite_index_g2(rec, opt);
  else if (name == "index-m23") suite_index_m23(rec, opt);
  else if (name == "f4") suite_f4(rec, opt);
  else if (name == "nreg") suite_nreg(rec, opt);
  else if (name == "friendly") suite_friendly(rec, opt);
  else if (name == "ggs") suite_ggs(rec, opt);
  else if (name == "sect7") suite_sect7(rec, opt);
  else if (name == "vinberg") suite_vinberg(rec, opt);
  else if (name == "pvklad") suite_pvklad(rec, opt);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  out.ms = ms_since(t0);
  return out;
}

std::string format_record(const CheckRecord& r, bool csv, bool with_ms) {
  std::ostringstream os;
  if (csv) {
    os << r.check << "," << '"' << r.item << '"' << "," << '"' << r.values << '"' << ","
       << (r.is_claim ? (r.pass ? "pass" : "FAIL") : "info");
    if (with_ms) os << "," << r.ms;
  } else {
    os << "check=" << r.check << " item=" << r.item;
    if (!r.values.empty()) os << " " << r.values;
    os << " status=" << (r.is_claim ? (r.pass ? "pass" : "FAIL") : "info");
    if (with_ms) os << " ms=" << r.ms;
  }
  return os.str();
}

std::string csv_header(bool with_ms) {
  return with_ms ? "check,item,values,status,ms" : "check,item,values,status";
}

}  // namespace theta
