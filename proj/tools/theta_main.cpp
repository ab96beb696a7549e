// theta: batch front-end for analyzing Kac diagrams, enumerating orders and
// running the verification suites.
#include <CLI11.hpp>
#include <iostream>

#include "theta/classical.hpp"
#include "theta/contraction.hpp"
#include "theta/datum.hpp"
#include "theta/indexcalc.hpp"
#include "theta/suites.hpp"

using namespace theta;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
  unsigned long long seed = 20240817;
  int trials = 5;
  std::string format = "struct";
  bool timing = false;
};

void emit(const std::vector<CheckRecord>& records, const std::string& format,
          unsigned long long seed, bool timing) {
  bool csv = format == "csv";
  if (!csv)
    std::cout << "check=meta item=theta version=" << kVersion << " seed=" << seed
              << " status=info\n";
  else
    std::cout << csv_header(timing) << "\n";
  for (const auto& r : records) std::cout << format_record(r, csv, timing) << "\n";
}

int cmd_analyze(const std::string& text, const CommonOpts& c) {
  KacDiagram d = parse_diagram(text);
  check_valid(d);
  const SimpleType t = d.diagram->base;
  const int m = d.order();
  std::vector<CheckRecord> rec;
  auto info = [&](const std::string& k, const std::string& v) {
    rec.push_back({"analyze." + k, text, v, false, true, 0.0});
  };

  info("order", "m=" + std::to_string(m) + " twist=" + std::to_string(d.twist()) +
                    " base=" + to_string(t));
  ReductiveReadout r = readout(d);
  {
    std::string parts;
    for (const auto& s : r.semisimple_part) parts += (parts.empty() ? "" : "+") + to_string(s);
    if (parts.empty()) parts = "0";
    info("readout", "g0=" + parts + " center_dim=" + std::to_string(r.center_dim) +
                        " dim_g0=" + std::to_string(r.dim_g0) +
                        " dim_g1=" + std::to_string(r.dim_g1));
  }
  auto dims = dimension_vector_fast(d);
  {
    std::string s = "(";
    for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    s += ")";
    info("dims", "vector=" + s);
  }
  long long dth = d_theta(dims);
  long long b = b_value(dim_of(t), dims[0], t.rank, rank_g0(d));
  info("invariants", "D_theta=" + std::to_string(dth) + " b=" + std::to_string(b));

  IndexReport ir;
  unsigned long long seed = modp::split_seed(c.seed, "analyze" + text);
  if (d.twist() == 1)
    ir = index_of(contract_zero(inner_grading(shared_chevalley(t), d)), c.trials, seed,
                  t.rank);
  else if (d.twist() == 2)
    ir = index_of(contract_zero(outer_grading2(d)), c.trials, seed, t.rank);
  else
    ir = index_of(contract_zero(outer_grading3(d)), c.trials, seed, t.rank);
  std::string note = ir.certified
                         ? "certified"
                         : "observed only; exact value unknown, not certified";
  info("index_g0", "computed=" + std::to_string(ir.computed_index) +
                       " rk_g=" + std::to_string(t.rank) +
                       " certified=" + (ir.certified ? "true" : "false") +
                       " seed=" + std::to_string(ir.seed) + " note=\"" + note + "\"");

  if (m > 1) {
    std::string st;
    try {
      bool stable;
      if (d.twist() == 1)
        stable = generic_semisimple(inner_grading(shared_chevalley(t), d), c.trials, seed);
      else if (d.twist() == 2)
        stable = generic_semisimple(outer_grading2(d), c.trials, seed);
      else
        stable = generic_semisimple(outer_grading3(d), c.trials, seed);
      st = stable ? "true" : "false";
    } catch (const std::runtime_error&) {
      st = "inconclusive";
    }
    info("stability", "generic_semisimple=" + st);
  }

  if (d.twist() == 1) {
    KacDiagram nreg = n_regular_inner(t, m);
    bool equiv = canonicalize(nreg).labels == canonicalize(d).labels;
    info("nreg", "equivalent_to_nreg=" + std::string(equiv ? "true" : "false") +
                     " nreg=" + to_string(nreg));
  } else {
    auto formula = nreg_dims(datum_of(t, d.twist(), m), dim_of(t));
    info("nreg", std::string("dims_match_nreg_formula=") +
                     (dims == formula ? "true" : "false") + " (outer: candidate only)");
  }
  emit(rec, c.format, c.seed, c.timing);
  return 0;
}

int cmd_enumerate(const std::string& type, int twist, int m, bool mark_nreg,
                  bool show_friendly, const CommonOpts& c) {
  SimpleType t = parse_simple_type(type);
  auto diagrams = enumerate_diagrams(t, twist, m);
  std::vector<CheckRecord> rec;
  std::vector<int> nreg_labels;
  if (mark_nreg && twist == 1) nreg_labels = canonicalize(n_regular_inner(t, m)).labels;
  for (const auto& d : diagrams) {
    auto dims = dimension_vector_fast(d);
    std::string s = "(";
    for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    s += ")";
    std::string v = "dims=" + s;
    if (mark_nreg) {
      if (twist == 1)
        v += d.labels == nreg_labels ? " nreg=true" : " nreg=false";
      else
        v += dimension_vector_fast(d) == nreg_dims(datum_of(t, twist, m), dim_of(t))
                 ? " nreg_candidate=true"
                 : " nreg_candidate=false";
    }
    rec.push_back({"enumerate", to_string(d), v, false, true, 0.0});
  }
  if (show_friendly) {
    for (const auto& p : friendly_pairs(t, twist, m)) {
      std::string v = "partner=" + to_string(p.partner);
      if (p.nreg_is_candidate) v += " candidate=true";
      rec.push_back({"friendly", to_string(p.nreg), v, false, true, 0.0});
    }
  }
  emit(rec, c.format, c.seed, c.timing);
  return 0;
}

int cmd_verify(const std::vector<std::string>& names, const SuiteOptions& opt,
               const std::string& format, bool timing) {
  int failures = 0;
  std::vector<CheckRecord> rec;
  for (const auto& name : names) {
    SuiteResult res = run_suite(name, opt);
    failures += res.failures();
    for (auto& r : res.records) rec.push_back(std::move(r));
    rec.push_back({name, "summary",
                   "failures=" + std::to_string(res.failures()) +
                       " checks=" + std::to_string(res.records.size()),
                   false, true, res.ms});
  }
  emit(rec, format, opt.seed, timing);
  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for periodic automorphisms of simple Lie algebras,\n"
               "their Kac diagrams, contractions and index certificates"};
  app.require_subcommand(1);

  CommonOpts common;
  SuiteOptions sopts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "top-level seed (split per check)");
    sub->add_option("--trials", common.trials, "Monte Carlo trials per check");
    sub->add_option("--format", common.format, "output format: struct | csv")
        ->check(CLI::IsMember({"struct", "csv"}));
    sub->add_flag("--timing", common.timing, "include per-check runtimes");
  };

  std::string diagram_text;
  auto* analyze = app.add_subcommand("analyze", "analyze one Kac diagram");
  analyze->add_option("diagram", diagram_text, "e.g. G2[0,1,1] or A5^2[1,0,1,0]")
      ->required();
  add_common(analyze);

  std::string type_text;
  int twist = 1, order = 1;
  bool mark_nreg = false, show_friendly = false;
  auto* enumerate = app.add_subcommand("enumerate", "canonical diagrams of one order");
  enumerate->add_option("type", type_text, "simple type, e.g. E7")->required();
  enumerate->add_option("twist", twist, "1, 2 or 3")->required();
  enumerate->add_option("order", order, "order m")->required();
  enumerate->add_flag("--nreg", mark_nreg, "mark the N-regular diagram");
  enumerate->add_flag("--friendly", show_friendly, "list friendly pairs");
  add_common(enumerate);

  std::vector<std::string> suite_list;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite_list, "suite names or 'all'")->required();
  verify->add_option("--seed", sopts.seed, "top-level seed");
  verify->add_option("--trials", sopts.trials, "Monte Carlo trials per check");
  verify->add_option("--max-rank", sopts.max_rank, "rank bound override");
  verify->add_option("--max-order", sopts.max_order, "order bound override");
  verify->add_option("--max-N", sopts.max_n, "matrix size bound override");
  std::string vformat = "struct";
  bool vtiming = false;
  verify->add_option("--format", vformat, "struct | csv")
      ->check(CLI::IsMember({"struct", "csv"}));
  verify->add_flag("--timing", vtiming, "include per-check runtimes");

  auto* report = app.add_subcommand("report", "run every suite and emit all records");
  report->add_option("--seed", sopts.seed, "top-level seed");
  report->add_option("--trials", sopts.trials, "Monte Carlo trials per check");
  std::string rformat = "struct";
  bool rtiming = false;
  report->add_option("--format", rformat, "struct | csv")
      ->check(CLI::IsMember({"struct", "csv"}));
  report->add_flag("--timing", rtiming, "include per-check runtimes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(diagram_text, common);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(type_text, twist, order, mark_nreg, show_friendly, common);
    if (app.got_subcommand(verify)) {
      std::vector<std::string> names;
      for (const auto& n : suite_list) {
        if (n == "all") {
          auto all = suite_names();
          names.insert(names.end(), all.begin(), all.end());
        } else {
          names.push_back(n);
        }
      }
      return cmd_verify(names, sopts, vformat, vtiming);
    }
    if (app.got_subcommand(report)) return cmd_verify(suite_names(), sopts, rformat, rtiming);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
