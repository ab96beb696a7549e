#include "theta/kac.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "theta/grading.hpp"

namespace theta {

int KacDiagram::order() const {
  long long s = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    s += static_cast<long long>(diagram->marks[i]) * labels[i];
  return static_cast<int>(diagram->twist * s);
}

std::string to_string(KacError e) {
  switch (e) {
    case KacError::LabelsNegative: return "LabelsNegative";
    case KacError::AllZero: return "AllZero";
    case KacError::NonCoprime: return "NonCoprime";
    case KacError::SizeMismatch: return "SizeMismatch";
  }
  return "?";
}

std::optional<KacError> validate(const KacDiagram& d) {
  if (static_cast<int>(d.labels.size()) != d.diagram->nodes) return KacError::SizeMismatch;
  int g = 0;
  for (int p : d.labels) {
    if (p < 0) return KacError::LabelsNegative;
    g = std::gcd(g, p);
  }
  if (g == 0) return KacError::AllZero;
  if (g != 1) return KacError::NonCoprime;
  return std::nullopt;
}

void check_valid(const KacDiagram& d) {
  if (auto e = validate(d))
    throw std::invalid_argument("invalid Kac diagram " + to_string(d) + ": " + to_string(*e));
}

ReductiveReadout readout(const KacDiagram& d) {
  check_valid(d);
  const AffineDiagram& a = *d.diagram;
  ReductiveReadout r;
  const int n = a.nodes;
  const int m = d.order();

  std::vector<int> zero_nodes;
  for (int i = 0; i < n; ++i)
    if (d.labels[i] == 0) zero_nodes.push_back(i);
  // connected components of the zero-label subdiagram
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s : zero_nodes) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : zero_nodes)
        if (comp[w] < 0 && a.cartan[v][w] != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  int sub_rank = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i : zero_nodes)
      if (comp[i] == c) nodes.push_back(i);
    std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size()));
    for (size_t x = 0; x < nodes.size(); ++x)
      for (size_t y = 0; y < nodes.size(); ++y) sub[x][y] = a.cartan[nodes[x]][nodes[y]];
    r.semisimple_part.push_back(classify_connected_cartan(sub));
    sub_rank += static_cast<int>(nodes.size());
  }
  std::sort(r.semisimple_part.begin(), r.semisimple_part.end(),
            [](const SimpleType& x, const SimpleType& y) {
              return std::pair(x.family, x.rank) < std::pair(y.family, y.rank);
            });
  int nonzero = n - static_cast<int>(zero_nodes.size());
  r.center_dim = nonzero - 1;
  r.dim_g0 = r.center_dim + sub_rank;
  for (const auto& t : r.semisimple_part) r.dim_g0 += dim_of(t) - t.rank;
  if (m > 1)
    for (int i = 0; i < n; ++i)
      if (d.labels[i] % m == 1) r.g1_lowest_weight_nodes.push_back(i);
  r.dim_g1 = m == 1 ? 0 : dimension_vector_fast(d)[1];
  return r;
}

namespace {

std::vector<int> apply_node_perm(const std::vector<int>& labels,
                                 const std::vector<int>& perm) {
  std::vector<int> out(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) out[perm[i]] = labels[i];
  return out;
}

}  // namespace

KacDiagram canonicalize(const KacDiagram& d) {
  KacDiagram best = d;
  for (const auto& perm : d.diagram->symmetry) {
    auto cand = apply_node_perm(d.labels, perm);
    if (cand < best.labels) best.labels = std::move(cand);
  }
  return best;
}

KacDiagram normalize_alcove(const std::vector<int>& coords, const AffineDiagram& a) {
  if (static_cast<int>(coords.size()) != a.nodes)
    throw std::invalid_argument("coordinate vector has wrong size");
  long long inv = 0;
  for (int i = 0; i < a.nodes; ++i) inv += static_cast<long long>(a.marks[i]) * coords[i];
  if (inv <= 0) throw std::invalid_argument("normalize_alcove needs positive order");

  std::vector<long long> c(coords.begin(), coords.end());
  const long long cap = 1000000;  // exceeding this signals a Cartan-matrix bug
  for (long long step = 0;; ++step) {
    if (step > cap) throw std::logic_error("alcove normalization did not terminate");
    int i = -1;
    for (int j = 0; j < a.nodes; ++j)
      if (c[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    long long ci = c[i];
    for (int j = 0; j < a.nodes; ++j) c[j] -= a.cartan[i][j] * ci;
    long long check = 0;
    for (int j = 0; j < a.nodes; ++j) check += static_cast<long long>(a.marks[j]) * c[j];
    if (check != inv) throw std::logic_error("alcove move changed the order");
  }
  KacDiagram out;
  out.diagram = std::make_shared<AffineDiagram>(a);
  out.labels.assign(c.begin(), c.end());
  return out;
}

std::shared_ptr<const AffineDiagram> shared_affine(const SimpleType& t, int twist) {
  static std::map<std::tuple<char, int, int>, std::shared_ptr<const AffineDiagram>> cache;
  auto key = std::make_tuple(t.family, t.rank, twist);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<AffineDiagram>(affine_diagram(t, twist));
  cache[key] = d;
  return d;
}

KacDiagram n_regular_inner(const SimpleType& t, int m) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  auto aff = shared_affine(t, 1);
  RootSystem rs = build_root_system(t);
  std::vector<int> coords(aff->nodes, 1);
  coords[0] = m - (rs.coxeter_number - 1);
  KacDiagram d = normalize_alcove(coords, *aff);
  d.diagram = aff;
  if (d.order() != m) throw std::logic_error("n_regular_inner changed the order");
  return d;
}

std::vector<KacDiagram> enumerate_diagrams(const SimpleType& t, int twist, int m) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  auto aff = shared_affine(t, twist);
  std::vector<KacDiagram> out;
  if (m % twist != 0) return out;
  const int target = m / twist;  // sum marks_i p_i
  std::set<std::vector<int>> seen;
  std::vector<int> labels(aff->nodes, 0);
  auto rec = [&](auto&& self, int node, int rest) -> void {
    if (node == aff->nodes) {
      if (rest != 0) return;
      int g = 0;
      for (int p : labels) g = std::gcd(g, p);
      if (g != 1) return;
      KacDiagram d{aff, labels};
      seen.insert(canonicalize(d).labels);
      return;
    }
    for (int p = 0; p * aff->marks[node] <= rest; ++p) {
      labels[node] = p;
      self(self, node + 1, rest - p * aff->marks[node]);
    }
    labels[node] = 0;
  };
  rec(rec, 0, target);
  for (const auto& l : seen) out.push_back(KacDiagram{aff, l});
  return out;
}

KacDiagram collapse(const KacDiagram& d) {
  KacDiagram out = d;
  for (int& p : out.labels) p = std::min(p, 1);
  return out;
}

std::string to_string(const KacDiagram& d) {
  std::ostringstream os;
  os << to_string(d.diagram->base);
  if (d.diagram->twist != 1) os << "^" << d.diagram->twist;
  os << "[";
  for (size_t i = 0; i < d.labels.size(); ++i) os << (i ? "," : "") << d.labels[i];
  os << "]";
  return os.str();
}

KacDiagram parse_diagram(const std::string& text) {
  auto fail = [&](size_t pos, const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                why + " in '" + text + "'");
  };
  size_t i = 0;
  if (i >= text.size() || !isupper(static_cast<unsigned char>(text[i])))
    fail(i, "expected family letter");
  char fam = text[i++];
  size_t rank_start = i;
  while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == rank_start) fail(i, "expected rank");
  int rank = std::stoi(text.substr(rank_start, i - rank_start));
  int twist = 1;
  if (i < text.size() && text[i] == '^') {
    ++i;
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      fail(i, "expected twist");
    twist = text[i++] - '0';
  }
  if (i >= text.size() || text[i] != '[') fail(i, "expected '['");
  ++i;
  std::vector<int> labels;
  while (true) {
    size_t num_start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) fail(i, "expected label");
    labels.push_back(std::stoi(text.substr(num_start, i - num_start)));
    if (i >= text.size()) fail(i, "expected ',' or ']'");
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (text[i] != ',') fail(i, "expected ',' or ']'");
    ++i;
  }
  if (i != text.size()) fail(i, "trailing input");
  SimpleType t{fam, rank};
  check_simple_type(t);
  KacDiagram d{shared_affine(t, twist), labels};
  if (static_cast<int>(labels.size()) != d.diagram->nodes)
    fail(text.size(), "wrong number of labels (need " + std::to_string(d.diagram->nodes) +
                          ")");
  return d;
}

}  // namespace theta
