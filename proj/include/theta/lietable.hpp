#ifndef THETA_LIETABLE_HPP
#define THETA_LIETABLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace theta {

/// Eisenstein integer a + b*w with w = primitive cube root of unity,
/// w^2 = -1 - w.  Exact scalar for the order-3 twisted case; plain int64
/// covers everything else.
struct Cyc3 {
  long long a = 0, b = 0;

  Cyc3() = default;
  Cyc3(long long x) : a(x) {}
  Cyc3(long long x, long long y) : a(x), b(y) {}

  bool operator==(const Cyc3&) const = default;
  Cyc3 operator-() const { return {-a, -b}; }
  Cyc3& operator+=(const Cyc3& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Cyc3 operator+(const Cyc3& o) const { return {a + o.a, b + o.b}; }
  Cyc3 operator-(const Cyc3& o) const { return {a - o.a, b - o.b}; }
  Cyc3 operator*(const Cyc3& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
  }
};

inline bool is_zero(long long v) { return v == 0; }
inline bool is_zero(const Cyc3& v) { return v.a == 0 && v.b == 0; }

/// zeta^e as a Cyc3 (e mod 3): 1, w, -1-w.
inline Cyc3 cyc3_zeta_pow(int e) {
  e = ((e % 3) + 3) % 3;
  if (e == 0) return {1, 0};
  if (e == 1) return {0, 1};
  return {-1, -1};
}

/// Sparse antisymmetric bracket table over an exact scalar.
///
/// Structure constants are stored for index pairs a < b only; the bracket of
/// equal indices is zero and [b,a] = -[a,b].
template <class S>
struct LieTable {
  int dim = 0;
  std::vector<std::string> labels;
  using Entry = std::vector<std::pair<int, S>>;  // sorted by basis index

  void init(int n) {
    dim = n;
    labels.assign(n, {});
    store_.assign(static_cast<size_t>(n) * n, {});
  }

  const Entry& entry(int a, int b) const {  // requires a < b
    return store_[static_cast<size_t>(a) * dim + b];
  }
  void set_entry(int a, int b, Entry e) {  // requires a < b
    store_[static_cast<size_t>(a) * dim + b] = std::move(e);
  }

  /// out += coeff * [x_a, x_b], tracking touched indices
  void bracket_acc(int a, int b, const S& coeff, std::vector<S>& out,
                   std::vector<int>& touched) const {
    if (a == b) return;
    bool flip = a > b;
    if (flip) std::swap(a, b);
    for (const auto& [c, v] : entry(a, b)) {
      S add = flip ? S(-(coeff * v)) : S(coeff * v);
      if (is_zero(out[c])) touched.push_back(c);
      out[c] += add;
    }
  }

  /// Dense bracket of two coordinate vectors.
  std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const {
    std::vector<S> out(dim, S(0));
    std::vector<int> touched;
    for (int a = 0; a < dim; ++a) {
      if (is_zero(x[a])) continue;
      for (int b = 0; b < dim; ++b) {
        if (is_zero(y[b])) continue;
        bracket_acc(a, b, S(x[a] * y[b]), out, touched);
      }
    }
    return out;
  }

 private:
  std::vector<Entry> store_;
};

/// Exhaustive Jacobi check over all basis triples.
template <class S>
bool jacobi_holds(const LieTable<S>& L, int* fail_a = nullptr, int* fail_b = nullptr,
                  int* fail_c = nullptr) {
  const int n = L.dim;
  std::vector<S> acc(n, S(0));
  std::vector<int> touched;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& ab = L.entry(a, b);
      for (int c = b + 1; c < n; ++c) {
        touched.clear();
        for (const auto& [e, v] : ab) L.bracket_acc(e, c, v, acc, touched);
        for (const auto& [e, v] : L.entry(b, c)) L.bracket_acc(e, a, v, acc, touched);
        for (const auto& [e, v] : L.entry(a, c)) L.bracket_acc(e, b, S(-v), acc, touched);
        bool ok = true;
        for (int t : touched) {
          if (!is_zero(acc[t])) ok = false;
          acc[t] = S(0);
        }
        if (!ok) {
          if (fail_a) *fail_a = a, *fail_b = b, *fail_c = c;
          return false;
        }
      }
    }
  return true;
}

/// Entrywise equality of structure constants; requires identical labels.
/// Throws std::invalid_argument on a basis mismatch.
template <class S>
bool same_bracket(const LieTable<S>& x, const LieTable<S>& y) {
  if (x.dim != y.dim || x.labels != y.labels)
    throw std::invalid_argument("same_bracket: basis mismatch");
  for (int a = 0; a < x.dim; ++a)
    for (int b = a + 1; b < x.dim; ++b) {
      const auto &ea = x.entry(a, b), &eb = y.entry(a, b);
      size_t i = 0, j = 0;
      while (i < ea.size() || j < eb.size()) {
        if (i < ea.size() && is_zero(ea[i].second)) {
          ++i;
          continue;
        }
        if (j < eb.size() && is_zero(eb[j].second)) {
          ++j;
          continue;
        }
        if (i >= ea.size() || j >= eb.size()) return false;
        if (ea[i].first != eb[j].first || !(ea[i].second == eb[j].second)) return false;
        ++i, ++j;
      }
    }
  return true;
}

}  // namespace theta

#endif
