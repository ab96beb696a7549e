#include "theta/chevalley.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace theta {

namespace {

std::string root_label(const Coords& c) {
  std::ostringstream os;
  os << "e[";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

bool simply_laced(const SimpleType& t) {
  return t.family == 'A' || t.family == 'D' || t.family == 'E';
}

// Lattice cocycle construction for the simply laced types.  The asymmetry
// function eps is bimultiplicative with eps(a_i,a_i) = -1, eps(a_i,a_j) = -1
// for i < j adjacent, +1 otherwise; negative root vectors are rescaled by -1
// so that [e_g, e_{-g}] = h_g.
Chevalley build_simply_laced(const RootSystem& rs) {
  const int l = rs.rank;
  const int nr = static_cast<int>(rs.roots.size());
  std::vector<std::vector<int>> neg(l, std::vector<int>(l, 0));  // 1 if eps = -1
  for (int i = 0; i < l; ++i) {
    neg[i][i] = 1;
    for (int j = i + 1; j < l; ++j)
      if (rs.cartan[i][j] != 0) neg[i][j] = 1;
  }
  auto eps = [&](const Coords& a, const Coords& b) -> long long {
    int parity = 0;
    for (int i = 0; i < l; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < l; ++j)
        if (b[j] != 0 && neg[i][j]) parity ^= (a[i] * b[j]) & 1;
    }
    return parity ? -1 : 1;
  };
  auto lambda = [&](int idx) -> long long { return rs.is_positive(idx) ? 1 : -1; };

  Chevalley ch;
  ch.rs = rs;
  ch.table.init(nr + l);
  for (int i = 0; i < nr; ++i) ch.table.labels[i] = root_label(rs.roots[i]);
  for (int i = 0; i < l; ++i) ch.table.labels[nr + i] = "h" + std::to_string(i + 1);

  for (int a = 0; a < nr; ++a) {
    const Coords& ga = rs.roots[a];
    for (int b = a + 1; b < nr; ++b) {
      const Coords& gb = rs.roots[b];
      if (rs.negative_of(a) == b) {
        // [e_g, e_{-g}] = h_g, g positive (positives precede negatives)
        LieTable<long long>::Entry e;
        for (int i = 0; i < l; ++i)
          if (ga[i] != 0) e.emplace_back(nr + i, ga[i]);
        ch.table.set_entry(a, b, std::move(e));
        continue;
      }
      Coords sum(l);
      for (int i = 0; i < l; ++i) sum[i] = ga[i] + gb[i];
      int c = rs.index_of(sum);
      if (c < 0) continue;
      long long n = eps(ga, gb) * lambda(a) * lambda(b) * lambda(c);
      ch.table.set_entry(a, b, {{c, n}});
    }
    // [e_g, h_i] = -<g, a_i^vee> e_g
    for (int i = 0; i < l; ++i) {
      int p = rs.pairing(a, i);
      if (p != 0) ch.table.set_entry(a, nr + i, {{a, -static_cast<long long>(p)}});
    }
  }
  return ch;
}

struct FoldSpec {
  SimpleType parent;
  std::vector<int> node_perm;               // diagram symmetry of the parent
  std::vector<std::vector<int>> orbits;     // parent nodes per target node
};

FoldSpec fold_spec(const SimpleType& t) {
  const int l = t.rank;
  FoldSpec f;
  if (t.family == 'B') {
    f.parent = {'D', l + 1};
    f.node_perm.resize(l + 1);
    std::iota(f.node_perm.begin(), f.node_perm.end(), 0);
    std::swap(f.node_perm[l - 1], f.node_perm[l]);
    for (int i = 0; i + 1 < l; ++i) f.orbits.push_back({i});
    f.orbits.push_back({l - 1, l});
  } else if (t.family == 'C') {
    f.parent = {'A', 2 * l - 1};
    f.node_perm.resize(2 * l - 1);
    for (int i = 0; i < 2 * l - 1; ++i) f.node_perm[i] = 2 * l - 2 - i;
    for (int i = 0; i + 1 < l; ++i) f.orbits.push_back({i, 2 * l - 2 - i});
    f.orbits.push_back({l - 1});
  } else if (t.family == 'F') {
    f.parent = {'E', 6};
    f.node_perm = {5, 1, 4, 3, 2, 0};
    f.orbits = {{2, 4}, {3}, {1}, {0, 5}};
  } else {  // G2
    f.parent = {'D', 4};
    f.node_perm = {2, 1, 3, 0};
    f.orbits = {{0, 2, 3}, {1}};
  }
  return f;
}

// apply a node permutation to root coordinates
Coords permute_coords(const Coords& c, const std::vector<int>& perm) {
  Coords out(c.size());
  for (size_t j = 0; j < c.size(); ++j) out[perm[j]] = c[j];
  return out;
}

void apply_auto(const Automorphism& a, const std::vector<long long>& in,
                std::vector<long long>& out) {
  out.assign(in.size(), 0);
  for (size_t i = 0; i < in.size(); ++i)
    if (in[i] != 0) out[a.perm[i]] += a.sign[i] * in[i];
}

Chevalley build_folded(const RootSystem& rs) {
  FoldSpec spec = fold_spec(rs.type);
  RootSystem prs = build_root_system_any(spec.parent);
  Chevalley parent = build_simply_laced(prs);
  Automorphism sigma = diagram_automorphism(parent, spec.node_perm);

  const int pnr = static_cast<int>(prs.roots.size());
  const int l = rs.rank;
  const int nr = static_cast<int>(rs.roots.size());

  // orbits of the permutation on parent roots
  std::vector<int> orbit_rep(pnr, -1);
  std::vector<std::vector<int>> root_orbits;
  for (int i = 0; i < pnr; ++i) {
    if (orbit_rep[i] >= 0) continue;
    std::vector<int> orb;
    int j = i;
    do {
      orbit_rep[j] = i;
      orb.push_back(j);
      j = prs.index_of(permute_coords(prs.roots[j], spec.node_perm));
      if (j < 0) throw std::logic_error("permutation does not preserve the roots");
    } while (j != i);
    root_orbits.push_back(orb);
  }

  // folded coordinates: coefficient on target node i = sum over its parent
  // node orbit
  auto fold_coords = [&](const Coords& c) {
    Coords out(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j : spec.orbits[i]) out[i] += c[j];
    return out;
  };

  Chevalley ch;
  ch.rs = rs;
  ch.table.init(rs.dim);
  for (int i = 0; i < nr; ++i) ch.table.labels[i] = root_label(rs.roots[i]);
  for (int i = 0; i < l; ++i) ch.table.labels[nr + i] = "h" + std::to_string(i + 1);

  // basis vectors in the parent space
  std::vector<std::vector<long long>> basis(rs.dim);
  std::vector<int> rep_of(rs.dim, -1);  // parent basis index with coefficient 1
  std::vector<int> assigned(nr, 0);
  for (const auto& orb : root_orbits) {
    Coords fc = fold_coords(prs.roots[orb[0]]);
    for (int j : orb)
      if (fold_coords(prs.roots[j]) != fc)
        throw std::logic_error("orbit restriction is not constant");
    int target = rs.index_of(fc);
    if (target < 0) throw std::logic_error("folded root not in target system");
    if (assigned[target]) throw std::logic_error("folded root hit twice");
    assigned[target] = 1;
    std::vector<long long> v(parent.table.dim, 0), w;
    v[orb[0]] = 1;
    std::vector<long long> acc = v;
    for (size_t k = 1; k < orb.size(); ++k) {
      apply_auto(sigma, v, w);
      v = w;
      for (size_t p = 0; p < acc.size(); ++p) acc[p] += v[p];
    }
    if (orb.size() == 1 && sigma.sign[orb[0]] != 1)
      throw std::logic_error("fixed parent root vector negated by sigma");
    basis[target] = std::move(acc);
    rep_of[target] = orb[0];
  }
  for (int t = 0; t < nr; ++t)
    if (!assigned[t]) throw std::logic_error("target root missed by folding");
  for (int i = 0; i < l; ++i) {
    std::vector<long long> v(parent.table.dim, 0);
    for (int j : spec.orbits[i]) v[pnr + j] = 1;
    basis[nr + i] = std::move(v);
    rep_of[nr + i] = pnr + spec.orbits[i][0];
  }

  // brackets, decomposed by reading the coefficient at each representative
  for (int a = 0; a < rs.dim; ++a)
    for (int b = a + 1; b < rs.dim; ++b) {
      std::vector<long long> z = parent.table.bracket(basis[a], basis[b]);
      LieTable<long long>::Entry e;
      for (int c = 0; c < rs.dim; ++c) {
        long long coeff = z[rep_of[c]];
        if (coeff == 0) continue;
        e.emplace_back(c, coeff);
        for (size_t p = 0; p < z.size(); ++p) z[p] -= coeff * basis[c][p];
      }
      for (long long v : z)
        if (v != 0) throw std::logic_error("folded bracket not in folded span");
      ch.table.set_entry(a, b, std::move(e));
    }
  return ch;
}

}  // namespace

Chevalley build_chevalley(const RootSystem& rs) {
  return simply_laced(rs.type) ? build_simply_laced(rs) : build_folded(rs);
}

Automorphism diagram_automorphism(const Chevalley& ch, const std::vector<int>& node_perm) {
  const RootSystem& rs = ch.rs;
  const int l = rs.rank;
  if (static_cast<int>(node_perm.size()) != l)
    throw std::invalid_argument("node permutation has wrong size");
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rs.cartan[node_perm[i]][node_perm[j]] != rs.cartan[i][j])
        throw std::invalid_argument("permutation is not a diagram symmetry");

  Automorphism a;
  a.perm.assign(ch.table.dim, -1);
  a.sign.assign(ch.table.dim, 1);
  for (int i = 0; i < l; ++i) a.perm[ch.cartan_index(i)] = ch.cartan_index(node_perm[i]);

  // permutation order
  a.order = 1;
  {
    std::vector<int> p(l);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> q = p;
    do {
      std::vector<int> r(l);
      for (int i = 0; i < l; ++i) r[i] = node_perm[q[i]];
      q = r;
      ++a.order;
    } while (q != p);
    --a.order;
  }

  // structure constant of [e_{roots[x]}, e_{roots[y]}] on e_{roots[z]}
  auto n_const = [&](int x, int y, int z) -> long long {
    bool flip = x > y;
    if (flip) std::swap(x, y);
    for (const auto& [c, v] : ch.table.entry(x, y))
      if (c == z) return flip ? -v : v;
    return 0;
  };

  // positive roots in height order, extended by bracketing; then negatives
  for (int sgn = 0; sgn < 2; ++sgn) {
    for (int k = 0; k < rs.n_positive; ++k) {
      int idx = sgn == 0 ? k : k + rs.n_positive;
      const Coords& g = rs.roots[k];
      int target = rs.index_of(permute_coords(g, node_perm));
      if (sgn == 1) target = rs.negative_of(target);
      a.perm[idx] = target;
      if (rs.height(k) == 1) continue;
      long long found = 0;
      for (int i = 0; i < l && !found; ++i) {
        Coords beta = g;
        beta[i] -= 1;
        int bidx = rs.index_of(beta);
        if (bidx < 0) continue;
        int simple = rs.index_of([&] {
          Coords c(l, 0);
          c[i] = 1;
          return c;
        }());
        int s = sgn == 0 ? simple : rs.negative_of(simple);
        int bb = sgn == 0 ? bidx : rs.negative_of(bidx);
        long long n = n_const(s, bb, idx);
        if (n == 0) continue;
        long long nn = n_const(a.perm[s], a.perm[bb], target);
        if (nn == 0 || std::abs(nn) != std::abs(n))
          throw std::logic_error("automorphism extension inconsistent");
        found = a.sign[s] * a.sign[bb] * (nn / n);
      }
      if (!found) throw std::logic_error("no decomposition for composite root");
      a.sign[idx] = found;
    }
  }

  if (!preserves_brackets(ch, a))
    throw std::logic_error("diagram automorphism does not preserve brackets");
  // order check: a^order = id
  {
    std::vector<int> p(ch.table.dim);
    std::vector<long long> s(ch.table.dim, 1);
    std::iota(p.begin(), p.end(), 0);
    for (int it = 0; it < a.order; ++it) {
      for (int i = 0; i < ch.table.dim; ++i) {
        s[i] *= a.sign[p[i]];
        p[i] = a.perm[p[i]];
      }
    }
    for (int i = 0; i < ch.table.dim; ++i)
      if (p[i] != i || s[i] != 1) throw std::logic_error("automorphism order check failed");
  }
  return a;
}

bool preserves_brackets(const Chevalley& ch, const Automorphism& a) {
  const int n = ch.table.dim;
  std::vector<long long> lhs(n), rhs(n);
  std::vector<int> touched;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (const auto& [c, v] : ch.table.entry(x, y)) lhs[a.perm[c]] += a.sign[c] * v;
      touched.clear();
      ch.table.bracket_acc(a.perm[x], a.perm[y], a.sign[x] * a.sign[y], rhs, touched);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

template <class S>
EigenBasis<S> eigenbasis_impl(const Chevalley& ch, const Automorphism& a, int t,
                              S (*zeta_pow)(int)) {
  const int n = ch.table.dim;
  EigenBasis<S> eb;
  eb.t = t;
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb{i};
    std::vector<long long> osign{1};
    int j = a.perm[i];
    long long s = a.sign[i];
    while (j != i) {
      seen[j] = 1;
      orb.push_back(j);
      osign.push_back(s);
      s *= a.sign[j];
      j = a.perm[j];
    }
    seen[i] = 1;
    const int o = static_cast<int>(orb.size());
    if (t % o != 0) throw std::logic_error("orbit size does not divide order");
    if (o == 1) {
      // sigma e = sign * e; the sign is a t-th root of unity, so +-1 only
      int res;
      if (a.sign[i] == 1)
        res = 0;
      else if (t % 2 == 0)
        res = t / 2;
      else
        throw std::logic_error("sign -1 on fixed vector for odd order");
      std::vector<S> v(n, S(0));
      v[i] = S(1);
      eb.vectors.push_back(std::move(v));
      eb.residue.push_back(res);
      eb.rep.push_back(i);
    } else {
      // u_k = sum_d zeta^{-k d} sigma^d e_i, for k in multiples of t/o
      long long closure = 1;
      for (int d = 0; d < o; ++d) closure *= a.sign[orb[d]];
      // sigma^o = closure * id on the orbit; closure = -1 would need t/o even,
      // which never happens for diagram automorphisms (t <= 3)
      if (closure != 1) throw std::logic_error("orbit closure sign is -1");
      for (int k0 = 0; k0 < o; ++k0) {
        int k = k0 * (t / o);
        std::vector<S> v(n, S(0));
        for (int d = 0; d < o; ++d) {
          S phase = zeta_pow(-k * d);
          v[orb[d]] += S(phase * S(osign[d]));
        }
        eb.vectors.push_back(std::move(v));
        eb.residue.push_back(((k % t) + t) % t);
        eb.rep.push_back(i);
      }
    }
  }
  // deterministic order: by residue, then representative
  std::vector<int> order(eb.vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (eb.residue[x] != eb.residue[y]) return eb.residue[x] < eb.residue[y];
    return eb.rep[x] < eb.rep[y];
  });
  EigenBasis<S> out;
  out.t = t;
  for (int i : order) {
    out.vectors.push_back(std::move(eb.vectors[i]));
    out.residue.push_back(eb.residue[i]);
    out.rep.push_back(eb.rep[i]);
  }
  return out;
}

long long zeta_pow2(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

EigenBasis<long long> sigma_eigenbasis2(const Chevalley& ch, const Automorphism& a) {
  if (a.order > 2) throw std::invalid_argument("order > 2 needs the Cyc3 eigenbasis");
  return eigenbasis_impl<long long>(ch, a, a.order, &zeta_pow2);
}

EigenBasis<Cyc3> sigma_eigenbasis3(const Chevalley& ch, const Automorphism& a) {
  if (a.order != 3) throw std::invalid_argument("Cyc3 eigenbasis is for order 3");
  return eigenbasis_impl<Cyc3>(ch, a, 3, &cyc3_zeta_pow);
}

std::vector<int> sigma_decomposition_dims(const Chevalley& ch, const Automorphism& a) {
  std::vector<int> dims(a.order, 0);
  if (a.order <= 2) {
    auto eb = sigma_eigenbasis2(ch, a);
    for (int r : eb.residue) dims[r]++;
  } else {
    auto eb = sigma_eigenbasis3(ch, a);
    for (int r : eb.residue) dims[r]++;
  }
  return dims;
}

template <class S>
LieTable<S> table_in_eigenbasis(const LieTable<S>& base, const EigenBasis<S>& eb) {
  const int n = base.dim;
  if (static_cast<int>(eb.vectors.size()) != n)
    throw std::invalid_argument("eigenbasis size mismatch");
  LieTable<S> out;
  out.init(n);
  for (int i = 0; i < n; ++i)
    out.labels[i] = "s" + std::to_string(eb.residue[i]) + ":" + base.labels[eb.rep[i]];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<S> z = base.bracket(eb.vectors[a], eb.vectors[b]);
      int res = (eb.residue[a] + eb.residue[b]) % eb.t;
      typename LieTable<S>::Entry e;
      for (int c = 0; c < n; ++c) {
        if (eb.residue[c] != res) continue;
        S coeff = z[eb.rep[c]];
        if (is_zero(coeff)) continue;
        e.emplace_back(c, coeff);
        const auto& vc = eb.vectors[c];
        for (int p = 0; p < n; ++p)
          if (!is_zero(vc[p])) z[p] += S(-(coeff * vc[p]));
      }
      for (const S& v : z)
        if (!is_zero(v)) throw std::logic_error("bracket escapes eigen decomposition");
      std::sort(e.begin(), e.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      out.set_entry(a, b, std::move(e));
    }
  return out;
}

LieTable<long long> table_in_eigenbasis(const LieTable<long long>& base,
                                        const EigenBasis<long long>& eb) {
  return table_in_eigenbasis<long long>(base, eb);
}

LieTable<Cyc3> table_in_eigenbasis_cyc(const Chevalley& ch, const EigenBasis<Cyc3>& eb) {
  LieTable<Cyc3> conv;
  conv.init(ch.table.dim);
  conv.labels = ch.table.labels;
  for (int a = 0; a < ch.table.dim; ++a)
    for (int b = a + 1; b < ch.table.dim; ++b) {
      LieTable<Cyc3>::Entry e;
      for (const auto& [c, v] : ch.table.entry(a, b)) e.emplace_back(c, Cyc3(v));
      conv.set_entry(a, b, std::move(e));
    }
  return table_in_eigenbasis<Cyc3>(conv, eb);
}

std::vector<std::vector<long long>> killing(const LieTable<long long>& L) {
  const int n = L.dim;
  // sparse ad maps: ad[a] = list of (c, b, v) meaning ad_a(x_b) = v e_c + ...
  std::vector<std::vector<std::tuple<int, int, long long>>> ad(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (const auto& [c, v] : L.entry(a, b)) {
        ad[a].emplace_back(c, b, v);
        ad[b].emplace_back(c, a, -v);
      }
  std::vector<std::vector<long long>> k(n, std::vector<long long>(n, 0));
  std::vector<long long> dense(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    std::fill(dense.begin(), dense.end(), 0);
    for (const auto& [c, b, v] : ad[a]) dense[static_cast<size_t>(c) * n + b] += v;
    // tr(ad_a ad_b) = sum over triples (c,x,v) of ad_b of v * (ad_a)[x][c]
    for (int b = a; b < n; ++b) {
      long long tr = 0;
      for (const auto& [c, x, v] : ad[b]) tr += v * dense[static_cast<size_t>(x) * n + c];
      k[a][b] = k[b][a] = tr;
    }
  }
  return k;
}

void check_killing_nondegenerate(const std::vector<std::vector<long long>>& k) {
  const int n = static_cast<int>(k.size());
  // two primes guard against a single unlucky divisor of det kappa
  for (unsigned long long p : {2305843009213693951ull, 2305843009213693921ull}) {
    // plain dense rank mod p
    std::vector<std::vector<unsigned long long>> m(n, std::vector<unsigned long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long v = k[i][j] % static_cast<long long>(p);
        m[i][j] = v < 0 ? v + p : v;
      }
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
      int piv = -1;
      for (int r = rank; r < n; ++r)
        if (m[r][c]) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      unsigned __int128 inv = 1;
      {  // Fermat inverse
        unsigned long long b = m[rank][c], e = p - 2, acc = 1;
        while (e) {
          if (e & 1) acc = static_cast<unsigned long long>((unsigned __int128)acc * b % p);
          b = static_cast<unsigned long long>((unsigned __int128)b * b % p);
          e >>= 1;
        }
        inv = acc;
      }
      for (int r = rank + 1; r < n; ++r) {
        unsigned long long f = static_cast<unsigned long long>((unsigned __int128)m[r][c] * inv % p);
        if (!f) continue;
        for (int cc = c; cc < n; ++cc) {
          unsigned __int128 t = (unsigned __int128)f * m[rank][cc] % p;
          m[r][cc] = m[r][cc] >= static_cast<unsigned long long>(t)
                         ? m[r][cc] - static_cast<unsigned long long>(t)
                         : m[r][cc] + p - static_cast<unsigned long long>(t);
        }
      }
      ++rank;
    }
    if (rank == n) return;
  }
  throw std::domain_error("Killing form is degenerate: input is not semisimple");
}

bool killing_ad_invariant(const LieTable<long long>& L,
                          const std::vector<std::vector<long long>>& k) {
  const int n = L.dim;
  auto kap = [&](const std::vector<long long>& x, int z) {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      if (x[i]) s += x[i] * k[i][z];
    return s;
  };
  std::vector<long long> xy(n), xz(n);
  std::vector<int> touched;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z) {
        std::fill(xy.begin(), xy.end(), 0);
        std::fill(xz.begin(), xz.end(), 0);
        touched.clear();
        L.bracket_acc(x, y, 1, xy, touched);
        L.bracket_acc(x, z, 1, xz, touched);
        if (kap(xy, z) + kap(xz, y) != 0) return false;
      }
  return true;
}

namespace {

using I128 = __int128;

long long to_ll(I128 v) {
  if (v > I128(9223372036854775807LL) || v < -I128(9223372036854775807LL))
    throw std::overflow_error("centralizer: 128-bit overflow");
  return static_cast<long long>(v);
}

I128 mul_checked(I128 a, I128 b) {
  I128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("centralizer: overflow");
  return r;
}

}  // namespace

LieTable<long long> centralizer(const LieTable<long long>& L,
                                const std::vector<long long>& x) {
  const int n = L.dim;
  // columns of ad x
  std::vector<std::vector<I128>> m(n, std::vector<I128>(n, 0));
  {
    std::vector<long long> col(n);
    std::vector<int> touched;
    for (int b = 0; b < n; ++b) {
      std::fill(col.begin(), col.end(), 0);
      touched.clear();
      for (int a = 0; a < n; ++a)
        if (x[a] != 0) L.bracket_acc(a, b, x[a], col, touched);
      for (int r = 0; r < n; ++r) m[r][b] = col[r];
    }
  }
  // fraction-free row echelon, tracking pivot columns
  std::vector<int> pivot_col;
  int row = 0;
  I128 prev = 1;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int r = row + 1; r < n; ++r) {
      for (int c2 = col + 1; c2 < n; ++c2)
        m[r][c2] =
            (mul_checked(m[row][col], m[r][c2]) - mul_checked(m[r][col], m[row][c2])) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivot_col.push_back(col);
    ++row;
  }
  const int rank = row;
  // back-substitution for each free column: rational solution scaled to a
  // primitive integer vector
  std::vector<int> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<long long>> kernel;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    // solve m * v = 0 with v[f] = D (product of pivots), integer back-subst
    std::vector<I128> v(n, 0);
    I128 d = 1;
    for (int r = 0; r < rank; ++r) d = mul_checked(d, m[r][pivot_col[r]]);
    v[f] = d < 0 ? -d : d;
    for (int r = rank - 1; r >= 0; --r) {
      I128 s = 0;
      for (int c = pivot_col[r] + 1; c < n; ++c) s += mul_checked(m[r][c], v[c]);
      if (s % m[r][pivot_col[r]] != 0)
        throw std::logic_error("centralizer: non-integral back-substitution");
      v[pivot_col[r]] = -s / m[r][pivot_col[r]];
    }
    // primitive
    I128 g = 0;
    for (I128 c : v) g = std::__gcd(g < 0 ? -g : g, c < 0 ? -c : c);
    std::vector<long long> vi(n);
    for (int i = 0; i < n; ++i) vi[i] = to_ll(g ? v[i] / g : v[i]);
    kernel.push_back(std::move(vi));
  }

  const int kn = static_cast<int>(kernel.size());
  LieTable<long long> out;
  out.init(kn);
  for (int i = 0; i < kn; ++i) out.labels[i] = "z" + std::to_string(i + 1);
  // distinguished coordinates: each kernel vector is the unique one nonzero at
  // its free column
  std::vector<int> free_cols;
  for (int f = 0; f < n; ++f)
    if (!is_pivot[f]) free_cols.push_back(f);
  for (int a = 0; a < kn; ++a)
    for (int b = a + 1; b < kn; ++b) {
      std::vector<long long> z = L.bracket(kernel[a], kernel[b]);
      LieTable<long long>::Entry e;
      for (int c = 0; c < kn; ++c) {
        long long num = z[free_cols[c]];
        long long den = kernel[c][free_cols[c]];
        if (num == 0) continue;
        if (num % den != 0) throw std::domain_error("centralizer: non-integral bracket");
        long long coeff = num / den;
        e.emplace_back(c, coeff);
        for (int p = 0; p < n; ++p) z[p] -= coeff * kernel[c][p];
      }
      for (long long v : z)
        if (v != 0) throw std::domain_error("centralizer: bracket escapes kernel");
      out.set_entry(a, b, std::move(e));
    }
  return out;
}

}  // namespace theta
