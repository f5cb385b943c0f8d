#include "silc/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace silc {

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<int> IntMat::apply(const std::vector<int>& v) const {
  std::vector<int> r(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

IntMat IntMat::mul(const IntMat& o) const {
  IntMat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}
Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}
Coweight operator+(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}
Coweight operator-(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}
bool Coweight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  bool pos = false;
  for (int x : c) {
    if (x > 0) pos = true;
    if (x < 0) return false;
  }
  return pos;
}
int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }
Root Root::negated() const {
  Root r = *this;
  for (int& x : r.c) x = -x;
  return r;
}

FiniteWeylElement CartanDatum::identity_element() const {
  FiniteWeylElement e;
  e.rt = e.rt_inv = e.cw = e.cw_inv = IntMat::identity(rank);
  return e;
}

namespace {

void check_type(char series, int rank) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw input_error(std::string("invalid type ") + series + std::to_string(rank));
}

IntMat make_cartan(char series, int rank) {
  IntMat A(rank);
  for (int i = 0; i < rank; ++i) A.at(i, i) = 2;
  auto edge = [&](int i, int j, int aij, int aji) {
    // 1-based nodes; aij = <alpha_j, alpha_i^vee>
    A.at(i - 1, j - 1) = aij;
    A.at(j - 1, i - 1) = aji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1, -1, -1);
  };
  switch (series) {
    case 'A': chain(1, rank); break;
    case 'B':  // alpha_rank short
      chain(1, rank - 1);
      edge(rank - 1, rank, -1, -2);
      break;
    case 'C':  // alpha_rank long
      chain(1, rank - 1);
      edge(rank - 1, rank, -2, -1);
      break;
    case 'D':
      chain(1, rank - 1);
      edge(rank - 2, rank, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-...-rank, node 2 hangs off node 4
      edge(1, 3, -1, -1);
      chain(3, rank);
      edge(2, 4, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(1, 2, -1, -1);
      edge(2, 3, -1, -2);
      edge(3, 4, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      edge(1, 2, -3, -1);
      break;
  }
  return A;
}

FiniteWeylElement make_simple_reflection(const IntMat& A, int i /*0-based*/) {
  int n = A.n;
  FiniteWeylElement s;
  s.rt = IntMat::identity(n);
  s.cw = IntMat::identity(n);
  // s_i alpha_k = alpha_k - A[i][k] alpha_i ;  s_i alpha_k^vee = alpha_k^vee - A[k][i] alpha_i^vee
  for (int k = 0; k < n; ++k) {
    s.rt.at(i, k) -= A.at(i, k);
    s.cw.at(i, k) -= A.at(k, i);
  }
  s.rt_inv = s.rt;
  s.cw_inv = s.cw;
  s.word = {i + 1};
  return s;
}

}  // namespace

Weight weyl_act(const FiniteWeylElement& w, const Weight& mu) {
  // weight action = (cw^{-1})^T
  int n = w.rank();
  std::vector<int> r(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += w.cw_inv.at(i, j) * mu.c[static_cast<size_t>(i)];
    r[static_cast<size_t>(j)] = s;
  }
  return Weight(r);
}

Coweight weyl_act(const FiniteWeylElement& w, const Coweight& xi) { return Coweight(w.cw.apply(xi.c)); }
Root weyl_act(const FiniteWeylElement& w, const Root& r) { return Root(w.rt.apply(r.c)); }

Weight weyl_act_inv(const FiniteWeylElement& w, const Weight& mu) {
  int n = w.rank();
  std::vector<int> r(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += w.cw.at(i, j) * mu.c[static_cast<size_t>(i)];
    r[static_cast<size_t>(j)] = s;
  }
  return Weight(r);
}
Coweight weyl_act_inv(const FiniteWeylElement& w, const Coweight& xi) { return Coweight(w.cw_inv.apply(xi.c)); }
Root weyl_act_inv(const FiniteWeylElement& w, const Root& r) { return Root(w.rt_inv.apply(r.c)); }

long long pairing(const Weight& mu, const Coweight& xi) {
  if (mu.rank() != xi.rank()) throw input_error("pairing: rank mismatch");
  long long s = 0;
  for (size_t i = 0; i < mu.c.size(); ++i) s += static_cast<long long>(mu.c[i]) * xi.c[i];
  return s;
}

Weight root_as_weight(const CartanDatum& cd, const Root& r) {
  if (r.rank() != cd.rank) throw input_error("root_as_weight: rank mismatch");
  return Weight(cd.cartan.apply(r.c));
}

long long pairing_root(const CartanDatum& cd, const Root& r, const Coweight& xi) {
  return pairing(root_as_weight(cd, r), xi);
}

Coweight coroot_of(const CartanDatum& cd, const Root& r) {
  Root p = r.is_positive() ? r : r.negated();
  for (size_t k = 0; k < cd.positive_roots.size(); ++k)
    if (cd.positive_roots[k] == p) {
      Coweight cv = cd.positive_coroots[k];
      if (!r.is_positive())
        for (int& x : cv.c) x = -x;
      return cv;
    }
  throw input_error("coroot_of: not a root");
}

int weyl_length(const CartanDatum& cd, const FiniteWeylElement& w) {
  int len = 0;
  for (const Root& a : cd.positive_roots)
    if (!weyl_act(w, a).is_positive()) ++len;
  return len;
}

namespace {

FiniteWeylElement multiply_mats(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement r;
  r.rt = a.rt.mul(b.rt);
  r.rt_inv = b.rt_inv.mul(a.rt_inv);
  r.cw = a.cw.mul(b.cw);
  r.cw_inv = b.cw_inv.mul(a.cw_inv);
  return r;
}

}  // namespace

std::vector<int> reduced_word(const CartanDatum& cd, const FiniteWeylElement& w) {
  // Strip right descents: w alpha_i < 0 means l(w s_i) = l(w) - 1.
  std::vector<int> word;
  FiniteWeylElement cur = w;
  for (;;) {
    int desc = 0;
    for (int i = 1; i <= cd.rank; ++i) {
      if (!weyl_act(cur, simple_root(cd, i)).is_positive()) { desc = i; break; }
    }
    if (desc == 0) break;
    word.push_back(desc);
    cur = multiply_mats(cur, cd.s(desc));
  }
  if (!(cur.cw == IntMat::identity(cd.rank)))
    throw internal_error("reduced_word: descent stripping did not reach identity");
  std::reverse(word.begin(), word.end());
  return word;
}

FiniteWeylElement multiply(const CartanDatum& cd, const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement r = multiply_mats(a, b);
  r.word = reduced_word(cd, r);
  return r;
}

FiniteWeylElement inverse(const FiniteWeylElement& w) {
  FiniteWeylElement r;
  r.rt = w.rt_inv;
  r.rt_inv = w.rt;
  r.cw = w.cw_inv;
  r.cw_inv = w.cw;
  r.word.assign(w.word.rbegin(), w.word.rend());
  return r;
}

FiniteWeylElement reflection_finite(const CartanDatum& cd, const Root& r) {
  // s_r(xi) = xi - <r, xi> r^vee ; s_r(root x) = x - <x, r^vee> r
  int n = cd.rank;
  Coweight rv = coroot_of(cd, r);
  Weight rw = root_as_weight(cd, r);
  FiniteWeylElement s;
  s.rt = IntMat::identity(n);
  s.cw = IntMat::identity(n);
  for (int k = 0; k < n; ++k) {
    // column k of cw: image of alpha_k^vee
    long long pk = rw.c[static_cast<size_t>(k)];  // <r, alpha_k^vee>
    for (int i = 0; i < n; ++i) s.cw.at(i, k) -= static_cast<int>(pk) * rv.c[static_cast<size_t>(i)];
    // column k of rt: image of alpha_k
    long long qk = pairing_root(cd, simple_root(cd, k + 1), rv);  // <alpha_k, r^vee>
    for (int i = 0; i < n; ++i) s.rt.at(i, k) -= static_cast<int>(qk) * r.c[static_cast<size_t>(i)];
  }
  s.rt_inv = s.rt;
  s.cw_inv = s.cw;
  s.word = reduced_word(cd, s);
  return s;
}

std::vector<FiniteWeylElement> enumerate_weyl_group(const CartanDatum& cd, std::size_t bound) {
  std::vector<FiniteWeylElement> out;
  std::set<IntMat> seen;
  std::vector<FiniteWeylElement> frontier{cd.identity_element()};
  seen.insert(frontier[0].cw);
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<FiniteWeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= cd.rank; ++i) {
        FiniteWeylElement v = multiply(cd, w, cd.s(i));
        if (seen.insert(v.cw).second) {
          if (out.size() >= bound) throw resource_error("enumerate_weyl_group: bound exceeded");
          out.push_back(v);
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const FiniteWeylElement& a, const FiniteWeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

FiniteWeylElement min_coset_rep(const CartanDatum& cd, const FiniteWeylElement& w, const std::vector<int>& J) {
  FiniteWeylElement cur = w;
  for (;;) {
    bool moved = false;
    for (int j : J)
      if (!weyl_act(cur, simple_root(cd, j)).is_positive()) {
        cur = multiply(cd, cur, cd.s(j));
        moved = true;
        break;
      }
    if (!moved) return cur;
  }
}

bool is_dominant(const Weight& mu) {
  return std::all_of(mu.c.begin(), mu.c.end(), [](int x) { return x >= 0; });
}

Weight zero_weight(const CartanDatum& cd) { return Weight(std::vector<int>(static_cast<size_t>(cd.rank), 0)); }
Coweight zero_coweight(const CartanDatum& cd) { return Coweight(std::vector<int>(static_cast<size_t>(cd.rank), 0)); }
Weight fundamental_weight(const CartanDatum& cd, int i) {
  Weight w = zero_weight(cd);
  w.c.at(static_cast<size_t>(i) - 1) = 1;
  return w;
}
Coweight simple_coroot(const CartanDatum& cd, int i) {
  Coweight v = zero_coweight(cd);
  v.c.at(static_cast<size_t>(i) - 1) = 1;
  return v;
}
Root simple_root(const CartanDatum& cd, int i) {
  Root r(std::vector<int>(static_cast<size_t>(cd.rank), 0));
  r.c.at(static_cast<size_t>(i) - 1) = 1;
  return r;
}

CartanDatum build_cartan(char series, int rank) {
  check_type(series, rank);
  CartanDatum cd;
  cd.series = series;
  cd.rank = rank;
  cd.cartan = make_cartan(series, rank);

  for (int i = 0; i < rank; ++i) cd.simple.push_back(make_simple_reflection(cd.cartan, i));

  // Root/coroot closure from the simples.  Pairs (root, coroot) reflect
  // together, so coroots come out of the same walk.
  std::map<std::vector<int>, std::vector<int>> pos;  // root coords -> coroot coords
  std::vector<std::pair<Root, Coweight>> frontier;
  for (int i = 1; i <= rank; ++i) {
    Root a = simple_root(cd, i);
    Coweight av = simple_coroot(cd, i);
    pos[a.c] = av.c;
    frontier.push_back({a, av});
  }
  while (!frontier.empty()) {
    std::vector<std::pair<Root, Coweight>> next;
    for (const auto& [a, av] : frontier)
      for (int i = 1; i <= rank; ++i) {
        Root b = weyl_act(cd.s(i), a);
        if (!b.is_positive()) continue;
        Coweight bv = weyl_act(cd.s(i), av);
        if (pos.emplace(b.c, bv.c).second) next.push_back({b, bv});
      }
    frontier = std::move(next);
  }
  for (const auto& [rc, cc] : pos) {
    cd.positive_roots.push_back(Root(rc));
    cd.positive_coroots.push_back(Coweight(cc));
  }
  // Deterministic order: by height, then coordinates.
  std::vector<size_t> idx(cd.positive_roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    int hx = cd.positive_roots[x].height(), hy = cd.positive_roots[y].height();
    if (hx != hy) return hx < hy;
    return cd.positive_roots[x].c < cd.positive_roots[y].c;
  });
  std::vector<Root> pr;
  std::vector<Coweight> pc;
  for (size_t k : idx) {
    pr.push_back(cd.positive_roots[k]);
    pc.push_back(cd.positive_coroots[k]);
  }
  cd.positive_roots = std::move(pr);
  cd.positive_coroots = std::move(pc);

  cd.theta = cd.positive_roots.back();  // unique root of maximal height
  cd.theta_check = cd.positive_coroots.back();

  cd.rho = Weight(std::vector<int>(static_cast<size_t>(rank), 1));
  cd.two_rho_check = zero_coweight(cd);
  for (const auto& cv : cd.positive_coroots) cd.two_rho_check = cd.two_rho_check + cv;

  // Longest element by greedy right ascent: w alpha_i > 0 iff l(w s_i) = l(w)+1.
  FiniteWeylElement w = cd.identity_element();
  for (;;) {
    int asc = 0;
    for (int i = 1; i <= rank; ++i)
      if (weyl_act(w, simple_root(cd, i)).is_positive()) { asc = i; break; }
    if (asc == 0) break;
    w = multiply(cd, w, cd.s(asc));
  }
  cd.w0 = w;

  if (cd.w0.length() != cd.num_positive_roots())
    throw internal_error("build_cartan: l(w0) != |positive roots|");
  return cd;
}

}  // namespace silc
