#include "silc/silspath.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace silc {

bool operator<(const SiLSPath& a, const SiLSPath& b) { return path_key(a) < path_key(b); }
bool operator<(const QLSPath& a, const QLSPath& b) { return qls_key(a) < qls_key(b); }

long long ParTuple::total() const {
  long long t = 0;
  for (const auto& p : parts)
    for (int v : p) t += v;
  return t;
}

ParabolicSet shape_parabolic(const CartanDatum& cd, const Weight& lambda) {
  std::vector<int> J;
  for (int i = 1; i <= cd.rank; ++i)
    if (lambda.c[static_cast<size_t>(i) - 1] == 0) J.push_back(i);
  return ParabolicSet(J);
}

SiLSPath straight_path(const CartanDatum& cd, const Weight& lambda) {
  return SiLSPath{lambda, {aff_identity(cd)}, {Frac(0), Frac(1)}};
}

std::vector<long long> path_key(const SiLSPath& pi) {
  std::vector<long long> k;
  k.push_back(pi.segments());
  for (const auto& d : pi.dirs) {
    for (int v : d.fin.cw.a) k.push_back(v);
    for (int v : d.trans.c) k.push_back(v);
  }
  for (const auto& b : pi.breaks) {
    k.push_back(b.num);
    k.push_back(b.den);
  }
  return k;
}

std::vector<long long> qls_key(const QLSPath& pi) {
  std::vector<long long> k;
  k.push_back(static_cast<long long>(pi.dirs.size()));
  for (const auto& d : pi.dirs)
    for (int v : d.cw.a) k.push_back(v);
  for (const auto& b : pi.breaks) {
    k.push_back(b.num);
    k.push_back(b.den);
  }
  return k;
}

namespace {

// Slope <x_u lambda, alpha_i^vee> of segment u under H_i, level zero.
long long seg_slope(const CartanDatum& cd, const SiLSPath& pi, int u, int i) {
  return pair_affine_simple(cd, pi.dirs[static_cast<size_t>(u)], i, pi.shape);
}

// Directed path from lo to hi inside SiB_a (edges with a <z lambda, beta^vee>
// integral), by upward BFS.  lo == hi counts as reachable.
bool sib_a_reachable(const CartanDatum& cd, const AffineWeylElement& lo, const AffineWeylElement& hi,
                     const ParabolicSet& J, const Weight& lambda, const Frac& a, const Budget& budget) {
  if (lo == hi) return true;
  long long d = sell(cd, hi) - sell(cd, lo);
  if (d <= 0) return false;
  std::set<AffineWeylElement> frontier{lo};
  std::size_t visited = 1;
  for (long long level = 0; level < d; ++level) {
    std::set<AffineWeylElement> next;
    for (const auto& z : frontier)
      for (auto& [beta, up] : si_covers(cd, z, J)) {
        Frac prod = a * Frac(pair_affine(cd, z, beta, lambda));
        if (!prod.is_integer()) continue;
        if (next.insert(up).second && ++visited > budget.max_nodes)
          throw resource_error("sib_a_reachable: BFS budget exceeded");
      }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return frontier.count(hi) > 0;
}

void check_structure(const SiLSPath& pi) {
  if (pi.dirs.empty() || pi.breaks.size() != pi.dirs.size() + 1)
    throw input_error("path: direction/break count mismatch");
  if (pi.breaks.front() != Frac(0) || pi.breaks.back() != Frac(1))
    throw input_error("path: breaks must run from 0 to 1");
  for (size_t u = 0; u + 1 < pi.breaks.size(); ++u)
    if (!(pi.breaks[u] < pi.breaks[u + 1])) throw input_error("path: breaks not strictly increasing");
}

}  // namespace

bool validate(const CartanDatum& cd, const SiLSPath& pi, const Budget& budget) {
  check_structure(pi);
  ParabolicSet J = shape_parabolic(cd, pi.shape);
  for (const auto& d : pi.dirs)
    if (!in_wj_af(cd, d, J)) return false;
  for (int u = 0; u + 1 < pi.segments(); ++u) {
    const auto& hi = pi.dirs[static_cast<size_t>(u)];
    const auto& lo = pi.dirs[static_cast<size_t>(u) + 1];
    if (hi == lo) return false;
    if (!si_leq(cd, lo, hi, J, budget)) return false;
    if (!sib_a_reachable(cd, lo, hi, J, pi.shape, pi.breaks[static_cast<size_t>(u) + 1], budget)) return false;
  }
  return true;
}

HFunction h_function(const CartanDatum& cd, const SiLSPath& pi, int i) {
  HFunction h;
  h.t.push_back(Frac(0));
  h.value.push_back(Frac(0));
  Frac acc(0);
  for (int u = 0; u < pi.segments(); ++u) {
    Frac len = pi.breaks[static_cast<size_t>(u) + 1] - pi.breaks[static_cast<size_t>(u)];
    acc = acc + len * Frac(seg_slope(cd, pi, u, i));
    h.t.push_back(pi.breaks[static_cast<size_t>(u) + 1]);
    h.value.push_back(acc);
  }
  Frac m(0);
  for (const Frac& v : h.value)
    if (v < m) m = v;
  if (!m.is_integer()) throw internal_error("h_function: minimum is not an integer");
  h.min_value = m.num;
  return h;
}

long long eps(const CartanDatum& cd, const SiLSPath& pi, int i) { return -h_function(cd, pi, i).min_value; }

long long phi(const CartanDatum& cd, const SiLSPath& pi, int i) {
  HFunction h = h_function(cd, pi, i);
  Frac end = h.value.back() - Frac(h.min_value);
  if (!end.is_integer()) throw internal_error("phi: H(1) - m is not an integer");
  return end.num;
}

namespace {

struct Segment {
  AffineWeylElement dir;
  Frac left, right;
};

SiLSPath assemble(const CartanDatum& cd, const Weight& shape, std::vector<Segment> segs) {
  // Drop empty segments, merge equal adjacent directions.
  std::vector<Segment> out;
  for (auto& s : segs) {
    if (!(s.left < s.right)) continue;
    if (!out.empty() && out.back().dir == s.dir)
      out.back().right = s.right;
    else
      out.push_back(s);
  }
  SiLSPath pi;
  pi.shape = shape;
  pi.breaks.push_back(Frac(0));
  for (auto& s : out) {
    pi.dirs.push_back(s.dir);
    pi.breaks.push_back(s.right);
  }
  check_structure(pi);
  (void)cd;
  return pi;
}

// Largest t <= hi with H(t) == target, assuming one exists.
Frac last_time_at(const HFunction& h, const Frac& hi, long long target) {
  Frac tgt(target);
  Frac best(-1);
  for (size_t u = 0; u + 1 < h.t.size(); ++u) {
    Frac t0 = h.t[u], t1 = h.t[u + 1];
    Frac v0 = h.value[u], v1 = h.value[u + 1];
    if (t0 > hi) break;
    if (t1 > hi) { // clip
      v1 = v0 + (v1 - v0) * (hi - t0) / (t1 - t0);
      t1 = hi;
    }
    if (v0 == v1) {
      if (v0 == tgt && t1 > best) best = t1;
      continue;
    }
    if ((v0 <= tgt && tgt <= v1) || (v1 <= tgt && tgt <= v0)) {
      Frac t = t0 + (tgt - v0) * (t1 - t0) / (v1 - v0);
      if (t > best) best = t;
    }
  }
  if (best < Frac(0)) throw internal_error("last_time_at: target value not attained");
  return best;
}

// Smallest t >= lo with H(t) == target, assuming one exists.
Frac first_time_at(const HFunction& h, const Frac& lo, long long target) {
  Frac tgt(target);
  for (size_t u = 0; u + 1 < h.t.size(); ++u) {
    Frac t0 = h.t[u], t1 = h.t[u + 1];
    Frac v0 = h.value[u], v1 = h.value[u + 1];
    if (t1 < lo) continue;
    if (t0 < lo) { // clip
      v0 = v0 + (v1 - v0) * (lo - t0) / (t1 - t0);
      t0 = lo;
    }
    if (v0 == v1) {
      if (v0 == tgt) return t0;
      continue;
    }
    if ((v0 <= tgt && tgt <= v1) || (v1 <= tgt && tgt <= v0)) {
      Frac t = t0 + (tgt - v0) * (t1 - t0) / (v1 - v0);
      if (t >= lo) return t;
    }
  }
  throw internal_error("first_time_at: target value not attained");
}

}  // namespace

std::optional<SiLSPath> e_op(const CartanDatum& cd, const SiLSPath& pi, int i) {
  HFunction h = h_function(cd, pi, i);
  long long m = h.min_value;
  if (m == 0) return std::nullopt;
  // t1: first time the minimum is attained (at a breakpoint); t0: last time
  // m+1 is attained before t1.  H is strictly decreasing on [t0, t1].
  Frac t1;
  for (size_t u = 0; u < h.t.size(); ++u)
    if (h.value[u] == Frac(m)) { t1 = h.t[u]; break; }
  Frac t0 = last_time_at(h, t1, m + 1);

  AffineWeylElement si = affine_simple(cd, i);
  std::vector<Segment> segs;
  for (int u = 0; u < pi.segments(); ++u) {
    Frac l = pi.breaks[static_cast<size_t>(u)], r = pi.breaks[static_cast<size_t>(u) + 1];
    const AffineWeylElement& d = pi.dirs[static_cast<size_t>(u)];
    // Portion before t0 is kept, portion in [t0, t1] is reflected, rest kept.
    if (r <= t0 || l >= t1) {
      segs.push_back({d, l, r});
      continue;
    }
    if (l < t0) segs.push_back({d, l, t0});
    Frac ml = l < t0 ? t0 : l;
    Frac mr = r < t1 ? r : t1;
    segs.push_back({aff_multiply(cd, si, d), ml, mr});
    if (r > t1) segs.push_back({d, t1, r});
  }
  return assemble(cd, pi.shape, std::move(segs));
}

std::optional<SiLSPath> f_op(const CartanDatum& cd, const SiLSPath& pi, int i) {
  HFunction h = h_function(cd, pi, i);
  long long m = h.min_value;
  if (h.value.back() == Frac(m)) return std::nullopt;  // phi = 0
  // t0: last time the minimum is attained (a breakpoint); t1: first time
  // m+1 is attained after t0.  H is strictly increasing on [t0, t1].
  Frac t0;
  for (size_t u = h.t.size(); u-- > 0;)
    if (h.value[u] == Frac(m)) { t0 = h.t[u]; break; }
  Frac t1 = first_time_at(h, t0, m + 1);

  AffineWeylElement si = affine_simple(cd, i);
  std::vector<Segment> segs;
  for (int u = 0; u < pi.segments(); ++u) {
    Frac l = pi.breaks[static_cast<size_t>(u)], r = pi.breaks[static_cast<size_t>(u) + 1];
    const AffineWeylElement& d = pi.dirs[static_cast<size_t>(u)];
    if (r <= t0 || l >= t1) {
      segs.push_back({d, l, r});
      continue;
    }
    if (l < t0) segs.push_back({d, l, t0});
    Frac ml = l < t0 ? t0 : l;
    Frac mr = r < t1 ? r : t1;
    segs.push_back({aff_multiply(cd, si, d), ml, mr});
    if (r > t1) segs.push_back({d, t1, r});
  }
  return assemble(cd, pi.shape, std::move(segs));
}

AffineWeight wt(const CartanDatum& cd, const SiLSPath& pi) {
  std::vector<Frac> fin(static_cast<size_t>(cd.rank), Frac(0));
  Frac dlt(0);
  for (int u = 0; u < pi.segments(); ++u) {
    Frac len = pi.breaks[static_cast<size_t>(u) + 1] - pi.breaks[static_cast<size_t>(u)];
    const auto& d = pi.dirs[static_cast<size_t>(u)];
    Weight wl = weyl_act(d.fin, pi.shape);
    for (int j = 0; j < cd.rank; ++j) fin[static_cast<size_t>(j)] = fin[static_cast<size_t>(j)] + len * Frac(wl.c[static_cast<size_t>(j)]);
    dlt = dlt - len * Frac(pairing(pi.shape, d.trans));
  }
  AffineWeight w;
  w.finite = zero_weight(cd);
  for (int j = 0; j < cd.rank; ++j) {
    if (!fin[static_cast<size_t>(j)].is_integer()) throw internal_error("wt: non-integral finite part");
    w.finite.c[static_cast<size_t>(j)] = static_cast<int>(fin[static_cast<size_t>(j)].num);
  }
  if (!dlt.is_integer()) throw internal_error("wt: non-integral delta part");
  w.delta = dlt.num;
  return w;
}

long long wt_pairing(const CartanDatum& cd, const AffineWeight& w, int i) {
  if (i == 0) return -pairing(w.finite, cd.theta_check);
  return w.finite.c.at(static_cast<size_t>(i) - 1);
}

SiLSPath weyl_act_path(const CartanDatum& cd, const AffineWeylElement& x, const SiLSPath& pi) {
  std::vector<int> word = aff_reduced_word(cd, x);
  SiLSPath cur = pi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    long long n = wt_pairing(cd, wt(cd, cur), *it);
    if (n >= 0) {
      for (long long k = 0; k < n; ++k) {
        auto nx = f_op(cd, cur, *it);
        if (!nx) throw internal_error("weyl_act_path: f ran out before the pairing was exhausted");
        cur = *nx;
      }
    } else {
      for (long long k = 0; k < -n; ++k) {
        auto nx = e_op(cd, cur, *it);
        if (!nx) throw internal_error("weyl_act_path: e ran out before the pairing was exhausted");
        cur = *nx;
      }
    }
  }
  return cur;
}

SiLSPath weyl_act_extremal(const CartanDatum& cd, const AffineWeylElement& x, const SiLSPath& pi) {
  // For extremal-form paths (directions pij(t_xi_u)) the action of x sends
  // direction u to pij(x t_xi_u) = pij(x * dir_u), the finite part of dir_u
  // being absorbed by the projection.
  ParabolicSet J = shape_parabolic(cd, pi.shape);
  SiLSPath out = pi;
  for (auto& d : out.dirs) d = pij(cd, aff_multiply(cd, x, d), J);
  std::vector<Segment> segs;
  for (int u = 0; u < out.segments(); ++u)
    segs.push_back({out.dirs[static_cast<size_t>(u)], out.breaks[static_cast<size_t>(u)],
                    out.breaks[static_cast<size_t>(u) + 1]});
  return assemble(cd, out.shape, std::move(segs));
}

SiLSPath t_shift(const CartanDatum& cd, const Coweight& xi, const SiLSPath& pi) {
  ParabolicSet J = shape_parabolic(cd, pi.shape);
  SiLSPath out = pi;
  AffineWeylElement t = translation(cd, xi);
  for (auto& d : out.dirs) d = pij(cd, aff_multiply(cd, d, t), J);
  return out;
}

std::vector<ParTuple> par_elements(const CartanDatum& cd, const Weight& lambda, long long size_bound) {
  if (!is_dominant(lambda)) throw input_error("par_elements: lambda not dominant");
  std::vector<std::vector<std::vector<int>>> per_index;  // choices per i
  for (int i = 0; i < cd.rank; ++i) {
    int maxlen = std::max(0, lambda.c[static_cast<size_t>(i)] - 1);
    std::vector<std::vector<int>> choices{{}};
    // all weakly decreasing positive tuples of length <= maxlen, sum <= bound
    std::vector<std::vector<int>> frontier{{}};
    for (int l = 1; l <= maxlen; ++l) {
      std::vector<std::vector<int>> next;
      for (const auto& p : frontier) {
        int hi = p.empty() ? static_cast<int>(size_bound) : p.back();
        long long used = std::accumulate(p.begin(), p.end(), 0LL);
        for (int v = 1; v <= hi && used + v <= size_bound; ++v) {
          auto q = p;
          q.push_back(v);
          choices.push_back(q);
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    std::sort(choices.begin(), choices.end());
    choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
    per_index.push_back(std::move(choices));
  }
  // cartesian product with total bound
  std::vector<ParTuple> out;
  ParTuple cur;
  cur.parts.assign(static_cast<size_t>(cd.rank), {});
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == cd.rank) {
      out.push_back(cur);
      return;
    }
    for (const auto& choice : per_index[static_cast<size_t>(i)]) {
      long long s = std::accumulate(choice.begin(), choice.end(), 0LL);
      if (used + s > size_bound) continue;
      cur.parts[static_cast<size_t>(i)] = choice;
      rec(i + 1, used + s);
    }
    cur.parts[static_cast<size_t>(i)].clear();
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SiLSPath par_to_path(const CartanDatum& cd, const ParTuple& rho, const Weight& lambda) {
  if (!is_dominant(lambda)) throw input_error("par_to_path: lambda not dominant");
  if (static_cast<int>(rho.parts.size()) != cd.rank) throw input_error("par_to_path: wrong tuple arity");
  ParabolicSet J = shape_parabolic(cd, lambda);
  for (int i = 1; i <= cd.rank; ++i) {
    const auto& p = rho.parts[static_cast<size_t>(i) - 1];
    int m = lambda.c[static_cast<size_t>(i) - 1];
    if (static_cast<int>(p.size()) >= std::max(m, 1))
      throw input_error("par_to_path: partition too long for the shape");
    for (size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k] < p[k + 1]) throw input_error("par_to_path: partition not weakly decreasing");
    if (!p.empty() && p.back() <= 0) throw input_error("par_to_path: partition entries must be positive");
  }

  // Turning grid; the direction on the segment ending at a is pij(t_xi(a))
  // with xi(a) reading the ceil(a m_i)-th column of each partition.
  std::set<Frac> turn{Frac(1)};
  for (int i = 1; i <= cd.rank; ++i) {
    int m = lambda.c[static_cast<size_t>(i) - 1];
    for (int k = 1; k < m; ++k) turn.insert(Frac(k, m));
  }
  auto xi_at = [&](const Frac& a) {
    Coweight xi = zero_coweight(cd);
    for (int i = 1; i <= cd.rank; ++i) {
      int m = lambda.c[static_cast<size_t>(i) - 1];
      if (m == 0) continue;
      // k = ceil(a*m)
      long long k = (a.num * m + a.den - 1) / a.den;
      const auto& p = rho.parts[static_cast<size_t>(i) - 1];
      if (k >= 1 && k <= static_cast<long long>(p.size())) xi.c[static_cast<size_t>(i) - 1] = p[static_cast<size_t>(k) - 1];
    }
    return xi;
  };

  std::vector<Segment> segs;
  Frac prev(0);
  for (const Frac& a : turn) {
    segs.push_back({pij(cd, translation(cd, xi_at(a)), J), prev, a});
    prev = a;
  }
  return assemble(cd, lambda, std::move(segs));
}

QLSPath cl_project(const CartanDatum& cd, const SiLSPath& pi) {
  ParabolicSet J = shape_parabolic(cd, pi.shape);
  QLSPath q;
  q.shape = pi.shape;
  for (int u = 0; u < pi.segments(); ++u) {
    FiniteWeylElement v = min_coset_rep(cd, pi.dirs[static_cast<size_t>(u)].fin, J.members);
    if (!q.dirs.empty() && q.dirs.back() == v) {
      q.breaks.back() = pi.breaks[static_cast<size_t>(u) + 1];
    } else {
      q.dirs.push_back(v);
      q.breaks.push_back(pi.breaks[static_cast<size_t>(u) + 1]);
    }
  }
  q.breaks.insert(q.breaks.begin(), Frac(0));
  return q;
}

namespace {

// Admissible interior breakpoints: reduced p/q with q dividing some nonzero
// pairing value; every consecutive-direction chain uses at least one edge
// that moves the lambda-image, so denominators are bounded by the largest
// pairing.
std::vector<Frac> break_grid(const CartanDatum& cd, const Weight& lambda) {
  long long nmax = 0;
  for (const auto& cv : cd.positive_coroots) nmax = std::max(nmax, pairing(lambda, cv));
  std::vector<Frac> g;
  for (long long q = 2; q <= nmax; ++q)
    for (long long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) g.push_back(Frac(p, q));
  std::sort(g.begin(), g.end());
  return g;
}

struct EnumState {
  const CartanDatum& cd;
  Weight lambda;
  ParabolicSet J;
  long long q_min;
  const Budget& budget;
  std::vector<Frac> grid;
  std::vector<SiLSPath> out;
  std::size_t visits = 0;

  void bump() {
    if (++visits > budget.max_nodes) throw resource_error("enumerate_sils: node budget exceeded");
  }

  long long lam_pair(const AffineWeylElement& z) const { return pairing(lambda, z.trans); }

  // Directions strictly above z reachable in SiB_a, pruned by the q-budget:
  // a node with committed + a * <lambda, tau> > -q_min cannot appear on any
  // admissible completion (pairings only grow upward).
  std::vector<AffineWeylElement> ups(const AffineWeylElement& z, const Frac& a, const Frac& committed) {
    std::vector<AffineWeylElement> result;
    std::set<AffineWeylElement> seen{z};
    std::vector<AffineWeylElement> frontier{z};
    while (!frontier.empty()) {
      std::vector<AffineWeylElement> next;
      for (const auto& w : frontier)
        for (auto& [beta, up] : si_covers(cd, w, J)) {
          Frac prod = a * Frac(pair_affine(cd, w, beta, lambda));
          if (!prod.is_integer()) continue;
          if (!seen.insert(up).second) continue;
          bump();
          if (committed + a * Frac(lam_pair(up)) > Frac(-q_min)) continue;
          result.push_back(up);
          next.push_back(up);
        }
      frontier = std::move(next);
    }
    return result;
  }

  // suffix holds directions right-to-left: suffix[0] = kappa.  rights holds
  // their right breakpoints in the same order.
  std::vector<AffineWeylElement> suffix;
  std::vector<Frac> rights;

  void emit() {
    SiLSPath pi;
    pi.shape = lambda;
    pi.dirs.assign(suffix.rbegin(), suffix.rend());
    pi.breaks.push_back(Frac(0));
    for (auto it = rights.rbegin(); it != rights.rend(); ++it) pi.breaks.push_back(*it);
    if (out.size() >= budget.max_paths) throw resource_error("enumerate_sils: path budget exceeded");
    out.push_back(std::move(pi));
  }

  void extend(const Frac& committed) {
    AffineWeylElement z = suffix.back();  // by value: the vectors reallocate below
    Frac right = rights.back();
    // Invariant from the callers' pruning: closing here is admissible.
    Frac total = committed + right * Frac(lam_pair(z));
    if (total > Frac(-q_min)) return;
    if (!total.is_integer()) throw internal_error("enumerate_sils: non-integral q-weight");
    emit();  // z spans [0, right]
    // or insert a new break a < right from the grid
    for (const Frac& a : grid) {
      if (!(a < right)) break;
      Frac committed2 = committed + (right - a) * Frac(lam_pair(z));
      for (const auto& up : ups(z, a, committed2)) {
        suffix.push_back(up);
        rights.push_back(a);
        extend(committed2);
        suffix.pop_back();
        rights.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<SiLSPath> enumerate_sils(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                                     long long q_min, const Budget& budget) {
  if (!is_dominant(lambda)) throw input_error("enumerate_sils: lambda not dominant");
  if (q_min > 0) throw input_error("enumerate_sils: q_min must be nonpositive");
  EnumState st{cd, lambda, shape_parabolic(cd, lambda), q_min, budget, break_grid(cd, lambda), {}, 0, {}, {}};
  AffineWeylElement base = pij(cd, x, st.J);

  // kappa candidates: base and everything above it within the q-budget.
  std::vector<AffineWeylElement> kappas{base};
  if (!(Frac(st.lam_pair(base)) > Frac(-q_min)))
    for (const auto& up : st.ups(base, Frac(1), Frac(0))) kappas.push_back(up);
  else
    kappas.clear();

  for (const auto& k : kappas) {
    if (Frac(st.lam_pair(k)) > Frac(-q_min)) continue;
    st.suffix = {k};
    st.rights = {Frac(1)};
    st.extend(Frac(0));
  }
  std::sort(st.out.begin(), st.out.end());
  st.out.erase(std::unique(st.out.begin(), st.out.end()), st.out.end());
  return st.out;
}

std::map<ParTuple, SiLSPath> crystal_component_reps(const CartanDatum& cd, const Weight& lambda, long long q_min) {
  std::map<ParTuple, SiLSPath> reps;
  std::set<std::vector<long long>> seen;
  for (const auto& rho : par_elements(cd, lambda, -q_min)) {
    SiLSPath p = par_to_path(cd, rho, lambda);
    if (!seen.insert(path_key(p)).second) throw internal_error("crystal_component_reps: duplicate representative");
    reps.emplace(rho, std::move(p));
  }
  return reps;
}

}  // namespace silc
