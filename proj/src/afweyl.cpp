#include "silc/afweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace silc {

ParabolicSet::ParabolicSet(std::vector<int> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() < 1) throw input_error("parabolic set: indices are 1-based");
}

bool ParabolicSet::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

AffineWeylElement aff_identity(const CartanDatum& cd) {
  return AffineWeylElement{cd.identity_element(), zero_coweight(cd)};
}

AffineWeylElement translation(const CartanDatum& cd, const Coweight& xi) {
  return AffineWeylElement{cd.identity_element(), xi};
}

AffineWeylElement from_finite(const CartanDatum& cd, const FiniteWeylElement& w) {
  return AffineWeylElement{w, zero_coweight(cd)};
}

AffineWeylElement aff_multiply(const CartanDatum& cd, const AffineWeylElement& a, const AffineWeylElement& b) {
  // (w, xi)(v, zeta) = (wv, v^{-1} xi + zeta)
  return AffineWeylElement{multiply(cd, a.fin, b.fin), weyl_act_inv(b.fin, a.trans) + b.trans};
}

AffineWeylElement aff_inverse(const CartanDatum& cd, const AffineWeylElement& x) {
  Coweight t = weyl_act(x.fin, x.trans);
  for (int& v : t.c) v = -v;
  return AffineWeylElement{inverse(x.fin), t};
}

AffineWeylElement affine_simple(const CartanDatum& cd, int i) {
  if (i == 0) {
    Coweight mth = cd.theta_check;
    for (int& v : mth.c) v = -v;
    return AffineWeylElement{reflection_finite(cd, cd.theta), mth};
  }
  if (i < 1 || i > cd.rank) throw input_error("affine_simple: index out of range");
  return from_finite(cd, cd.s(i));
}

AffineRoot act_affine_root(const CartanDatum& cd, const AffineWeylElement& x, const AffineRoot& beta) {
  long long p = pairing_root(cd, beta.alpha, x.trans);
  return AffineRoot{weyl_act(x.fin, beta.alpha), beta.delta_coeff - static_cast<int>(p)};
}

AffineWeylElement reflection(const CartanDatum& cd, const AffineRoot& beta) {
  if (std::all_of(beta.alpha.c.begin(), beta.alpha.c.end(), [](int v) { return v == 0; }))
    throw input_error("reflection: imaginary root");
  Coweight av = coroot_of(cd, beta.alpha);
  for (int& v : av.c) v *= beta.delta_coeff;
  return AffineWeylElement{reflection_finite(cd, beta.alpha), av};
}

long long sell(const CartanDatum& cd, const AffineWeylElement& x) {
  long long s = x.fin.length();
  for (int v : x.trans.c) s += 2LL * v;  // <rho, xi> = coordinate sum
  return s;
}

long long aff_length(const CartanDatum& cd, const AffineWeylElement& x) {
  // l(w t_xi) = sum over gamma > 0 of |<gamma, xi> + chi(w gamma < 0)|
  long long len = 0;
  for (const Root& g : cd.positive_roots) {
    long long c = pairing_root(cd, g, x.trans);
    if (!weyl_act(x.fin, g).is_positive()) c += 1;
    len += c < 0 ? -c : c;
  }
  return len;
}

namespace {

// i is a left descent of x iff x^{-1} alpha_i is a negative affine root.
bool is_left_descent(const CartanDatum& cd, const AffineWeylElement& xinv, int i) {
  AffineRoot ai = i == 0 ? AffineRoot{cd.theta.negated(), 1} : AffineRoot{simple_root(cd, i), 0};
  return !act_affine_root(cd, xinv, ai).is_positive();
}

int left_descent(const CartanDatum& cd, const AffineWeylElement& x) {
  AffineWeylElement xinv = aff_inverse(cd, x);
  for (int i = 0; i <= cd.rank; ++i)
    if (is_left_descent(cd, xinv, i)) return i;
  throw internal_error("left_descent: no descent on a non-identity element");
}

}  // namespace

std::vector<int> aff_reduced_word(const CartanDatum& cd, const AffineWeylElement& x) {
  std::vector<int> word;
  AffineWeylElement cur = x;
  AffineWeylElement e = aff_identity(cd);
  while (!(cur == e)) {
    int i = left_descent(cd, cur);
    word.push_back(i);
    cur = aff_multiply(cd, affine_simple(cd, i), cur);
  }
  return word;  // x = s_{word[0]} s_{word[1]} ... (identity has empty word)
}

bool bruhat_leq(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y) {
  std::vector<AffineWeylElement> simples;
  for (int i = 0; i <= cd.rank; ++i) simples.push_back(affine_simple(cd, i));
  AffineWeylElement a = x, b = y;
  long long la = aff_length(cd, a), lb = aff_length(cd, b);
  AffineWeylElement e = aff_identity(cd);
  for (;;) {
    if (la > lb) return false;
    if (a == e) return true;
    AffineWeylElement binv = aff_inverse(cd, b);
    int i = 0;
    while (i <= cd.rank && !is_left_descent(cd, binv, i)) ++i;
    if (i > cd.rank) throw internal_error("bruhat_leq: descent search failed");
    b = aff_multiply(cd, simples[static_cast<size_t>(i)], b);
    --lb;
    if (is_left_descent(cd, aff_inverse(cd, a), i)) {
      a = aff_multiply(cd, simples[static_cast<size_t>(i)], a);
      --la;
    }
  }
}

long long pair_affine_simple(const CartanDatum& cd, const AffineWeylElement& x, int i, const Weight& lambda) {
  Weight wl = weyl_act(x.fin, lambda);
  if (i == 0) return -pairing(wl, cd.theta_check);
  return wl.c.at(static_cast<size_t>(i) - 1);
}

long long pair_affine(const CartanDatum& cd, const AffineWeylElement& x, const AffineRoot& beta,
                      const Weight& lambda) {
  return pairing(weyl_act(x.fin, lambda), coroot_of(cd, beta.alpha));
}

std::vector<std::vector<int>> parabolic_components(const CartanDatum& cd, const ParabolicSet& J) {
  std::vector<std::vector<int>> comps;
  std::set<int> todo(J.members.begin(), J.members.end());
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = todo.begin(); it != todo.end();) {
        if (cd.cartan.at(comp[k] - 1, *it - 1) != 0) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<AffineRoot> parabolic_affine_simples(const CartanDatum& cd, const ParabolicSet& J) {
  std::vector<AffineRoot> out;
  for (int j : J.members) out.push_back(AffineRoot{simple_root(cd, j), 0});
  for (const auto& comp : parabolic_components(cd, J)) {
    // Highest root of the component: maximal-height ambient root supported in it.
    const Root* best = nullptr;
    for (const Root& r : cd.positive_roots) {
      bool supported = true;
      for (int i = 1; i <= cd.rank; ++i)
        if (r.c[static_cast<size_t>(i) - 1] != 0 &&
            !std::binary_search(comp.begin(), comp.end(), i)) {
          supported = false;
          break;
        }
      if (supported && (!best || r.height() > best->height())) best = &r;
    }
    if (!best) throw internal_error("parabolic_affine_simples: component without roots");
    out.push_back(AffineRoot{best->negated(), 1});
  }
  return out;
}

bool in_wj_af(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J) {
  for (const AffineRoot& b : parabolic_affine_simples(cd, J))
    if (!act_affine_root(cd, x, b).is_positive()) return false;
  return true;
}

AffineWeylElement pij(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J) {
  if (J.empty()) return x;
  auto simples = parabolic_affine_simples(cd, J);
  AffineWeylElement cur = x;
  for (;;) {
    bool moved = false;
    for (const AffineRoot& b : simples)
      if (!act_affine_root(cd, cur, b).is_positive()) {
        cur = aff_multiply(cd, cur, reflection(cd, b));
        moved = true;
        break;
      }
    if (!moved) return cur;
  }
}

bool lift_contains(const CartanDatum& cd, const AffineWeylElement& lifted, const AffineWeylElement& x,
                   const ParabolicSet& J) {
  return pij(cd, lifted, J) == x;
}

std::vector<std::pair<AffineRoot, AffineWeylElement>> si_covers(const CartanDatum& cd, const AffineWeylElement& x,
                                                                const ParabolicSet& J) {
  if (!in_wj_af(cd, x, J)) throw input_error("si_covers: x not in (W^J)_af");
  std::vector<std::pair<AffineRoot, AffineWeylElement>> out;
  long long sx = sell(cd, x);
  auto probe = [&](const AffineRoot& beta) {
    AffineWeylElement y = aff_multiply(cd, reflection(cd, beta), x);
    if (sell(cd, y) == sx + 1 && in_wj_af(cd, y, J)) out.push_back({beta, y});
  };
  for (const Root& a : cd.positive_roots) probe(AffineRoot{a, 0});
  for (const Root& a : cd.positive_roots) probe(AffineRoot{a.negated(), 1});
  return out;
}

bool si_leq(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y, const ParabolicSet& J,
            const Budget& budget) {
  if (!in_wj_af(cd, x, J) || !in_wj_af(cd, y, J)) throw input_error("si_leq: operand not in (W^J)_af");
  if (x == y) return true;
  long long d = sell(cd, y) - sell(cd, x);
  if (d <= 0) return false;
  std::set<AffineWeylElement> frontier{x};
  std::size_t visited = 1;
  for (long long level = 0; level < d; ++level) {
    std::set<AffineWeylElement> next;
    for (const auto& z : frontier)
      for (auto& [beta, up] : si_covers(cd, z, J)) {
        (void)beta;
        if (next.insert(up).second && ++visited > budget.max_nodes)
          throw resource_error("si_leq: BFS budget exceeded");
      }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return frontier.count(y) > 0;
}

bool si_leq_translation(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y,
                        const Budget& budget) {
  // x si<= y iff y t_{-2m rho^vee} <= x t_{-2m rho^vee} in the ordinary
  // Bruhat order once m is large.  The probe value is only stable deep in
  // the antidominant chamber, so start at an m that pushes both translation
  // parts to depth at least sell-span + l(w0) + 2 against every positive
  // root, then require agreement at m and m+1.
  long long span = sell(cd, y) - sell(cd, x);
  if (span < 0) span = -span;
  long long depth = span + cd.w0.length() + 2;
  long long m = 1;
  for (const Root& g : cd.positive_roots) {
    long long step = pairing_root(cd, g, cd.two_rho_check);  // >= 2
    for (const auto* e : {&x, &y}) {
      long long have = pairing_root(cd, g, e->trans);
      // need have - m*step <= -depth
      long long need = (have + depth + step - 1) / step;
      m = std::max(m, need);
    }
  }
  auto probe = [&](long long mm) {
    Coweight shift = cd.two_rho_check;
    for (int& v : shift.c) v = static_cast<int>(-v * mm);
    AffineWeylElement t = translation(cd, shift);
    return bruhat_leq(cd, aff_multiply(cd, y, t), aff_multiply(cd, x, t));
  };
  long long cap = m + budget.oracle_m_ceiling;
  bool prev = probe(m);
  while (m < cap) {
    bool cur = probe(m + 1);
    if (cur == prev) return cur;
    prev = cur;
    ++m;
  }
  throw resource_error("si_leq_translation: no stabilization below the m ceiling");
}

Weight parabolic_weight(const CartanDatum& cd, const ParabolicSet& J) {
  Weight l = zero_weight(cd);
  for (int i = 1; i <= cd.rank; ++i)
    if (!J.contains(i)) l.c[static_cast<size_t>(i) - 1] = 1;
  return l;
}

Coweight project_onto(const Coweight& xi, const ParabolicSet& J) {
  Coweight r(std::vector<int>(xi.c.size(), 0));
  for (int j : J.members) r.c[static_cast<size_t>(j) - 1] = xi.c[static_cast<size_t>(j) - 1];
  return r;
}

Coweight project_off(const Coweight& xi, const ParabolicSet& J) {
  Coweight r = xi;
  for (int j : J.members) r.c[static_cast<size_t>(j) - 1] = 0;
  return r;
}

bool coweight_geq(const Coweight& xi, const Coweight& zeta) {
  for (size_t i = 0; i < xi.c.size(); ++i)
    if (xi.c[i] < zeta.c[i]) return false;
  return true;
}

// --- Deodhar minimal lift ----------------------------------------------------
//
// The recursion follows the constructive proof of the minimal-lift property.
// Writing y = v Pi^J(t_zeta):
//   * x a translation, v = e: closed form t_mu with mu agreeing with y off J
//     and with x on J.
//   * x a translation, v != e: pick a simple i with <v lambda_J, a_i^vee> < 0,
//     recurse on s_i y, prepend s_i.
//   * x not a translation: take the first letter i of a shortest ascent
//     sequence of x (each step has <x Lambda, a_i^vee> > 0 for regular Lambda
//     and ends at a translation); split on the sign of <y lambda_J, a_i^vee>.
// Every branch either shortens the ascent distance of x or the coset part of
// y, so the recursion terminates.

namespace {

// First letter of a shortest ascent sequence of w (the finite part of x):
// edges w -> s_i w for i in I with w^{-1} alpha_i > 0, and w -> s_theta w
// when w^{-1} theta < 0; target is the identity.  Existence is part of the
// extremal-vector combinatorics; a failed search means a bug.
int first_ascent_step(const CartanDatum& cd, const FiniteWeylElement& w0) {
  if (w0.is_identity()) return -1;
  std::map<IntMat, std::pair<IntMat, int>> parent;  // state -> (pred state, letter)
  std::deque<FiniteWeylElement> queue{w0};
  parent[w0.cw] = {w0.cw, -1};
  FiniteWeylElement sth = reflection_finite(cd, cd.theta);
  while (!queue.empty()) {
    FiniteWeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i <= cd.rank; ++i) {
      bool ok = i == 0 ? !weyl_act_inv(w, cd.theta).is_positive()
                       : weyl_act_inv(w, simple_root(cd, i)).is_positive();
      if (!ok) continue;
      FiniteWeylElement nw = multiply(cd, i == 0 ? sth : cd.s(i), w);
      if (parent.count(nw.cw)) continue;
      parent[nw.cw] = {w.cw, i};
      if (nw.is_identity()) {
        // walk back to the first step out of w0
        IntMat cur = nw.cw;
        for (;;) {
          auto& [pred, letter] = parent[cur];
          if (pred == w0.cw) return letter;
          cur = pred;
        }
      }
      queue.push_back(nw);
    }
  }
  throw internal_error("first_ascent_step: no ascent path to a translation");
}

AffineWeylElement min_lift_rec(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y,
                               const ParabolicSet& J, const Weight& lamJ) {
  if (x.fin.is_identity()) {
    FiniteWeylElement v = min_coset_rep(cd, y.fin, J.members);
    if (v.is_identity()) {
      // Step 1: y = Pi^J(t_zeta); answer t_mu, mu = [tau_y]^J + [xi]_J.
      Coweight mu = project_off(y.trans, J) + project_onto(x.trans, J);
      return translation(cd, mu);
    }
    Weight vl = weyl_act(v, lamJ);
    for (int i = 1; i <= cd.rank; ++i)
      if (vl.c[static_cast<size_t>(i) - 1] < 0) {
        AffineWeylElement si = affine_simple(cd, i);
        AffineWeylElement r = min_lift_rec(cd, x, aff_multiply(cd, si, y), J, lamJ);
        return aff_multiply(cd, si, r);
      }
    throw internal_error("min_lift: coset part has no descent");
  }
  int i = first_ascent_step(cd, x.fin);
  AffineWeylElement si = affine_simple(cd, i);
  AffineWeylElement sx = aff_multiply(cd, si, x);
  long long c = pair_affine_simple(cd, y, i, lamJ);
  if (c > 0) {
    AffineWeylElement r = min_lift_rec(cd, sx, aff_multiply(cd, si, y), J, lamJ);
    return aff_multiply(cd, si, r);
  }
  if (c < 0) return min_lift_rec(cd, sx, y, J, lamJ);
  AffineWeylElement r = min_lift_rec(cd, sx, y, J, lamJ);
  long long sign = pair_affine_simple(cd, r, i, cd.rho);
  if (sign == 0) throw internal_error("min_lift: regular pairing vanished");
  return sign > 0 ? r : aff_multiply(cd, si, r);
}

}  // namespace

AffineWeylElement min_lift(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y,
                           const ParabolicSet& J, const Budget& budget) {
  if (!in_wj_af(cd, y, J)) throw input_error("min_lift: y not in (W^J)_af");
  if (!si_leq(cd, pij(cd, x, J), y, J, budget)) throw input_error("min_lift: y is not above pij(x)");
  return min_lift_rec(cd, x, y, J, parabolic_weight(cd, J));
}

}  // namespace silc
