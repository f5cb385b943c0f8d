#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace silc::oracle {

long long brute_affine_length(const CartanDatum& cd, const AffineWeylElement& x, long long cap) {
  AffineWeylElement e = aff_identity(cd);
  if (x == e) return 0;
  std::set<AffineWeylElement> seen{e};
  std::vector<AffineWeylElement> frontier{e};
  for (long long len = 1; len <= cap; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& w : frontier)
      for (int i = 0; i <= cd.rank; ++i) {
        AffineWeylElement v = aff_multiply(cd, affine_simple(cd, i), w);
        if (!seen.insert(v).second) continue;
        if (v == x) return len;
        next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  throw resource_error("brute_affine_length: cap exceeded");
}

bool subword_bruhat_leq(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y) {
  // Subword property: x <= y iff x is a product of a subword of a reduced
  // word of y (deletion makes every subword product comparable).
  std::vector<int> word = aff_reduced_word(cd, y);
  std::set<AffineWeylElement> reach{aff_identity(cd)};
  for (int letter : word) {
    std::set<AffineWeylElement> grown = reach;
    AffineWeylElement s = affine_simple(cd, letter);
    for (const auto& z : reach) grown.insert(aff_multiply(cd, z, s));
    reach = std::move(grown);
  }
  return reach.count(x) > 0;
}

std::vector<FiniteWeylElement> enumerate_wj(const CartanDatum& cd, const ParabolicSet& J) {
  std::set<FiniteWeylElement> seen{cd.identity_element()};
  std::vector<FiniteWeylElement> frontier{cd.identity_element()};
  while (!frontier.empty()) {
    std::vector<FiniteWeylElement> next;
    for (const auto& w : frontier)
      for (int j : J.members) {
        FiniteWeylElement v = multiply(cd, w, cd.s(j));
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return std::vector<FiniteWeylElement>(seen.begin(), seen.end());
}

std::vector<AffineWeylElement> bounded_lifts_above(const CartanDatum& cd, const AffineWeylElement& x,
                                                   const AffineWeylElement& y, const ParabolicSet& J,
                                                   int gamma_box) {
  std::vector<AffineWeylElement> out;
  std::vector<FiniteWeylElement> wj = enumerate_wj(cd, J);
  // gamma ranges over the J-coordinates in [-box, box]
  std::vector<int> jidx = J.members;
  std::vector<int> gamma(jidx.size(), -gamma_box);
  auto advance = [&]() {
    for (size_t k = 0; k < gamma.size(); ++k) {
      if (gamma[k] < gamma_box) {
        ++gamma[k];
        std::fill(gamma.begin(), gamma.begin() + static_cast<long>(k), -gamma_box);
        return true;
      }
    }
    return false;
  };
  do {
    Coweight tau = y.trans;
    for (size_t k = 0; k < jidx.size(); ++k) tau.c[static_cast<size_t>(jidx[k]) - 1] += gamma[k];
    for (const auto& v : wj) {
      AffineWeylElement cand{multiply(cd, min_coset_rep(cd, y.fin, J.members), v), tau};
      if (pij(cd, cand, J) != y) continue;
      if (!si_leq_translation(cd, x, cand)) continue;
      out.push_back(cand);
    }
  } while (!gamma.empty() && advance());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SiLSPath> brute_enumerate_sils(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                                           long long q_min, int box) {
  ParabolicSet J = shape_parabolic(cd, lambda);
  AffineWeylElement base = pij(cd, x, J);
  long long c0 = pairing(lambda, base.trans);

  // admissible breakpoints (denominators bounded by the largest pairing)
  long long nmax = 0;
  for (const auto& cv : cd.positive_coroots) nmax = std::max(nmax, pairing(lambda, cv));
  std::vector<Frac> grid;
  long long lg = 1;
  for (long long q = 2; q <= nmax; ++q) {
    lg = std::lcm(lg, q);
    for (long long p = 1; p < q; ++p) grid.push_back(Frac(p, q));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Candidate directions: the coordinate box intersected with (W^J)_af and
  // two necessary consequences of the definition: the translation part is
  // coordinatewise above the base's off-J part, and the pairing <lambda,tau>
  // cannot exceed what a shortest segment could still absorb.
  long long pair_cap = (c0 < 0 ? -c0 : c0) + lg * ((-q_min) + (c0 < 0 ? -c0 : c0)) + 1;
  std::vector<AffineWeylElement> cands;
  std::vector<FiniteWeylElement> wall = enumerate_weyl_group(cd);
  std::vector<int> tau(static_cast<size_t>(cd.rank), -box);
  auto advance = [&]() {
    for (int k = 0; k < cd.rank; ++k) {
      if (tau[static_cast<size_t>(k)] < box) {
        ++tau[static_cast<size_t>(k)];
        std::fill(tau.begin(), tau.begin() + k, -box);
        return true;
      }
    }
    return false;
  };
  Coweight base_off = project_off(base.trans, J);
  do {
    Coweight t(tau);
    if (!coweight_geq(project_off(t, J), base_off)) continue;
    if (pairing(lambda, t) > pair_cap) continue;
    for (const auto& w : wall) {
      AffineWeylElement z{w, t};
      if (in_wj_af(cd, z, J)) cands.push_back(z);
    }
  } while (advance());
  std::sort(cands.begin(), cands.end());

  // Order queries via the translation oracle only (independent of the cover
  // machinery); memoized.
  std::map<std::pair<AffineWeylElement, AffineWeylElement>, bool> leq_memo;
  auto leq = [&](const AffineWeylElement& a, const AffineWeylElement& b) {
    auto key = std::make_pair(a, b);
    auto it = leq_memo.find(key);
    if (it != leq_memo.end()) return it->second;
    bool r = si_leq_translation(cd, a, b);
    leq_memo.emplace(key, r);
    return r;
  };

  std::vector<SiLSPath> out;
  std::vector<AffineWeylElement> chain;  // right to left: chain[0] = kappa
  std::function<void()> emit_breaks = [&]() {
    size_t s = chain.size();
    std::vector<Frac> cur;
    std::function<void(size_t, size_t)> pick = [&](size_t u, size_t hi) {
      if (u + 1 == s) {
        SiLSPath pi;
        pi.shape = lambda;
        pi.dirs.assign(chain.rbegin(), chain.rend());
        pi.breaks.push_back(Frac(0));
        for (auto it = cur.rbegin(); it != cur.rend(); ++it) pi.breaks.push_back(*it);
        pi.breaks.push_back(Frac(1));
        if (validate(cd, pi) && wt(cd, pi).delta >= q_min) out.push_back(pi);
        return;
      }
      for (size_t g = hi; g-- > 0;) {
        cur.push_back(grid[g]);
        pick(u + 1, g);
        cur.pop_back();
      }
    };
    pick(0, grid.size());
  };
  std::function<void(size_t)> grow = [&](size_t depth) {
    emit_breaks();
    if (depth > grid.size()) return;  // a longer chain has no break slots left
    for (const auto& z : cands) {
      if (sell(cd, z) <= sell(cd, chain.back())) continue;
      if (!leq(chain.back(), z)) continue;
      chain.push_back(z);
      grow(depth + 1);
      chain.pop_back();
    }
  };
  for (const auto& kappa : cands) {
    if (pairing(lambda, kappa.trans) > -q_min) continue;
    if (!leq(base, kappa)) continue;
    chain = {kappa};
    grow(1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool finite_bruhat_leq(const CartanDatum& cd, const FiniteWeylElement& x, const FiniteWeylElement& y) {
  std::set<FiniteWeylElement> reach{cd.identity_element()};
  for (int letter : y.word) {
    std::set<FiniteWeylElement> grown = reach;
    for (const auto& z : reach) grown.insert(multiply(cd, z, cd.s(letter)));
    reach = std::move(grown);
  }
  return reach.count(x) > 0;
}

namespace {

bool in_wj_finite(const CartanDatum& cd, const FiniteWeylElement& w, const ParabolicSet& J) {
  for (int j : J.members)
    if (!weyl_act(w, simple_root(cd, j)).is_positive()) return false;
  return true;
}

// Parabolic covers above z: pairs (beta, s_beta z) staying in W^J with
// length jump one.
std::vector<std::pair<Root, FiniteWeylElement>> finite_covers(const CartanDatum& cd, const FiniteWeylElement& z,
                                                              const ParabolicSet& J) {
  std::vector<std::pair<Root, FiniteWeylElement>> out;
  for (const Root& b : cd.positive_roots) {
    FiniteWeylElement up = multiply(cd, reflection_finite(cd, b), z);
    if (up.length() != z.length() + 1) continue;
    if (!in_wj_finite(cd, up, J)) continue;
    out.push_back({b, up});
  }
  return out;
}

bool finite_chain_reachable(const CartanDatum& cd, const FiniteWeylElement& lo, const FiniteWeylElement& hi,
                            const ParabolicSet& J, const Weight& nu, const Frac& a) {
  if (lo == hi) return true;
  int d = hi.length() - lo.length();
  if (d <= 0) return false;
  std::set<FiniteWeylElement> frontier{lo};
  for (int level = 0; level < d; ++level) {
    std::set<FiniteWeylElement> next;
    for (const auto& z : frontier)
      for (auto& [beta, up] : finite_covers(cd, z, J)) {
        Frac prod = a * Frac(pairing(weyl_act(z, nu), coroot_of(cd, beta)));
        if (!prod.is_integer()) continue;
        next.insert(up);
      }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return frontier.count(hi) > 0;
}

}  // namespace

std::vector<FiniteLSPath> enumerate_finite_ls(const CartanDatum& cd, const Weight& nu, const FiniteWeylElement& x) {
  ParabolicSet J = shape_parabolic(cd, nu);
  FiniteWeylElement base = min_coset_rep(cd, x, J.members);

  std::vector<FiniteWeylElement> dirs;
  for (const auto& w : enumerate_weyl_group(cd))
    if (in_wj_finite(cd, w, J)) dirs.push_back(w);

  long long nmax = 0;
  for (const auto& cv : cd.positive_coroots) nmax = std::max(nmax, pairing(nu, cv));
  std::vector<Frac> grid;
  for (long long q = 2; q <= nmax; ++q)
    for (long long p = 1; p < q; ++p) grid.push_back(Frac(p, q));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<FiniteLSPath> out;
  std::vector<FiniteWeylElement> chain;  // built left to right, decreasing
  std::vector<Frac> breaks;              // interior breaks, increasing
  std::function<void(const FiniteWeylElement&)> grow = [&](const FiniteWeylElement& last) {
    if (finite_bruhat_leq(cd, base, chain.back())) {
      FiniteLSPath p;
      p.shape = nu;
      p.dirs = chain;
      p.breaks.push_back(Frac(0));
      for (const Frac& b : breaks) p.breaks.push_back(b);
      p.breaks.push_back(Frac(1));
      out.push_back(std::move(p));
    }
    for (const auto& z : dirs) {
      if (z.length() >= last.length()) continue;
      for (const Frac& a : grid) {
        if (!breaks.empty() && !(breaks.back() < a)) continue;
        if (!finite_chain_reachable(cd, z, last, J, nu, a)) continue;
        chain.push_back(z);
        breaks.push_back(a);
        grow(z);
        chain.pop_back();
        breaks.pop_back();
      }
    }
  };
  for (const auto& top : dirs) {
    chain = {top};
    breaks.clear();
    grow(top);
  }
  // dedup (identical paths can arise through different recursion orders)
  std::sort(out.begin(), out.end(), [](const FiniteLSPath& a, const FiniteLSPath& b) {
    auto key = [](const FiniteLSPath& p) {
      std::vector<long long> k;
      for (const auto& d : p.dirs)
        for (int v : d.cw.a) k.push_back(v);
      k.push_back(-1);
      for (const auto& f : p.breaks) {
        k.push_back(f.num);
        k.push_back(f.den);
      }
      return k;
    };
    return key(a) < key(b);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FiniteLSPath& a, const FiniteLSPath& b) {
                          return a.dirs == b.dirs && a.breaks == b.breaks;
                        }),
            out.end());
  return out;
}

Weight finite_ls_weight(const CartanDatum& cd, const FiniteLSPath& p) {
  std::vector<Frac> acc(static_cast<size_t>(cd.rank), Frac(0));
  for (size_t u = 0; u < p.dirs.size(); ++u) {
    Frac len = p.breaks[u + 1] - p.breaks[u];
    Weight wl = weyl_act(p.dirs[u], p.shape);
    for (int j = 0; j < cd.rank; ++j) acc[static_cast<size_t>(j)] = acc[static_cast<size_t>(j)] + len * Frac(wl.c[static_cast<size_t>(j)]);
  }
  Weight w = zero_weight(cd);
  for (int j = 0; j < cd.rank; ++j) {
    if (!acc[static_cast<size_t>(j)].is_integer()) throw internal_error("finite_ls_weight: non-integral");
    w.c[static_cast<size_t>(j)] = static_cast<int>(acc[static_cast<size_t>(j)].num);
  }
  return w;
}

FiniteWeylElement finite_min_lift(const CartanDatum& cd, const FiniteWeylElement& x, const FiniteWeylElement& z,
                                  const ParabolicSet& J) {
  std::vector<FiniteWeylElement> coset;
  for (const auto& v : enumerate_wj(cd, J)) coset.push_back(multiply(cd, z, v));
  std::vector<FiniteWeylElement> above;
  for (const auto& u : coset)
    if (finite_bruhat_leq(cd, x, u)) above.push_back(u);
  if (above.empty()) throw input_error("finite_min_lift: empty lift set");
  for (const auto& u : above) {
    bool minimal = true;
    for (const auto& v : above)
      if (!finite_bruhat_leq(cd, u, v)) {
        minimal = false;
        break;
      }
    if (minimal) return u;
  }
  throw internal_error("finite_min_lift: no minimum in the lift set");
}

FiniteWeylElement finite_deo(const CartanDatum& cd, const FiniteLSPath& p, const FiniteWeylElement& x,
                             const ParabolicSet& J) {
  FiniteWeylElement cur = x;
  for (auto it = p.dirs.rbegin(); it != p.dirs.rend(); ++it) cur = finite_min_lift(cd, cur, *it, J);
  return cur;
}

std::vector<std::pair<Weight, FiniteWeylElement>> finite_pieri_data(const CartanDatum& cd, const Weight& lambda,
                                                                    const FiniteWeylElement& x) {
  Weight nu = weyl_act(cd.w0, lambda);
  for (int& v : nu.c) v = -v;  // -w0 lambda
  ParabolicSet J = shape_parabolic(cd, nu);
  std::vector<std::pair<Weight, FiniteWeylElement>> data;
  for (const auto& p : enumerate_finite_ls(cd, nu, x))
    data.push_back({finite_ls_weight(cd, p), finite_deo(cd, p, x, J)});
  std::sort(data.begin(), data.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return data;
}

}  // namespace silc::oracle
