#pragma once

#include <map>
#include <optional>
#include <vector>

#include "silc/afweyl.hpp"
#include "silc/fraction.hpp"

namespace silc {

// Level-zero affine weight lambda + gamma + k delta, split as (finite, k).
struct AffineWeight {
  Weight finite;
  long long delta = 0;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.finite == b.finite && a.delta == b.delta;
  }
};

// Semi-infinite LS path: strictly si-decreasing directions in (W^J)_af with
// rational breakpoints 0 = a_0 < ... < a_s = 1.
struct SiLSPath {
  Weight shape;
  std::vector<AffineWeylElement> dirs;
  std::vector<Frac> breaks;

  int segments() const { return static_cast<int>(dirs.size()); }
  const AffineWeylElement& initial_dir() const { return dirs.front(); }  // iota
  const AffineWeylElement& final_dir() const { return dirs.back(); }     // kappa

  friend bool operator==(const SiLSPath& a, const SiLSPath& b) {
    return a.shape == b.shape && a.dirs == b.dirs && a.breaks == b.breaks;
  }
  friend bool operator<(const SiLSPath& a, const SiLSPath& b);
};

// I-tuple of partitions, rho^(i) of length < <lambda, alpha_i^vee>.
struct ParTuple {
  std::vector<std::vector<int>> parts;  // index i-1 -> weakly decreasing positives

  long long total() const;
  friend bool operator==(const ParTuple& a, const ParTuple& b) { return a.parts == b.parts; }
  friend bool operator<(const ParTuple& a, const ParTuple& b) { return a.parts < b.parts; }
};

// Image of a SiLS path under cl: directions in W^J, delta data discarded.
struct QLSPath {
  Weight shape;
  std::vector<FiniteWeylElement> dirs;
  std::vector<Frac> breaks;

  friend bool operator==(const QLSPath& a, const QLSPath& b) {
    return a.shape == b.shape && a.dirs == b.dirs && a.breaks == b.breaks;
  }
  friend bool operator<(const QLSPath& a, const QLSPath& b);
};

// Zero set of a dominant shape; this is the J the path model works over.
ParabolicSet shape_parabolic(const CartanDatum& cd, const Weight& lambda);

// Straight path (e; 0, 1).
SiLSPath straight_path(const CartanDatum& cd, const Weight& lambda);

// Full membership test of Definition (SiLS): structure, membership of the
// directions, strict si-decrease, and the SiB_a chain condition.
bool validate(const CartanDatum& cd, const SiLSPath& pi, const Budget& budget = {});

// H_i^pi at the breakpoints (t, value) plus any mid-segment data is linear
// in between; m_i is the global minimum (always a nonpositive integer).
struct HFunction {
  std::vector<Frac> t;
  std::vector<Frac> value;
  long long min_value = 0;
};
HFunction h_function(const CartanDatum& cd, const SiLSPath& pi, int i);

std::optional<SiLSPath> e_op(const CartanDatum& cd, const SiLSPath& pi, int i);
std::optional<SiLSPath> f_op(const CartanDatum& cd, const SiLSPath& pi, int i);

long long eps(const CartanDatum& cd, const SiLSPath& pi, int i);
long long phi(const CartanDatum& cd, const SiLSPath& pi, int i);

AffineWeight wt(const CartanDatum& cd, const SiLSPath& pi);

// <wt, alpha_i^vee> at level zero, i in {0} u I.
long long wt_pairing(const CartanDatum& cd, const AffineWeight& w, int i);

// Action of W_af through root operators (eq. W-act), via a reduced word.
SiLSPath weyl_act_path(const CartanDatum& cd, const AffineWeylElement& x, const SiLSPath& pi);

// Closed form for paths of the extremal shape: directions pij(x t_xi_u).
SiLSPath weyl_act_extremal(const CartanDatum& cd, const AffineWeylElement& x, const SiLSPath& pi);

// T_xi: every direction mapped by z -> pij(z t_xi).
SiLSPath t_shift(const CartanDatum& cd, const Coweight& xi, const SiLSPath& pi);

// All tuples with |rho| <= size_bound respecting the length constraints.
std::vector<ParTuple> par_elements(const CartanDatum& cd, const Weight& lambda, long long size_bound);

// Extremal element pi_rho of the connected component labelled by rho.
SiLSPath par_to_path(const CartanDatum& cd, const ParTuple& rho, const Weight& lambda);

QLSPath cl_project(const CartanDatum& cd, const SiLSPath& pi);

// All pi in SiLS(lambda) with kappa(pi) >= pij(x) and qwt(wt(pi)) >= q_min,
// sorted canonically.
std::vector<SiLSPath> enumerate_sils(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                                     long long q_min, const Budget& budget = {});

// rho -> pi_rho for every tuple with |rho| <= -q_min.
std::map<ParTuple, SiLSPath> crystal_component_reps(const CartanDatum& cd, const Weight& lambda, long long q_min);

// Canonical comparison key (used for ordering and dedup).
std::vector<long long> path_key(const SiLSPath& pi);
std::vector<long long> qls_key(const QLSPath& pi);

}  // namespace silc
