#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "silc/rootdata.hpp"

namespace silc {

// x = w t_xi in W_af = W x Q^vee.
struct AffineWeylElement {
  FiniteWeylElement fin;
  Coweight trans;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.fin == b.fin && a.trans == b.trans;
  }
  friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) { return !(a == b); }
  friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.fin.cw.a != b.fin.cw.a) return a.fin.cw.a < b.fin.cw.a;
    return a.trans.c < b.trans.c;
  }
};

// beta = alpha + n delta.  Real iff alpha != 0.
struct AffineRoot {
  Root alpha;
  int delta_coeff = 0;

  bool is_positive() const {
    if (delta_coeff > 0) return true;
    if (delta_coeff < 0) return false;
    return alpha.is_positive();
  }
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.alpha == b.alpha && a.delta_coeff == b.delta_coeff;
  }
};

// Subset of the simple indices I (1-based, sorted, unique).
struct ParabolicSet {
  std::vector<int> members;

  ParabolicSet() = default;
  explicit ParabolicSet(std::vector<int> m);
  bool contains(int i) const;
  bool empty() const { return members.empty(); }
};

// Search budgets shared by the order/enumeration routines.
struct Budget {
  std::size_t max_nodes = 1000000;   // BFS frontier total
  std::size_t max_paths = 1000000;   // enumerated paths
  int oracle_m_ceiling = 64;         // si_leq_translation stabilization cap
};

AffineWeylElement aff_identity(const CartanDatum& cd);
AffineWeylElement translation(const CartanDatum& cd, const Coweight& xi);
AffineWeylElement from_finite(const CartanDatum& cd, const FiniteWeylElement& w);
AffineWeylElement aff_multiply(const CartanDatum& cd, const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement aff_inverse(const CartanDatum& cd, const AffineWeylElement& x);

// s_i for i in {0} u I; s_0 = s_theta t_{-theta^vee}.
AffineWeylElement affine_simple(const CartanDatum& cd, int i);

// (w,xi) . (alpha + n delta) = w alpha + (n - <alpha, xi>) delta.
AffineRoot act_affine_root(const CartanDatum& cd, const AffineWeylElement& x, const AffineRoot& beta);

// s_beta = s_alpha t_{n alpha^vee} for beta = alpha + n delta; beta must be real.
AffineWeylElement reflection(const CartanDatum& cd, const AffineRoot& beta);

long long sell(const CartanDatum& cd, const AffineWeylElement& x);

// Coxeter length in the affine generators, by the closed inversion-count
// formula over the finite positive roots.
long long aff_length(const CartanDatum& cd, const AffineWeylElement& x);

// Reduced word over I_af (0-based affine index 0 allowed), by stripping left
// descents greedily.
std::vector<int> aff_reduced_word(const CartanDatum& cd, const AffineWeylElement& x);

// Ordinary Bruhat order on W_af (descent recursion).
bool bruhat_leq(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y);

// Level-zero pairing <x lambda, alpha_i^vee> for i in {0} u I.
long long pair_affine_simple(const CartanDatum& cd, const AffineWeylElement& x, int i, const Weight& lambda);

// <x lambda, beta^vee> for real beta, level zero.
long long pair_affine(const CartanDatum& cd, const AffineWeylElement& x, const AffineRoot& beta, const Weight& lambda);

// Connected components of J in the Dynkin diagram.
std::vector<std::vector<int>> parabolic_components(const CartanDatum& cd, const ParabolicSet& J);

// Affine simple roots of the J-subsystem: alpha_j (j in J) plus
// -theta_c + delta per connected component c.
std::vector<AffineRoot> parabolic_affine_simples(const CartanDatum& cd, const ParabolicSet& J);

bool in_wj_af(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J);

// Projection W_af ->> (W^J)_af: strip the (W_J)_af part by right descents.
AffineWeylElement pij(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J);

bool lift_contains(const CartanDatum& cd, const AffineWeylElement& lifted, const AffineWeylElement& x,
                   const ParabolicSet& J);

// Cover edges of x in the parabolic semi-infinite Bruhat graph: pairs
// (beta, s_beta x) with s_beta x in (W^J)_af and sell jump exactly one.
// Labels range over Delta^+ and -Delta^+ + delta.
std::vector<std::pair<AffineRoot, AffineWeylElement>> si_covers(const CartanDatum& cd, const AffineWeylElement& x,
                                                                const ParabolicSet& J);

// x <= y in the semi-infinite Bruhat order on (W^J)_af, by upward BFS.
bool si_leq(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y, const ParabolicSet& J,
            const Budget& budget = {});

// Independent oracle (J = empty): pushes the comparison to the ordinary
// Bruhat order via right translation by t_{-2m rho^vee}, adaptively in m.
bool si_leq_translation(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y,
                        const Budget& budget = {});

// min Lift_{>=x}(y): the Deodhar-style minimal lift of y above x.
// pre: y in (W^J)_af and y >= pij(x) (checked).
AffineWeylElement min_lift(const CartanDatum& cd, const AffineWeylElement& x, const AffineWeylElement& y,
                           const ParabolicSet& J, const Budget& budget = {});

// Dominant weight with zero set exactly J (sum of the other fundamentals).
Weight parabolic_weight(const CartanDatum& cd, const ParabolicSet& J);

// J-support projections of coweights.
Coweight project_onto(const Coweight& xi, const ParabolicSet& J);     // [.]_J
Coweight project_off(const Coweight& xi, const ParabolicSet& J);      // [.]^J

// Weak dominance order on Q^vee: xi >= zeta iff xi - zeta has nonnegative coords.
bool coweight_geq(const Coweight& xi, const Coweight& zeta);

}  // namespace silc
