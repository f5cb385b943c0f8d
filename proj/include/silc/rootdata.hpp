#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "silc/errors.hpp"

namespace silc {

// Square integer matrix, row-major.  Rank never exceeds 8, entries stay tiny.
struct IntMat {
  int n = 0;
  std::vector<int> a;

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  static IntMat identity(int n);

  int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  std::vector<int> apply(const std::vector<int>& v) const;
  IntMat mul(const IntMat& o) const;
  IntMat transpose() const;

  friend bool operator==(const IntMat& x, const IntMat& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const IntMat& x, const IntMat& y) { return x.a < y.a; }
};

// Integral weight in the fundamental-weight basis.
struct Weight {
  std::vector<int> c;
  Weight() = default;
  explicit Weight(std::vector<int> v) : c(std::move(v)) {}
  int rank() const { return static_cast<int>(c.size()); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
};

// Element of the coroot lattice in the simple-coroot basis.
struct Coweight {
  std::vector<int> c;
  Coweight() = default;
  explicit Coweight(std::vector<int> v) : c(std::move(v)) {}
  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.c == b.c; }
  friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
  friend bool operator<(const Coweight& a, const Coweight& b) { return a.c < b.c; }
  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
};

// Root in the simple-root basis; coordinates all >= 0 or all <= 0.
struct Root {
  std::vector<int> c;
  Root() = default;
  explicit Root(std::vector<int> v) : c(std::move(v)) {}
  int rank() const { return static_cast<int>(c.size()); }
  bool is_positive() const;
  int height() const;
  Root negated() const;
  friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }
};

// Finite Weyl group element.  Canonical data is the action matrix on the
// coroot lattice (alpha^vee coordinates); the reduced word is a cache.
// rt/rt_inv act on roots in alpha coordinates, cw/cw_inv on coweights.
// The weight action (varpi coordinates) is cw_inv transposed, which keeps
// the canonical pairing invariant.
struct FiniteWeylElement {
  IntMat rt, rt_inv, cw, cw_inv;
  std::vector<int> word;  // reduced, 1-based simple indices

  int rank() const { return cw.n; }
  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) { return a.cw == b.cw; }
  friend bool operator!=(const FiniteWeylElement& a, const FiniteWeylElement& b) { return !(a == b); }
  friend bool operator<(const FiniteWeylElement& a, const FiniteWeylElement& b) { return a.cw < b.cw; }
};

struct CartanDatum {
  char series = 'A';
  int rank = 0;
  IntMat cartan;  // cartan.at(i,j) = <alpha_j, alpha_i^vee>, 0-based

  std::vector<Root> positive_roots;      // sorted by (height, coords)
  std::vector<Coweight> positive_coroots;  // aligned with positive_roots
  Root theta;            // highest root
  Coweight theta_check;  // coroot of theta
  Weight rho;            // all ones
  Coweight two_rho_check;  // sum of positive coroots; rho^vee itself can be
                           // half-integral, every consumer needs the double
  FiniteWeylElement w0;
  std::vector<FiniteWeylElement> simple;  // s_1..s_n at index 0..n-1

  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
  const FiniteWeylElement& s(int i) const { return simple.at(static_cast<size_t>(i) - 1); }
  FiniteWeylElement identity_element() const;
};

// --- construction -----------------------------------------------------------

// Valid irreducible pairs: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
CartanDatum build_cartan(char series, int rank);

// --- basic operations -------------------------------------------------------

long long pairing(const Weight& mu, const Coweight& xi);

// alpha-basis -> varpi-basis (left-multiply by the Cartan matrix).
Weight root_as_weight(const CartanDatum& cd, const Root& r);

// <r, xi> where the root is paired as a weight.
long long pairing_root(const CartanDatum& cd, const Root& r, const Coweight& xi);

// Coroot of an arbitrary (positive or negative) root.
Coweight coroot_of(const CartanDatum& cd, const Root& r);

Weight weyl_act(const FiniteWeylElement& w, const Weight& mu);
Coweight weyl_act(const FiniteWeylElement& w, const Coweight& xi);
Root weyl_act(const FiniteWeylElement& w, const Root& r);
Weight weyl_act_inv(const FiniteWeylElement& w, const Weight& mu);
Coweight weyl_act_inv(const FiniteWeylElement& w, const Coweight& xi);
Root weyl_act_inv(const FiniteWeylElement& w, const Root& r);

FiniteWeylElement multiply(const CartanDatum& cd, const FiniteWeylElement& a, const FiniteWeylElement& b);
FiniteWeylElement inverse(const FiniteWeylElement& w);

// Inversion count #{alpha > 0 : w.alpha < 0}; equals word length.
int weyl_length(const CartanDatum& cd, const FiniteWeylElement& w);

// Canonical reduced word (greedy smallest descent), recomputed from the matrix.
std::vector<int> reduced_word(const CartanDatum& cd, const FiniteWeylElement& w);

// Reflection in an arbitrary root.
FiniteWeylElement reflection_finite(const CartanDatum& cd, const Root& r);

// Whole group by BFS over generators; throws resource_error past the bound.
std::vector<FiniteWeylElement> enumerate_weyl_group(const CartanDatum& cd, std::size_t bound = 1000000);

// Minimal coset representative of w W_J (strip right descents in J).
FiniteWeylElement min_coset_rep(const CartanDatum& cd, const FiniteWeylElement& w, const std::vector<int>& J);

bool is_dominant(const Weight& mu);

Weight zero_weight(const CartanDatum& cd);
Coweight zero_coweight(const CartanDatum& cd);
Weight fundamental_weight(const CartanDatum& cd, int i);
Coweight simple_coroot(const CartanDatum& cd, int i);
Root simple_root(const CartanDatum& cd, int i);

}  // namespace silc
