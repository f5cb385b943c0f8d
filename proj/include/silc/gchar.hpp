#pragma once

#include <map>

#include "silc/silspath.hpp"

namespace silc {

// Finitely supported Z-linear combination of e^nu, nu in P.  No zero entries.
struct GroupAlgebraElement {
  std::map<Weight, long long> terms;

  bool is_zero() const { return terms.empty(); }
  long long coeff(const Weight& w) const;
  void add(const Weight& w, long long c);
  long long dimension() const;  // evaluation at e^nu -> 1

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.terms == b.terms; }
  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
};

GroupAlgebraElement gae_monomial(const Weight& w, long long c = 1);

// Truncated element of Z[P]((q^-1)): exponents >= q_cutoff only.
struct GradedCharacter {
  long long q_cutoff = 0;
  std::map<long long, GroupAlgebraElement> terms;  // q-exponent -> layer

  void add(long long q, const Weight& w, long long c);
  GroupAlgebraElement layer(long long q) const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
    return a.q_cutoff == b.q_cutoff && a.terms == b.terms;
  }
};

// Sum/product with truncation at the coarser cutoff.
GradedCharacter gc_add(const GradedCharacter& a, const GradedCharacter& b);
GradedCharacter gc_mul(const GradedCharacter& a, const GradedCharacter& b);
// Multiply by the monomial e^w q^k (cutoff shifts with k).
GradedCharacter gc_shift(const GradedCharacter& a, const Weight& w, long long k);
GradedCharacter gc_truncate(const GradedCharacter& a, long long cutoff);

// Demazure operator D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}),
// computed exactly by the alpha_i-string expansion.
GroupAlgebraElement demazure_op(const CartanDatum& cd, int i, const GroupAlgebraElement& f);

// Composite along a reduced word of w (word-independent).
GroupAlgebraElement demazure_word(const CartanDatum& cd, const FiniteWeylElement& w, const GroupAlgebraElement& f);

// ch L_w^-(-w0 lambda)^* = D_{w w0}(e^lambda).
GroupAlgebraElement finite_demazure_char(const CartanDatum& cd, const FiniteWeylElement& w, const Weight& lambda);

// gch V_x^-(lambda) truncated below q_min, by path enumeration.
GradedCharacter gch_demazure(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                             long long q_min, const Budget& budget = {});

// gch V_{x t_xi}^-(lambda) == q^{-<lambda,xi>} gch V_x^-(lambda) on the
// common window.
bool verify_gch_translation(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                            const Coweight& xi, long long q_min, const Budget& budget = {});

// prod <lambda+rho, alpha^vee> / <rho, alpha^vee> over positive roots.
long long weyl_dimension(const CartanDatum& cd, const Weight& lambda);

}  // namespace silc
