#pragma once

#include "silc/smt.hpp"

namespace silc {

// Truncation of [O(lambda)] . [O_{Q(x)}] expanded in Schubert classes: a
// finite map from W_af^{>=0} labels to truncated Z[P][q^-1] coefficients.
struct KClassCombo {
  Weight base_twist;
  long long q_cutoff = 0;
  std::map<AffineWeylElement, GradedCharacter> terms;
};

// Membership in W_af^{>=0} = {w t_xi : xi in Q^{vee,+}}.
bool is_w_af_ge0(const AffineWeylElement& x);

// -w0 lambda (the shape appearing throughout the Pieri side).
Weight dual_shape(const CartanDatum& cd, const Weight& lambda);

// Pieri-Chevalley coefficients at q-window q_min: paths eta over
// SiLS_{>=x}(-w0 lambda) grouped by deo(eta, x).
KClassCombo pieri_coeffs(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                         long long q_min, const Budget& budget = {});

// The character identity certifying the class identity:
// gch V_x^-(-w0(lambda+mu)) = sum_y f_y(lambda) gch V_y^-(-w0 mu).
Report verify_pieri(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x, const Weight& mu,
                    long long q_min, const Budget& budget = {});

}  // namespace silc
