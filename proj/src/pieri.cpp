#include "silc/pieri.hpp"

#include <sstream>

namespace silc {

bool is_w_af_ge0(const AffineWeylElement& x) {
  for (int v : x.trans.c)
    if (v < 0) return false;
  return true;
}

Weight dual_shape(const CartanDatum& cd, const Weight& lambda) {
  Weight nl = weyl_act(cd.w0, lambda);
  for (int& v : nl.c) v = -v;
  return nl;
}

KClassCombo pieri_coeffs(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                         long long q_min, const Budget& budget) {
  if (!is_dominant(lambda)) throw input_error("pieri_coeffs: lambda not dominant");
  if (!is_w_af_ge0(x)) throw input_error("pieri_coeffs: x not in W_af^{>=0}");
  KClassCombo out;
  out.base_twist = lambda;
  out.q_cutoff = q_min;
  Weight shape = dual_shape(cd, lambda);
  for (const auto& eta : enumerate_sils(cd, shape, x, q_min, budget)) {
    AffineWeight w = wt(cd, eta);
    if (w.delta > 0) throw internal_error("pieri_coeffs: positive q-degree in a >=x enumeration");
    AffineWeylElement key = deo(cd, eta, x, budget);
    if (!is_w_af_ge0(key)) throw internal_error("pieri_coeffs: bucket key left W_af^{>=0}");
    auto [it, fresh] = out.terms.try_emplace(key);
    if (fresh) it->second.q_cutoff = q_min;
    it->second.add(w.delta, w.finite, 1);
  }
  return out;
}

Report verify_pieri(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x, const Weight& mu,
                    long long q_min, const Budget& budget) {
  Report rep;
  if (!is_dominant(mu)) throw input_error("verify_pieri: mu not dominant");
  GradedCharacter lhs = gch_demazure(cd, dual_shape(cd, lambda + mu), x, q_min, budget);
  GradedCharacter rhs;
  rhs.q_cutoff = q_min;
  Weight mshape = dual_shape(cd, mu);
  KClassCombo f = pieri_coeffs(cd, lambda, x, q_min, budget);
  for (auto& [y, coeff] : f.terms) {
    long long kmax = coeff.terms.rbegin()->first;  // largest q-exponent used
    GradedCharacter inner = gch_demazure(cd, mshape, y, q_min - kmax, budget);
    for (auto& [k, layer] : coeff.terms)
      for (auto& [w, c] : layer.terms)
        for (auto& [k2, layer2] : inner.terms) {
          if (k + k2 < q_min) continue;
          for (auto& [w2, c2] : layer2.terms) rhs.add(k + k2, w + w2, c * c2);
        }
  }
  if (lhs == rhs) return rep;
  rep.pass = false;
  for (long long q = 0; q >= q_min; --q) {
    GroupAlgebraElement dl = lhs.layer(q) - rhs.layer(q);
    if (!dl.is_zero()) {
      std::ostringstream os;
      os << "first mismatch at q=" << q << ", weight (";
      for (size_t i = 0; i < dl.terms.begin()->first.c.size(); ++i)
        os << (i ? "," : "") << dl.terms.begin()->first.c[i];
      os << "), lhs-rhs=" << dl.terms.begin()->second;
      rep.detail = os.str();
      break;
    }
  }
  return rep;
}

}  // namespace silc
