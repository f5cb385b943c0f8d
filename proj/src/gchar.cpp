#include "silc/gchar.hpp"

namespace silc {

long long GroupAlgebraElement::coeff(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

void GroupAlgebraElement::add(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

long long GroupAlgebraElement::dimension() const {
  long long d = 0;
  for (auto& [w, c] : terms) d += c;
  return d;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r = a;
  for (auto& [w, c] : b.terms) r.add(w, c);
  return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r = a;
  for (auto& [w, c] : b.terms) r.add(w, -c);
  return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r;
  for (auto& [w1, c1] : a.terms)
    for (auto& [w2, c2] : b.terms) r.add(w1 + w2, c1 * c2);
  return r;
}

GroupAlgebraElement gae_monomial(const Weight& w, long long c) {
  GroupAlgebraElement r;
  r.add(w, c);
  return r;
}

void GradedCharacter::add(long long q, const Weight& w, long long c) {
  if (q < q_cutoff || c == 0) return;
  terms[q].add(w, c);
  if (terms[q].is_zero()) terms.erase(q);
}

GroupAlgebraElement GradedCharacter::layer(long long q) const {
  auto it = terms.find(q);
  return it == terms.end() ? GroupAlgebraElement{} : it->second;
}

GradedCharacter gc_add(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter r;
  r.q_cutoff = std::max(a.q_cutoff, b.q_cutoff);
  for (auto& [q, l] : a.terms)
    for (auto& [w, c] : l.terms) r.add(q, w, c);
  for (auto& [q, l] : b.terms)
    for (auto& [w, c] : l.terms) r.add(q, w, c);
  return r;
}

GradedCharacter gc_mul(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter r;
  r.q_cutoff = std::max(a.q_cutoff, b.q_cutoff);
  for (auto& [q1, l1] : a.terms)
    for (auto& [q2, l2] : b.terms) {
      if (q1 + q2 < r.q_cutoff) continue;
      GroupAlgebraElement prod = l1 * l2;
      for (auto& [w, c] : prod.terms) r.add(q1 + q2, w, c);
    }
  return r;
}

GradedCharacter gc_shift(const GradedCharacter& a, const Weight& w, long long k) {
  GradedCharacter r;
  r.q_cutoff = a.q_cutoff + k;
  for (auto& [q, l] : a.terms)
    for (auto& [v, c] : l.terms) r.add(q + k, v + w, c);
  return r;
}

GradedCharacter gc_truncate(const GradedCharacter& a, long long cutoff) {
  GradedCharacter r;
  r.q_cutoff = cutoff;
  for (auto& [q, l] : a.terms) {
    if (q < cutoff) continue;
    for (auto& [v, c] : l.terms) r.add(q, v, c);
  }
  return r;
}

GroupAlgebraElement demazure_op(const CartanDatum& cd, int i, const GroupAlgebraElement& f) {
  if (i < 1 || i > cd.rank) throw input_error("demazure_op: simple index out of range");
  Weight alpha = root_as_weight(cd, simple_root(cd, i));
  GroupAlgebraElement r;
  for (auto& [mu, c] : f.terms) {
    long long n = mu.c[static_cast<size_t>(i) - 1];  // <mu, alpha_i^vee>
    if (n >= 0) {
      // e^mu + e^{mu-alpha} + ... + e^{s_i mu}
      Weight v = mu;
      for (long long k = 0; k <= n; ++k) {
        r.add(v, c);
        v = v - alpha;
      }
    } else if (n <= -2) {
      // -(e^{mu+alpha} + ... + e^{s_i mu - alpha})
      Weight v = mu + alpha;
      for (long long k = 1; k <= -n - 1; ++k) {
        r.add(v, -c);
        v = v + alpha;
      }
    }
    // n == -1 contributes nothing
  }
  return r;
}

GroupAlgebraElement demazure_word(const CartanDatum& cd, const FiniteWeylElement& w, const GroupAlgebraElement& f) {
  GroupAlgebraElement r = f;
  std::vector<int> word = w.word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_op(cd, *it, r);
  return r;
}

GroupAlgebraElement finite_demazure_char(const CartanDatum& cd, const FiniteWeylElement& w, const Weight& lambda) {
  if (!is_dominant(lambda)) throw input_error("finite_demazure_char: lambda not dominant");
  return demazure_word(cd, multiply(cd, w, cd.w0), gae_monomial(lambda));
}

GradedCharacter gch_demazure(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                             long long q_min, const Budget& budget) {
  GradedCharacter g;
  g.q_cutoff = q_min;
  for (const SiLSPath& pi : enumerate_sils(cd, lambda, x, q_min, budget)) {
    AffineWeight w = wt(cd, pi);
    g.add(w.delta, w.finite, 1);
  }
  return g;
}

bool verify_gch_translation(const CartanDatum& cd, const Weight& lambda, const AffineWeylElement& x,
                            const Coweight& xi, long long q_min, const Budget& budget) {
  long long shift = pairing(lambda, xi);
  GradedCharacter lhs = gch_demazure(cd, lambda, aff_multiply(cd, x, translation(cd, xi)), q_min, budget);
  GradedCharacter rhs = gc_shift(gch_demazure(cd, lambda, x, q_min + shift, budget), zero_weight(cd), -shift);
  return lhs == rhs;
}

long long weyl_dimension(const CartanDatum& cd, const Weight& lambda) {
  long long num = 1, den = 1;
  Weight lr = lambda + cd.rho;
  for (const auto& cv : cd.positive_coroots) {
    num *= pairing(lr, cv);
    den *= pairing(cd.rho, cv);
  }
  if (num % den != 0) throw internal_error("weyl_dimension: inexact division");
  return num / den;
}

}  // namespace silc
