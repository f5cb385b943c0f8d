#include "silc/nildaha.hpp"

#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace silc {

void LaurentCharacter::add(const Weight& w, long long q, long long c) {
  if (c == 0) return;
  auto key = std::make_pair(w, q);
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentCharacter operator+(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, c);
  return r;
}

LaurentCharacter operator-(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, -c);
  return r;
}

LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter r;
  for (auto& [k1, c1] : a.terms)
    for (auto& [k2, c2] : b.terms) r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentCharacter lc_monomial(const Weight& w, long long q, long long c) {
  LaurentCharacter r;
  r.add(w, q, c);
  return r;
}

namespace {

// s_0 as e^nu q^k -> q^{k + sign <nu,theta^vee>} e^{s_theta nu}; sign = +1 is
// the documented convention, -1 the corrupted control.
LaurentCharacter s0_act_signed(const CartanDatum& cd, const LaurentCharacter& f, int sign) {
  FiniteWeylElement sth = reflection_finite(cd, cd.theta);
  LaurentCharacter r;
  for (auto& [k, c] : f.terms) {
    long long tw = pairing(k.first, cd.theta_check);
    r.add(weyl_act(sth, k.first), k.second + sign * tw, c);
  }
  return r;
}

long long pair_alpha_check(const CartanDatum& cd, int i, const Weight& nu) {
  if (i == 0) return -pairing(nu, cd.theta_check);
  return nu.c[static_cast<size_t>(i) - 1];
}

// e^{nu + k delta - j alpha_i} as a (weight, q-exponent) pair; alpha_0 =
// delta - theta with e^delta == q.
std::pair<Weight, long long> shift_by_alpha(const CartanDatum& cd, int i, const Weight& nu, long long k,
                                            long long j) {
  Weight step = root_as_weight(cd, i == 0 ? cd.theta : simple_root(cd, i));
  Weight w = nu;
  long long sgn = i == 0 ? +1 : -1;
  for (int t = 0; t < cd.rank; ++t) w.c[static_cast<size_t>(t)] += static_cast<int>(sgn * j) * step.c[static_cast<size_t>(t)];
  return {w, i == 0 ? k - j : k};
}

// D_i along the alpha_i-string, i in {0} u I, exact by construction.
LaurentCharacter demazure_affine(const CartanDatum& cd, int i, const LaurentCharacter& f) {
  LaurentCharacter r;
  for (auto& [key, c] : f.terms) {
    long long n = pair_alpha_check(cd, i, key.first);
    if (n >= 0)
      for (long long j = 0; j <= n; ++j) {
        auto [w, q] = shift_by_alpha(cd, i, key.first, key.second, j);
        r.add(w, q, c);
      }
    else if (n <= -2)
      for (long long j = 1; j <= -n - 1; ++j) {
        auto [w, q] = shift_by_alpha(cd, i, key.first, key.second, -j);
        r.add(w, q, -c);
      }
  }
  return r;
}

}  // namespace

LaurentCharacter s0_act(const CartanDatum& cd, const LaurentCharacter& f) { return s0_act_signed(cd, f, +1); }

LaurentCharacter si_act(const CartanDatum& cd, int i, const LaurentCharacter& f) {
  if (i == 0) return s0_act(cd, f);
  LaurentCharacter r;
  for (auto& [k, c] : f.terms) r.add(weyl_act(cd.s(i), k.first), k.second, c);
  return r;
}

LaurentCharacter t_op(const CartanDatum& cd, int i, const LaurentCharacter& f) {
  return demazure_affine(cd, i, f) - f;
}

LaurentCharacter e_op_mult(const CartanDatum& cd, const Weight& nu, const LaurentCharacter& f) {
  (void)cd;
  return lc_monomial(nu) * f;
}

LaurentCharacter cross_rhs(const CartanDatum& cd, int i, const Weight& nu) {
  // (e^{s_i nu} - e^{nu}) / (1 - e^{alpha_i}); s_i nu = nu - n alpha_i with
  // n = <nu, alpha_i^vee>.
  long long n = pair_alpha_check(cd, i, nu);
  LaurentCharacter r;
  auto add_alpha_multiple = [&](long long j, long long coeff) {
    // e^{nu - j alpha_i}
    if (i == 0) {
      Weight w = nu;
      Weight th = root_as_weight(cd, cd.theta);
      for (int t = 0; t < cd.rank; ++t) w.c[static_cast<size_t>(t)] += static_cast<int>(j) * th.c[static_cast<size_t>(t)];
      r.add(w, -j, coeff);
    } else {
      Weight w = nu;
      Weight a = root_as_weight(cd, simple_root(cd, i));
      for (int t = 0; t < cd.rank; ++t) w.c[static_cast<size_t>(t)] -= static_cast<int>(j) * a.c[static_cast<size_t>(t)];
      r.add(w, 0, coeff);
    }
  };
  if (n >= 1)
    for (long long j = 1; j <= n; ++j) add_alpha_multiple(j, 1);
  else if (n <= -1)
    for (long long j = 0; j <= -n - 1; ++j) add_alpha_multiple(-j, -1);
  return r;
}

namespace {

int affine_mij(const CartanDatum& cd, int i, int j) {
  auto entry = [&](int a, int b) -> long long {
    // <alpha_b, alpha_a^vee> with 0 denoting the affine node
    if (a == b) return 2;
    if (a == 0) return -pairing(root_as_weight(cd, simple_root(cd, b)), cd.theta_check);
    if (b == 0) return -root_as_weight(cd, cd.theta).c[static_cast<size_t>(a) - 1];
    return cd.cartan.at(a - 1, b - 1);
  };
  long long p = entry(i, j) * entry(j, i);
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  return 0;  // infinite order
}

struct SampleCheck {
  bool ok = true;
  std::string what;
};

SampleCheck check_sample(const CartanDatum& cd, const LaurentCharacter& f, const Weight& nu, int sign) {
  SampleCheck r;
  auto fail = [&](const std::string& w) {
    r.ok = false;
    r.what = w;
  };
  // quadratic
  for (int i = 0; i <= cd.rank && r.ok; ++i) {
    LaurentCharacter ti = t_op(cd, i, f);
    if (!(t_op(cd, i, ti) + ti).is_zero()) fail("quadratic relation at i=" + std::to_string(i));
  }
  // braid
  for (int i = 0; i <= cd.rank && r.ok; ++i)
    for (int j = i + 1; j <= cd.rank && r.ok; ++j) {
      int m = affine_mij(cd, i, j);
      if (m == 0) continue;
      LaurentCharacter lhs = f, rhs = f;
      for (int k = 0; k < m; ++k) {
        lhs = t_op(cd, k % 2 == 0 ? i : j, lhs);
        rhs = t_op(cd, k % 2 == 0 ? j : i, rhs);
      }
      if (!(lhs == rhs)) fail("braid relation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // lattice
  if (r.ok) {
    Weight nu2 = nu + nu;
    if (!(e_op_mult(cd, nu, e_op_mult(cd, nu, f)) == e_op_mult(cd, nu2, f))) fail("lattice relation");
    if (!(e_op_mult(cd, zero_weight(cd), f) == f)) fail("lattice unit");
  }
  // cross
  for (int i = 0; i <= cd.rank && r.ok; ++i) {
    LaurentCharacter mono = lc_monomial(nu);
    LaurentCharacter si_mono = i == 0 ? s0_act_signed(cd, mono, sign) : si_act(cd, i, mono);
    LaurentCharacter lhs = t_op(cd, i, mono * f) - si_mono * t_op(cd, i, f);
    LaurentCharacter rhs = cross_rhs(cd, i, nu) * f;
    if (!(lhs == rhs)) fail("cross relation at i=" + std::to_string(i));
  }
  return r;
}

}  // namespace

Report verify_nildaha(const CartanDatum& cd, int samples, unsigned long long seed, bool corrupt_s0,
                      int threads) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3), qexp(-2, 2);
  struct Sample {
    Weight mono_w;
    long long mono_q;
    Weight nu;
  };
  std::vector<Sample> work;
  for (int s = 0; s < samples; ++s) {
    Sample smp{zero_weight(cd), qexp(rng), zero_weight(cd)};
    for (int i = 0; i < cd.rank; ++i) smp.mono_w.c[static_cast<size_t>(i)] = coord(rng);
    for (int i = 0; i < cd.rank; ++i) smp.nu.c[static_cast<size_t>(i)] = coord(rng);
    work.push_back(smp);
  }
  int sign = corrupt_s0 ? -1 : +1;
  std::vector<std::string> results(work.size());
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
#endif
  for (long k = 0; k < static_cast<long>(work.size()); ++k) {
    const Sample& s = work[static_cast<size_t>(k)];
    SampleCheck c = check_sample(cd, lc_monomial(s.mono_w, s.mono_q), s.nu, sign);
    if (!c.ok) results[static_cast<size_t>(k)] = c.what;
  }
  Report rep;
  for (size_t k = 0; k < results.size(); ++k)
    if (!results[k].empty()) {
      rep.pass = false;
      std::ostringstream os;
      os << results[k] << " on sample " << k << " (monomial weight (";
      for (size_t i = 0; i < work[k].mono_w.c.size(); ++i) os << (i ? "," : "") << work[k].mono_w.c[i];
      os << ") q^" << work[k].mono_q << ", nu (";
      for (size_t i = 0; i < work[k].nu.c.size(); ++i) os << (i ? "," : "") << work[k].nu.c[i];
      os << "))";
      rep.detail = os.str();
      return rep;
    }
  return rep;
}

std::vector<KClassTerm> bfu_translation_action(const CartanDatum& cd, int i, const TranslationKClass& c) {
  if (c.s0_tagged)
    throw input_error("bfu_translation_action: only plain translation classes carry the formulas");
  const Weight& lambda = c.character_twist;
  std::vector<KClassTerm> out;
  if (i != 0) {
    // coefficient (te(-lambda) - te(-s_i lambda + alpha_i)) / (1 - te(alpha_i))
    // under the te(omega) -> e^omega reading: e^{-lambda} (1 - y^{M})/(1 - y)
    // with y = e^{alpha_i} and M = lambda_i + 1.
    long long M = lambda.c[static_cast<size_t>(i) - 1] + 1;
    Weight alpha = root_as_weight(cd, simple_root(cd, i));
    LaurentCharacter coeff;
    Weight base = zero_weight(cd) - lambda;
    if (M >= 0) {
      Weight w = base;
      for (long long j = 0; j < M; ++j) {
        coeff.add(w, 0, 1);
        w = w + alpha;
      }
    } else {
      Weight w = base;
      for (long long j = -1; j >= M; --j) {
        w = w - alpha;
        coeff.add(w, 0, -1);
      }
    }
    out.push_back({TranslationKClass{false, c.xi, c.bundle_twist, zero_weight(cd)}, coeff});
    return out;
  }
  // i = 0: (te(-lambda) - te(-s_0 lambda))/(1 - te(alpha_0)) [O_{Q(t_xi)}]
  //        + te(-s_0 lambda) [O_{Q(s_0 t_xi)}]
  LaurentCharacter m_lam = lc_monomial(zero_weight(cd) - lambda);
  LaurentCharacter m_s0lam = s0_act(cd, m_lam);
  long long n = -pairing(zero_weight(cd) - lambda, cd.theta_check);  // <-lambda, alpha_0^vee>
  LaurentCharacter coeff1;
  Weight th = root_as_weight(cd, cd.theta);
  Weight base = zero_weight(cd) - lambda;
  if (n >= 1) {
    // -sum_{j=1..n} e^{base - j alpha_0}
    for (long long j = 1; j <= n; ++j) {
      Weight w = base;
      for (int t = 0; t < cd.rank; ++t) w.c[static_cast<size_t>(t)] += static_cast<int>(j) * th.c[static_cast<size_t>(t)];
      coeff1.add(w, -j, -1);
    }
  } else if (n <= -1) {
    for (long long j = 0; j <= -n - 1; ++j) {
      Weight w = base;
      for (int t = 0; t < cd.rank; ++t) w.c[static_cast<size_t>(t)] -= static_cast<int>(j) * th.c[static_cast<size_t>(t)];
      coeff1.add(w, j, 1);
    }
  }
  if (!coeff1.is_zero())
    out.push_back({TranslationKClass{false, c.xi, c.bundle_twist, zero_weight(cd)}, coeff1});
  out.push_back({TranslationKClass{true, c.xi, c.bundle_twist, zero_weight(cd)}, m_s0lam});
  return out;
}

}  // namespace silc
