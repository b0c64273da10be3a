#include "declab/formulas.hpp"

#include "declab/errors.hpp"

namespace declab {

namespace {

void require_alpha(const Rat& alpha) {
  if (!(alpha > 0 && alpha < 1))
    throw DomainError("alpha must lie in (0,1), got " + alpha.str());
}

Rat g8_left(const Rat& a) { return a / 10 - Rat(1, 4); }
Rat g8_mid(const Rat& a) { return a / (4 * (3 - a)) - Rat(1, 4); }
Rat g8_right(const Rat& a) { return (-3 * a * a + 13 * a - 2) / (32 * (3 - a)) - Rat(1, 4); }

}  // namespace

Rat gamma8(const Rat& alpha) {
  require_alpha(alpha);
  const Rat half(1, 2), two_thirds(2, 3);
  if (alpha == half) {
    Rat l = g8_left(alpha), m = g8_mid(alpha);
    if (l != m) throw InvariantViolation("gamma8 branches disagree at 1/2");
    return l;
  }
  if (alpha == two_thirds) {
    Rat m = g8_mid(alpha), r = g8_right(alpha);
    if (m != r) throw InvariantViolation("gamma8 branches disagree at 2/3");
    return m;
  }
  if (alpha < half) return g8_left(alpha);
  if (alpha < two_thirds) return g8_mid(alpha);
  return g8_right(alpha);
}

Rat phi(const Rat& alpha) {
  if (!(alpha > Rat(1, 2) && alpha < 1))
    throw DomainError("phi needs 1/2 < alpha < 1, got " + alpha.str());
  auto left = [](const Rat& a) { return 2 * a / (3 - a); };
  auto right = [](const Rat& a) { return (-3 * a * a + 13 * a - 2) / (4 * (3 - a)); };
  Rat v;
  if (alpha == Rat(2, 3)) {
    Rat l = left(alpha), r = right(alpha);
    if (l != r) throw InvariantViolation("phi branches disagree at 2/3");
    v = l;
  } else {
    v = alpha < Rat(2, 3) ? left(alpha) : right(alpha);
  }
  if (8 * gamma8(alpha) != v - 2)
    throw InvariantViolation("phi does not satisfy 8 gamma8 = phi - 2 at " + alpha.str());
  return v;
}

Rat gamma_p(const Rat& p, const Rat& alpha) {
  if (!(p > 4)) throw DomainError("gamma_p needs p > 4, got " + p.str());
  require_alpha(alpha);
  const Rat g8 = gamma8(alpha);
  auto high = [&] { return (8 / p) * (g8 - alpha / 4) + alpha / 4; };
  auto low = [&] {
    const Rat t = 2 - 8 / p;  // 1/p = t/8 + (1-t)/4
    return t * g8 + (1 - t) * Rat(-1, 2);
  };
  if (p == 8) {
    Rat h = high(), l = low();
    if (h != l || h != g8) throw InvariantViolation("gamma_p branches disagree at p = 8");
    return g8;
  }
  return p > 8 ? high() : low();
}

Rat gamma_dec(const Rat& p, const Rat& alpha) {
  if (!(p > 6)) throw DomainError("gamma_dec needs p > 6, got " + p.str());
  const Rat gp = gamma_p(p, alpha);
  const Rat chain = ((p - 6) / (p - 4)) * (2 / p + gp);
  const Rat xi = 2 / (p - 2);
  const Rat eta = (p - 6) / (p * (p - 2));
  const Rat fixed_point = (gp * (1 - 2 * xi) + 2 * eta) / (1 - xi);
  if (chain != fixed_point)
    throw InvariantViolation("gamma_dec chain and fixed-point forms disagree");
  return chain;
}

Rat c_exponent(const Rat& p, const Rat& alpha) {
  if (!(p > 6)) throw DomainError("c_exponent needs p > 6, got " + p.str());
  require_alpha(alpha);
  const Rat c = (Rat(1, 2) - 3 / p) - (2 / alpha) * gamma_dec(p, alpha);
  if (!(c > 0)) throw InvariantViolation("c_exponent not positive at p=" + p.str() +
                                         ", alpha=" + alpha.str());
  return c;
}

FormulaParams make_params(const Rat& p, const Rat& alpha) {
  if (!(p > 4)) throw DomainError("FormulaParams needs p > 4, got " + p.str());
  require_alpha(alpha);
  FormulaParams fp;
  fp.p = p;
  fp.alpha = alpha;
  fp.xi = 2 / (p - 2);
  fp.eta = (p - 6) / (p * (p - 2));
  if ((fp.xi > 0 && fp.xi < Rat(1, 2)) != (p > 6))
    throw InvariantViolation("xi range inconsistent with p > 6");
  fp.gamma8 = gamma8(alpha);
  if (alpha > Rat(1, 2) && alpha < 1) fp.phi = phi(alpha);
  fp.gamma_p = gamma_p(p, alpha);
  if (p > 6) {
    fp.gamma_dec = gamma_dec(p, alpha);
    fp.c_exp = c_exponent(p, alpha);
  }
  fp.psi1 = fp.gamma_p;
  fp.rho = (1 - alpha) / (2 - alpha);
  fp.a_const = 2 * (3 * alpha - 1) / (2 - alpha);
  fp.e_const = (2 * alpha - 1) * (3 * alpha - 1) / (alpha * (2 - alpha));
  return fp;
}

BoundsReport bounds_report(const Rat& p, const Rat& alpha) {
  if (!(p > 4)) throw DomainError("bounds_report needs p > 4, got " + p.str());
  require_alpha(alpha);
  BoundsReport r;
  r.gamma_lower = Rat::max(-(2 / p), alpha / 4 - 3 / p);
  r.c_upper_energy = 2 * (1 - alpha) / (p * alpha);
  r.c_upper_trivial = Rat(1, 2) - 3 / p;
  r.c_upper_interference = 3 * (1 - alpha) / (p * alpha);
  r.c_conjecture = Rat::min(r.c_upper_trivial, r.c_upper_energy);
  r.gamma_exceeds_lower = gamma_p(p, alpha) > r.gamma_lower;
  if (p > 6) {
    const bool below = c_exponent(p, alpha) <= r.c_conjecture;
    if (!below) throw InvariantViolation("c_exponent exceeds the conjectured cap");
    r.c_below_conjecture = below;
  }
  return r;
}

std::vector<BootstrapRow> bootstrap_iterate(const Rat& p, const Rat& alpha, const Rat& psi1,
                                            int s_max) {
  if (s_max < 0) throw DomainError("s_max must be >= 0");
  const Rat gamma = gamma_dec(p, alpha);  // DomainError for p <= 6
  const Rat xi = 2 / (p - 2);
  const Rat eta = (p - 6) / (p * (p - 2));
  if (!(2 * xi < 1)) throw NonconvergenceError("recursion contracts only for p > 6");
  // closed form: 2^{-s} psi1 + gamma(1 - 2^{-s})
  //              + 2(eta/xi - gamma/2)(2^{-s} - xi^s)/(1/xi - 2)
  const Rat slope = 2 * (eta / xi - gamma / 2) / (1 / xi - 2);
  std::vector<BootstrapRow> rows;
  rows.reserve(static_cast<std::size_t>(s_max) + 1);
  Rat psi = psi1;
  Rat xs = 1;  // xi^s
  Rat hs = 1;  // 2^{-s}
  for (int s = 0; s <= s_max; ++s) {
    if (s > 0) {
      psi = psi / 2 + (gamma / 2) * (1 - xs * xi) + eta * xs;
      xs *= xi;
      hs /= 2;
    }
    const Rat closed = hs * psi1 + gamma * (1 - hs) + slope * (hs - xs);
    if (closed != psi)
      throw InvariantViolation("bootstrap closed form mismatch at s = " + std::to_string(s));
    rows.push_back({s, xs, psi, closed, psi + 2 * xs / p});
  }
  return rows;
}

CantorBootstrap cantor_bootstrap(const Rat& p, const Rat& alpha, const Rat& kappa,
                                 const Rat& psi1) {
  if (!(p > 6)) throw DomainError("cantor_bootstrap needs p > 6, got " + p.str());
  require_alpha(alpha);
  CantorBootstrap out;
  out.xi = Rat(1, 2);
  out.eta = alpha * kappa / 8;
  out.limit_bound = alpha * kappa / 2;
  out.s0_bound = 2 / p + psi1;
  out.s0_applicable = out.s0_bound < out.limit_bound;
  out.best = out.s0_applicable ? out.s0_bound : out.limit_bound;
  return out;
}

}  // namespace declab
