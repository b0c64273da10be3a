// Closed-form decoupling exponents, their bounds, and the bootstrap
// recursions, all in exact rational arithmetic. Piecewise formulas evaluate
// both branches on closed overlaps and assert equality; a mismatch throws
// InvariantViolation (it would mean a typo in a formula, not bad data).
#pragma once

#include <optional>
#include <vector>

#include "declab/rational.hpp"

namespace declab {

// Gamma_{8,alpha} = -1/4 + [alpha/10 on (0,1/2]; alpha/(4(3-alpha)) on
// [1/2,2/3]; (-3 alpha^2 + 13 alpha - 2)/(32(3-alpha)) on [2/3,1)].
Rat gamma8(const Rat& alpha);

// Phi(alpha) on (1/2,1): 2 alpha/(3-alpha) up to 2/3, then
// (-3 alpha^2 + 13 alpha - 2)/(4(3-alpha)); satisfies 8*gamma8 = Phi - 2.
Rat phi(const Rat& alpha);

// Gamma_{p,alpha} for p > 4: interpolation of gamma8 against the (p=4, -1/2)
// endpoint below 8, the 8/p mixture with alpha/4 above.
Rat gamma_p(const Rat& p, const Rat& alpha);

// gamma_{p,alpha} for p > 6: ((p-6)/(p-4))(2/p + Gamma_{p,alpha}); checked
// against the fixed-point form (psi1(1-2 xi) + 2 eta)/(1 - xi).
Rat gamma_dec(const Rat& p, const Rat& alpha);

// c_{p,alpha} = (1/2 - 3/p) - (2/alpha) gamma_dec; asserted > 0.
Rat c_exponent(const Rat& p, const Rat& alpha);

struct FormulaParams {
  Rat p, alpha;
  Rat xi;   // 2/(p-2)
  Rat eta;  // (p-6)/(p(p-2))
  Rat gamma8;
  std::optional<Rat> phi;        // needs 1/2 < alpha < 1
  Rat gamma_p;
  std::optional<Rat> gamma_dec;  // needs p > 6
  std::optional<Rat> c_exp;      // needs p > 6
  Rat psi1;                      // bootstrap seed, = gamma_p
  Rat rho;                       // (1-alpha)/(2-alpha)
  Rat a_const;                   // 2(3 alpha - 1)/(2-alpha)
  Rat e_const;                   // (2 alpha - 1)(3 alpha - 1)/(alpha(2-alpha))
};

// p > 4, 0 < alpha < 1; checks 0 < xi < 1/2 iff p > 6.
FormulaParams make_params(const Rat& p, const Rat& alpha);

struct BoundsReport {
  Rat gamma_lower;           // max(-2/p, alpha/4 - 3/p), split at p = 4/alpha
  Rat c_upper_energy;        // 2(1-alpha)/(p alpha)
  Rat c_upper_trivial;       // 1/2 - 3/p
  Rat c_upper_interference;  // 3(1-alpha)/(p alpha)
  Rat c_conjecture;          // min(trivial, energy)
  bool gamma_exceeds_lower;  // gamma_p > gamma_lower; reported, never asserted
  std::optional<bool> c_below_conjecture;  // p > 6 only; asserted true there
};

BoundsReport bounds_report(const Rat& p, const Rat& alpha);

struct BootstrapRow {
  int s = 0;
  Rat scale;   // xi^s
  Rat psi;     // recursion value at s
  Rat closed;  // closed-form value at s (always equals psi)
  Rat bildec;  // psi + 2 xi^s / p, the bilinear-to-linear bound
};

// Runs psi(xi^{s+1}) = psi(xi^s)/2 + (gamma/2)(1 - xi^{s+1}) + eta xi^s with
// gamma = gamma_dec(p, alpha), from psi(1) = psi1, for s = 0..s_max; asserts
// the closed form at every step. psi1 is normally gamma_p(p, alpha).
std::vector<BootstrapRow> bootstrap_iterate(const Rat& p, const Rat& alpha, const Rat& psi1,
                                            int s_max);

struct CantorBootstrap {
  Rat xi;           // 1/2 in this variant
  Rat eta;          // alpha kappa / 8
  Rat limit_bound;  // alpha kappa / 2
  Rat s0_bound;     // 2/p + psi1
  bool s0_applicable;  // s0_bound < limit_bound
  Rat best;
};

// The Cantor-variant bootstrap bounds; kappa is the caller-supplied
// kappa_{p/3} level constant.
CantorBootstrap cantor_bootstrap(const Rat& p, const Rat& alpha, const Rat& kappa,
                                 const Rat& psi1);

}  // namespace declab
