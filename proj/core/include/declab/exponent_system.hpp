// LP encodings of the multiscale exponent bookkeeping for AD-regular Cantor
// sets on the parabola. Everything is a power of one large parameter R,
// tracked through dyadic scale steps q_j = 2^{-j}:
//
//   b          target exponent (free)
//   tau_j      log_R of the two theta-counts product at scale j
//   a_j        log_R of the admissible-arc count product at scale j
//   c_j        log_R of the per-arc child multiplicity product
//   n_j        log_R of the refined-count product, n_j = a_{j+1} + c_j
//   m_j        log_R of the multiplicity-threshold product
//   h_j        log_R of a height ratio (may be < 1, hence free)
//
// Regimes pick the estimate family coupling b to the bookkeeping:
// KakeyaOnly uses the single telescoped incidence chain, SmallAlpha
// (alpha <= 1/2) and LargeAlpha (1/2 < alpha < 1) add one estimate row per
// depth k = 1..K plus the basic estimate b <= tau_0 - 2. The regularity cap
// tau_0 <= alpha keeps every regime bounded; the optimal value is unchanged
// where the weighted certificates apply.
//
// Constraint labels:
//   struct-n@j     n_j = a_{j+1} + c_j          (equality)
//   struct-ntau@j  n_j <= tau_j
//   struct-taua@j  tau_{j+1} <= a_{j+1}
//   struct-hc@j    h_j <= c_j
//   mh@j           m_{j+1} + 2 h_j <= q_{j+1} + c_j
//   areg@j         a_j <= alpha q_j             (j = 1..K+1)
//   creg@j         c_j <= alpha q_{j+1}         (j = 0..K)
//   reg-cap        tau_0 <= alpha
//   basic          b <= tau_0 - 2
//   estimate@k     depth-k estimate             (k = 1..K)
//   kakeya-chain   the KakeyaOnly telescoped estimate
#pragma once

#include <map>
#include <string>
#include <vector>

#include "declab/linear_program.hpp"

namespace declab {

enum class Regime { KakeyaOnly, SmallAlpha, LargeAlpha };

const char* to_string(Regime regime);
Regime regime_from_string(const std::string& s);  // "kakeya" | "small" | "large"

struct ExponentSystem {
  Rat alpha;
  int K = 1;
  Regime regime = Regime::SmallAlpha;
  std::vector<Rat> q;  // q_j = 2^{-j}, j = 0..K+1
  Rat beta;            // (alpha+1)/(2 alpha), LargeAlpha only
  Rat delta;           // 4 - 1/alpha, LargeAlpha only
  LinearProgram program;  // objective: maximize b
};

using ExponentAssignment = std::map<std::string, Rat>;

// Throws RegimeRangeError when alpha is outside the regime's interval
// (KakeyaOnly: (0,1), SmallAlpha: (0,1/2], LargeAlpha: (1/2,1)),
// DomainError when K < 1.
ExponentSystem build_system(const Rat& alpha, int K, Regime regime);

// solve_lp value of the system; the LP is always feasible and bounded.
Rat optimal_exponent(const Rat& alpha, int K, Regime regime);

// The published weight schemes on {"basic", "estimate@k"}. SmallAlpha:
// w_basic = 1/3, w_k = 4/3^{k+1} (k < K), w_K = 2/3^K. LargeAlpha with
// alpha <= 2/3: w_basic = (2-3a)/(2-a), w_k = 2a/(2-a)^2 rho^{k-1} (k < K),
// w_K = 2a/(2-a) rho^{K-1}, rho = (1-a)/(2-a). LargeAlpha with alpha > 2/3
// (requires K >= 2, no weight on basic): w_1 = 3(1-a)/(2-a),
// w_k = (2a-1)/(2-a)^2 rho^{k-2} (2 <= k < K), w_K = (2a-1)/(2-a) rho^{K-2}.
// Throws KTooSmall / RegimeRangeError.
std::map<std::string, Rat> paper_weights(const Rat& alpha, int K, Regime regime);

struct CertificateCheck {
  Rat bound;        // weighted_bound of the scheme
  Rat closed_form;  // SmallAlpha: (4/5 + 1/(5*6^K)) alpha - 2; LargeAlpha: phi(alpha) - 2
  Rat terminal;     // bound - closed_form (0 for SmallAlpha, >= 0 decay term for LargeAlpha)
  bool matches_closed_form;
};

// Runs weighted_bound with paper_weights. SmallAlpha must reproduce the
// closed form exactly; LargeAlpha must sit above it by a nonnegative
// terminal term. Throws NotACertificate if the scheme fails to certify
// (an encoding bug, not a data condition).
CertificateCheck verify_paper_certificate(const Rat& alpha, int K, Regime regime);

// The saturating assignment: b = 4 alpha/5 - 2, tau_0 = 4 alpha/5,
// tau_j = a_j = (4 alpha/5) q_j, c_0 = h_0 = 2 alpha/5,
// c_j = h_j = (4 alpha/5) q_{j+1} (1 <= j <= K), m_{j+1} = (1-4 alpha/5) q_{j+1},
// n_j = a_{j+1} + c_j. Feasible for the SmallAlpha system and tight on the
// basic and every depth estimate. Requires alpha <= 1/2, K >= 1.
ExponentAssignment saturating_point(const Rat& alpha, int K);

// Upper bound on b implied by one constraint at a point: the constraint must
// have coefficient +1 on b; returns rhs - (lhs - b-term) evaluated at the
// point, i.e. the value the constraint caps b at.
Rat estimate_bound_at(const ExponentSystem& sys, const std::string& label,
                      const ExponentAssignment& point);

}  // namespace declab
