#include "declab/exponent_system.hpp"

#include "declab/errors.hpp"
#include "declab/formulas.hpp"
#include "declab/simplex.hpp"

namespace declab {

namespace {

std::string tau(int j) { return "tau_" + std::to_string(j); }
std::string av(int j) { return "a_" + std::to_string(j); }
std::string cv(int j) { return "c_" + std::to_string(j); }
std::string nv(int j) { return "n_" + std::to_string(j); }
std::string mv(int j) { return "m_" + std::to_string(j); }
std::string hv(int j) { return "h_" + std::to_string(j); }

void check_range(const Rat& alpha, int K, Regime regime) {
  if (K < 1) throw DomainError("K must be >= 1");
  const bool in01 = alpha > 0 && alpha < 1;
  switch (regime) {
    case Regime::KakeyaOnly:
      if (!in01) throw RegimeRangeError("KakeyaOnly needs 0 < alpha < 1, got " + alpha.str());
      break;
    case Regime::SmallAlpha:
      if (!(alpha > 0 && alpha <= Rat(1, 2)))
        throw RegimeRangeError("SmallAlpha needs 0 < alpha <= 1/2, got " + alpha.str());
      break;
    case Regime::LargeAlpha:
      if (!(alpha > Rat(1, 2) && alpha < 1))
        throw RegimeRangeError("LargeAlpha needs 1/2 < alpha < 1, got " + alpha.str());
      break;
  }
}

}  // namespace

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::KakeyaOnly: return "kakeya";
    case Regime::SmallAlpha: return "small";
    case Regime::LargeAlpha: return "large";
  }
  return "?";
}

Regime regime_from_string(const std::string& s) {
  if (s == "kakeya") return Regime::KakeyaOnly;
  if (s == "small") return Regime::SmallAlpha;
  if (s == "large") return Regime::LargeAlpha;
  throw RegimeRangeError("unknown regime \"" + s + "\" (want kakeya|small|large)");
}

ExponentSystem build_system(const Rat& alpha, int K, Regime regime) {
  check_range(alpha, K, regime);

  ExponentSystem sys;
  sys.alpha = alpha;
  sys.K = K;
  sys.regime = regime;
  sys.q.resize(static_cast<std::size_t>(K) + 2);
  for (int j = 0; j <= K + 1; ++j) sys.q[static_cast<std::size_t>(j)] = Rat::pow(Rat(1, 2), j);
  if (regime == Regime::LargeAlpha) {
    sys.beta = (alpha + 1) / (2 * alpha);
    sys.delta = Rat(4) - Rat(1) / alpha;
  }

  LinearProgram& lp = sys.program;
  lp.add_variable("b", VarSign::Free);
  for (int j = 0; j <= K + 1; ++j) lp.add_variable(tau(j), VarSign::NonNegative);
  for (int j = 1; j <= K + 1; ++j) lp.add_variable(av(j), VarSign::NonNegative);
  for (int j = 0; j <= K; ++j) lp.add_variable(cv(j), VarSign::NonNegative);
  for (int j = 0; j <= K; ++j) lp.add_variable(nv(j), VarSign::NonNegative);
  for (int j = 1; j <= K + 1; ++j) lp.add_variable(mv(j), VarSign::NonNegative);
  for (int j = 0; j <= K; ++j) lp.add_variable(hv(j), VarSign::Free);

  const auto& q = sys.q;
  auto at = [](int j) { return std::to_string(j); };

  for (int j = 0; j <= K; ++j) {
    lp.add_constraint("struct-n@" + at(j), {{nv(j), 1}, {av(j + 1), -1}, {cv(j), -1}}, Rel::Eq, 0);
    lp.add_constraint("struct-ntau@" + at(j), {{nv(j), 1}, {tau(j), -1}}, Rel::Le, 0);
    lp.add_constraint("struct-taua@" + at(j), {{tau(j + 1), 1}, {av(j + 1), -1}}, Rel::Le, 0);
    lp.add_constraint("struct-hc@" + at(j), {{hv(j), 1}, {cv(j), -1}}, Rel::Le, 0);
    lp.add_constraint("mh@" + at(j), {{mv(j + 1), 1}, {hv(j), 2}, {cv(j), -1}}, Rel::Le,
                      q[static_cast<std::size_t>(j + 1)]);
  }
  for (int j = 1; j <= K + 1; ++j)
    lp.add_constraint("areg@" + at(j), {{av(j), 1}}, Rel::Le, alpha * q[static_cast<std::size_t>(j)]);
  for (int j = 0; j <= K; ++j)
    lp.add_constraint("creg@" + at(j), {{cv(j), 1}}, Rel::Le,
                      alpha * q[static_cast<std::size_t>(j + 1)]);
  lp.add_constraint("reg-cap", {{tau(0), 1}}, Rel::Le, alpha);

  if (regime == Regime::KakeyaOnly) {
    // b <= sum_{j=0..K} (a_{j+1} + 2 h_j - tau_j - q_j) + tau_{K+1} - 2 q_{K+1}
    std::map<std::string, Rat> co{{"b", 1}};
    Rat rhs = -2 * q[static_cast<std::size_t>(K + 1)];
    for (int j = 0; j <= K; ++j) {
      co[av(j + 1)] += -1;
      co[hv(j)] += -2;
      co[tau(j)] += 1;
      rhs -= q[static_cast<std::size_t>(j)];
    }
    co[tau(K + 1)] += -1;
    lp.add_constraint("kakeya-chain", co, Rel::Le, rhs);
  } else {
    lp.add_constraint("basic", {{"b", 1}, {tau(0), -1}}, Rel::Le, -2);
    const bool small = regime == Regime::SmallAlpha;
    for (int k = 1; k <= K; ++k) {
      // SmallAlpha, depth k:
      //   b <= 2(1-2^{-k}) alpha - 5/2 - tau_0 + (1/2) sum_{j=1..k} tau_j
      //        + 3 tau_{k+1} - n_0 - (3/2) sum_{j=1..k} n_j
      //        + (1/2) sum_{j=1..k} m_j + m_{k+1}
      //        + 2 sum_{j=0..k-1} h_j + 4 h_k
      // LargeAlpha swaps the constant for -3/2 - 2^{-k}, the n-weight 3/2
      // for beta, and the h-weight 2 for delta.
      std::map<std::string, Rat> co{{"b", 1}};
      const Rat qk = Rat::pow(Rat(1, 2), k);
      Rat rhs = small ? 2 * (1 - qk) * alpha - Rat(5, 2) : -Rat(3, 2) - qk;
      co[tau(0)] += 1;
      for (int j = 1; j <= k; ++j) co[tau(j)] += Rat(-1, 2);
      co[tau(k + 1)] += -3;
      co[nv(0)] += 1;
      const Rat nw = small ? Rat(3, 2) : sys.beta;
      for (int j = 1; j <= k; ++j) co[nv(j)] += nw;
      for (int j = 1; j <= k; ++j) co[mv(j)] += Rat(-1, 2);
      co[mv(k + 1)] += -1;
      const Rat hw = small ? Rat(2) : sys.delta;
      for (int j = 0; j <= k - 1; ++j) co[hv(j)] += -hw;
      co[hv(k)] += -4;
      lp.add_constraint("estimate@" + at(k), co, Rel::Le, rhs);
    }
  }
  lp.set_objective({{"b", 1}});
  return sys;
}

Rat optimal_exponent(const Rat& alpha, int K, Regime regime) {
  ExponentSystem sys = build_system(alpha, K, regime);
  LpSolution sol = solve_lp(sys.program);
  if (sol.status != LpStatus::Optimal)
    throw InvariantViolation("exponent system did not solve to optimality");
  return sol.value;
}

std::map<std::string, Rat> paper_weights(const Rat& alpha, int K, Regime regime) {
  if (regime == Regime::KakeyaOnly)
    throw RegimeRangeError("no weight scheme for KakeyaOnly");
  check_range(alpha, K, regime);
  std::map<std::string, Rat> w;
  if (regime == Regime::SmallAlpha) {
    w["basic"] = Rat(1, 3);
    for (int k = 1; k < K; ++k) w["estimate@" + std::to_string(k)] = Rat(4) / Rat::pow(3, k + 1);
    w["estimate@" + std::to_string(K)] = Rat(2) / Rat::pow(3, K);
    return w;
  }
  const Rat rho = (1 - alpha) / (2 - alpha);
  if (alpha <= Rat(2, 3)) {
    w["basic"] = (2 - 3 * alpha) / (2 - alpha);
    const Rat mid = 2 * alpha / ((2 - alpha) * (2 - alpha));
    for (int k = 1; k < K; ++k)
      w["estimate@" + std::to_string(k)] = mid * Rat::pow(rho, k - 1);
    w["estimate@" + std::to_string(K)] = (2 * alpha / (2 - alpha)) * Rat::pow(rho, K - 1);
    return w;
  }
  if (K < 2) throw KTooSmall("the alpha > 2/3 scheme needs K >= 2");
  w["estimate@1"] = 3 * (1 - alpha) / (2 - alpha);
  const Rat mid = (2 * alpha - 1) / ((2 - alpha) * (2 - alpha));
  for (int k = 2; k < K; ++k)
    w["estimate@" + std::to_string(k)] = mid * Rat::pow(rho, k - 2);
  w["estimate@" + std::to_string(K)] = ((2 * alpha - 1) / (2 - alpha)) * Rat::pow(rho, K - 2);
  return w;
}

CertificateCheck verify_paper_certificate(const Rat& alpha, int K, Regime regime) {
  ExponentSystem sys = build_system(alpha, K, regime);
  auto w = paper_weights(alpha, K, regime);
  auto bound = weighted_bound(sys.program, w, "b");
  if (!bound)
    throw NotACertificate("weight scheme failed to certify (alpha=" + alpha.str() +
                          ", K=" + std::to_string(K) + ", " + to_string(regime) + ")");
  CertificateCheck out;
  out.bound = *bound;
  if (regime == Regime::SmallAlpha) {
    out.closed_form = (Rat(4, 5) + Rat(1) / (5 * Rat::pow(6, K))) * alpha - 2;
    out.terminal = out.bound - out.closed_form;
    out.matches_closed_form = out.bound == out.closed_form;
  } else {
    out.closed_form = phi(alpha) - 2;
    out.terminal = out.bound - out.closed_form;
    out.matches_closed_form = out.terminal >= 0;
  }
  return out;
}

ExponentAssignment saturating_point(const Rat& alpha, int K) {
  if (!(alpha > 0 && alpha <= Rat(1, 2)))
    throw RegimeRangeError("saturating point needs 0 < alpha <= 1/2, got " + alpha.str());
  if (K < 1) throw DomainError("K must be >= 1");
  const Rat f = 4 * alpha / 5;  // tau_0 and the per-scale decay coefficient
  ExponentAssignment x;
  auto q = [](int j) { return Rat::pow(Rat(1, 2), j); };
  x["b"] = f - 2;
  for (int j = 0; j <= K + 1; ++j) x[tau(j)] = f * q(j);
  for (int j = 1; j <= K + 1; ++j) x[av(j)] = f * q(j);
  x[cv(0)] = 2 * alpha / 5;
  for (int j = 1; j <= K; ++j) x[cv(j)] = f * q(j + 1);
  for (int j = 0; j <= K; ++j) x[hv(j)] = x[cv(j)];
  for (int j = 0; j <= K; ++j) x[mv(j + 1)] = (1 - f) * q(j + 1);
  for (int j = 0; j <= K; ++j) x[nv(j)] = x[av(j + 1)] + x[cv(j)];
  return x;
}

Rat estimate_bound_at(const ExponentSystem& sys, const std::string& label,
                      const ExponentAssignment& point) {
  const LpConstraint& c = sys.program.constraint(label);
  const int b_ix = sys.program.var_index("b");
  auto it = c.coeffs.find(b_ix);
  if (it == c.coeffs.end() || it->second != 1)
    throw MalformedProgram("constraint \"" + label + "\" does not bound b with coefficient 1");
  Rat rest = 0;
  for (const auto& [ix, coeff] : c.coeffs) {
    if (ix == b_ix) continue;
    const std::string& name = sys.program.vars()[static_cast<std::size_t>(ix)].name;
    auto pit = point.find(name);
    if (pit == point.end()) throw MissingVariable("point omits variable \"" + name + "\"");
    rest += coeff * pit->second;
  }
  return c.rhs - rest;
}

}  // namespace declab
