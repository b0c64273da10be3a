// Arithmetic Cantor sets at finite level, in the integer-dilated model:
// level i of base n with digit alphabet D is the set {sum a_j n^j : a_j in D}
// inside [0, n^i - 1]; dividing by scale = n^i recovers the unit-interval
// picture. The parabola lift S_i = {(x, x^2)} carries the same points onto
// integer frequencies in dimension 2.
//
// check_ad_regular scans dyadic windows centered at set points (widths 2 up
// to 4*scale) and returns the smallest constant making both regularity
// inequalities hold over that scan. The scan is an upper-bound witness for
// the true constant within a factor 2 (dyadic width rounding); comparisons
// against the irrational window power run in long double and the returned
// constant is rounded up to denominator 2^24, so re-checking the scanned
// windows against it always passes.
//
// energy computes E_p exactly: the (p/2)-fold representation function by
// iterated exact convolution of the counting measure, then E_p = sum r(x)^2.
// diagonal_lower counts the tuples whose second half permutes the first
// (computed from the multiset generating function, not enumeration).
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "declab/rational.hpp"

namespace declab {

struct Limits {
  std::int64_t points = 1'000'000;     // cap on k^i and on sumset sizes
  std::int64_t support = 10'000'000;   // cap on |points|^{p/2} and convolution support
};

class CantorSpec {
 public:
  // Validates: base >= 2, alphabet strictly increasing within [0, base-1],
  // size in [2, base], level >= 0. Throws DomainError.
  CantorSpec(std::int64_t base, std::vector<std::int64_t> alphabet, int level);

  std::int64_t base() const { return base_; }
  const std::vector<std::int64_t>& alphabet() const { return alphabet_; }
  int level() const { return level_; }
  std::int64_t k() const { return static_cast<std::int64_t>(alphabet_.size()); }
  double alpha() const;  // log k / log base
  bool is_arithmetic_progression() const;

 private:
  std::int64_t base_;
  std::vector<std::int64_t> alphabet_;
  int level_;
};

struct CantorLevel {
  CantorSpec spec;
  std::vector<std::int64_t> points;  // sorted, size k^level, inside [0, scale-1]
  std::int64_t scale;                // base^level
};

// Throws SizeLimit when k^level exceeds limits.points or scale overflows.
CantorLevel build_cantor(const CantorSpec& spec, const Limits& limits = {});

using Vec2 = std::array<std::int64_t, 2>;

// S_i = {(x, x^2)}; throws SizeLimit when x^2 would overflow.
std::vector<Vec2> parabola_lift(const CantorLevel& level);

struct WindowWitness {
  std::int64_t center = 0;
  std::int64_t width = 0;
  std::int64_t count = 0;
  double required = 1.0;  // constant this window alone forces
};

struct RegularityReport {
  Rat c_ad;              // minimal constant over the scan, >= 1
  WindowWitness upper;   // worst window for count <= C (|J| R)^alpha
  WindowWitness lower;   // worst window for count >= C^{-1} (|J| R)^alpha
};

RegularityReport check_ad_regular(const CantorLevel& level);

struct EnergyReport {
  long p = 0;
  mpz_class energy;
  mpz_class diagonal_lower;
  Rat cs_lower;               // |X|^p / #support
  double dp_lower = 0;        // energy^{1/p} / |X|^{1/2}
  std::int64_t support = 0;   // support size of the (p/2)-fold convolution
};

// p even, >= 2 (OddP otherwise); |points|^{p/2} within limits.support.
EnergyReport energy(const std::vector<std::int64_t>& points, long p, const Limits& limits = {});
EnergyReport energy(const std::vector<Vec2>& points, long p, const Limits& limits = {});

// Exact fold-fold sumset, sorted. Throws SizeLimit past limits.points.
std::vector<std::int64_t> sumset(const std::vector<std::int64_t>& points, int fold,
                                 const Limits& limits = {});
std::vector<Vec2> sumset(const std::vector<Vec2>& points, int fold, const Limits& limits = {});

struct DpLowerReport {
  double dp_lower = 0;
  // For arithmetic-progression alphabets: range of the fitted per-level
  // constant k^{1/2-1/p} / (level ratio) across levels 1..i.
  std::optional<double> fit_min, fit_max;
};

DpLowerReport d_p_lower_from_energy(const CantorLevel& level, long p, const Limits& limits = {});

}  // namespace declab
