#include "declab/expsum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>

#include "declab/errors.hpp"
#include "declab/formulas.hpp"

namespace declab {

namespace {

constexpr std::int64_t kGridCap = 1LL << 24;

// FFTW plan creation mutates global tables.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

struct FftLine {
  std::int64_t n;
  fftw_complex* buf;
  fftw_plan plan;

  explicit FftLine(std::int64_t n) : n(n) {
    buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    if (!buf) throw SizeLimit("fft buffer allocation failed");
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    if (!plan) {
      fftw_free(buf);
      throw SizeLimit("fft plan creation failed");
    }
  }
  ~FftLine() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
    fftw_free(buf);
  }
  FftLine(const FftLine&) = delete;
  FftLine& operator=(const FftLine&) = delete;

  void clear() {
    for (std::int64_t j = 0; j < n; ++j) buf[j][0] = buf[j][1] = 0.0;
  }
  void run() { fftw_execute(plan); }

  // sum_k |F_k|^p, k ascending; long double keeps the 1e-9 bridge honest
  long double abs_power_sum(double p, bool even) const {
    const long half = even ? std::lround(p) / 2 : 0;
    long double acc = 0.0L;
    for (std::int64_t j = 0; j < n; ++j) {
      const long double re = buf[j][0];
      const long double im = buf[j][1];
      const long double m2 = re * re + im * im;
      if (even) {
        long double t = 1.0L;
        for (long e = 0; e < half; ++e) t *= m2;
        acc += t;
      } else {
        acc += powl(m2, static_cast<long double>(p) / 2.0L);
      }
    }
    return acc;
  }
};

bool is_even_integer(double p) {
  return p > 0 && p == std::floor(p) && std::llround(p) % 2 == 0;
}

std::int64_t fold_count(double p) {
  return static_cast<std::int64_t>(std::ceil(p / 2.0));
}

std::int64_t mod_index(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_grid(std::int64_t grid, std::int64_t max_abs, double p) {
  if (grid < 1) throw DomainError("grid must be positive");
  if (grid > kGridCap) throw SizeLimit("grid exceeds the size cap");
  if (is_even_integer(p) && grid < 4 * (max_abs + 1) * fold_count(p))
    throw GridTooCoarse("even p needs grid >= 4 (max|coord| + 1) p/2");
}

}  // namespace

std::int64_t default_grid(std::int64_t max_abs_coord, double p) {
  const std::int64_t base = 4 * (max_abs_coord + 1) * fold_count(p);
  return is_even_integer(p) ? base : 2 * base;
}

double exp_sum_norm(const std::vector<std::int64_t>& freqs, double p, std::int64_t grid) {
  if (freqs.empty()) throw DomainError("empty frequency set");
  if (p <= 0) throw DomainError("p must be positive");
  std::int64_t max_abs = 0;
  for (std::int64_t x : freqs) max_abs = std::max(max_abs, std::abs(x));
  check_grid(grid, max_abs, p);
  const bool even = is_even_integer(p);
  const std::int64_t n = even ? 4 * (max_abs + 1) * fold_count(p) : grid;

  FftLine line(n);
  line.clear();
  for (std::int64_t x : freqs) line.buf[mod_index(-x, n)][0] += 1.0;
  line.run();
  const long double mean = line.abs_power_sum(p, even) / static_cast<long double>(n);
  return static_cast<double>(powl(mean, 1.0L / static_cast<long double>(p)));
}

double exp_sum_norm(const std::vector<Vec2>& freqs, double p, std::int64_t grid) {
  if (freqs.empty()) throw DomainError("empty frequency set");
  if (p <= 0) throw DomainError("p must be positive");
  std::int64_t max0 = 0, max1 = 0;
  for (const Vec2& v : freqs) {
    max0 = std::max(max0, std::abs(v[0]));
    max1 = std::max(max1, std::abs(v[1]));
  }
  check_grid(grid, std::max(max0, max1), p);
  const bool even = is_even_integer(p);
  // Exact integration only needs each dimension to out-resolve its own
  // frequency span, which keeps the row count at the second span.
  const std::int64_t n0 = even ? 4 * (max0 + 1) * fold_count(p) : grid;
  const std::int64_t n1 = even ? 4 * (max1 + 1) * fold_count(p) : grid;

  FftLine line(n0);
  const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
  long double total = 0.0L;
  const std::int64_t v_half = n1 / 2;
  for (std::int64_t v = 0; v <= v_half; ++v) {
    line.clear();
    for (const Vec2& f : freqs) {
      const long double angle = tau *
                                static_cast<long double>(mod_index((f[1] % n1) * v, n1)) /
                                static_cast<long double>(n1);
      fftw_complex& cell = line.buf[mod_index(-f[0], n0)];
      cell[0] += static_cast<double>(cosl(angle));
      cell[1] += static_cast<double>(sinl(angle));
    }
    line.run();
    const long double row = line.abs_power_sum(p, even);
    // rows v and n1 - v carry the same |f| values
    const bool self_paired = (v == 0) || (2 * v == n1);
    total += self_paired ? row : 2.0L * row;
  }
  const long double mean = total / (static_cast<long double>(n0) * static_cast<long double>(n1));
  return static_cast<double>(powl(mean, 1.0L / static_cast<long double>(p)));
}

DecLowerReport empirical_dec_lower(const CantorLevel& level, const Rat& p, std::int64_t grid) {
  const std::vector<Vec2> freqs = parabola_lift(level);
  const double pd = p.dbl();
  std::int64_t max_abs = 0;
  for (const Vec2& v : freqs) max_abs = std::max({max_abs, std::abs(v[0]), std::abs(v[1])});
  if (grid <= 0) grid = default_grid(max_abs, pd);

  DecLowerReport out;
  const double norm = exp_sum_norm(freqs, pd, grid);
  out.ratio = norm / std::sqrt(static_cast<double>(freqs.size()));
  out.exact = is_even_integer(pd) && grid >= 4 * (max_abs + 1) * fold_count(pd);

  if (p > Rat(6)) {
    // dyadic snap of the reported dimension keeps the exponent arithmetic exact
    const std::int64_t den = 1LL << 40;
    const std::int64_t num = std::llround(level.spec.alpha() * static_cast<double>(den));
    if (num > 0 && num < den) {
      const Rat alpha_hat(num, den);
      const Rat expo = (Rat(1, 2) - Rat(3) / p - c_exponent(p, alpha_hat)) *
                       Rat(static_cast<long>(level.spec.level()));
      out.theoretical_cap =
          std::pow(static_cast<double>(level.spec.k()), expo.dbl());
    }
  }
  return out;
}

}  // namespace declab
