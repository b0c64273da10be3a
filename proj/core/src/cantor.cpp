#include "declab/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "declab/errors.hpp"

namespace declab {

namespace {

constexpr std::int64_t kDyadicDen = 1 << 24;

std::int64_t checked_pow(std::int64_t base, int exp, const char* what) {
  std::int64_t out = 1;
  for (int j = 0; j < exp; ++j) {
    if (out > std::numeric_limits<std::int64_t>::max() / base)
      throw SizeLimit(std::string(what) + " overflows");
    out *= base;
  }
  return out;
}

}  // namespace

CantorSpec::CantorSpec(std::int64_t base, std::vector<std::int64_t> alphabet, int level)
    : base_(base), alphabet_(std::move(alphabet)), level_(level) {
  if (base_ < 2) throw DomainError("base must be >= 2");
  if (level_ < 0) throw DomainError("level must be >= 0");
  if (alphabet_.size() < 2) throw DomainError("alphabet needs at least 2 digits");
  if (alphabet_.size() > static_cast<std::size_t>(base_))
    throw DomainError("alphabet larger than base");
  for (std::size_t j = 0; j < alphabet_.size(); ++j) {
    if (alphabet_[j] < 0 || alphabet_[j] >= base_)
      throw DomainError("digit out of range [0, base-1]");
    if (j > 0 && alphabet_[j] <= alphabet_[j - 1])
      throw DomainError("alphabet must be strictly increasing");
  }
}

double CantorSpec::alpha() const {
  return std::log(static_cast<double>(k())) / std::log(static_cast<double>(base_));
}

bool CantorSpec::is_arithmetic_progression() const {
  if (alphabet_.size() == 2) return true;
  const std::int64_t d = alphabet_[1] - alphabet_[0];
  for (std::size_t j = 2; j < alphabet_.size(); ++j)
    if (alphabet_[j] - alphabet_[j - 1] != d) return false;
  return true;
}

CantorLevel build_cantor(const CantorSpec& spec, const Limits& limits) {
  const std::int64_t scale = checked_pow(spec.base(), spec.level(), "scale");
  std::int64_t card = 1;
  for (int j = 0; j < spec.level(); ++j) {
    if (card > limits.points / spec.k())
      throw SizeLimit("level set larger than the point cap");
    card *= spec.k();
  }
  std::vector<std::int64_t> pts;
  pts.reserve(static_cast<std::size_t>(card));
  pts.push_back(0);
  std::int64_t weight = 1;
  for (int j = 0; j < spec.level(); ++j) {
    std::vector<std::int64_t> next;
    next.reserve(pts.size() * spec.alphabet().size());
    for (std::int64_t digit : spec.alphabet())
      for (std::int64_t x : pts) next.push_back(x + digit * weight);
    pts = std::move(next);
    weight *= spec.base();
  }
  std::sort(pts.begin(), pts.end());
  return CantorLevel{spec, std::move(pts), scale};
}

std::vector<Vec2> parabola_lift(const CantorLevel& level) {
  std::vector<Vec2> out;
  out.reserve(level.points.size());
  for (std::int64_t x : level.points) {
    if (x > 3037000499LL) throw SizeLimit("x^2 overflows");
    out.push_back(Vec2{x, x * x});
  }
  return out;
}

RegularityReport check_ad_regular(const CantorLevel& level) {
  const auto& pts = level.points;
  const long double alpha =
      logl(static_cast<long double>(level.spec.k())) /
      logl(static_cast<long double>(level.spec.base()));
  long double up_max = 1.0L, lo_max = 1.0L;
  WindowWitness up{pts.front(), 2, 1, 1.0}, lo{pts.front(), 2, 1, 1.0};
  for (int s = 1; (1LL << s) <= 4 * level.scale; ++s) {
    const std::int64_t w = 1LL << s;
    const long double walpha = exp2l(alpha * s);
    for (std::int64_t c : pts) {
      const auto first = std::lower_bound(pts.begin(), pts.end(), c - w / 2);
      const auto last = std::upper_bound(pts.begin(), pts.end(), c + w / 2 - 1);
      const std::int64_t count = last - first;
      const long double up_req = count / walpha;
      const long double lo_req = walpha / count;
      if (up_req > up_max) {
        up_max = up_req;
        up = WindowWitness{c, w, count, static_cast<double>(up_req)};
      }
      if (lo_req > lo_max) {
        lo_max = lo_req;
        lo = WindowWitness{c, w, count, static_cast<double>(lo_req)};
      }
    }
  }
  const long double needed = std::max(up_max, lo_max);
  const std::int64_t num = static_cast<std::int64_t>(ceill(needed * kDyadicDen));
  return RegularityReport{Rat(num, kDyadicDen), up, lo};
}

namespace {

std::int64_t add_coord(std::int64_t a, std::int64_t b) { return a + b; }
Vec2 add_coord(Vec2 a, Vec2 b) { return Vec2{a[0] + b[0], a[1] + b[1]}; }

void check_span(const std::vector<std::int64_t>& pts, long q) {
  for (std::int64_t x : pts)
    if (std::abs(x) > std::numeric_limits<std::int64_t>::max() / (q + 1))
      throw SizeLimit("coordinate too large for the fold");
}
void check_span(const std::vector<Vec2>& pts, long q) {
  for (const Vec2& v : pts)
    for (std::int64_t x : v)
      if (std::abs(x) > std::numeric_limits<std::int64_t>::max() / (q + 1))
        throw SizeLimit("coordinate too large for the fold");
}

// Tuples (x_1..x_q, y_1..y_q) whose y's permute the x's: with m_v the
// multiplicity generating function, the count is (q!)^2 [z^q] f(z)^n for
// f(z) = sum_{j<=q} z^j / (j!)^2 over n distinct points.
mpz_class diagonal_count(std::size_t npoints, long q) {
  std::vector<Rat> f(static_cast<std::size_t>(q) + 1, Rat(0));
  mpz_class fac = 1;
  for (long j = 0; j <= q; ++j) {
    if (j > 0) fac *= j;
    f[static_cast<std::size_t>(j)] = Rat(mpz_class(1), fac * fac);
  }
  const auto mul = [q](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(static_cast<std::size_t>(q) + 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == Rat(0)) continue;
      for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
        out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
  };
  std::vector<Rat> acc(static_cast<std::size_t>(q) + 1, Rat(0));
  acc[0] = Rat(1);
  std::vector<Rat> pw = f;
  std::size_t e = npoints;
  while (e > 0) {
    if (e & 1) acc = mul(acc, pw);
    e >>= 1;
    if (e > 0) pw = mul(pw, pw);
  }
  mpz_class qfac = 1;
  for (long j = 2; j <= q; ++j) qfac *= j;
  const Rat d = acc[static_cast<std::size_t>(q)] * Rat(mpz_class(qfac * qfac));
  if (!d.is_integer()) throw InvariantViolation("diagonal count is not an integer");
  return d.num();
}

template <class Key>
EnergyReport energy_impl(const std::vector<Key>& points, long p, const Limits& limits) {
  if (p < 2 || p % 2 != 0) throw OddP("p must be even and >= 2");
  if (points.empty()) throw DomainError("empty point set");
  const long q = p / 2;
  check_span(points, q);
  {
    double est = 1;
    for (long j = 0; j < q; ++j) est *= static_cast<double>(points.size());
    if (est > static_cast<double>(limits.support))
      throw SizeLimit("|X|^{p/2} exceeds the convolution cap");
  }
  std::map<Key, unsigned long> rep;
  for (const Key& x : points) rep[x] += 1;
  for (long step = 2; step <= q; ++step) {
    std::map<Key, unsigned long> next;
    for (const auto& [key, cnt] : rep)
      for (const Key& x : points) next[add_coord(key, x)] += cnt;
    if (next.size() > static_cast<std::size_t>(limits.support))
      throw SizeLimit("convolution support exceeds the cap");
    rep = std::move(next);
  }
  mpz_class e = 0;
  for (const auto& [key, cnt] : rep) e += mpz_class(cnt) * mpz_class(cnt);
  EnergyReport out;
  out.p = p;
  out.energy = e;
  out.diagonal_lower = diagonal_count(points.size(), q);
  mpz_class npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(points.size()),
                static_cast<unsigned long>(p));
  out.support = static_cast<std::int64_t>(rep.size());
  out.cs_lower = Rat(npow, mpz_class(static_cast<unsigned long>(rep.size())));
  out.dp_lower = std::pow(e.get_d(), 1.0 / static_cast<double>(p)) /
                 std::sqrt(static_cast<double>(points.size()));
  return out;
}

template <class Key>
std::vector<Key> sumset_impl(const std::vector<Key>& points, int fold, const Limits& limits) {
  if (fold < 2) throw DomainError("fold must be >= 2");
  if (points.empty()) throw DomainError("empty point set");
  check_span(points, fold);
  std::set<Key> acc(points.begin(), points.end());
  for (int step = 2; step <= fold; ++step) {
    std::set<Key> next;
    for (const Key& a : acc)
      for (const Key& x : points) {
        next.insert(add_coord(a, x));
        if (next.size() > static_cast<std::size_t>(limits.points))
          throw SizeLimit("sumset exceeds the point cap");
      }
    acc = std::move(next);
  }
  return std::vector<Key>(acc.begin(), acc.end());
}

}  // namespace

EnergyReport energy(const std::vector<std::int64_t>& points, long p, const Limits& limits) {
  return energy_impl(points, p, limits);
}
EnergyReport energy(const std::vector<Vec2>& points, long p, const Limits& limits) {
  return energy_impl(points, p, limits);
}

std::vector<std::int64_t> sumset(const std::vector<std::int64_t>& points, int fold,
                                 const Limits& limits) {
  return sumset_impl(points, fold, limits);
}
std::vector<Vec2> sumset(const std::vector<Vec2>& points, int fold, const Limits& limits) {
  return sumset_impl(points, fold, limits);
}

DpLowerReport d_p_lower_from_energy(const CantorLevel& level, long p, const Limits& limits) {
  DpLowerReport out;
  out.dp_lower = energy(level.points, p, limits).dp_lower;
  if (!level.spec.is_arithmetic_progression() || level.spec.level() < 1) return out;
  const double k = static_cast<double>(level.spec.k());
  const double target = std::pow(k, 0.5 - 1.0 / static_cast<double>(p));
  for (int l = 1; l <= level.spec.level(); ++l) {
    const CantorLevel cl =
        build_cantor(CantorSpec(level.spec.base(), level.spec.alphabet(), l), limits);
    const double ratio = energy(cl.points, p, limits).dp_lower;
    const double fit = target / std::pow(ratio, 1.0 / static_cast<double>(l));
    if (!out.fit_min || fit < *out.fit_min) out.fit_min = fit;
    if (!out.fit_max || fit > *out.fit_max) out.fit_max = fit;
  }
  return out;
}

}  // namespace declab
