#include "declab/rational.hpp"

#include <cctype>
#include <ostream>

#include "declab/errors.hpp"

namespace declab {

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num);
  v_ /= mpq_class(den);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& text) {
  auto bad = [&] { throw ParseError("not a rational: \"" + text + "\""); };
  std::size_t pos = 0;
  auto read_int = [&](bool sign_ok) {
    std::size_t start = pos;
    if (sign_ok && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) bad();
    return text.substr(start, pos - start);
  };
  std::string num = read_int(true);
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str takes only '-'
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(false);
  }
  if (pos != text.size()) bad();
  return Rat(mpz_class(num), mpz_class(den));  // DomainError on zero denominator
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
  if (digits < 0) throw DomainError("decimal(): digits must be >= 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class t = ::abs(v_.get_num()) * scale;
  mpz_class d = v_.get_den();
  mpz_class q = t / d, r = t % d;
  if (2 * r >= d) ++q;  // half away from zero
  mpz_class ip = q / scale, fp = q % scale;
  std::string out;
  if (sgn() < 0 && q != 0) out += "-";
  out += ip.get_str();
  if (digits > 0) {
    std::string f = fp.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rat Rat::pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  if (inv && base.v_ == 0) throw DomainError("pow: negative exponent of zero");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  return inv ? Rat(d, n) : Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace declab
