#include "semifair/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace semifair {

namespace mp = boost::multiprecision;

std::string to_string(WeightSum v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt to_bigint(WeightSum v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt num, den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_digits(p) || !is_digits(q)) throw std::invalid_argument("bad rational: " + std::string(text));
    num = BigInt(std::string(p));
    den = BigInt(std::string(q));
    if (den == 0) throw std::invalid_argument("bad rational: " + std::string(text));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("bad rational: " + std::string(text));
    if ((!ip.empty() && !is_digits(ip)) || (!fp.empty() && !is_digits(fp)))
      throw std::invalid_argument("bad rational: " + std::string(text));
    num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!is_digits(s)) throw std::invalid_argument("bad rational: " + std::string(text));
    num = BigInt(std::string(s));
  }
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

Rational Rational::pow(unsigned long exponent) const {
  return Rational(mp::pow(num_, exponent), mp::pow(den_, exponent));
}

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  long bn = static_cast<long>(mp::msb(n));
  long bd = static_cast<long>(mp::msb(den_));
  long sn = bn > 62 ? bn - 62 : 0;
  long sd = bd > 62 ? bd - 62 : 0;
  double top = static_cast<double>(static_cast<std::uint64_t>(n >> sn));
  double bot = static_cast<double>(static_cast<std::uint64_t>(den_ >> sd));
  long e = sn - sd;
  double r;
  if (e > 10000)
    r = std::numeric_limits<double>::infinity();
  else if (e < -10000)
    r = 0.0;
  else
    r = top / bot * std::ldexp(1.0, static_cast<int>(e));
  return num_ < 0 ? -r : r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_decimal needs at least one digit");
  if (num_ == 0) return "0";
  if (num_ < 0) return "-" + Rational(-num_, den_).to_decimal(digits);

  // e such that the value lies in [10^(e-1), 10^e)
  long e;
  if (num_ >= den_) {
    e = static_cast<long>((num_ / den_).str().size());
  } else {
    e = 0;
    BigInt t = num_;
    while (t < den_) {
      t *= 10;
      --e;
    }
    ++e;
  }

  BigInt sn = num_, sd = den_;
  long shift = digits - e;
  if (shift >= 0)
    sn *= mp::pow(BigInt(10), static_cast<unsigned long>(shift));
  else
    sd *= mp::pow(BigInt(10), static_cast<unsigned long>(-shift));
  BigInt q = sn / sd;
  BigInt r = sn - q * sd;
  if (2 * r >= sd) ++q;
  std::string ds = q.str();
  if (static_cast<int>(ds.size()) > digits) {  // rounding carried into a new digit
    ds.pop_back();
    ++e;
  }

  auto strip = [](std::string s) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  if (e >= 1 && e <= 15) {
    if (e >= static_cast<long>(ds.size()))
      return ds + std::string(e - ds.size(), '0');
    return strip(ds.substr(0, e) + "." + ds.substr(e));
  }
  if (e <= 0 && e >= -3) {
    return strip("0." + std::string(-e, '0') + ds);
  }
  std::string mant = strip(ds.substr(0, 1) + "." + ds.substr(1));
  long ex = e - 1;
  return mant + "e" + (ex < 0 ? "-" : "+") + std::to_string(ex < 0 ? -ex : ex);
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace semifair
