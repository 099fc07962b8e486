#include "simplefold/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace simplefold {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not an exact number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) bad(text);
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

std::string Rational::to_string() const { return value_.get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value_.get_num().get_si());
}

Rational Rational::denominator() const { return Rational(mpq_class(value_.get_den())); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Canonical form makes numerator/denominator a faithful key.
  const std::size_t n = mpz_get_si(value_.get_num_mpz_t());
  const std::size_t d = mpz_get_ui(value_.get_den_mpz_t());
  return n * 0x9E3779B97F4A7C15ull ^ (d + 0x7F4A7C15ull + (n << 6) + (n >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace simplefold
