#include "relweyl/rational.hpp"

#include <limits>
#include <stdexcept>

namespace relweyl {

namespace mp = boost::multiprecision;

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer: " + std::string(text));
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("bad integer: " + std::string(text));
    }
  }
  Integer v(std::string(text.substr(i)));
  return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational::Rational(long long value) : value_(value) {}

Rational::Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // The backend rejects negative denominators; move the sign to the numerator.
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), Integer(1));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer Rational::numerator() const { return mp::numerator(value_); }
Integer Rational::denominator() const { return mp::denominator(value_); }
bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
int Rational::sign() const { return value_.sign(); }

long long Rational::to_int() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  Integer n = numerator();
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("integer out of range: " + str());
  }
  return n.convert_to<long long>();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

RationalVector RationalVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.push_back(Rational::parse(text.substr(i, j - i)));
    i = j;
  }
  return RationalVector(std::move(out));
}

bool RationalVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c.sign() != 0) return false;
  }
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

RationalVector RationalVector::operator-() const {
  RationalVector out(*this);
  for (auto& x : out.coords_) x = -x;
  return out;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

std::string RationalVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ' ';
    out += coords_[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << "(" << v.str() << ")"; }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational pairing(const RationalVector& x, const RationalVector& beta) {
  Rational bb = dot(beta, beta);
  if (bb.sign() == 0) throw std::domain_error("pairing against zero vector");
  return Rational(2) * dot(x, beta) / bb;
}

}  // namespace relweyl
