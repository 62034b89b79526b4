#include "hypertutte/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hypertutte/errors.hpp"

namespace hypertutte {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace

Polynomial::Polynomial(std::int64_t constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Polynomial Polynomial::monomial(std::int64_t coefficient, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  Polynomial p;
  if (coefficient != 0) p.terms_[{i, j}] = coefficient;
  return p;
}

std::int64_t Polynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree_x() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int Polynomial::degree_y() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void Polynomial::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, checked_mul(ca, cb));
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [e, c] : a.terms_) out.terms_[e] = checked_neg(c);
  return out;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::int64_t Polynomial::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = c;
    for (int k = 0; k < e.first; ++k) t = checked_mul(t, x);
    for (int k = 0; k < e.second; ++k) t = checked_mul(t, y);
    total = checked_add(total, t);
  }
  return total;
}

Polynomial Polynomial::substitute(const Polynomial& sx, const Polynomial& sy) const {
  std::vector<Polynomial> px{Polynomial(1)}, py{Polynomial(1)};
  for (int k = 1; k <= degree_x(); ++k) px.push_back(px.back() * sx);
  for (int k = 1; k <= degree_y(); ++k) py.push_back(py.back() * sy);
  Polynomial out;
  for (const auto& [e, c] : terms_) out += Polynomial(c) * px[e.first] * py[e.second];
  return out;
}

Polynomial Polynomial::truncated(int imax, int jmax) const {
  Polynomial out;
  for (const auto& [e, c] : terms_)
    if (e.first <= imax && e.second <= jmax) out.terms_[e] = c;
  return out;
}

Polynomial Polynomial::truncated_product(const Polynomial& a, const Polynomial& b, int imax, int jmax) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    if (ea.first > imax || ea.second > jmax) continue;
    for (const auto& [eb, cb] : b.terms_) {
      const int i = ea.first + eb.first;
      const int j = ea.second + eb.second;
      if (i <= imax && j <= jmax) out.add_term({i, j}, checked_mul(ca, cb));
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (mag != 1 || (i == 0 && j == 0)) os << mag;
    if (i > 0) {
      os << 'x';
      if (i > 1) os << '^' << i;
    }
    if (j > 0) {
      os << 'y';
      if (j > 1) os << '^' << j;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

constexpr std::int64_t kMaxExponent = 1 << 20;

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
    }
    return out;
  }

 private:
  Polynomial term(int sign) {
    std::int64_t c = 1;
    bool have_coefficient = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coefficient = true;
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        take();
        skip();
      }
    }
    int i = 0, j = 0;
    bool have_variable = false;
    while (pos_ < text_.size() && (peek() == 'x' || peek() == 'y')) {
      const char v = take();
      int exponent = 1;
      skip();
      if (pos_ < text_.size() && peek() == '^') {
        take();
        skip();
        const std::int64_t e = number();
        if (e > kMaxExponent) fail("exponent too large");
        exponent = static_cast<int>(e);
      }
      int& target = v == 'x' ? i : j;
      if (target + exponent > kMaxExponent) fail("exponent too large");
      target += exponent;
      have_variable = true;
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        take();
        skip();
      }
    }
    if (!have_coefficient && !have_variable) fail("expected a term");
    return Polynomial::monomial(checked_mul(c, sign), i, j);
  }

  std::int64_t number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t n = 0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n);
    if (ec != std::errc()) fail("number out of range");
    return n;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

PolynomialFraction substitute_fraction(const Polynomial& p, const Polynomial& nx, const Polynomial& dx,
                                       const Polynomial& ny, const Polynomial& dy) {
  const int dX = p.degree_x();
  const int dY = p.degree_y();
  PolynomialFraction out;
  for (const auto& [e, c] : p.terms())
    out.numerator += Polynomial(c) * nx.pow(e.first) * dx.pow(dX - e.first) * ny.pow(e.second) * dy.pow(dY - e.second);
  out.denominator = dx.pow(dX) * dy.pow(dY);
  return out;
}

CoefficientTable::CoefficientTable(int imax, int jmax) : imax_(imax), jmax_(jmax) {
  if (imax < 0 || jmax < 0) throw std::invalid_argument("negative table bound");
  entries_.assign(static_cast<std::size_t>(imax + 1) * (jmax + 1), 0);
}

CoefficientTable CoefficientTable::from_polynomial(const Polynomial& p, int imax, int jmax) {
  CoefficientTable t(imax, jmax);
  for (const auto& [e, c] : p.terms())
    if (e.first <= imax && e.second <= jmax) t.at(e.first, e.second) = c;
  return t;
}

std::size_t CoefficientTable::index(int i, int j) const {
  if (i < 0 || i > imax_ || j < 0 || j > jmax_) throw std::out_of_range("table index");
  return static_cast<std::size_t>(i) * (jmax_ + 1) + j;
}

std::string CoefficientTable::to_tsv() const {
  std::ostringstream os;
  os << "i\\j";
  for (int j = 0; j <= jmax_; ++j) os << '\t' << j;
  os << '\n';
  for (int i = 0; i <= imax_; ++i) {
    os << i;
    for (int j = 0; j <= jmax_; ++j) os << '\t' << at(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace hypertutte
