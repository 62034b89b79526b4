#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypertutte {

// Integer polynomial in x and y. Arithmetic is exact on 64-bit coefficients;
// any overflow throws OverflowError. Zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x-exponent, y-exponent)
  using Terms = std::map<Exponents, std::int64_t>;

  Polynomial() = default;
  Polynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  static Polynomial monomial(std::int64_t coefficient, int i, int j);
  static Polynomial x() { return monomial(1, 1, 0); }
  static Polynomial y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int n) const;
  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;
  // p(sx, sy)
  Polynomial substitute(const Polynomial& sx, const Polynomial& sy) const;
  // Terms with x-exponent <= imax and y-exponent <= jmax.
  Polynomial truncated(int imax, int jmax) const;
  // Product truncated to the same box; exact inside it.
  static Polynomial truncated_product(const Polynomial& a, const Polynomial& b, int imax, int jmax);

  // Lexicographic: x-exponent descending, then y-exponent descending.
  // Example: "x^4 + 4x^3y - x^3 + y^2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, std::int64_t c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Inverse of to_string(); also accepts '*', spaces and reordered terms.
// Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

// p(nx/dx, ny/dy) as numerator / denominator with
// denominator = dx^deg_x(p) * dy^deg_y(p).
struct PolynomialFraction {
  Polynomial numerator;
  Polynomial denominator;
};
PolynomialFraction substitute_fraction(const Polynomial& p, const Polynomial& nx, const Polynomial& dx,
                                       const Polynomial& ny, const Polynomial& dy);

// Coefficients (i, j) for 0 <= i <= imax, 0 <= j <= jmax.
class CoefficientTable {
 public:
  CoefficientTable(int imax, int jmax);
  static CoefficientTable from_polynomial(const Polynomial& p, int imax, int jmax);

  int imax() const { return imax_; }
  int jmax() const { return jmax_; }
  std::int64_t at(int i, int j) const { return entries_[index(i, j)]; }
  std::int64_t& at(int i, int j) { return entries_[index(i, j)]; }

  // Header row "i\j 0 1 ...", then one row per i; tab separated.
  std::string to_tsv() const;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  std::size_t index(int i, int j) const;
  int imax_;
  int jmax_;
  std::vector<std::int64_t> entries_;
};

}  // namespace hypertutte
