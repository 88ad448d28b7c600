#pragma once

// Exact univariate polynomials over the rationals. Coefficients are GMP
// rationals, kept in canonical (reduced, positive denominator) form.

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammaext {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "123", "-7/9" into a canonical rational.
BigRational parse_rational(const std::string& text);

/// Dense polynomial, coefficient index = degree. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coefficients);
  RationalPoly(std::initializer_list<long> integer_coefficients);

  static RationalPoly constant(const BigRational& c);
  static RationalPoly monomial(const BigRational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;
  RationalPoly derivative() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const BigRational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const BigRational& c) { return a *= c; }
  friend RationalPoly operator*(const BigRational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator-(RationalPoly a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b);

  std::string to_string(const std::string& var = "w") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

enum class PolyOp { add, sub, mul };
RationalPoly poly_arith(const RationalPoly& a, const RationalPoly& b, PolyOp op);

/// p^n by binary exponentiation; p^0 = 1.
RationalPoly poly_pow(const RationalPoly& p, unsigned n);

/// Euclidean division: a = q b + r with deg r < deg b. b must be nonzero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

class NotAPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num / den, not normalized. Equality cross-multiplies.
class RationalFunction {
 public:
  RationalFunction(RationalPoly num, RationalPoly den);
  /* implicit */ RationalFunction(RationalPoly p);

  const RationalPoly& num() const noexcept { return num_; }
  const RationalPoly& den() const noexcept { return den_; }

  BigRational operator()(const BigRational& x) const;
  /// Exact quotient num/den; throws NotAPolynomial if den does not divide num.
  RationalPoly as_polynomial() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  RationalPoly num_;
  RationalPoly den_;
};

RationalFunction pow(const RationalFunction& f, unsigned n);

/// p(sub_num / sub_den) with denominator sub_den^deg(p).
RationalFunction substitute_rational(const RationalPoly& p, const RationalPoly& sub_num,
                                     const RationalPoly& sub_den);

class EndpointRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p, p', then negated remainders, each scaled by a positive constant.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);
int sign_variations(const std::vector<RationalPoly>& sequence, const BigRational& x);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws EndpointRoot if p vanishes at lo or hi.
int sturm_roots_in_interval(const RationalPoly& p, const BigRational& lo, const BigRational& hi);

enum class Sign { positive, negative };

/// True iff p has no root in (lo, hi) and has the expected sign at lo, hi
/// and the midpoint.
bool verify_sign_on_interval(const RationalPoly& p, const BigRational& lo, const BigRational& hi,
                             Sign expected);

}  // namespace gammaext
