#include "gammaext/exact_poly.hpp"

#include <algorithm>
#include <sstream>

#include "gammaext/errors.hpp"

namespace gammaext {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw DomainError("not a rational literal: " + text);
  r.canonicalize();
  return r;
}

RationalPoly::RationalPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> integer_coefficients) {
  coeffs_.reserve(integer_coefficients.size());
  for (long c : integer_coefficients) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const BigRational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const BigRational& c, std::size_t degree) {
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigRational RationalPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

const BigRational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational RationalPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) { return *this = *this * o; }

RationalPoly& RationalPoly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  BigRational product;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      product = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += product;
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator-(RationalPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

std::string RationalPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const BigRational mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (mag != 1 ? " " : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

RationalPoly poly_arith(const RationalPoly& a, const RationalPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw DomainError("poly_arith: unknown operation");
}

RationalPoly poly_pow(const RationalPoly& p, unsigned n) {
  RationalPoly result{1};
  RationalPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<BigRational> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigRational> quot(rem.size() - db);
  const BigRational& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRational factor = rem[k + db] / lead;
    quot[k] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * b.coefficients()[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
}

RationalFunction::RationalFunction(RationalPoly p) : num_(std::move(p)), den_{1} {}

BigRational RationalFunction::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (sgn(d) == 0) throw DomainError("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalPoly RationalFunction::as_polynomial() const {
  auto [q, r] = divmod(num_, den_);
  if (!r.is_zero()) throw NotAPolynomial("denominator does not divide numerator");
  return q;
}

namespace {

// a/b + c/d, reusing the larger denominator when one divides the other.
RationalFunction combine(const RationalFunction& f, const RationalFunction& g, bool subtract) {
  auto add = [subtract](const RationalPoly& x, const RationalPoly& y) {
    return subtract ? x - y : x + y;
  };
  if (f.den() == g.den()) return {add(f.num(), g.num()), f.den()};
  if (f.den().degree() >= g.den().degree()) {
    auto [k, r] = divmod(f.den(), g.den());
    if (r.is_zero()) return {add(f.num(), g.num() * k), f.den()};
  } else {
    auto [k, r] = divmod(g.den(), f.den());
    if (r.is_zero()) return {add(f.num() * k, g.num()), g.den()};
  }
  return {add(f.num() * g.den(), g.num() * f.den()), f.den() * g.den()};
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return combine(a, b, false);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return combine(a, b, true);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}
bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction pow(const RationalFunction& f, unsigned n) {
  return {poly_pow(f.num(), n), poly_pow(f.den(), n)};
}

RationalFunction substitute_rational(const RationalPoly& p, const RationalPoly& sub_num,
                                     const RationalPoly& sub_den) {
  if (sub_den.is_zero()) throw DomainError("substitute_rational: zero denominator");
  if (p.is_zero()) return RationalPoly{};
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<RationalPoly> den_powers{RationalPoly{1}};
  for (std::size_t k = 1; k <= n; ++k) den_powers.push_back(den_powers.back() * sub_den);
  // Horner in the ring: sum_k c_k N^k D^(n-k)
  RationalPoly acc = RationalPoly::constant(p.leading());
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * sub_num + den_powers[n - k] * p.coefficients()[k];
  }
  return {std::move(acc), std::move(den_powers[n])};
}

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  auto normalized = [](RationalPoly q) {
    if (!q.is_zero()) q *= BigRational(1) / abs(q.leading());
    return q;
  };
  std::vector<RationalPoly> seq{normalized(p)};
  RationalPoly next = normalized(p.derivative());
  while (!next.is_zero()) {
    seq.push_back(next);
    next = normalized(-divmod(seq[seq.size() - 2], seq.back()).second);
  }
  return seq;
}

int sign_variations(const std::vector<RationalPoly>& sequence, const BigRational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : sequence) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_roots_in_interval(const RationalPoly& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) throw DomainError("sturm_roots_in_interval: zero polynomial");
  if (!(lo < hi)) throw DomainError("sturm_roots_in_interval: need lo < hi");
  if (sgn(p(lo)) == 0 || sgn(p(hi)) == 0) {
    throw EndpointRoot("polynomial vanishes at an interval end point");
  }
  const auto seq = sturm_sequence(p);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

bool verify_sign_on_interval(const RationalPoly& p, const BigRational& lo, const BigRational& hi,
                             Sign expected) {
  const int roots = sturm_roots_in_interval(p, lo, hi);
  const int want = expected == Sign::positive ? 1 : -1;
  const BigRational mid = (lo + hi) / 2;
  return roots == 0 && sgn(p(lo)) == want && sgn(p(hi)) == want && sgn(p(mid)) == want;
}

}  // namespace gammaext
