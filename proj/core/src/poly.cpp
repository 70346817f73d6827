#include "btalg/poly.hpp"

#include <sstream>

#include "btalg/errors.hpp"

namespace btalg {

namespace {
const GaussianRational kZero = gr_zero();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const GaussianRational& c) {
  if (c.is_zero()) return Poly();
  return Poly({c});
}

Poly Poly::x_power(int k) {
  std::vector<GaussianRational> c(k + 1, gr_zero());
  c[k] = gr_one();
  return Poly(std::move(c));
}

const GaussianRational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const GaussianRational& Poly::lead() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc = gr_zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<GaussianRational> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), gr_zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), gr_zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, gr_zero());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const GaussianRational& c, const Poly& a) {
  std::vector<GaussianRational> out(a.coeffs_.size());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = c * a.coeffs_[i];
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  std::vector<GaussianRational> rem(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly::zero(), a};
  std::vector<GaussianRational> quo(da - db + 1, gr_zero());
  GaussianRational lead_inv = b.lead().inverse();
  for (int i = da; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    GaussianRational f = rem[i] * lead_inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw Inconsistent("inexact polynomial division");
  return q;
}

bool poly_divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return poly_divmod(a, b).second.is_zero();
}

Poly poly_monic(const Poly& p) {
  if (p.is_zero()) throw DivisionByZeroPoly("monic of zero polynomial");
  return p.lead().inverse() * p;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero();
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = poly_divmod(r0, r1).second;
    r0 = r1;
    r1 = r2;
  }
  return poly_monic(r0);
}

bool poly_coprime(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return false;
  return poly_gcd(a, b).degree() == 0;
}

Poly poly_mod_inverse(const Poly& a, const Poly& m) {
  if (m.degree() < 1) throw InvalidParameters("modulus must have degree >= 1");
  // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
  Poly r0 = poly_divmod(a, m).second, r1 = m;
  Poly s0 = Poly::one(), s1 = Poly::zero();
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw NotCoprime("argument shares a factor with the modulus");
  Poly gamma = r0.lead().inverse() * s0;
  return poly_divmod(gamma, m).second;
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const GaussianRational& c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rational_to_string(c.re);
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << rational_to_string(c.im) << "i";
    os << ")";
    if (i == 1) os << "*X";
    if (i > 1) os << "*X^" << i;
  }
  return os.str();
}

}  // namespace btalg
