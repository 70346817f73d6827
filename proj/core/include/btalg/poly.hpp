#ifndef BTALG_POLY_HPP
#define BTALG_POLY_HPP

#include <utility>
#include <vector>

#include "btalg/scalars.hpp"

namespace btalg {

// Dense univariate polynomial over the Gaussian rationals.
// coeffs[i] is the coefficient of X^i; no trailing zeros are stored, the
// zero polynomial is the empty sequence and reports degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;  // stands for "-infinity"

  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(gr_one()); }
  static Poly constant(const GaussianRational& c);
  // X^k, k >= 0
  static Poly x_power(int k);
  static Poly x() { return x_power(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  // Coefficient of X^i; zero beyond the degree.
  const GaussianRational& coeff(int i) const;
  const GaussianRational& lead() const;
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

  GaussianRational eval(const GaussianRational& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& c, const Poly& a);

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

// a = b*quotient + remainder with deg(remainder) < deg(b).
// Throws DivisionByZeroPoly when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Exact division; throws Inconsistent when b does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);

// Monic scalar multiple of p (p != 0).
Poly poly_monic(const Poly& p);

// Monic gcd; throws BothZero when a = b = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// gcd is a nonzero constant; both-zero yields false.
bool poly_coprime(const Poly& a, const Poly& b);

// gamma with m | gamma*a - 1 and deg(gamma) < deg(m).
// Throws NotCoprime when gcd(a, m) is nonconstant.
Poly poly_mod_inverse(const Poly& a, const Poly& m);

std::string poly_to_string(const Poly& p);

}  // namespace btalg

#endif  // BTALG_POLY_HPP
