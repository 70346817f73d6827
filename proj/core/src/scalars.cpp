#include "btalg/scalars.hpp"

#include <sstream>

namespace btalg {

GaussianRational GaussianRational::inverse() const {
  Rational norm = re * re + im * im;
  if (norm == 0) throw InvalidParameters("division by zero Gaussian rational");
  return {re / norm, -im / norm};
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw MalformedInput("empty rational");
  auto slash = text.find('/');
  try {
    using Int = boost::multiprecision::mpz_int;
    if (slash == std::string::npos) {
      Int num(text);
      return Rational(num);
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw MalformedInput("bad rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << '/' << denominator(r);
  }
  return os.str();
}

}  // namespace btalg
