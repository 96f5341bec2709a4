#include "roofs/error.hpp"
#include "roofs/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace roofs {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::Domain, "integer " + z.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(z);
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::IncompatibleRing: return "incompatible-ring";
    case ErrorKind::InvalidRoof: return "invalid-roof";
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::DegenerateBasis: return "degenerate-basis";
    case ErrorKind::UnexpectedRank: return "unexpected-rank";
    case ErrorKind::IntegralityViolation: return "integrality-violation";
    case ErrorKind::DegenerateLattice: return "degenerate-lattice";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::UnsupportedBundle: return "unsupported-bundle";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

}  // namespace roofs
