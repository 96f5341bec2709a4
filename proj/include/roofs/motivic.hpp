#pragma once

#include "roofs/numeric.hpp"

#include <array>
#include <map>
#include <string>

namespace roofs::motivic {

// Lefschetz class and the variety symbols [Y], [Y~], [B], [B~], [M].
enum class Symbol { Lef = 0, Y, Yt, B, Bt, M };
inline constexpr std::size_t symbol_count = 6;

const char* symbol_name(Symbol s);

using Exponents = std::array<int, symbol_count>;

// Integer polynomial in the symbols, kept expanded with zero terms dropped.
class MotivicPoly {
 public:
  MotivicPoly() = default;
  MotivicPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  static MotivicPoly symbol(Symbol s);
  static MotivicPoly monomial(const Exponents& e, const Integer& c);

  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& e) const;
  int degree_in(Symbol s) const;

  MotivicPoly operator-() const;
  MotivicPoly& operator+=(const MotivicPoly& o);
  MotivicPoly& operator-=(const MotivicPoly& o);
  MotivicPoly& operator*=(const MotivicPoly& o);
  friend MotivicPoly operator+(MotivicPoly a, const MotivicPoly& b) { return a += b; }
  friend MotivicPoly operator-(MotivicPoly a, const MotivicPoly& b) { return a -= b; }
  friend MotivicPoly operator*(MotivicPoly a, const MotivicPoly& b) { return a *= b; }
  bool operator==(const MotivicPoly& o) const { return terms_ == o.terms_; }

  // Replaces every occurrence of `s` by `value`.
  MotivicPoly substitute(Symbol s, const MotivicPoly& value) const;

  // Highest total degree first, "L^2*Y - L^2*Yt + B - Bt".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

MotivicPoly power(const MotivicPoly& p, int exponent);

// [P^k] = 1 + L + ... + L^k
MotivicPoly proj_class(int k);

// [M] = [P^(r-1)][Y] + [P^(r-2)]([B] - [Y])
MotivicPoly fibration_class(int r);
// The same description from the other side, with Y~ and B~.
MotivicPoly tilde_fibration_class(int r);

// fibration_class(r) - tilde_fibration_class(r)
MotivicPoly l_equivalence_residual(int r);
// ([Y] - [Y~]) L^(r-1) + [P^(r-2)] ([B] - [B~])
MotivicPoly expected_residual(int r);

}  // namespace roofs::motivic
