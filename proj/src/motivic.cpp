#include "roofs/motivic.hpp"

#include "roofs/error.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace roofs::motivic {

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::Lef: return "L";
    case Symbol::Y: return "Y";
    case Symbol::Yt: return "Yt";
    case Symbol::B: return "B";
    case Symbol::Bt: return "Bt";
    case Symbol::M: return "M";
  }
  return "?";
}

MotivicPoly::MotivicPoly(const Integer& constant) { add_term(Exponents{}, constant); }

MotivicPoly MotivicPoly::symbol(Symbol s) {
  Exponents e{};
  e[static_cast<std::size_t>(s)] = 1;
  return monomial(e, 1);
}

MotivicPoly MotivicPoly::monomial(const Exponents& e, const Integer& c) {
  for (int x : e)
    if (x < 0) throw Error(ErrorKind::Domain, "negative exponent in motivic monomial");
  MotivicPoly p;
  p.add_term(e, c);
  return p;
}

void MotivicPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer MotivicPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int MotivicPoly::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(s)]);
  return d;
}

MotivicPoly MotivicPoly::operator-() const {
  MotivicPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MotivicPoly& MotivicPoly::operator+=(const MotivicPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MotivicPoly& MotivicPoly::operator-=(const MotivicPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MotivicPoly& MotivicPoly::operator*=(const MotivicPoly& o) {
  MotivicPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < symbol_count; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

MotivicPoly MotivicPoly::substitute(Symbol s, const MotivicPoly& value) const {
  const auto idx = static_cast<std::size_t>(s);
  std::vector<MotivicPoly> powers{MotivicPoly(1)};
  MotivicPoly out;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[idx]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx] = 0;
    out += monomial(rest, c) * powers[static_cast<std::size_t>(e[idx])];
  }
  return out;
}

std::string MotivicPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first)) return total(a.first) > total(b.first);
    return a.first > b.first;
  });
  std::string s;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < symbol_count; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += symbol_name(static_cast<Symbol>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Integer mag = c < 0 ? Integer(-c) : c;
    std::string term;
    if (mono.empty()) term = roofs::to_string(mag);
    else if (mag == 1) term = mono;
    else term = roofs::to_string(mag) + "*" + mono;
    if (s.empty()) s = c < 0 ? "-" + term : term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  return s;
}

MotivicPoly power(const MotivicPoly& p, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::Domain, "negative power of a motivic class");
  MotivicPoly out(1);
  for (int i = 0; i < exponent; ++i) out *= p;
  return out;
}

MotivicPoly proj_class(int k) {
  if (k < 0) throw Error(ErrorKind::Domain, "projective space of negative dimension");
  MotivicPoly out;
  const auto lef = MotivicPoly::symbol(Symbol::Lef);
  MotivicPoly term(1);
  for (int i = 0; i <= k; ++i) {
    out += term;
    term *= lef;
  }
  return out;
}

namespace {

MotivicPoly fibration(int r, Symbol y, Symbol b) {
  if (r < 2) throw Error(ErrorKind::InvalidRank, "fibration class needs rank >= 2, got " + std::to_string(r));
  const auto Y = MotivicPoly::symbol(y);
  const auto B = MotivicPoly::symbol(b);
  return proj_class(r - 1) * Y + proj_class(r - 2) * (B - Y);
}

}  // namespace

MotivicPoly fibration_class(int r) { return fibration(r, Symbol::Y, Symbol::B); }
MotivicPoly tilde_fibration_class(int r) { return fibration(r, Symbol::Yt, Symbol::Bt); }

MotivicPoly l_equivalence_residual(int r) { return fibration_class(r) - tilde_fibration_class(r); }

MotivicPoly expected_residual(int r) {
  if (r < 2) throw Error(ErrorKind::InvalidRank, "residual needs rank >= 2, got " + std::to_string(r));
  const auto lef = MotivicPoly::symbol(Symbol::Lef);
  return (MotivicPoly::symbol(Symbol::Y) - MotivicPoly::symbol(Symbol::Yt)) * power(lef, r - 1) +
         proj_class(r - 2) * (MotivicPoly::symbol(Symbol::B) - MotivicPoly::symbol(Symbol::Bt));
}

}  // namespace roofs::motivic
