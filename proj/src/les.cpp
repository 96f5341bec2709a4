#include "roofs/bwb.hpp"
#include "roofs/error.hpp"

#include <set>

namespace roofs::bwb {

namespace {

using Values = std::set<Integer>;

Values interval(const Integer& hi) {
  Values v;
  for (Integer x = 0; x <= hi; ++x) v.insert(x);
  return v;
}

std::string describe(const Values& v) {
  std::string s = "{";
  for (const auto& x : v) {
    if (s.size() > 1) s += ", ";
    s += roofs::to_string(x);
  }
  return s + "}";
}

}  // namespace

// The sequence H^0(sub) -> H^0(mid) -> H^0(quot) -> H^1(sub) -> ... is exact,
// so each dimension is the sum of the ranks of the maps entering and leaving it.
// Unknown dimensions impose nothing; known ones tie consecutive ranks together.
// Forward and backward reachability over the ranks gives every value an unknown
// position can take.
LesResult les_solve(const SequenceSpec& seq) {
  if (seq.dim < 0) throw Error(ErrorKind::Domain, "negative dimension in sequence " + seq.label);
  if (seq.target < 0 || seq.target > 2) throw Error(ErrorKind::Domain, "sequence target must be 0, 1 or 2");
  const std::optional<CohomologyTable>* terms[] = {&seq.sub, &seq.mid, &seq.quot};
  for (int t = 0; t < 3; ++t)
    if (*terms[t])
      for (const auto& [k, d] : (*terms[t])->entries())
        if (k < 0 || k > seq.dim)
          throw Error(ErrorKind::Inconsistency, seq.label + ": cohomology outside degrees 0.." + std::to_string(seq.dim));

  const int len = 3 * (seq.dim + 1);
  auto known = [&](int p) { return terms[p % 3]->has_value(); };
  auto dim_at = [&](int p) { return (*terms[p % 3])->h(p / 3); };

  // bound of the map leaving position p; nullopt when both ends are unknown
  std::vector<std::optional<Integer>> bound(static_cast<std::size_t>(len));
  for (int p = 0; p < len; ++p) {
    if (p == len - 1) {
      bound[static_cast<std::size_t>(p)] = Integer(0);
      continue;
    }
    std::optional<Integer> b;
    if (known(p)) b = dim_at(p);
    if (known(p + 1)) b = b ? std::min(*b, dim_at(p + 1)) : dim_at(p + 1);
    if (!b) return Underdetermined{seq.label + ": two adjacent unknown terms in degree " + std::to_string(p / 3)};
    bound[static_cast<std::size_t>(p)] = b;
  }

  // fwd[p + 1] = possible ranks of the map leaving p, given constraints at 0..p
  std::vector<Values> fwd(static_cast<std::size_t>(len + 1));
  fwd[0] = {Integer(0)};
  for (int p = 0; p < len; ++p) {
    const auto& prev = fwd[static_cast<std::size_t>(p)];
    const Integer& hi = *bound[static_cast<std::size_t>(p)];
    Values next;
    if (known(p)) {
      for (const auto& x : prev) {
        const Integer r = dim_at(p) - x;
        if (r >= 0 && r <= hi) next.insert(r);
      }
    } else if (!prev.empty()) {
      next = interval(hi);
    }
    fwd[static_cast<std::size_t>(p + 1)] = std::move(next);
  }
  // bwd[p + 1] likewise from constraints at p+1..len-1
  std::vector<Values> bwd(static_cast<std::size_t>(len + 1));
  bwd[static_cast<std::size_t>(len)] = {Integer(0)};
  for (int p = len - 1; p >= 0; --p) {
    const auto& after = bwd[static_cast<std::size_t>(p + 1)];
    const Integer hi = p == 0 ? Integer(0) : *bound[static_cast<std::size_t>(p - 1)];
    Values before;
    if (known(p)) {
      for (const auto& y : after) {
        const Integer r = dim_at(p) - y;
        if (r >= 0 && r <= hi) before.insert(r);
      }
    } else if (!after.empty()) {
      before = interval(hi);
    }
    bwd[static_cast<std::size_t>(p)] = std::move(before);
  }
  std::vector<Values> feasible(static_cast<std::size_t>(len + 1));
  for (std::size_t i = 0; i <= static_cast<std::size_t>(len); ++i)
    for (const auto& x : fwd[i])
      if (bwd[i].count(x)) feasible[i].insert(x);
  for (const auto& f : feasible)
    if (f.empty()) throw Error(ErrorKind::Inconsistency, seq.label + ": the given tables cannot sit in an exact sequence");

  if (*terms[seq.target]) return **terms[seq.target];

  CohomologyTable out;
  for (int k = 0; k <= seq.dim; ++k) {
    const int p = 3 * k + seq.target;
    Values v;
    for (const auto& x : feasible[static_cast<std::size_t>(p)])
      for (const auto& y : feasible[static_cast<std::size_t>(p + 1)]) v.insert(x + y);
    if (v.size() != 1)
      return Underdetermined{seq.label + ": H^" + std::to_string(k) + " is not forced, candidates " + describe(v)};
    out.add(k, *v.begin());
  }
  return out;
}

}  // namespace roofs::bwb
