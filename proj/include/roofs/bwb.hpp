#pragma once

#include "roofs/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace roofs::bwb {

enum class Family { B, D };

struct RootSystem {
  Family family;
  int rank;

  RootSystem(Family f, int m);
  // Positive roots as coefficient vectors in the epsilon basis.
  std::vector<std::vector<int>> positive_roots() const;
  std::string name() const;  // "B3", "D4"
};

// Orthogonal group acting on Q_n: B_m for n = 2m - 1, D_m for n = 2m - 2.
RootSystem quadric_group(int n);

// Epsilon coordinates, all integral or all half-integral.
using Weight = std::vector<Rational>;

bool is_uniform(const Weight& w);
std::string to_string(const Weight& w);

Weight rho(const RootSystem& rs);

struct Conjugate {
  Weight weight;  // dominant regular
  int length = 0;
};

// Input is lambda + rho. Empty when the weight lies on a wall.
std::optional<Conjugate> dominant_conjugate(const RootSystem& rs, const Weight& w);

bool is_dominant(const RootSystem& rs, const Weight& w);
Integer weyl_dimension(const RootSystem& rs, const Weight& dominant);

// Dual highest weight for the group itself (-w0).
Weight dual_weight(const RootSystem& rs, const Weight& w);

// degree -> dimension, zero entries omitted.
class CohomologyTable {
 public:
  CohomologyTable() = default;
  explicit CohomologyTable(std::map<int, Integer> entries);

  const std::map<int, Integer>& entries() const noexcept { return entries_; }
  Integer h(int k) const;
  void add(int k, const Integer& d);
  bool is_acyclic() const { return entries_.empty(); }
  std::size_t nonzero() const { return entries_.size(); }
  bool operator==(const CohomologyTable&) const = default;
  std::string to_string() const;  // "{0: 41}", "{}"

 private:
  std::map<int, Integer> entries_;
};

Integer euler_characteristic(const CohomologyTable& t);
CohomologyTable operator+(const CohomologyTable& a, const CohomologyTable& b);

// Bott: empty table on a wall, else one entry at the length with the Weyl dimension.
CohomologyTable bott(const RootSystem& rs, const Weight& lambda);

// Irreducible summands (highest weights) of a named homogeneous bundle on Q_n
// twisted by O(t): O, S, Sdual, Sym2S, Sym2Sdual, Wedge2S, Wedge2Sdual.
std::vector<Weight> bundle_weights(int n, const std::string& descriptor, const Integer& t);
bool is_irreducible_descriptor(const std::string& descriptor);
const std::vector<std::string>& irreducible_descriptors();

// Rank of the bundle from the Levi factor's Weyl dimension.
Integer fiber_rank(int n, const std::string& descriptor);

CohomologyTable bundle_cohomology(int n, const std::string& descriptor, const Integer& t);

// ---------------------------------------------------------------------------
// Long exact sequences

struct Underdetermined {
  std::string reason;
};

// 0 -> sub -> mid -> quot -> 0 on a variety of dimension `dim`.
struct SequenceSpec {
  std::string label;
  int dim = 0;
  std::optional<CohomologyTable> sub, mid, quot;
  int target = 2;  // 0 sub, 1 mid, 2 quot
};

using LesResult = std::variant<CohomologyTable, Underdetermined>;

// Certifies only what exactness forces; inconsistent data raises an inconsistency error.
LesResult les_solve(const SequenceSpec& seq);

// ---------------------------------------------------------------------------
// Scripted pipelines on Q5

struct PipelineStep {
  std::string name;
  std::string description;
  CohomologyTable table;
};

struct PipelineRun {
  std::string name;
  std::vector<PipelineStep> steps;
  std::vector<SequenceSpec> sequences;  // every sequence solved along the way
  std::optional<CohomologyTable> result;
  std::optional<std::string> underdetermined;
};

// Cohomology of G(t), G^v(t), C(t), I_Y(t) on Q5 through the defining sequences.
bool is_pipeline_descriptor(const std::string& descriptor);
PipelineRun pipeline_cohomology(const std::string& descriptor, const Integer& t);

// Vanishing cases: 1 -> G^v(1), 2 -> G (x) G~(-3), 3 -> C^v (x) C(-2).
PipelineRun lemma_vanishings(int which);
// h^0 of I_Y(2) via the Koszul resolution.
PipelineRun ideal_sections();

// Every sequence the shipped pipelines solve, for consistency checks.
std::vector<SequenceSpec> shipped_sequences();

}  // namespace roofs::bwb
