#include "roofs/bwb.hpp"
#include "roofs/error.hpp"

#include <map>

namespace roofs::bwb {

namespace {

constexpr int kQ = 5;

std::string twist_name(const std::string& base, const Integer& t) {
  if (t == 0) return base;
  return base + "(" + roofs::to_string(t) + ")";
}

// Facts taken as input rather than derived. Only the Cayley bundle needs one.
std::optional<CohomologyTable> cited(const std::string& name) {
  if (name == "C(1)") return CohomologyTable{};
  return std::nullopt;
}

class Runner {
 public:
  explicit Runner(std::string name) { run_.name = std::move(name); }

  bool failed() const { return run_.underdetermined.has_value(); }

  const CohomologyTable* find(const std::string& name) const {
    auto it = env_.find(name);
    return it == env_.end() ? nullptr : &it->second;
  }

  void record(const std::string& name, const std::string& description, const CohomologyTable& t) {
    env_[name] = t;
    run_.steps.push_back({name, description, t});
  }

  void bott_step(const std::string& descriptor, const Integer& t, const std::string& name) {
    if (failed() || find(name)) return;
    record(name, "Bott on Q5", bundle_cohomology(kQ, descriptor, t));
  }

  void cite(const std::string& name) {
    if (failed() || find(name)) return;
    const auto t = cited(name);
    if (!t) throw Error(ErrorKind::Domain, "no cited data for " + name);
    record(name, "cited vanishing", *t);
  }

  void sum(const std::string& name, const std::vector<std::string>& parts) {
    if (failed() || find(name)) return;
    CohomologyTable t;
    std::string d;
    for (const auto& p : parts) {
      t = t + need(p);
      d += (d.empty() ? "" : " + ") + p;
    }
    record(name, "direct sum " + d, t);
  }

  void alias(const std::string& name, const std::string& source, const std::string& why) {
    if (failed() || find(name)) return;
    record(name, why + " = " + source, need(source));
  }

  // 0 -> sub -> mid -> quot -> 0; exactly one of the names is the unknown.
  void les(const std::string& sub, const std::string& mid, const std::string& quot, const std::string& unknown) {
    if (failed() || find(unknown)) return;
    SequenceSpec seq;
    seq.label = "0 -> " + sub + " -> " + mid + " -> " + quot + " -> 0";
    seq.dim = kQ;
    const std::string* names[] = {&sub, &mid, &quot};
    std::optional<CohomologyTable>* slots[] = {&seq.sub, &seq.mid, &seq.quot};
    for (int i = 0; i < 3; ++i) {
      if (*names[i] == unknown) {
        seq.target = i;
        continue;
      }
      *slots[i] = need(*names[i]);
    }
    const auto r = les_solve(seq);
    if (auto* u = std::get_if<Underdetermined>(&r)) {
      run_.sequences.push_back(seq);
      run_.underdetermined = u->reason;
      return;
    }
    const auto& t = std::get<CohomologyTable>(r);
    *slots[seq.target] = t;
    run_.sequences.push_back(seq);
    record(unknown, seq.label, t);
  }

  PipelineRun finish(const std::string& result) {
    if (!failed()) run_.result = need(result);
    return run_;
  }

  const CohomologyTable& need(const std::string& name) const {
    const auto* t = find(name);
    if (!t) throw Error(ErrorKind::Domain, "pipeline step uses " + name + " before it is known");
    return *t;
  }

 private:
  std::map<std::string, CohomologyTable> env_;
  PipelineRun run_;
};

// 0 -> O -> S^v -> G -> 0, twisted by t.
void g_of(Runner& r, const Integer& t) {
  const auto o = twist_name("O", t), s = twist_name("Sdual", t), g = twist_name("G", t);
  r.bott_step("O", t, o);
  r.bott_step("Sdual", t, s);
  r.les(o, s, g, g);
}

// 0 -> C(t) -> G(t-1) -> O(t) -> 0
void c_of(Runner& r, const Integer& t) {
  const auto c = twist_name("C", t);
  if (cited(c)) {
    r.cite(c);
    return;
  }
  g_of(r, t - 1);
  const auto o = twist_name("O", t);
  r.bott_step("O", t, o);
  r.les(c, twist_name("G", t - 1), o, c);
}

// Dual of the Ottaviani sequence, 0 -> G^v(t) -> S(t) -> O(t) -> 0, and if that
// is not enough the dual Cayley sequence 0 -> O(t-1) -> G^v(t) -> C^v(t-1) -> 0
// with C^v = C(1).
void gdual_of(Runner& r, const Integer& t) {
  const auto gd = twist_name("Gdual", t);
  Runner probe = r;
  const auto s = twist_name("S", t), o = twist_name("O", t);
  probe.bott_step("S", t, s);
  probe.bott_step("O", t, o);
  probe.les(gd, s, o, gd);
  if (!probe.failed()) {
    r = probe;
    return;
  }
  const auto o1 = twist_name("O", t - 1);
  r.bott_step("O", t - 1, o1);
  c_of(r, t);
  r.les(o1, gd, twist_name("C", t), gd);
}

// 0 -> O(t-5) -> G(t-4) -> K(t) -> 0 and 0 -> K(t) -> G^v(t-1) -> I(t) -> 0
void ideal_of(Runner& r, const Integer& t) {
  const auto o = twist_name("O", t - 5), k = twist_name("K", t), i = twist_name("I_Y", t);
  r.bott_step("O", t - 5, o);
  g_of(r, t - 4);
  r.les(o, twist_name("G", t - 4), k, k);
  gdual_of(r, t - 1);
  r.les(k, twist_name("Gdual", t - 1), i, i);
}

void case_one(Runner& r) { gdual_of(r, 1); }

void case_two(Runner& r) {
  // G~ has the same cohomology as G
  r.bott_step("Sdual", -3, "Sdual(-3)");
  r.bott_step("Wedge2Sdual", -3, "Wedge2Sdual(-3)");
  r.bott_step("Sym2Sdual", -3, "Sym2Sdual(-3)");
  r.sum("Sdual*Sdual(-3)", {"Wedge2Sdual(-3)", "Sym2Sdual(-3)"});
  r.les("Sdual(-3)", "Sdual*Sdual(-3)", "Sdual*Gt(-3)", "Sdual*Gt(-3)");
  g_of(r, -3);
  r.alias("Gt(-3)", "G(-3)", "same Chern data");
  r.les("Gt(-3)", "Sdual*Gt(-3)", "G*Gt(-3)", "G*Gt(-3)");
}

void case_three(Runner& r) {
  case_two(r);
  r.alias("G*G(-3)", "G*Gt(-3)", "same Chern data");
  g_of(r, -2);
  // Cayley sequence tensored by G(-4)
  r.les("C*G(-2)", "G*G(-3)", "G(-2)", "C*G(-2)");
  r.alias("Cdual*G(-3)", "C*G(-2)", "C^v = C(1)");
  c_of(r, -1);
  r.alias("Cdual(-2)", "C(-1)", "C^v = C(1)");
  // Cayley sequence tensored by C^v(-4)
  r.les("Cdual*C(-2)", "Cdual*G(-3)", "Cdual(-2)", "Cdual*C(-2)");
}

}  // namespace

bool is_pipeline_descriptor(const std::string& d) { return d == "G" || d == "Gdual" || d == "C" || d == "IY"; }

PipelineRun pipeline_cohomology(const std::string& descriptor, const Integer& t) {
  if (!is_pipeline_descriptor(descriptor))
    throw Error(ErrorKind::UnsupportedBundle, "no pipeline for '" + descriptor + "'");
  Runner r(twist_name(descriptor, t) + " on Q5");
  if (descriptor == "G") {
    g_of(r, t);
    return r.finish(twist_name("G", t));
  }
  if (descriptor == "Gdual") {
    gdual_of(r, t);
    return r.finish(twist_name("Gdual", t));
  }
  if (descriptor == "C") {
    c_of(r, t);
    return r.finish(twist_name("C", t));
  }
  ideal_of(r, t);
  return r.finish(twist_name("I_Y", t));
}

PipelineRun lemma_vanishings(int which) {
  switch (which) {
    case 1: {
      Runner r("H(Q5, G^v(1))");
      case_one(r);
      return r.finish("Gdual(1)");
    }
    case 2: {
      Runner r("H(Q5, G (x) G~(-3))");
      case_two(r);
      return r.finish("G*Gt(-3)");
    }
    case 3: {
      Runner r("H(Q5, C^v (x) C(-2))");
      case_three(r);
      return r.finish("Cdual*C(-2)");
    }
    default:
      throw Error(ErrorKind::Domain, "vanishing case must be 1, 2 or 3");
  }
}

PipelineRun ideal_sections() { return pipeline_cohomology("IY", 2); }

std::vector<SequenceSpec> shipped_sequences() {
  std::vector<SequenceSpec> all;
  std::vector<PipelineRun> runs{pipeline_cohomology("G", 1), lemma_vanishings(1), lemma_vanishings(2),
                                lemma_vanishings(3), ideal_sections()};
  for (const auto& run : runs) all.insert(all.end(), run.sequences.begin(), run.sequences.end());
  return all;
}

}  // namespace roofs::bwb
