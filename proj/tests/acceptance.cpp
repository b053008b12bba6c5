// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "nslab/center.hpp"
#include "nslab/congruence.hpp"
#include "nslab/fixtures.hpp"
#include "nslab/io.hpp"
#include "nslab/search.hpp"
#include "nslab/transforms.hpp"
#include "nslab/varieties.hpp"
#include "oracle.hpp"

using namespace nsl;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> facts;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
  void note(const std::string& s) { facts.push_back(s); }
};

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += sep;
    s += x;
  }
  return s;
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::vector<FiniteNearSemiring> models(std::size_t n, const std::string& c) {
  std::vector<FiniteNearSemiring> out;
  for (auto& m : enumerate(n, parse_constraint(c)).models) out.push_back(std::move(m.algebra));
  return out;
}

std::vector<FiniteNearSemiring> models_upto(std::size_t n, const std::string& c) {
  std::vector<FiniteNearSemiring> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& m : models(k, c)) out.push_back(std::move(m));
  return out;
}

std::vector<FiniteNearSemiring> fixtures_where(const std::function<bool(const FiniteNearSemiring&)>& keep) {
  std::vector<FiniteNearSemiring> out;
  for (const auto& f : fixture_list()) {
    if (f.name == "O6") continue;
    auto a = fixture_near_semiring(f.name);
    if (keep(a)) out.push_back(std::move(a));
  }
  for (const char* p : {"MV3*BOOL2", "BOOL2*MO2"}) {
    auto a = fixture_near_semiring(p);
    if (keep(a)) out.push_back(std::move(a));
  }
  return out;
}

bool is_iso(const FiniteNearSemiring& a, const FiniteNearSemiring& b) { return are_isomorphic(a, b).has_value(); }

// --- criteria ------------------------------------------------------------------

Verdict fixture_fidelity() {
  Verdict v;
  auto c = nslab_cli::run({"check", "fixtures:EX24", "--profile", "integral"});
  v.expect(c.exit_code == 1, "EX24 integral check should exit 1");
  v.expect(c.out == "profile integral: FAIL (1 violation)\n  integral (a): a+1=a, expected 1\n",
           "EX24 integral report differs: " + c.out);
  auto sum = nslab_cli::run({"order", "fixtures:EX24", "--which", "sum", "--dot"}).out;
  auto mul = nslab_cli::run({"order", "fixtures:EX24", "--which", "mul", "--dot"}).out;
  // nodes n0="0", n1="a", n2="1"
  const std::string e01 = "n0 -> n2 [arrowhead=none]", e1a = "n2 -> n1 [arrowhead=none]";
  const std::string e0a = "n0 -> n1 [arrowhead=none]", ea1 = "n1 -> n2 [arrowhead=none]";
  v.expect(has(sum, e01) && has(sum, e1a) && !has(sum, e0a), "sum order is not the chain 0<1<a");
  v.expect(has(mul, e0a) && has(mul, ea1) && !has(mul, e1a), "mul order is not the chain 0<a<1");
  v.note("single violation a+1=a; sum order 0<1<a, mul order 0<a<1");
  return v;
}

Verdict non_integral_witness() {
  Verdict v;
  auto a = fixture_near_semiring("EX28");
  v.expect(check_axioms(a, AxiomProfile::Involutive).passed, "EX28 fails involutive");
  v.expect(!check_axioms(a, AxiomProfile::Integral).passed, "EX28 passes integral");
  auto s = core_property_suite(a);
  const ClauseResult* b = s.find("integral-iff-alpha-zero-is-one");
  v.expect(b && b->passed, "integral biconditional clause missing or failing");
  v.expect((*a.inv)[a.zero] == 2 && a.one == 1, "alpha(0) should be 2 and 1 should be element 1");
  v.expect(nslab_cli::run({"check", "fixtures:EX28", "--profile", "involutive"}).exit_code == 0, "CLI involutive");
  v.expect(nslab_cli::run({"check", "fixtures:EX28", "--profile", "integral"}).exit_code == 1, "CLI integral");
  v.note("involutive yes, integral no, alpha(0)=2 != 1");
  return v;
}

std::string find_verdict(Verdict& v, std::size_t n_max, const char* satisfy, const char* violate, bool want_model) {
  auto sat = std::string(satisfy) + ",!" + violate;
  auto c = parse_constraint(sat);
  auto t0 = std::chrono::steady_clock::now();
  auto r = find_model(n_max, c);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream o;
  o.precision(1);
  o << std::fixed;
  if (r.models.empty()) {
    v.expect(r.exhaustive, std::string("search for ") + sat + " stopped without a verdict");
    v.expect(!want_model, std::string("no model for ") + sat + " up to " + std::to_string(n_max));
    o << sat << " <=" << n_max << ": none (exhaustive, " << secs << " s)";
    return o.str();
  }
  const auto& m = r.models.front();
  v.expect(m.anchor.has_value() && !m.violations.empty(), "model without a recorded violating instantiation");
  v.expect(meets_constraint(m.algebra, c), "reported model does not meet the constraint");
  // re-check the identities directly
  auto o2 = oracle::from(m.algebra);
  const int e = m.anchor ? static_cast<int>(*m.anchor) : 0;
  auto holds = [&](const std::string& id) {
    return id == "central1" ? oracle::central1_at(o2, e) : oracle::central2_at(o2, e);
  };
  v.expect(holds(satisfy == std::string("involutive-integral,central1") ? "central1" : "central2"),
           "required identity fails on the model");
  v.expect(!holds(violate), "violated identity holds on the model");
  o << sat << " <=" << n_max << ": model of size " << m.algebra.n << " at e=" << m.algebra.label(*m.anchor)
    << ", " << m.violations[0].identity << " fails at " << m.violations[0].failure.detail << " (" << secs << " s)";
  if (!want_model) o << " [unexpected]";
  return o.str();
}

Verdict fixture_audit() {
  Verdict v;
  auto a = nslab_cli::run({"check", "fixtures:APXA", "--profile", "involutive-integral"});
  v.expect(a.exit_code == 1, "APXA should be non-conforming");
  v.expect(has(a.out, "add-idem (b): b+b=a"), "APXA idempotency witness b+b=a missing");
  v.expect(has(a.out, "add-zero (b): 0+b=a"), "APXA neutrality witness 0+b=a missing");
  auto b = nslab_cli::run({"check", "fixtures:APXB", "--profile", "involutive-integral"});
  v.expect(b.exit_code == 1, "APXB should be non-conforming");
  v.expect(has(b.out, "mul-zero-left (a): 0·a=a"), "APXB annihilation witness 0·a=a missing");
  v.note("APXA b+b=a, 0+b=a; APXB 0·a=a");
  v.note(find_verdict(v, 6, "involutive-integral,central1", "central2", true));
  v.note(find_verdict(v, 3, "involutive-integral,central2", "central1", false));
  v.note(find_verdict(v, 6, "involutive-integral,central2", "central1", true));
  return v;
}

Verdict round_trips() {
  Verdict v;
  std::vector<FiniteNearSemiring> luk = {fixture_near_semiring("MV3"), fixture_near_semiring("BOOL2")};
  for (auto& m : models_upto(3, "lukasiewicz")) luk.push_back(std::move(m));
  for (const auto& r : luk) {
    v.expect(roundtrip_via_basic(r).pointwise_equal, "basic round trip fails on " + r.name);
    v.expect(roundtrip_basic(basic_from_lns(r)).pointwise_equal, "converse round trip fails on " + r.name);
  }
  std::vector<FiniteNearSemiring> om = {fixture_near_semiring("MO2"), fixture_near_semiring("BOOL4")};
  for (auto& m : models_upto(4, "lukasiewicz,orthomodular")) om.push_back(std::move(m));
  for (const auto& r : om) {
    v.expect(roundtrip_via_oml(r).pointwise_equal, "OML round trip fails on " + r.name);
    v.expect(roundtrip_oml(oml_from_ons(r)).pointwise_equal, "converse OML round trip fails on " + r.name);
  }
  v.note(std::to_string(luk.size()) + " Łukasiewicz and " + std::to_string(om.size()) +
         " orthomodular algebras, both directions");
  return v;
}

Verdict witness_terms() {
  Verdict v;
  auto all = fixtures_where(is_lukasiewicz);
  const std::size_t fixtures = all.size();
  for (auto& m : models_upto(4, "lukasiewicz")) all.push_back(std::move(m));
  for (const auto& a : all) {
    v.expect(witness_term_checks(a).passed(), "witness terms fail on " + a.name);
    v.expect(congruence_lattice_suite(all_congruences(a)).passed(), "congruence lattice suite fails on " + a.name);
  }
  v.note(std::to_string(fixtures) + " fixtures and " + std::to_string(all.size() - fixtures) +
         " enumerated models; permutable, distributive");
  return v;
}

Verdict centrality_methods() {
  Verdict v;
  const std::vector<CentralMethod> methods = {CentralMethod::Equational, CentralMethod::Full,
                                              CentralMethod::Congruence};
  auto all = models_upto(4, "involutive-integral");
  const std::size_t enumerated = all.size();
  for (auto& f : fixtures_where([](const FiniteNearSemiring& a) { return satisfies(a, AxiomProfile::InvolutiveIntegral); }))
    all.push_back(std::move(f));
  std::size_t disagreements = 0;
  for (const auto& a : all) {
    auto r = central_elements(a, methods);
    if (!r.methods_agree) ++disagreements;
  }
  v.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  v.note(std::to_string(enumerated) + " enumerated, " + std::to_string(all.size() - enumerated) +
         " fixtures; 0 disagreements");
  return v;
}

Verdict boolean_center() {
  Verdict v;
  auto p = center_algebra(fixture_near_semiring("MV3*BOOL2"));
  v.expect(p.centrals.size() == 4, "MV3xBOOL2 centre should have 4 elements");
  v.expect(p.atoms.size() == 2, "MV3xBOOL2 centre should have 2 atoms");
  v.expect(p.boolean_check && p.boolean_check->passed, "MV3xBOOL2 centre is not a Boolean algebra");
  v.expect(p.methods_agree, "methods disagree on MV3xBOOL2");
  auto mo2 = fixture_near_semiring("MO2");
  auto m = center_algebra(mo2);
  v.expect(m.centrals == std::vector<Element>{mo2.zero, mo2.one}, "MO2 centre should be {0,1}");
  v.note("MV3xBOOL2: 4 elements, 2 atoms, Boolean; MO2: {0,1}");
  return v;
}

Verdict decomposition() {
  Verdict v;
  auto b2 = fixture_near_semiring("BOOL2"), mv3 = fixture_near_semiring("MV3");
  auto d = decompose(fixture_near_semiring("BOOL4"));
  v.expect(d.ok(), "BOOL4 decomposition checks fail");
  v.expect(d.factors.size() == 2, "BOOL4 should give 2 factors");
  for (const auto& f : d.factors) v.expect(is_iso(f, b2), "BOOL4 factor not isomorphic to BOOL2");

  auto e = decompose(fixture_near_semiring("MV3*BOOL2"));
  v.expect(e.ok() && e.factors.size() == 2, "MV3xBOOL2 should give 2 factors");
  if (e.factors.size() == 2)
    v.expect((is_iso(e.factors[0], mv3) && is_iso(e.factors[1], b2)) ||
                 (is_iso(e.factors[0], b2) && is_iso(e.factors[1], mv3)),
             "MV3xBOOL2 factors are not MV3 and BOOL2");

  std::size_t intervals = 0;
  for (const auto& a : fixtures_where([](const FiniteNearSemiring& x) { return satisfies(x, AxiomProfile::InvolutiveIntegral); })) {
    auto r = decompose(a);
    v.expect(r.ok(), "decomposition checks fail on " + a.name);
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      v.expect(r.indecomposable[i], "factor not flagged indecomposable on " + a.name);
      v.expect(decompose(r.factors[i]).factors.size() == 1, "factor decomposes further on " + a.name);
    }
    auto c = center_algebra(a);
    if (c.centrals.size() <= 2) continue;
    for (Element x : c.centrals) {
      auto iv = interval_algebra(a, x);
      v.expect(is_iso(iv.algebra, quotient(a, principal_congruence(a, x, a.one))),
               "[0,e] is not the quotient by theta(e,1) on " + a.name);
      ++intervals;
    }
  }
  v.note("BOOL4 = BOOL2 x BOOL2, MV3xBOOL2 recovered, idempotent; " + std::to_string(intervals) +
         " interval/quotient pairs");
  return v;
}

Verdict enumeration_soundness() {
  Verdict v;
  using namespace oracle;
  auto inv_int = [](const Alg& r) { return involutive(r) && integral(r); };
  struct Case {
    const char* constraint;
    bool with_inv;
    std::function<bool(const Alg&)> keep;
  };
  const std::vector<Case> cases = {
      {"near-semiring", false, [](const Alg&) { return true; }},
      {"integral", false, integral},
      {"semiring", false, [](const Alg& r) { return mul_assoc(r) && left_distrib(r); }},
      {"involutive", true, involutive},
      {"involutive-integral", true, inv_int},
      {"lukasiewicz", true, [](const Alg& r) { return involutive(r) && lukasiewicz_identity(r); }},
      {"lukasiewicz,orthomodular", true,
       [](const Alg& r) { return involutive(r) && lukasiewicz_identity(r) && orthomodular_identity(r); }},
      {"involutive-integral,central1,!central2", true,
       [=](const Alg& r) {
         if (!inv_int(r)) return false;
         for (int e = 0; e < r.n; ++e)
           if (central1_at(r, e) && !central2_at(r, e)) return true;
         return false;
       }},
  };
  std::size_t compared = 0;
  for (const auto& c : cases)
    for (int n = 1; n <= 3; ++n) {
      std::set<std::vector<int>> got;
      for (const auto& m : models(n, c.constraint)) got.insert(canonical_key(from(m)));
      v.expect(got == all_models(n, c.with_inv, c.keep),
               std::string(c.constraint) + " differs at n=" + std::to_string(n));
      ++compared;
    }
  for (const char* c : {"near-semiring", "involutive", "involutive-integral"}) {
    auto sc = parse_constraint(c);
    for (std::size_t n = 1; n <= 4; ++n) {
      SearchOptions p;
      p.threads = 4;
      v.expect(render_json(enumerate(n, sc), sc) == render_json(enumerate(n, sc, p), sc),
               std::string("parallel output differs for ") + c);
    }
  }
  v.note(std::to_string(compared) + " constraint/size pairs match the oracle; 4-thread output byte-identical");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"fixture fidelity", fixture_fidelity},         {"non-integral involutive witness", non_integral_witness},
      {"APXA/APXB audit", fixture_audit},             {"round trips", round_trips},
      {"witness terms", witness_terms},               {"centrality methods", centrality_methods},
      {"Boolean center", boolean_center},             {"decomposition", decomposition},
      {"enumeration soundness", enumeration_soundness}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    if (!v.ok) ++failures;
    std::printf("criterion %zu %s: %s: %s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first,
                join(v.ok ? v.facts : v.problems, "; ").c_str());
    std::fflush(stdout);
  }
  return failures;
}
