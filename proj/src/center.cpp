#include "nslab/center.hpp"

#include <algorithm>

#include "nslab/congruence.hpp"
#include "nslab/error.hpp"
#include "nslab/search.hpp"

namespace nsl {

namespace {

void require_integral_involutive(const FiniteNearSemiring& a) {
  if (!a.inv) throw PreconditionError("algebra has no involution");
  auto r = check_axioms(a, AxiomProfile::InvolutiveIntegral);
  if (!r.passed)
    throw PreconditionError("not an integral involutive near semiring: " + r.violations.front().clause + " fails");
}

bool equational_central(const FiniteNearSemiring& a, Element e) {
  const Element ne = a.alpha(e);
  const auto n = static_cast<Element>(a.n);
  // q(e,x,y) tabulated once; both identities are stated through it.
  std::vector<Element> q(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) q[x * n + y] = a.plus(a.times(e, x), a.times(ne, y));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (q[a.alpha(x) * n + a.alpha(y)] != a.alpha(q[x * n + y])) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element u = 0; u < n; ++u)
          if (q[a.times(x, z) * n + a.times(y, u)] != a.times(q[x * n + y], q[z * n + u])) return false;
  return true;
}

bool congruence_central(const FiniteNearSemiring& a, Element e) {
  return is_factor_pair(a, principal_congruence(a, e, a.zero), principal_congruence(a, e, a.one));
}

// Church-algebra characterisation: q(e,·,·) is idempotent, absorbs nested
// occurrences, commutes with every basic operation and q(e,1,0) = e.
bool full_central(const FiniteNearSemiring& a, Element e) {
  const auto n = static_cast<Element>(a.n);
  auto q = [&](Element x, Element y) { return church_q(a, e, x, y); };
  if (q(a.one, a.zero) != e) return false;
  if (q(a.zero, a.zero) != a.zero || q(a.one, a.one) != a.one) return false;
  for (Element x = 0; x < n; ++x)
    if (q(x, x) != x) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (q(a.alpha(x), a.alpha(y)) != a.alpha(q(x, y))) return false;
      for (Element z = 0; z < n; ++z) {
        const Element mid = q(x, z);
        if (q(q(x, y), z) != mid || q(x, q(y, z)) != mid) return false;
      }
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element u = 0; u < n; ++u) {
          if (q(a.plus(x, z), a.plus(y, u)) != a.plus(q(x, y), q(z, u))) return false;
          if (q(a.times(x, z), a.times(y, u)) != a.times(q(x, y), q(z, u))) return false;
        }
  return true;
}

std::vector<Element> atoms_of(const FiniteNearSemiring& a, const std::vector<Element>& centrals) {
  std::vector<Element> out;
  for (Element c : centrals) {
    if (c == a.zero) continue;
    bool minimal = true;
    for (Element d : centrals)
      if (d != a.zero && d != c && a.leq(d, c)) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<Element> centrals_by(const FiniteNearSemiring& a, CentralMethod m) {
  std::vector<Element> out;
  for (Element e = 0; e < a.n; ++e)
    if (is_central(a, e, m)) out.push_back(e);
  return out;
}

CheckReport boolean_check(const FiniteNearSemiring& a, const std::vector<Element>& centrals) {
  CheckReport r;
  r.profile = "boolean-center";
  std::vector<int> pos(a.n, -1);
  for (std::size_t i = 0; i < centrals.size(); ++i) pos[centrals[i]] = static_cast<int>(i);
  for (Element x : centrals) {
    if (pos[a.alpha(x)] < 0) {
      r.violations.push_back({"closure", {x}, "α(" + a.label(x) + ")=" + a.label(a.alpha(x)) + " is not central"});
      break;
    }
  }
  auto closure_pair = [&]() -> std::optional<std::pair<Element, Element>> {
    for (Element x : centrals)
      for (Element y : centrals)
        if (pos[a.plus(x, y)] < 0 || pos[a.times(x, y)] < 0) return std::pair{x, y};
    return std::nullopt;
  };
  if (auto p = closure_pair())
    r.violations.push_back({"closure", {p->first, p->second},
                            "sum or product of " + a.label(p->first) + " and " + a.label(p->second) +
                                " is not central"});
  if (!r.violations.empty()) {
    r.finalize();
    return r;
  }

  FiniteNearSemiring s;
  s.name = "Ce(" + a.name + ")";
  s.n = centrals.size();
  s.add = BinaryTable(s.n);
  s.mul = BinaryTable(s.n);
  UnaryTable inv(s.n);
  for (Element i = 0; i < s.n; ++i) {
    inv[i] = static_cast<Element>(pos[a.alpha(centrals[i])]);
    s.labels.push_back(a.label(centrals[i]));
    for (Element j = 0; j < s.n; ++j) {
      s.add.set(i, j, static_cast<Element>(pos[a.plus(centrals[i], centrals[j])]));
      s.mul.set(i, j, static_cast<Element>(pos[a.times(centrals[i], centrals[j])]));
    }
  }
  s.inv = std::move(inv);
  s.zero = static_cast<Element>(pos[a.zero]);
  s.one = static_cast<Element>(pos[a.one]);

  NearSemiringView v(s);
  std::vector<Clause> cs;
  cs.push_back(v.clause("add-assoc", "(x+y)+z = x+(y+z)"));
  cs.push_back(v.clause("add-comm", "x+y = y+x"));
  cs.push_back(v.clause("add-idem", "x+x = x"));
  cs.push_back(v.clause("mul-assoc", "(x·y)·z = x·(y·z)"));
  cs.push_back(v.clause("mul-comm", "x·y = y·x"));
  cs.push_back(v.clause("mul-idem", "x·x = x"));
  cs.push_back(v.clause("absorb-add", "x+(x·y) = x"));
  cs.push_back(v.clause("absorb-mul", "x·(x+y) = x"));
  cs.push_back(v.clause("distrib", "x·(y+z) = (x·y)+(x·z)"));
  cs.push_back(v.clause("distrib-dual", "x+(y·z) = (x+y)·(x+z)"));
  cs.push_back(v.clause("bounds", "x+0 = x & x·1 = x"));
  cs.push_back(v.clause("complement", "x+α(x) = 1 & x·α(x) = 0"));
  cs.push_back(v.clause("join-is-q", "x+y = (x·1)+(α(x)·y)"));
  cs.push_back(v.clause("meet-is-q", "x·y = (x·y)+(α(x)·0)"));
  r = run_check("boolean-center", s.n, cs);
  for (auto& viol : r.violations)
    for (auto& w : viol.witness) w = centrals[w];
  return r;
}

}  // namespace

Element church_q(const FiniteNearSemiring& a, Element x, Element y, Element z) {
  return a.plus(a.times(x, y), a.times(a.alpha(x), z));
}

CheckReport check_church(const FiniteNearSemiring& a) {
  require_integral_involutive(a);
  NearSemiringView v(a);
  std::vector<Clause> cs;
  cs.push_back(v.clause("q-one", "(1·x)+(α(1)·y) = x"));
  cs.push_back(v.clause("q-zero", "(0·x)+(α(0)·y) = y"));
  return run_check("church", a.n, cs);
}

std::string_view method_name(CentralMethod m) {
  switch (m) {
    case CentralMethod::Equational: return "equational";
    case CentralMethod::Congruence: return "congruence";
    case CentralMethod::Full: return "full";
  }
  return "?";
}

std::optional<CentralMethod> parse_method(std::string_view s) {
  for (auto m : {CentralMethod::Equational, CentralMethod::Congruence, CentralMethod::Full})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

bool is_central(const FiniteNearSemiring& a, Element e, CentralMethod m) {
  if (e >= a.n) throw RangeError("element out of range");
  if (!a.inv) throw PreconditionError("algebra has no involution");
  switch (m) {
    case CentralMethod::Equational: return equational_central(a, e);
    case CentralMethod::Congruence: return congruence_central(a, e);
    case CentralMethod::Full: return full_central(a, e);
  }
  return false;
}

CenterReport central_elements(const FiniteNearSemiring& a, const std::vector<CentralMethod>& methods) {
  require_integral_involutive(a);
  if (methods.empty()) throw PreconditionError("no centrality method requested");
  CenterReport r;
  for (auto m : methods) r.by_method.emplace_back(m, centrals_by(a, m));
  r.centrals = r.by_method.front().second;
  for (const auto& [m, cs] : r.by_method)
    if (cs != r.centrals) r.methods_agree = false;
  r.atoms = atoms_of(a, r.centrals);
  return r;
}

PropertyReport central_lemma_suite(const FiniteNearSemiring& a, Element e) {
  require_integral_involutive(a);
  if (!is_central(a, e, CentralMethod::Equational))
    throw PreconditionError("element " + a.label(e) + " is not central");
  NearSemiringView v(a);
  const std::pair<const char*, const char*> clauses[] = {
      {"absorption-shift", "(e·x)+α(e) = x+α(e)"},
      {"idempotent-action", "e·(e·x) = e·x & e·x = (e·x)·e"},
      {"complement-annihilates", "e·α(e) = 0"},
      {"commutes", "e·x = x·e"},
      {"left-distrib", "e·(x+y) = (e·x)+(e·y)"},
      {"left-monotone", "x ≤ y ⇒ e·x ≤ e·y"},
      {"cross-annihilation", "e·(α(e)·x) = 0"},
  };
  PropertyReport r;
  r.suite = "central";
  const Element prefix[] = {e};
  for (const auto& [id, text] : clauses) {
    auto c = v.clause(id, text);
    ClauseResult res;
    res.clause = id;
    if (auto f = first_failure(a.n, c, prefix)) {
      res.passed = false;
      res.counterexample = f->witness;
      res.detail = f->detail;
    }
    r.add(std::move(res));
  }
  return r;
}

CenterReport center_algebra(const FiniteNearSemiring& a) {
  auto r = central_elements(a, {CentralMethod::Equational});
  r.boolean_check = boolean_check(a, r.centrals);
  return r;
}

std::optional<Element> IntervalAlgebra::index_of(Element x) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
  if (it == carrier.end() || *it != x) return std::nullopt;
  return static_cast<Element>(it - carrier.begin());
}

IntervalAlgebra interval_algebra(const FiniteNearSemiring& a, Element e) {
  require_integral_involutive(a);
  if (!is_central(a, e, CentralMethod::Equational))
    throw PreconditionError("element " + a.label(e) + " is not central");
  IntervalAlgebra ia;
  ia.e = e;
  for (Element x = 0; x < a.n; ++x)
    if (a.leq(x, e)) ia.carrier.push_back(x);
  std::vector<Element> image;
  for (Element b = 0; b < a.n; ++b) image.push_back(a.times(e, b));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  ia.carrier_agrees = image == ia.carrier;

  const std::size_t k = ia.carrier.size();
  auto idx = [&](Element x) {
    auto i = ia.index_of(x);
    if (!i) throw InternalError("interval [0," + a.label(e) + "] is not closed under the operations");
    return *i;
  };
  FiniteNearSemiring& f = ia.algebra;
  f.name = "[0," + a.label(e) + "]";
  f.n = k;
  f.add = BinaryTable(k);
  f.mul = BinaryTable(k);
  UnaryTable inv(k);
  for (Element i = 0; i < k; ++i) {
    const Element x = ia.carrier[i];
    inv[i] = idx(a.times(e, a.alpha(x)));
    f.labels.push_back(a.label(x));
    for (Element j = 0; j < k; ++j) {
      f.add.set(i, j, idx(a.plus(x, ia.carrier[j])));
      f.mul.set(i, j, idx(a.times(x, ia.carrier[j])));
    }
  }
  f.inv = std::move(inv);
  f.zero = idx(a.zero);
  f.one = idx(e);
  f.comment = "interval [0," + a.label(e) + "] of " + a.name;

  bool hom = ia.carrier_agrees;
  auto h = [&](Element b) { return a.times(e, b); };
  for (Element x = 0; x < a.n && hom; ++x) {
    if (h(a.alpha(x)) != ia.carrier[f.alpha(idx(h(x)))]) hom = false;
    for (Element y = 0; y < a.n && hom; ++y)
      if (h(a.plus(x, y)) != a.plus(h(x), h(y)) || h(a.times(x, y)) != a.times(h(x), h(y))) hom = false;
  }
  if (h(a.zero) != a.zero || h(a.one) != e) hom = false;
  ia.projection_homomorphism = hom;
  return ia;
}

namespace {

std::vector<Element> translate(const IntervalAlgebra& ia, const std::vector<Element>& local) {
  std::vector<Element> out;
  for (Element x : local) out.push_back(ia.carrier[x]);
  return out;
}

}  // namespace

DecompositionResult decompose(const FiniteNearSemiring& a) {
  require_integral_involutive(a);
  DecompositionResult d;
  d.checks.suite = "decomposition";
  if (a.n == 1) {
    d.factors.push_back(a);
    d.iso.push_back({0});
    d.indecomposable.push_back(true);
    d.checks.add_flag("trivial", true, {}, "one-element algebra: single trivial factor");
    return d;
  }

  const auto center = center_algebra(a);
  d.atoms = center.atoms;
  d.checks.add_flag("center-boolean", center.boolean_check->passed,
                    center.boolean_check->passed ? std::string() : center.boolean_check->violations.front().detail);

  std::vector<IntervalAlgebra> parts;
  for (Element e : d.atoms) parts.push_back(interval_algebra(a, e));

  std::size_t product_size = 1;
  for (const auto& p : parts) {
    d.factors.push_back(p.algebra);
    product_size *= p.algebra.n;
  }
  d.checks.add_flag("sizes-multiply", product_size == a.n,
                    "factor sizes multiply to " + std::to_string(product_size) + ", expected " + std::to_string(a.n));

  bool intervals_ok = true;
  for (const auto& p : parts) intervals_ok = intervals_ok && p.carrier_agrees && p.projection_homomorphism;
  d.checks.add_flag("interval-projections", intervals_ok);

  // b ↦ (e₁·b, …, e_k·b)
  for (Element b = 0; b < a.n; ++b) {
    Tuple t;
    for (const auto& p : parts) t.push_back(*p.index_of(a.times(p.e, b)));
    d.iso.push_back(std::move(t));
  }
  auto sorted = d.iso;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  d.checks.add_flag("bijective", injective && product_size == a.n);

  std::string hom_detail;
  auto component = [&](auto op, const Tuple& x, const Tuple& y) {
    Tuple t;
    for (std::size_t i = 0; i < parts.size(); ++i) t.push_back(op(parts[i].algebra, x[i], y[i]));
    return t;
  };
  for (Element x = 0; x < a.n && hom_detail.empty(); ++x) {
    Tuple ax;
    for (std::size_t i = 0; i < parts.size(); ++i) ax.push_back(parts[i].algebra.alpha(d.iso[x][i]));
    if (d.iso[a.alpha(x)] != ax) hom_detail = "α not preserved at " + a.label(x);
    for (Element y = 0; y < a.n && hom_detail.empty(); ++y) {
      if (d.iso[a.plus(x, y)] !=
          component([](const FiniteNearSemiring& f, Element u, Element v) { return f.plus(u, v); }, d.iso[x], d.iso[y]))
        hom_detail = "+ not preserved at " + a.label(x) + ", " + a.label(y);
      else if (d.iso[a.times(x, y)] != component([](const FiniteNearSemiring& f, Element u,
                                                     Element v) { return f.times(u, v); },
                                                  d.iso[x], d.iso[y]))
        hom_detail = "· not preserved at " + a.label(x) + ", " + a.label(y);
    }
  }
  Tuple zeros, ones;
  for (const auto& p : parts) {
    zeros.push_back(p.algebra.zero);
    ones.push_back(p.algebra.one);
  }
  if (hom_detail.empty() && (d.iso[a.zero] != zeros || d.iso[a.one] != ones)) hom_detail = "constants not preserved";
  d.checks.add_flag("homomorphism", hom_detail.empty(), hom_detail);

  // Each factor's own center must be {0, e}.
  bool all_indecomposable = true;
  for (const auto& p : parts) {
    auto c = center_algebra(p.algebra).centrals;
    const bool ind = c == std::vector<Element>{p.algebra.zero, p.algebra.one} ||
                     c == std::vector<Element>{p.algebra.one, p.algebra.zero};
    d.indecomposable.push_back(ind);
    all_indecomposable = all_indecomposable && ind;
  }
  d.checks.add_flag("factors-indecomposable", all_indecomposable);

  // Removing one atom: the complement interval has exactly the remaining atoms.
  std::string atoms_detail;
  for (Element e : d.atoms) {
    auto rest = interval_algebra(a, a.alpha(e));
    auto local = center_algebra(rest.algebra).atoms;
    auto got = translate(rest, local);
    std::vector<Element> want;
    for (Element c : d.atoms)
      if (c != e) want.push_back(c);
    if (got != want) {
      atoms_detail = "atoms below α(" + a.label(e) + ") differ from the remaining atoms";
      break;
    }
  }
  d.checks.add_flag("atoms-of-complement", atoms_detail.empty(), atoms_detail);

  // Centrality transfers between R and [0,e] for every central e.
  std::string transfer_detail;
  for (Element e : center.centrals) {
    auto ia = interval_algebra(a, e);
    auto local = center_algebra(ia.algebra).centrals;
    auto inside = translate(ia, local);
    std::vector<Element> expected;
    for (Element c : ia.carrier)
      if (std::binary_search(center.centrals.begin(), center.centrals.end(), c)) expected.push_back(c);
    if (inside != expected) {
      transfer_detail = "centrals of [0," + a.label(e) + "] differ from the centrals below " + a.label(e);
      break;
    }
  }
  d.checks.add_flag("central-transfer", transfer_detail.empty(), transfer_detail);

  // [0,e] against A/θ(e,1).
  std::string quotient_detail;
  for (Element e : center.centrals) {
    auto ia = interval_algebra(a, e);
    auto q = quotient(a, principal_congruence(a, e, a.one));
    if (!are_isomorphic(ia.algebra, q)) {
      quotient_detail = "[0," + a.label(e) + "] is not isomorphic to the quotient by θ(" + a.label(e) + ",1)";
      break;
    }
  }
  d.checks.add_flag("interval-quotient", quotient_detail.empty(), quotient_detail);
  return d;
}

}  // namespace nsl
