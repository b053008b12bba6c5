#include "nslab/algebra.hpp"

#include <algorithm>
#include <charconv>

#include "nslab/error.hpp"

namespace nsl {

BinaryTable::BinaryTable(std::size_t n, std::vector<Element> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) throw StructureError("table has " + std::to_string(data_.size()) + " entries, expected " +
                                                  std::to_string(n * n));
}

bool BinaryTable::in_range() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [&](Element e) { return e < n_; });
}

bool is_permutation(const UnaryTable& t) {
  std::vector<char> seen(t.size(), 0);
  for (Element e : t) {
    if (e >= t.size() || seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

std::string FiniteNearSemiring::label(Element x) const {
  if (x < labels.size()) return labels[x];
  return std::to_string(x);
}

bool FiniteNearSemiring::same_tables(const FiniteNearSemiring& o) const {
  return n == o.n && add == o.add && mul == o.mul && inv == o.inv && zero == o.zero && one == o.one;
}

void validate_structure(const FiniteNearSemiring& a) {
  if (a.n == 0) throw StructureError("universe must not be empty");
  if (a.add.size() != a.n || a.mul.size() != a.n) throw StructureError("table size does not match universe size");
  if (!a.add.in_range()) throw RangeError("sum table entry out of range");
  if (!a.mul.in_range()) throw RangeError("product table entry out of range");
  if (a.zero >= a.n || a.one >= a.n) throw RangeError("constant out of range");
  if (a.n >= 2 && a.zero == a.one) throw StructureError("zero and one must differ when n >= 2");
  if (a.inv) {
    if (a.inv->size() != a.n) throw StructureError("involution table size does not match universe size");
    for (Element e : *a.inv)
      if (e >= a.n) throw RangeError("involution entry out of range");
    if (!is_permutation(*a.inv)) throw StructureError("involution is not a permutation");
  }
  if (!a.labels.empty()) {
    if (a.labels.size() != a.n) throw StructureError("label count does not match universe size");
    auto sorted = a.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw StructureError("duplicate labels");
  }
}

FiniteNearSemiring make_algebra(std::string name, std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                                std::optional<UnaryTable> inv, Element zero, Element one,
                                std::vector<std::string> labels) {
  FiniteNearSemiring a;
  a.name = std::move(name);
  a.n = n;
  a.add = BinaryTable(n, std::move(add));
  a.mul = BinaryTable(n, std::move(mul));
  a.inv = std::move(inv);
  a.zero = zero;
  a.one = one;
  a.labels = std::move(labels);
  validate_structure(a);
  return a;
}

Element element_named(const FiniteNearSemiring& a, std::string_view name) {
  for (Element x = 0; x < a.labels.size(); ++x)
    if (a.labels[x] == name) return x;
  Element v = 0;
  auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec == std::errc() && p == name.data() + name.size() && v < a.n) return v;
  throw RangeError("no element named '" + std::string(name) + "'");
}

namespace {

struct ProfileEntry {
  AxiomProfile p;
  std::string_view name;
};

constexpr ProfileEntry kProfiles[] = {
    {AxiomProfile::NearSemiring, "near-semiring"},
    {AxiomProfile::IdempotentAdd, "idempotent-add"},
    {AxiomProfile::CommutativeMul, "commutative-mul"},
    {AxiomProfile::AssociativeMul, "associative-mul"},
    {AxiomProfile::Integral, "integral"},
    {AxiomProfile::Semiring, "semiring"},
    {AxiomProfile::Involutive, "involutive"},
    {AxiomProfile::InvolutiveIntegral, "involutive-integral"},
};

}  // namespace

std::string_view profile_name(AxiomProfile p) {
  for (const auto& e : kProfiles)
    if (e.p == p) return e.name;
  return "?";
}

std::optional<AxiomProfile> parse_profile(std::string_view s) {
  for (const auto& e : kProfiles)
    if (e.name == s) return e.p;
  return std::nullopt;
}

const std::vector<AxiomProfile>& all_profiles() {
  static const std::vector<AxiomProfile> v = [] {
    std::vector<AxiomProfile> out;
    for (const auto& e : kProfiles) out.push_back(e.p);
    return out;
  }();
  return v;
}

bool profile_needs_involution(AxiomProfile p) {
  return p == AxiomProfile::Involutive || p == AxiomProfile::InvolutiveIntegral;
}

NearSemiringView::NearSemiringView(const FiniteNearSemiring& a) : algebra(a), sum_leq(a.n) {
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y) sum_leq.set(x, y, a.leq(x, y));
  in.n = a.n;
  in.add = &a.add;
  in.mul = &a.mul;
  in.alpha = a.inv ? &*a.inv : nullptr;
  in.zero = a.zero;
  in.one = a.one;
  in.leq = &sum_leq;
  in.labels = &a.labels;
}

std::vector<Clause> profile_clauses(const NearSemiringView& v, AxiomProfile p) {
  std::vector<Clause> cs;
  auto base = [&] {
    cs.push_back(v.clause("add-assoc", "(x+y)+z = x+(y+z)"));
    cs.push_back(v.clause("add-comm", "x+y = y+x"));
    cs.push_back(v.clause("add-zero", "0+x = x"));
    cs.push_back(v.clause("mul-one-left", "1·x = x"));
    cs.push_back(v.clause("mul-one-right", "x·1 = x"));
    cs.push_back(v.clause("right-distrib", "(x+y)·z = (x·z)+(y·z)"));
    cs.push_back(v.clause("mul-zero-right", "x·0 = 0"));
    cs.push_back(v.clause("mul-zero-left", "0·x = 0"));
  };
  auto involution = [&] {
    cs.push_back(v.clause("add-idem", "x+x = x"));
    cs.push_back(v.clause("inv-involutive", "α(α(x)) = x"));
    cs.push_back(v.clause("inv-antitone", "x ≤ y ⇒ α(y) ≤ α(x)"));
  };
  base();
  switch (p) {
    case AxiomProfile::NearSemiring: break;
    case AxiomProfile::IdempotentAdd: cs.push_back(v.clause("add-idem", "x+x = x")); break;
    case AxiomProfile::CommutativeMul: cs.push_back(v.clause("mul-comm", "x·y = y·x")); break;
    case AxiomProfile::AssociativeMul: cs.push_back(v.clause("mul-assoc", "(x·y)·z = x·(y·z)")); break;
    case AxiomProfile::Integral: cs.push_back(v.clause("integral", "x+1 = 1")); break;
    case AxiomProfile::Semiring:
      cs.push_back(v.clause("mul-assoc", "(x·y)·z = x·(y·z)"));
      cs.push_back(v.clause("left-distrib", "x·(y+z) = (x·y)+(x·z)"));
      break;
    case AxiomProfile::Involutive: involution(); break;
    case AxiomProfile::InvolutiveIntegral:
      involution();
      cs.push_back(v.clause("integral", "x+1 = 1"));
      break;
  }
  return cs;
}

CheckReport check_axioms(const FiniteNearSemiring& a, AxiomProfile p) {
  if (profile_needs_involution(p) && !a.inv)
    throw PreconditionError("profile " + std::string(profile_name(p)) + " requires an involution");
  NearSemiringView v(a);
  auto cs = profile_clauses(v, p);
  return run_check(std::string(profile_name(p)), a.n, cs);
}

bool satisfies(const FiniteNearSemiring& a, AxiomProfile p) {
  if (profile_needs_involution(p) && !a.inv) return false;
  return check_axioms(a, p).passed;
}

namespace {

bool is_partial_order(const Relation& r) {
  const auto n = static_cast<Element>(r.size());
  for (Element x = 0; x < n; ++x) {
    if (!r(x, x)) return false;
    for (Element y = 0; y < n; ++y) {
      if (x != y && r(x, y) && r(y, x)) return false;
      if (!r(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (r(y, z) && !r(x, z)) return false;
    }
  }
  return true;
}

// Least element of {z : x ≤ z and y ≤ z} (flip = false) or greatest lower bound (flip = true).
std::optional<Element> bound(const Relation& r, Element x, Element y, bool flip) {
  const auto n = static_cast<Element>(r.size());
  auto le = [&](Element a, Element b) { return flip ? r(b, a) : r(a, b); };
  for (Element c = 0; c < n; ++c) {
    if (!le(x, c) || !le(y, c)) continue;
    bool least = true;
    for (Element d = 0; d < n && least; ++d)
      if (le(x, d) && le(y, d) && !le(c, d)) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<Element, Element>> PartialOrderReport::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(leq.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

PartialOrderReport induced_order(const FiniteNearSemiring& a, OrderKind which) {
  const BinaryTable& op = which == OrderKind::Sum ? a.add : a.mul;
  const char* sym = which == OrderKind::Sum ? "+" : "·";
  for (Element x = 0; x < a.n; ++x)
    if (op(x, x) != x)
      throw PreconditionError(std::string(which == OrderKind::Sum ? "sum" : "product") + " is not idempotent: " +
                              a.label(x) + sym + a.label(x) + "=" + a.label(op(x, x)));
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y)
      if (op(x, y) != op(y, x))
        throw PreconditionError(std::string(which == OrderKind::Sum ? "sum" : "product") + " is not commutative: " +
                                a.label(x) + sym + a.label(y) + "=" + a.label(op(x, y)) + " but " + a.label(y) + sym +
                                a.label(x) + "=" + a.label(op(y, x)));

  PartialOrderReport r;
  r.kind = which;
  r.leq = Relation(a.n);
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y) r.leq.set(x, y, which == OrderKind::Sum ? op(x, y) == y : op(x, y) == x);
  r.is_partial_order = is_partial_order(r.leq);
  r.is_join_semilattice = r.is_meet_semilattice = true;
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y) {
      if (!bound(r.leq, x, y, false)) r.is_join_semilattice = false;
      if (!bound(r.leq, x, y, true)) r.is_meet_semilattice = false;
    }
  for (Element c = 0; c < a.n; ++c) {
    bool bot = true, top = true;
    for (Element x = 0; x < a.n; ++x) {
      bot = bot && r.leq(c, x);
      top = top && r.leq(x, c);
    }
    if (bot && !r.bottom) r.bottom = c;
    if (top && !r.top) r.top = c;
  }
  return r;
}

CheckReport check_involution(const FiniteNearSemiring& a) {
  if (!a.inv) throw PreconditionError("algebra has no involution");
  auto order = induced_order(a, OrderKind::Sum);
  if (!order.is_partial_order || !order.is_join_semilattice)
    throw PreconditionError("sum order is not a join semilattice");
  NearSemiringView v(a);
  std::vector<Clause> cs;
  cs.push_back(v.clause("inv-involutive", "α(α(x)) = x"));
  cs.push_back(v.clause("inv-antitone", "x ≤ y ⇒ α(y) ≤ α(x)"));
  return run_check("involution", a.n, cs);
}

FiniteNearSemiring dual_algebra(const FiniteNearSemiring& a) {
  auto inv_report = check_involution(a);
  if (!inv_report.passed) throw PreconditionError("α is not an involution of the sum order");
  FiniteNearSemiring d;
  d.name = a.name + "_dual";
  d.n = a.n;
  d.add = BinaryTable(a.n);
  d.mul = BinaryTable(a.n);
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y) {
      d.add.set(x, y, a.alpha(a.plus(a.alpha(x), a.alpha(y))));
      d.mul.set(x, y, a.alpha(a.times(a.alpha(x), a.alpha(y))));
    }
  d.inv = a.inv;
  d.zero = a.alpha(a.zero);
  d.one = a.alpha(a.one);
  d.labels = a.labels;
  d.comment = "dual of " + a.name;
  validate_structure(d);
  return d;
}

PropertyReport duality_suite(const FiniteNearSemiring& a, const FiniteNearSemiring& dual) {
  PropertyReport r;
  r.suite = "duality";
  auto eq = [&](std::string id, auto lhs, auto rhs, const char* text) {
    return Clause(std::move(id), 2, [&, lhs, rhs, text](std::span<const Element> xs) -> std::optional<std::string> {
      Element l = lhs(xs[0], xs[1]);
      Element r = rhs(xs[0], xs[1]);
      if (l == r) return std::nullopt;
      return std::string(text) + " fails at x=" + a.label(xs[0]) + ", y=" + a.label(xs[1]);
    });
  };
  std::vector<Clause> cs;
  cs.push_back(eq(
      "sum-recovered", [&](Element x, Element y) { return a.plus(x, y); },
      [&](Element x, Element y) { return a.alpha(dual.plus(a.alpha(x), a.alpha(y))); }, "x+y = α(α(x) +_α α(y))"));
  cs.push_back(eq(
      "product-recovered", [&](Element x, Element y) { return a.times(x, y); },
      [&](Element x, Element y) { return a.alpha(dual.times(a.alpha(x), a.alpha(y))); }, "x·y = α(α(x) ·_α α(y))"));
  append(r, a.n, cs);
  return r;
}

PropertyReport core_property_suite(const FiniteNearSemiring& a) {
  if (!satisfies(a, AxiomProfile::NearSemiring)) throw PreconditionError("algebra is not a near semiring");
  PropertyReport r;
  r.suite = "core";
  NearSemiringView v(a);
  r.add(evaluate(a.n, v.clause("right-monotone", "x ≤ y ⇒ x·z ≤ y·z")));

  const bool involutive = a.inv && satisfies(a, AxiomProfile::Involutive);
  if (!involutive) {
    r.add_flag("alpha-absorption", true, {}, "skipped: not an involutive near semiring");
    r.add_flag("integral-iff-alpha-zero-is-one", true, {}, "skipped: not an involutive near semiring");
    return r;
  }
  r.add(evaluate(a.n, v.clause("alpha-absorption", "α(x+y)+α(x) = α(x)")));
  const bool integral = satisfies(a, AxiomProfile::Integral);
  const bool alpha_zero_is_one = a.alpha(a.zero) == a.one;
  r.add_flag("integral-iff-alpha-zero-is-one", integral == alpha_zero_is_one,
             std::string("integral: ") + (integral ? "yes" : "no") + "; α(0)=" + a.label(a.alpha(a.zero)));
  return r;
}

FiniteNearSemiring product(const FiniteNearSemiring& a, const FiniteNearSemiring& b) {
  FiniteNearSemiring p;
  p.name = a.name + "x" + b.name;
  p.n = a.n * b.n;
  p.add = BinaryTable(p.n);
  p.mul = BinaryTable(p.n);
  auto idx = [&](Element i, Element j) { return static_cast<Element>(i * b.n + j); };
  for (Element i = 0; i < a.n; ++i)
    for (Element j = 0; j < b.n; ++j)
      for (Element k = 0; k < a.n; ++k)
        for (Element l = 0; l < b.n; ++l) {
          p.add.set(idx(i, j), idx(k, l), idx(a.plus(i, k), b.plus(j, l)));
          p.mul.set(idx(i, j), idx(k, l), idx(a.times(i, k), b.times(j, l)));
        }
  if (a.inv && b.inv) {
    UnaryTable inv(p.n);
    for (Element i = 0; i < a.n; ++i)
      for (Element j = 0; j < b.n; ++j) inv[idx(i, j)] = idx(a.alpha(i), b.alpha(j));
    p.inv = std::move(inv);
  }
  p.zero = idx(a.zero, b.zero);
  p.one = idx(a.one, b.one);
  p.labels.resize(p.n);
  for (Element i = 0; i < a.n; ++i)
    for (Element j = 0; j < b.n; ++j) p.labels[idx(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
  p.comment = "direct product " + a.name + " x " + b.name;
  return p;
}

FiniteNearSemiring relabel(const FiniteNearSemiring& a, const std::vector<Element>& perm) {
  FiniteNearSemiring r;
  r.name = a.name;
  r.n = a.n;
  r.add = BinaryTable(a.n);
  r.mul = BinaryTable(a.n);
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y) {
      r.add.set(perm[x], perm[y], perm[a.plus(x, y)]);
      r.mul.set(perm[x], perm[y], perm[a.times(x, y)]);
    }
  if (a.inv) {
    UnaryTable inv(a.n);
    for (Element x = 0; x < a.n; ++x) inv[perm[x]] = perm[a.alpha(x)];
    r.inv = std::move(inv);
  }
  r.zero = perm[a.zero];
  r.one = perm[a.one];
  if (!a.labels.empty()) {
    r.labels.resize(a.n);
    for (Element x = 0; x < a.n; ++x) r.labels[perm[x]] = a.labels[x];
  }
  r.comment = a.comment;
  return r;
}

}  // namespace nsl
