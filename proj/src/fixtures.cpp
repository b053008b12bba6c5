#include "nslab/fixtures.hpp"

#include <algorithm>

#include "nslab/error.hpp"
#include "nslab/search.hpp"
#include "nslab/transforms.hpp"
#include "nslab/varieties.hpp"

namespace nsl {

std::string_view kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::NearSemiring: return "near-semiring";
    case StructureKind::Basic: return "basic-algebra";
    case StructureKind::Ortho: return "ortholattice";
  }
  return "?";
}

StructureKind kind_of(const Structure& s) { return static_cast<StructureKind>(s.index()); }

namespace {

void self_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError("fixture self-check failed: " + what);
}

FiniteNearSemiring named(FiniteNearSemiring a, std::string name, std::string comment) {
  a.name = std::move(name);
  a.comment = std::move(comment);
  return a;
}

// Stored tables, entered verbatim.

FiniteNearSemiring ex24() {
  // element order 0, a, 1
  return named(make_algebra("EX24", 3, {0, 1, 2, 1, 1, 1, 2, 1, 2}, {0, 0, 0, 0, 1, 1, 0, 1, 2}, std::nullopt, 0, 2,
                            {"0", "a", "1"}),
               "EX24",
               "three-element near semiring with a+1=a: not integral, and the sum and multiplication orders are "
               "different chains");
}

FiniteNearSemiring ex28() {
  return named(make_algebra("EX28", 3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, {0, 0, 0, 0, 1, 2, 0, 2, 2}, UnaryTable{2, 1, 0},
                            0, 1, {"0", "1", "2"}),
               "EX28", "involutive near semiring that is not integral: alpha(0)=2 differs from 1");
}

FiniteNearSemiring apxa() {
  // 0, 1, e, a, b, c
  return named(make_algebra("APXA", 6,
                            {0, 1, 2, 3, 3, 5,  //
                             1, 1, 1, 1, 1, 1,  //
                             2, 1, 2, 1, 1, 2,  //
                             3, 1, 1, 3, 3, 3,  //
                             3, 1, 1, 3, 3, 3,  //
                             5, 1, 2, 3, 3, 5},
                            {0, 0, 0, 0, 0, 0,  //
                             0, 1, 2, 3, 4, 5,  //
                             0, 2, 2, 0, 5, 5,  //
                             0, 3, 0, 3, 3, 0,  //
                             0, 4, 0, 3, 3, 0,  //
                             0, 5, 0, 0, 0, 0},
                            UnaryTable{1, 0, 3, 2, 5, 4}, 0, 1, {"0", "1", "e", "a", "b", "c"}),
               "APXA",
               "six-element algebra offered as satisfying central identity (1) but not (2); as given, b+b=a and "
               "0+b=a");
}

FiniteNearSemiring apxb() {
  return named(make_algebra("APXB", 3, {0, 1, 2, 1, 1, 1, 2, 1, 2}, {0, 0, 2, 0, 1, 2, 0, 2, 2}, UnaryTable{1, 0, 2},
                            0, 1, {"0", "1", "a"}),
               "APXB",
               "three-element algebra offered as satisfying central identity (2) but not (1); as given, 0·a=a");
}

// Derived fixtures.

FiniteNearSemiring bool2() {
  return named(make_algebra("BOOL2", 2, {0, 1, 1, 1}, {0, 0, 0, 1}, UnaryTable{1, 0}, 0, 1, {"0", "1"}), "BOOL2",
               "two-element Boolean algebra as a near semiring");
}

FiniteNearSemiring bool4() {
  // bit i of the index is coordinate i
  std::vector<Element> add, mul;
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      add.push_back(x | y);
      mul.push_back(x & y);
    }
  auto a = named(make_algebra("BOOL4", 4, add, mul, UnaryTable{3, 2, 1, 0}, 0, 3, {"(0,0)", "(1,0)", "(0,1)", "(1,1)"}),
                 "BOOL4", "four-element Boolean algebra, bitwise on pairs");
  self_check(are_isomorphic(a, product(bool2(), bool2())).has_value(), "BOOL4 is BOOL2xBOOL2");
  self_check(satisfies(a, AxiomProfile::InvolutiveIntegral), "BOOL4 involutive integral");
  return a;
}

BasicAlgebra mv3_basic() {
  BasicAlgebra b;
  b.name = "MV3-BASIC";
  b.comment = "three-element MV-algebra (Łukasiewicz chain) as a basic algebra";
  b.n = 3;
  b.oplus = BinaryTable(3);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) b.oplus.set(x, y, std::min<Element>(2, x + y));
  b.neg = {2, 1, 0};
  b.zero = 0;
  b.labels = {"0", "1/2", "1"};
  validate_structure(b);
  auto r = check_basic_algebra(b);
  self_check(r.passed && r.has_tag("mv"), "MV3-BASIC is an MV-algebra");
  return b;
}

FiniteNearSemiring mv3() {
  auto a = named(lns_from_basic(mv3_basic()), "MV3", "three-element Łukasiewicz chain as a near semiring");
  // independent description: + is max, · the Łukasiewicz t-norm
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) {
      self_check(a.add(x, y) == std::max(x, y), "MV3 sum is max");
      self_check(a.mul(x, y) == (x + y >= 2 ? x + y - 2 : 0), "MV3 product is the t-norm");
    }
  self_check(is_lukasiewicz(a), "MV3 is Łukasiewicz");
  return a;
}

OrthoLattice ortho_from_chains(std::string name, std::string comment, std::vector<std::string> labels,
                               const std::vector<std::vector<Element>>& chains, UnaryTable ortho) {
  // Bounded lattice made of disjoint chains between 0 and the last index.
  const std::size_t n = labels.size();
  const Element top = static_cast<Element>(n - 1);
  std::vector<int> chain(n, -1), pos(n, 0);
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (std::size_t i = 0; i < chains[c].size(); ++i) {
      chain[chains[c][i]] = static_cast<int>(c);
      pos[chains[c][i]] = static_cast<int>(i);
    }
  OrthoLattice l;
  l.name = std::move(name);
  l.comment = std::move(comment);
  l.n = n;
  l.join = BinaryTable(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element v;
      if (x == 0) v = y;
      else if (y == 0) v = x;
      else if (x == top || y == top) v = top;
      else if (chain[x] == chain[y]) v = pos[x] >= pos[y] ? x : y;
      else v = top;
      l.join.set(x, y, v);
    }
  l.ortho = std::move(ortho);
  l.zero = 0;
  l.one = top;
  l.labels = std::move(labels);
  validate_structure(l);
  return l;
}

OrthoLattice mo2_oml() {
  auto l = ortho_from_chains("MO2-OML", "orthomodular lattice MO2: four atoms a, a′, b, b′ between 0 and 1",
                             {"0", "a", "a′", "b", "b′", "1"}, {{1}, {2}, {3}, {4}}, {5, 2, 1, 4, 3, 0});
  self_check(check_oml(l).passed, "MO2 is an orthomodular lattice");
  return l;
}

FiniteNearSemiring mo2() {
  auto a = named(ons_from_oml(mo2_oml()), "MO2", "orthomodular lattice MO2 as a near semiring with the Sasaki product");
  self_check(is_orthomodular_ns(a), "MO2 near semiring is orthomodular");
  return a;
}

OrthoLattice o6() {
  auto l = ortho_from_chains("O6", "benzene ring: ortholattice 0<a<b<1, 0<b′<a′<1 that is not orthomodular",
                             {"0", "a", "b", "b′", "a′", "1"}, {{1, 2}, {3, 4}}, {5, 4, 3, 2, 1, 0});
  auto r = check_oml(l);
  self_check(!r.passed && static_cast<std::ptrdiff_t>(r.violations.size()) == std::count_if(r.violations.begin(), r.violations.end(),
                                                               [](const Violation& v) {
                                                                 return v.clause.rfind("orthomodular", 0) == 0;
                                                               }),
             "O6 fails only orthomodularity");
  return l;
}

struct Entry {
  FixtureInfo info;
  Structure value;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](bool derived, Structure s) {
      FixtureInfo info;
      info.kind = kind_of(s);
      info.derived = derived;
      std::visit(
          [&](const auto& x) {
            info.name = x.name;
            info.description = x.comment;
          },
          s);
      e.push_back({std::move(info), std::move(s)});
    };
    add(false, ex24());
    add(false, ex28());
    add(false, apxa());
    add(false, apxb());
    add(true, bool2());
    add(true, bool4());
    add(true, mv3());
    add(true, mv3_basic());
    add(true, mo2());
    add(true, mo2_oml());
    add(true, o6());
    return e;
  }();
  return entries;
}

const Entry* lookup(std::string_view name) {
  for (const auto& e : catalog())
    if (e.info.name == name) return &e;
  return nullptr;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = [] {
    std::vector<FixtureInfo> out;
    for (const auto& e : catalog()) out.push_back(e.info);
    return out;
  }();
  return list;
}

FiniteNearSemiring as_near_semiring(const Structure& s) {
  if (auto* a = std::get_if<FiniteNearSemiring>(&s)) return *a;
  if (auto* b = std::get_if<BasicAlgebra>(&s)) return lns_from_basic(*b);
  return ons_from_oml(std::get<OrthoLattice>(s));
}

Structure fixture(std::string_view spec) {
  if (spec.find('*') == std::string_view::npos) {
    const Entry* e = lookup(spec);
    if (!e) throw ParseError("unknown fixture '" + std::string(spec) + "'");
    return e->value;
  }
  std::optional<FiniteNearSemiring> acc;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('*', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view part = spec.substr(start, end - start);
    if (part.empty()) throw ParseError("empty factor in fixture product '" + std::string(spec) + "'");
    const Entry* e = lookup(part);
    if (!e) throw ParseError("unknown fixture '" + std::string(part) + "'");
    auto f = as_near_semiring(e->value);
    acc = acc ? product(*acc, f) : f;
    start = end + 1;
  }
  acc->comment = "direct product " + std::string(spec);
  return *acc;
}

FiniteNearSemiring fixture_near_semiring(std::string_view spec) { return as_near_semiring(fixture(spec)); }

}  // namespace nsl
