#include <random>
#include <set>

#include "doctest.h"
#include "nslab/error.hpp"
#include "nslab/io.hpp"
#include "nslab/search.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nsl;

namespace {

using Keep = std::function<bool(const oracle::Alg&)>;

std::set<std::vector<int>> library_keys(std::size_t n, const std::string& constraint) {
  std::set<std::vector<int>> out;
  for (const auto& m : testing::models(n, constraint)) out.insert(oracle::canonical_key(oracle::from(m)));
  return out;
}

bool exists_e(const oracle::Alg& r, const std::function<bool(int)>& f) {
  for (int e = 0; e < r.n; ++e)
    if (f(e)) return true;
  return false;
}

struct Case {
  const char* constraint;
  bool with_inv;
  Keep keep;
};

std::vector<Case> cases() {
  using namespace oracle;
  auto inv_int = [](const Alg& r) { return involutive(r) && integral(r); };
  return {
      {"near-semiring", false, [](const Alg&) { return true; }},
      {"idempotent-add", false, idempotent},
      {"commutative-mul", false, mul_comm},
      {"associative-mul", false, mul_assoc},
      {"integral", false, integral},
      {"semiring", false, [](const Alg& r) { return mul_assoc(r) && left_distrib(r); }},
      {"involutive", true, involutive},
      {"involutive-integral", true, inv_int},
      {"lukasiewicz", true, [](const Alg& r) { return involutive(r) && lukasiewicz_identity(r); }},
      {"involutive,associative-mul", true, [](const Alg& r) { return involutive(r) && mul_assoc(r); }},
      {"involutive,!lukasiewicz", true, [](const Alg& r) { return involutive(r) && !lukasiewicz_identity(r); }},
      {"involutive-integral,central1", true,
       [=](const Alg& r) { return inv_int(r) && exists_e(r, [&](int e) { return central1_at(r, e); }); }},
      {"involutive-integral,central1,!central2", true,
       [=](const Alg& r) {
         return inv_int(r) && exists_e(r, [&](int e) { return central1_at(r, e) && !central2_at(r, e); });
       }},
      {"involutive-integral,!central1", true,
       [=](const Alg& r) { return inv_int(r) && exists_e(r, [&](int e) { return !central1_at(r, e); }); }},
  };
}

}  // namespace

TEST_CASE("constraint parsing") {
  auto c = parse_constraint("involutive-integral, central2 ,!central1");
  CHECK(c.profiles == std::vector<AxiomProfile>{AxiomProfile::InvolutiveIntegral});
  CHECK(c.require == std::vector<std::string>{"central2"});
  CHECK(c.forbid == std::vector<std::string>{"central1"});
  CHECK(c.needs_involution());
  CHECK(c.describe() == "involutive-integral,central2,!central1");
  CHECK_FALSE(parse_constraint("near-semiring").needs_involution());
  CHECK_THROWS_AS(parse_constraint("frobnicate"), ParseError);
  CHECK_THROWS_AS(parse_constraint("!integral"), ParseError);
  CHECK(parse_constraint("").describe().empty());
}

TEST_CASE("enumeration agrees with generate-and-filter up to size 3") {
  for (const auto& c : cases()) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(c.constraint);
      CAPTURE(n);
      CHECK(library_keys(n, c.constraint) == oracle::all_models(n, c.with_inv, c.keep));
    }
  }
}

TEST_CASE("known counts") {
  auto count = [](std::size_t n, const char* c) { return enumerate(n, parse_constraint(c)).models.size(); };
  CHECK(count(3, "near-semiring") == 6);
  CHECK(count(3, "involutive") == 3);
  CHECK(count(3, "lukasiewicz") == 1);
  CHECK(count(4, "near-semiring") == 115);
  CHECK(count(4, "involutive") == 89);
  CHECK(count(4, "involutive-integral") == 30);
  CHECK(count(4, "lukasiewicz") == 3);
  CHECK(count(4, "lukasiewicz,orthomodular") == 1);
}

TEST_CASE("enumerated models are canonical, sorted, distinct and meet the constraint") {
  for (const char* c : {"near-semiring", "involutive", "lukasiewicz", "involutive-integral,central1,!central2"}) {
    auto sc = parse_constraint(c);
    auto r = enumerate(4, sc);
    CHECK(r.exhaustive);
    std::set<std::vector<int>> keys;
    for (const auto& m : r.models) {
      const auto& a = m.algebra;
      CHECK(canonical_form(a).same_tables(a));
      CHECK(a.zero == 0);
      CHECK(a.one == 1);
      CHECK(meets_constraint(a, sc));
      keys.insert(oracle::canonical_key(oracle::from(a)));
    }
    CHECK(keys.size() == r.models.size());
    for (std::size_t i = 1; i < r.models.size(); ++i)
      CHECK(oracle::key(oracle::from(r.models[i - 1].algebra)) < oracle::key(oracle::from(r.models[i].algebra)));
  }
}

TEST_CASE("anchors and recorded violations") {
  auto r = enumerate(4, parse_constraint("involutive-integral,central1,!central2"));
  for (const auto& m : r.models) {
    REQUIRE(m.anchor);
    auto o = oracle::from(m.algebra);
    CHECK(oracle::central1_at(o, static_cast<int>(*m.anchor)));
    CHECK_FALSE(oracle::central2_at(o, static_cast<int>(*m.anchor)));
    REQUIRE(m.violations.size() == 1);
    CHECK(m.violations[0].identity == "central2");
  }
}

TEST_CASE("the Łukasiewicz models of size 3 are the three-element MV chain") {
  auto ms = testing::models(3, "lukasiewicz");
  REQUIRE(ms.size() == 1);
  CHECK(are_isomorphic(ms[0], fixture_near_semiring("MV3")).has_value());
}

TEST_CASE("parallel search output is byte-identical to serial") {
  for (const char* c : {"near-semiring", "involutive", "lukasiewicz"}) {
    auto sc = parse_constraint(c);
    SearchOptions serial, parallel;
    parallel.threads = 4;
    CHECK(render_json(enumerate(4, sc, serial), sc) == render_json(enumerate(4, sc, parallel), sc));
    CHECK(render_text(enumerate(4, sc, serial), sc) == render_text(enumerate(4, sc, parallel), sc));
  }
  auto f = parse_constraint("involutive-integral,central1,!central2");
  SearchOptions p4;
  p4.threads = 4;
  CHECK(render_json(find_model(4, f), f) == render_json(find_model(4, f, p4), f));
}

TEST_CASE("size bound") {
  auto c = parse_constraint("near-semiring");
  CHECK_THROWS_AS(enumerate(7, c), BoundError);
  CHECK_THROWS_AS(find_model(7, c), BoundError);
  CHECK_THROWS_AS(enumerate(0, c), PreconditionError);
  SearchOptions big;
  big.allow_large = true;
  // allowed, and still answers quickly for a tight constraint
  auto r = find_model(7, parse_constraint("lukasiewicz,orthomodular"), big);
  REQUIRE_FALSE(r.models.empty());
  CHECK(r.models[0].algebra.n == 1);
}

TEST_CASE("model finding returns the first size with a model") {
  auto c = parse_constraint("lukasiewicz,!orthomodular");
  auto r = find_model(5, c);
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0].algebra.n == 3);
  CHECK(r.size_reached == 3);
  CHECK(are_isomorphic(r.models[0].algebra, fixture_near_semiring("MV3")).has_value());

  auto none = find_model(3, parse_constraint("involutive-integral,central2,!central1"));
  CHECK(none.models.empty());
  CHECK(none.exhaustive);
  CHECK(none.size_reached == 3);
}

TEST_CASE("isomorphism testing") {
  std::mt19937 rng(3);
  auto all = testing::models_upto(4, "involutive");
  for (std::size_t i = 0; i < all.size(); i += 7) {
    const auto& a = all[i];
    std::vector<Element> p(a.n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto b = relabel(a, p);
    auto iso = are_isomorphic(a, b);
    REQUIRE(iso);
    // the returned map carries the tables of a onto b
    for (Element x = 0; x < a.n; ++x)
      for (Element y = 0; y < a.n; ++y) {
        CHECK(b.add((*iso)[x], (*iso)[y]) == (*iso)[a.add(x, y)]);
        CHECK(b.mul((*iso)[x], (*iso)[y]) == (*iso)[a.mul(x, y)]);
      }
    CHECK(canonical_form(a).same_tables(canonical_form(b)));
  }
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 3)
      CHECK(are_isomorphic(all[i], all[j]).has_value() ==
            oracle::isomorphic(oracle::from(all[i]), oracle::from(all[j])));
  CHECK(are_isomorphic(fixture_near_semiring("BOOL4"),
                       product(fixture_near_semiring("BOOL2"), fixture_near_semiring("BOOL2"))));
  CHECK_FALSE(are_isomorphic(fixture_near_semiring("MV3"), fixture_near_semiring("BOOL4")));
  CHECK_THROWS_AS(are_isomorphic(fixture_near_semiring("EX24"), fixture_near_semiring("MV3")), PreconditionError);
}
