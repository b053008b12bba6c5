#include <algorithm>

#include "doctest.h"
#include "nslab/congruence.hpp"
#include "nslab/error.hpp"
#include "nslab/varieties.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nsl;

namespace {

std::vector<std::vector<Element>> block_maps(const std::vector<Congruence>& cs) {
  std::vector<std::vector<Element>> out;
  for (const auto& c : cs) out.push_back(c.blocks());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Element>> oracle_maps(const oracle::Alg& o) {
  std::vector<std::vector<Element>> out;
  for (const auto& p : oracle::congruences(o)) out.emplace_back(p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteNearSemiring> sample() {
  auto all = testing::models_upto(3, "near-semiring");
  for (auto& m : testing::models(4, "near-semiring")) all.push_back(m);
  for (auto& m : testing::models_upto(4, "involutive")) all.push_back(m);
  for (const auto& f : testing::fixture_algebras()) all.push_back(f);
  return all;
}

// Łukasiewicz fixtures and models up to size 4.
std::vector<FiniteNearSemiring> lukasiewicz_sample() {
  std::vector<FiniteNearSemiring> out;
  for (const auto& f : testing::fixture_algebras())
    if (is_lukasiewicz(f)) out.push_back(f);
  out.push_back(fixture_near_semiring("MV3*BOOL2"));
  for (auto& m : testing::models_upto(4, "lukasiewicz")) out.push_back(m);
  return out;
}

bool relation_equal(const Relation& a, const Relation& b) { return a == b; }

}  // namespace

TEST_CASE("congruence blocks are canonical") {
  Congruence c({5, 2, 5, 9});
  CHECK(c.blocks() == std::vector<Element>{0, 1, 0, 2});
  CHECK(c.block_count() == 3);
  CHECK(Congruence::identity(3).is_identity());
  CHECK(Congruence::all(3).is_all());
  CHECK(Congruence::identity(3).finer_than(c));
  CHECK(c.finer_than(Congruence::all(4)));
  CHECK(c.classes() == std::vector<std::vector<Element>>{{0, 2}, {1}, {3}});
}

TEST_CASE("the lattice matches a brute-force search over all partitions") {
  for (const auto& a : sample()) {
    auto cons = all_congruences(a);
    CHECK(block_maps(cons) == oracle_maps(oracle::from(a)));
    CHECK(std::is_sorted(cons.begin(), cons.end()));
    CHECK(std::adjacent_find(cons.begin(), cons.end()) == cons.end());
  }
}

TEST_CASE("principal congruences are the least ones identifying the pair") {
  for (const auto& a : testing::models_upto(4, "involutive")) {
    auto o = oracle::from(a);
    for (Element x = 0; x < a.n; ++x)
      for (Element y = 0; y < a.n; ++y) {
        auto p = principal_congruence(a, x, y);
        auto expect = oracle::principal(o, static_cast<int>(x), static_cast<int>(y));
        CHECK(p == Congruence(std::vector<Element>(expect.begin(), expect.end())));
      }
  }
}

TEST_CASE("join, meet and composition") {
  auto a = fixture_near_semiring("MV3*BOOL2");
  auto cons = all_congruences(a);
  REQUIRE(cons.size() == 4);
  for (const auto& p : cons)
    for (const auto& q : cons) {
      auto j = join(p, q), m = meet(p, q);
      CHECK(p.finer_than(j));
      CHECK(q.finer_than(j));
      CHECK(m.finer_than(p));
      CHECK(m.finer_than(q));
      CHECK(std::find(cons.begin(), cons.end(), j) != cons.end());
      CHECK(std::find(cons.begin(), cons.end(), m) != cons.end());
      auto pq = compose(p, q);
      for (Element x = 0; x < a.n; ++x)
        for (Element z = 0; z < a.n; ++z) {
          bool expect = false;
          for (Element y = 0; y < a.n; ++y) expect = expect || (p.same(x, y) && q.same(y, z));
          CHECK(pq(x, z) == expect);
        }
    }
}

TEST_CASE("compatibility failures are reported") {
  auto a = fixture_near_semiring("MV3");
  // {0,1/2}{1} is not compatible with α
  Congruence c({0, 0, 1});
  CHECK_FALSE(is_compatible(a, c));
  CHECK(compatibility_failure(a, c).has_value());
  CHECK(is_compatible(a, Congruence::identity(3)));
}

TEST_CASE("factor pairs") {
  auto a = fixture_near_semiring("BOOL4");
  auto cons = all_congruences(a);
  int pairs = 0;
  for (const auto& p : cons)
    for (const auto& q : cons) {
      const bool f = is_factor_pair(a, p, q);
      auto o = oracle::from(a);
      CHECK(f == oracle::factor_pair(o, std::vector<int>(p.blocks().begin(), p.blocks().end()),
                                     std::vector<int>(q.blocks().begin(), q.blocks().end())));
      pairs += f;
    }
  // (Δ,∇), (∇,Δ) and the two coordinate projections in both orders
  CHECK(pairs == 4);
  CHECK_THROWS_AS(is_factor_pair(fixture_near_semiring("MV3"), Congruence({0, 0, 1}), Congruence::identity(3)),
                  PreconditionError);
}

TEST_CASE("quotients") {
  auto a = fixture_near_semiring("MV3*BOOL2");
  for (const auto& c : all_congruences(a)) {
    auto q = quotient(a, c);
    CHECK(q.n == c.block_count());
    CHECK(satisfies(q, AxiomProfile::InvolutiveIntegral));
    for (Element x = 0; x < a.n; ++x)
      for (Element y = 0; y < a.n; ++y) {
        CHECK(q.add(c.block(x), c.block(y)) == c.block(a.add(x, y)));
        CHECK(q.mul(c.block(x), c.block(y)) == c.block(a.mul(x, y)));
      }
  }
}

TEST_CASE("witness terms hold on Łukasiewicz algebras") {
  for (const auto& a : lukasiewicz_sample()) {
    CHECK(witness_term_checks(a).passed());
    auto o = oracle::from(a);
    auto p = [&](int x, int y, int z) {
      return o.al(o.a(o.m(o.al(o.m(x, o.al(y))), o.al(z)), o.m(o.al(o.m(z, o.al(y))), o.al(x))));
    };
    auto maj = [&](int x, int y, int z) {
      return o.a(o.a(o.al(o.a(o.al(x), o.al(y))), o.al(o.a(o.al(y), o.al(z)))), o.al(o.a(o.al(z), o.al(x))));
    };
    CHECK(oracle::all2(o.n, [&](int x, int y) { return p(x, y, y) == x && p(x, x, y) == y; }));
    CHECK(oracle::all2(o.n, [&](int x, int y) { return maj(x, x, y) == x && maj(x, y, x) == x && maj(y, x, x) == x; }));
  }
  CHECK_THROWS_AS(witness_term_checks(fixture_near_semiring("EX28")), PreconditionError);
}

TEST_CASE("Łukasiewicz congruences permute and form a distributive lattice") {
  for (const auto& a : lukasiewicz_sample()) {
    auto cons = all_congruences(a);
    CHECK(congruence_lattice_suite(cons).passed());
    for (const auto& p : cons)
      for (const auto& q : cons) {
        CHECK(relation_equal(compose(p, q), compose(q, p)));
        for (const auto& r : cons) CHECK(meet(p, join(q, r)) == join(meet(p, q), meet(p, r)));
      }
  }
}

TEST_CASE("lattice suite notices non-permuting congruences") {
  // some near semiring of size 4 has congruences that do not permute
  bool seen = false;
  for (const auto& a : testing::models(4, "near-semiring")) {
    auto cons = all_congruences(a);
    if (!congruence_lattice_suite(cons).find("permutable")->passed) {
      seen = true;
      bool found = false;
      for (const auto& p : cons)
        for (const auto& q : cons) found = found || !(compose(p, q) == compose(q, p));
      CHECK(found);
    }
  }
  CHECK(seen);
}
