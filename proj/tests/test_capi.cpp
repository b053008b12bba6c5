#include <cstring>
#include <memory>
#include <string>
#include <thread>

#include "doctest.h"
#include "nslab/nslab.h"

namespace {

struct ObjDel {
  void operator()(nsl_object* o) const { nsl_free(o); }
};
struct RepDel {
  void operator()(nsl_report* r) const { nsl_report_free(r); }
};
using Obj = std::unique_ptr<nsl_object, ObjDel>;
using Rep = std::unique_ptr<nsl_report, RepDel>;

Obj fixture(const char* name) {
  nsl_object* o = nullptr;
  REQUIRE(nsl_fixture(name, &o) == NSL_OK);
  return Obj(o);
}

std::string text(const Rep& r) { return nsl_report_text(r.get()); }

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strlen(nsl_version()) > 0);
  CHECK(std::string(nsl_status_name(NSL_OK)) == "ok");
  for (int s = NSL_OK; s <= NSL_ERR_ARGUMENT; ++s) CHECK(std::strlen(nsl_status_name(static_cast<nsl_status>(s))) > 0);
}

TEST_CASE("parse and fixture errors set the last error") {
  nsl_object* o = nullptr;
  CHECK(nsl_parse("{", &o) == NSL_ERR_PARSE);
  CHECK(o == nullptr);
  CHECK(std::strlen(nsl_last_error()) > 0);
  CHECK(nsl_parse(R"({"name":"x","size":2,"zero":0,"one":1,"add":[[0,1],[1,9]],"mul":[[0,0],[0,1]]})", &o) ==
        NSL_ERR_RANGE);
  CHECK(nsl_parse(R"({"name":"x","size":0,"zero":0,"one":0,"add":[],"mul":[]})", &o) == NSL_ERR_STRUCTURE);
  CHECK(nsl_fixture("NOPE", &o) == NSL_ERR_PARSE);
  CHECK(contains(nsl_last_error(), "NOPE"));
  CHECK(nsl_parse(nullptr, &o) == NSL_ERR_ARGUMENT);
  CHECK(nsl_fixture("MV3", nullptr) == NSL_ERR_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  nsl_object* o = nullptr;
  CHECK(nsl_fixture("NOPE", &o) != NSL_OK);
  std::string other;
  std::thread t([&] {
    nsl_object* p = nullptr;
    CHECK(nsl_parse("[", &p) == NSL_ERR_PARSE);
    other = nsl_last_error();
  });
  t.join();
  CHECK(contains(nsl_last_error(), "NOPE"));
  CHECK_FALSE(contains(other, "NOPE"));
}

TEST_CASE("objects") {
  auto ex24 = fixture("EX24");
  CHECK(nsl_kind_of(ex24.get()) == NSL_NEAR_SEMIRING);
  CHECK(nsl_size(ex24.get()) == 3);
  CHECK(std::string(nsl_name(ex24.get())) == "EX24");
  uint32_t a = 0, one = 0, v = 9;
  REQUIRE(nsl_element(ex24.get(), "a", &a) == NSL_OK);
  REQUIRE(nsl_element(ex24.get(), "1", &one) == NSL_OK);
  REQUIRE(nsl_apply(ex24.get(), "+", a, one, &v) == NSL_OK);
  CHECK(v == a);
  REQUIRE(nsl_apply(ex24.get(), "*", one, a, &v) == NSL_OK);
  CHECK(v == a);
  CHECK(nsl_apply(ex24.get(), "alpha", 0, 0, &v) == NSL_ERR_ARGUMENT);
  CHECK(nsl_apply(ex24.get(), "+", 5, 0, &v) == NSL_ERR_RANGE);
  CHECK(nsl_apply(ex24.get(), "oplus", 0, 0, &v) == NSL_ERR_ARGUMENT);
  CHECK(nsl_element(ex24.get(), "zz", &v) == NSL_ERR_RANGE);

  auto basic = fixture("MV3-BASIC");
  CHECK(nsl_kind_of(basic.get()) == NSL_BASIC_ALGEBRA);
  REQUIRE(nsl_apply(basic.get(), "oplus", 1, 1, &v) == NSL_OK);
  CHECK(v == 2);
  REQUIRE(nsl_apply(basic.get(), "neg", 0, 0, &v) == NSL_OK);
  CHECK(v == 2);
  CHECK(nsl_kind_of(fixture("MO2-OML").get()) == NSL_ORTHOLATTICE);
}

TEST_CASE("translation, products and isomorphism") {
  auto basic = fixture("MV3-BASIC");
  nsl_object* raw = nullptr;
  REQUIRE(nsl_translate(basic.get(), "lns", &raw) == NSL_OK);
  Obj lns(raw);
  int iso = -1;
  REQUIRE(nsl_isomorphic(lns.get(), fixture("MV3").get(), &iso) == NSL_OK);
  CHECK(iso == 1);
  REQUIRE(nsl_translate(lns.get(), "basic", &raw) == NSL_OK);
  Obj back(raw);
  CHECK(nsl_kind_of(back.get()) == NSL_BASIC_ALGEBRA);
  CHECK(nsl_translate(fixture("EX28").get(), "basic", &raw) == NSL_ERR_PRECONDITION);
  CHECK(nsl_translate(lns.get(), "sideways", &raw) == NSL_ERR_ARGUMENT);

  REQUIRE(nsl_product(fixture("BOOL2").get(), fixture("BOOL2").get(), &raw) == NSL_OK);
  Obj p(raw);
  CHECK(nsl_size(p.get()) == 4);
  REQUIRE(nsl_isomorphic(p.get(), fixture("BOOL4").get(), &iso) == NSL_OK);
  CHECK(iso == 1);
  REQUIRE(nsl_isomorphic(p.get(), fixture("MV3").get(), &iso) == NSL_OK);
  CHECK(iso == 0);

  REQUIRE(nsl_as_near_semiring(fixture("MO2-OML").get(), &raw) == NSL_OK);
  Obj ons(raw);
  REQUIRE(nsl_isomorphic(ons.get(), fixture("MO2").get(), &iso) == NSL_OK);
  CHECK(iso == 1);
}

TEST_CASE("check reports") {
  nsl_report* raw = nullptr;
  REQUIRE(nsl_check(fixture("EX24").get(), "integral", NSL_TEXT, &raw) == NSL_OK);
  Rep r(raw);
  CHECK_FALSE(nsl_report_passed(r.get()));
  CHECK(contains(text(r), "integral (a): a+1=a"));

  REQUIRE(nsl_check(fixture("EX28").get(), "involutive", NSL_JSON, &raw) == NSL_OK);
  Rep j(raw);
  CHECK(nsl_report_passed(j.get()));
  CHECK(contains(text(j), "\"passed\": true"));

  // α present but not an involution: the requested profile fails with a note
  REQUIRE(nsl_check(fixture("APXA").get(), "lukasiewicz", NSL_TEXT, &raw) == NSL_OK);
  Rep pre(raw);
  CHECK_FALSE(nsl_report_passed(pre.get()));
  CHECK(contains(text(pre), "prerequisite"));
  CHECK(nsl_check(fixture("EX24").get(), "lukasiewicz", NSL_TEXT, &raw) == NSL_ERR_PRECONDITION);

  CHECK(nsl_check(fixture("EX24").get(), "nonsense", NSL_TEXT, &raw) == NSL_ERR_ARGUMENT);
  CHECK(nsl_check(fixture("EX24").get(), "integral", NSL_DOT, &raw) == NSL_ERR_ARGUMENT);
  CHECK(nsl_check(nullptr, "integral", NSL_TEXT, &raw) == NSL_ERR_ARGUMENT);

  REQUIRE(nsl_check(fixture("MO2-OML").get(), "oml", NSL_TEXT, &raw) == NSL_OK);
  Rep oml(raw);
  CHECK(nsl_report_passed(oml.get()));
  REQUIRE(nsl_check(fixture("O6").get(), "oml", NSL_TEXT, &raw) == NSL_OK);
  Rep o6(raw);
  CHECK_FALSE(nsl_report_passed(o6.get()));
}

TEST_CASE("suites, orders and congruences") {
  nsl_report* raw = nullptr;
  for (const char* s : {"core", "lukasiewicz", "sectional", "central", "witness", "duality"}) {
    CAPTURE(s);
    REQUIRE(nsl_properties(fixture("MV3").get(), s, NSL_TEXT, &raw) == NSL_OK);
    Rep r(raw);
    CHECK(nsl_report_passed(r.get()));
  }
  REQUIRE(nsl_properties(fixture("MO2").get(), "orthomodular", NSL_JSON, &raw) == NSL_OK);
  Rep om(raw);
  CHECK(nsl_report_passed(om.get()));

  REQUIRE(nsl_order(fixture("EX24").get(), "mul", NSL_DOT, &raw) == NSL_OK);
  Rep dot(raw);
  CHECK(contains(text(dot), "digraph"));
  CHECK(nsl_order(fixture("EX24").get(), "diagonal", NSL_TEXT, &raw) == NSL_ERR_ARGUMENT);

  REQUIRE(nsl_congruences(fixture("MV3*BOOL2").get(), NSL_TEXT, &raw) == NSL_OK);
  Rep c(raw);
  CHECK(nsl_report_passed(c.get()));
  CHECK(contains(text(c), "#0"));
}

TEST_CASE("round trips, centre and decomposition") {
  nsl_report* raw = nullptr;
  REQUIRE(nsl_roundtrip(fixture("MV3").get(), "basic", 0, NSL_TEXT, &raw) == NSL_OK);
  Rep rt(raw);
  CHECK(nsl_report_passed(rt.get()));
  REQUIRE(nsl_roundtrip(fixture("MO2").get(), "oml", 1, NSL_JSON, &raw) == NSL_OK);
  Rep rt2(raw);
  CHECK(nsl_report_passed(rt2.get()));
  CHECK(nsl_roundtrip(fixture("MV3").get(), "oml", 0, NSL_TEXT, &raw) == NSL_ERR_PRECONDITION);

  REQUIRE(nsl_center(fixture("MV3*BOOL2").get(), "all", NSL_JSON, &raw) == NSL_OK);
  Rep c(raw);
  CHECK(nsl_report_passed(c.get()));
  CHECK(nsl_center(fixture("MV3").get(), "astrology", NSL_TEXT, &raw) == NSL_ERR_ARGUMENT);

  REQUIRE(nsl_decompose(fixture("BOOL4").get(), NSL_TEXT, &raw) == NSL_OK);
  Rep d(raw);
  CHECK(nsl_report_passed(d.get()));
  REQUIRE(nsl_report_model_count(d.get()) == 2);
  nsl_object* f = nullptr;
  REQUIRE(nsl_report_model(d.get(), 0, &f) == NSL_OK);
  Obj factor(f);
  int iso = 0;
  REQUIRE(nsl_isomorphic(factor.get(), fixture("BOOL2").get(), &iso) == NSL_OK);
  CHECK(iso == 1);
  CHECK(nsl_report_model(d.get(), 2, &f) == NSL_ERR_RANGE);
}

TEST_CASE("search") {
  nsl_report* raw = nullptr;
  nsl_search_options opt{1, 0};
  REQUIRE(nsl_enumerate(3, "near-semiring", &opt, NSL_JSON, &raw) == NSL_OK);
  Rep e(raw);
  CHECK(nsl_report_model_count(e.get()) == 6);
  CHECK(nsl_report_elapsed(e.get()) >= 0);
  CHECK(nsl_enumerate(7, "near-semiring", &opt, NSL_TEXT, &raw) == NSL_ERR_BOUND);
  CHECK(nsl_enumerate(3, "bogus", &opt, NSL_TEXT, &raw) == NSL_ERR_PARSE);
  REQUIRE(nsl_enumerate(3, "lukasiewicz", nullptr, NSL_TEXT, &raw) == NSL_OK);
  Rep l(raw);
  CHECK(nsl_report_model_count(l.get()) == 1);

  REQUIRE(nsl_find(4, "lukasiewicz", "orthomodular", &opt, NSL_TEXT, &raw) == NSL_OK);
  Rep f(raw);
  CHECK(nsl_report_passed(f.get()));
  nsl_object* m = nullptr;
  REQUIRE(nsl_report_model(f.get(), 0, &m) == NSL_OK);
  Obj model(m);
  CHECK(nsl_size(model.get()) == 3);

  REQUIRE(nsl_find(3, "involutive-integral,central2", "central1", &opt, NSL_TEXT, &raw) == NSL_OK);
  Rep none(raw);
  CHECK_FALSE(nsl_report_passed(none.get()));
  CHECK(nsl_report_model_count(none.get()) == 0);
}

TEST_CASE("documents and the fixture list") {
  nsl_report* raw = nullptr;
  REQUIRE(nsl_document(fixture("EX28").get(), &raw) == NSL_OK);
  Rep d(raw);
  nsl_object* o = nullptr;
  REQUIRE(nsl_parse(nsl_report_text(d.get()), &o) == NSL_OK);
  Obj back(o);
  int iso = 0;
  REQUIRE(nsl_isomorphic(back.get(), fixture("EX28").get(), &iso) == NSL_OK);
  CHECK(iso == 1);

  REQUIRE(nsl_fixture_list(NSL_TEXT, &raw) == NSL_OK);
  Rep list(raw);
  for (const char* n : {"EX24", "EX28", "APXA", "APXB", "MV3", "MO2", "BOOL2", "BOOL4"}) CHECK(contains(text(list), n));

  nsl_free(nullptr);
  nsl_report_free(nullptr);
}
