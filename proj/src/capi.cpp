#include "nslab/nslab.h"

#include <new>
#include <string>

#include "json.hpp"
#include "nslab/center.hpp"
#include "nslab/congruence.hpp"
#include "nslab/error.hpp"
#include "nslab/fixtures.hpp"
#include "nslab/io.hpp"
#include "nslab/search.hpp"
#include "nslab/transforms.hpp"
#include "nslab/varieties.hpp"

struct nsl_object {
  nsl::Structure value;
};

struct nsl_report {
  std::string text;
  bool passed = true;
  double elapsed = 0;
  std::vector<nsl::FiniteNearSemiring> models;
};

namespace {

using nlohmann::json;
using namespace nsl;

thread_local std::string last_error;

struct ArgumentError : Error {
  using Error::Error;
};

nsl_status fail(nsl_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
nsl_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return NSL_OK;
  } catch (const ArgumentError& e) {
    return fail(NSL_ERR_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(NSL_ERR_PARSE, e.what());
  } catch (const RangeError& e) {
    return fail(NSL_ERR_RANGE, e.what());
  } catch (const StructureError& e) {
    return fail(NSL_ERR_STRUCTURE, e.what());
  } catch (const PreconditionError& e) {
    return fail(NSL_ERR_PRECONDITION, e.what());
  } catch (const BoundError& e) {
    return fail(NSL_ERR_BOUND, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NSL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NSL_ERR_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " must not be null");
}

FiniteNearSemiring near_semiring(const nsl_object* obj) { return as_near_semiring(obj->value); }

nsl_object* wrap(Structure s) { return new nsl_object{std::move(s)}; }

void emit(nsl_report** out, std::string text, bool passed, double elapsed = 0) {
  auto* r = new nsl_report;
  r->text = std::move(text);
  r->passed = passed;
  r->elapsed = elapsed;
  *out = r;
}

void no_dot(nsl_format fmt) {
  if (fmt == NSL_DOT) throw ArgumentError("DOT output is only available for orders and congruences");
}

template <class R, class L>
std::string render(nsl_format fmt, const R& r, const L& l) {
  no_dot(fmt);
  return fmt == NSL_JSON ? render_json(r, l) : render_text(r, l);
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

// A failed prerequisite is reported as the requested profile failing.
CheckReport prerequisite_failed(CheckReport pre, const std::string& profile) {
  pre.notes.push_back("prerequisite " + pre.profile + " not met");
  pre.profile = profile;
  return pre;
}

CheckReport run_check(const nsl_object* obj, const std::string& profile) {
  if (profile == "basic") {
    auto* b = std::get_if<BasicAlgebra>(&obj->value);
    if (!b) throw PreconditionError("profile basic applies to basic-algebra documents");
    return check_basic_algebra(*b);
  }
  if (profile == "oml") {
    auto* l = std::get_if<OrthoLattice>(&obj->value);
    if (!l) throw PreconditionError("profile oml applies to ortholattice documents");
    return check_oml(*l);
  }
  auto a = near_semiring(obj);
  if (auto p = parse_profile(profile)) {
    if (profile_needs_involution(*p) && !a.inv) throw PreconditionError("profile " + profile + " needs α");
    return check_axioms(a, *p);
  }
  auto involutive = [&]() -> std::optional<CheckReport> {
    if (!a.inv) throw PreconditionError("profile " + profile + " needs α");
    auto r = check_axioms(a, AxiomProfile::Involutive);
    if (!r.passed) return r;
    return std::nullopt;
  };
  if (profile == "involution") {
    if (!a.inv) throw PreconditionError("profile involution needs α");
    auto idem = check_axioms(a, AxiomProfile::IdempotentAdd);
    if (!idem.passed) return prerequisite_failed(idem, profile);
    return check_involution(a);
  }
  if (profile == "lukasiewicz") {
    if (auto pre = involutive()) return prerequisite_failed(*pre, profile);
    return check_lukasiewicz(a);
  }
  if (profile == "orthomodular") {
    if (auto pre = involutive()) return prerequisite_failed(*pre, profile);
    auto l = check_lukasiewicz(a);
    if (!l.passed) return prerequisite_failed(l, profile);
    return check_orthomodular_ns(a);
  }
  if (profile == "church") {
    if (auto pre = involutive()) return prerequisite_failed(*pre, profile);
    return check_church(a);
  }
  throw ArgumentError("unknown profile '" + profile + "'");
}

std::vector<PropertyReport> run_suite(const nsl_object* obj, const std::string& suite, std::vector<CheckReport>& checks) {
  std::vector<PropertyReport> out;
  if (suite == "oml") {
    if (auto* l = std::get_if<OrthoLattice>(&obj->value)) {
      out.push_back(oml_commutes_suite(*l));
    } else {
      out.push_back(oml_commutes_suite(oml_from_ons(near_semiring(obj))));
    }
    return out;
  }
  auto a = near_semiring(obj);
  if (suite == "core") {
    out.push_back(core_property_suite(a));
  } else if (suite == "lukasiewicz") {
    out.push_back(lukasiewicz_suite(a));
  } else if (suite == "sectional") {
    out.push_back(sectional_suite(a));
  } else if (suite == "orthomodular") {
    checks.push_back(check_orthomodular_ns(a));
  } else if (suite == "witness") {
    out.push_back(witness_term_checks(a));
  } else if (suite == "duality") {
    out.push_back(duality_suite(a, dual_algebra(a)));
  } else if (suite == "central") {
    for (Element e : central_elements(a, {CentralMethod::Equational}).centrals) {
      auto r = central_lemma_suite(a, e);
      r.suite = "central[" + a.label(e) + "]";
      out.push_back(std::move(r));
    }
  } else {
    throw ArgumentError("unknown suite '" + suite + "'");
  }
  return out;
}

SearchOptions options(const nsl_search_options* o) {
  SearchOptions s;
  if (o) {
    s.threads = o->threads ? o->threads : 1;
    s.allow_large = o->allow_large != 0;
  }
  return s;
}

void search_report(nsl_report** out, const SearchResult& r, const SearchConstraint& c, nsl_format fmt, bool passed) {
  no_dot(fmt);
  emit(out, fmt == NSL_JSON ? render_json(r, c) : render_text(r, c), passed, r.elapsed_seconds);
  for (const auto& m : r.models) (*out)->models.push_back(m.algebra);
}

}  // namespace

extern "C" {

const char* nsl_version(void) { return "0.1.0"; }

const char* nsl_last_error(void) { return last_error.c_str(); }

const char* nsl_status_name(nsl_status s) {
  switch (s) {
    case NSL_OK: return "ok";
    case NSL_ERR_PARSE: return "parse error";
    case NSL_ERR_RANGE: return "range error";
    case NSL_ERR_STRUCTURE: return "structure error";
    case NSL_ERR_PRECONDITION: return "precondition not met";
    case NSL_ERR_BOUND: return "search bound exceeded";
    case NSL_ERR_INTERNAL: return "internal error";
    case NSL_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

nsl_status nsl_parse(const char* text, nsl_object** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_document(text));
  });
}

nsl_status nsl_fixture(const char* name, nsl_object** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = wrap(fixture(name));
  });
}

void nsl_free(nsl_object* obj) { delete obj; }

nsl_kind nsl_kind_of(const nsl_object* obj) { return static_cast<nsl_kind>(obj->value.index()); }

size_t nsl_size(const nsl_object* obj) {
  return std::visit([](const auto& x) { return x.n; }, obj->value);
}

const char* nsl_name(const nsl_object* obj) {
  return std::visit([](const auto& x) { return x.name.c_str(); }, obj->value);
}

nsl_status nsl_apply(const nsl_object* obj, const char* op, uint32_t x, uint32_t y, uint32_t* out) {
  return guard([&] {
    need(obj, "obj");
    need(op, "op");
    need(out, "out");
    const std::string o = op;
    const std::size_t n = nsl_size(obj);
    if (x >= n || y >= n) throw RangeError("argument out of range");
    auto unknown = [&] { throw ArgumentError("operation '" + o + "' not available on this structure"); };
    if (auto* a = std::get_if<FiniteNearSemiring>(&obj->value)) {
      if (o == "+") *out = a->add(x, y);
      else if (o == "*") *out = a->mul(x, y);
      else if (o == "alpha" && a->inv) *out = (*a->inv)[x];
      else unknown();
    } else if (auto* b = std::get_if<BasicAlgebra>(&obj->value)) {
      if (o == "oplus") *out = b->oplus(x, y);
      else if (o == "neg") *out = b->neg[x];
      else unknown();
    } else {
      const auto& l = std::get<OrthoLattice>(obj->value);
      if (o == "join") *out = l.join(x, y);
      else if (o == "ortho") *out = l.ortho[x];
      else unknown();
    }
  });
}

nsl_status nsl_element(const nsl_object* obj, const char* label, uint32_t* out) {
  return guard([&] {
    need(obj, "obj");
    need(label, "label");
    need(out, "out");
    *out = element_named(near_semiring(obj), label);
  });
}

nsl_status nsl_as_near_semiring(const nsl_object* obj, nsl_object** out) {
  return guard([&] {
    need(obj, "obj");
    need(out, "out");
    *out = wrap(near_semiring(obj));
  });
}

nsl_status nsl_product(const nsl_object* a, const nsl_object* b, nsl_object** out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = wrap(product(near_semiring(a), near_semiring(b)));
  });
}

nsl_status nsl_translate(const nsl_object* obj, const char* target, nsl_object** out) {
  return guard([&] {
    need(obj, "obj");
    need(target, "target");
    need(out, "out");
    const std::string t = target;
    const auto& v = obj->value;
    if (t == "basic") {
      auto* a = std::get_if<FiniteNearSemiring>(&v);
      if (!a) throw PreconditionError("translation to basic needs a near semiring");
      *out = wrap(basic_from_lns(*a));
    } else if (t == "lns") {
      auto* b = std::get_if<BasicAlgebra>(&v);
      if (!b) throw PreconditionError("translation to lns needs a basic algebra");
      *out = wrap(lns_from_basic(*b));
    } else if (t == "ons") {
      auto* l = std::get_if<OrthoLattice>(&v);
      if (!l) throw PreconditionError("translation to ons needs an ortholattice");
      *out = wrap(ons_from_oml(*l));
    } else if (t == "oml") {
      auto* a = std::get_if<FiniteNearSemiring>(&v);
      if (!a) throw PreconditionError("translation to oml needs a near semiring");
      *out = wrap(oml_from_ons(*a));
    } else {
      throw ArgumentError("unknown target '" + t + "'");
    }
  });
}

nsl_status nsl_isomorphic(const nsl_object* a, const nsl_object* b, int* out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = are_isomorphic(near_semiring(a), near_semiring(b)).has_value() ? 1 : 0;
  });
}

nsl_status nsl_document(const nsl_object* obj, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(out, "out");
    emit(out, to_document(obj->value), true);
  });
}

nsl_status nsl_fixture_list(nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(out, "out");
    no_dot(fmt);
    const auto& list = fixture_list();
    std::string text;
    if (fmt == NSL_JSON) {
      json j = json::array();
      for (const auto& f : list)
        j.push_back({{"name", f.name},
                     {"kind", std::string(kind_name(f.kind))},
                     {"derived", f.derived},
                     {"description", f.description}});
      text = j.dump(2) + "\n";
    } else {
      for (const auto& f : list) {
        std::string line = f.name;
        line.resize(std::max<std::size_t>(line.size() + 1, 11), ' ');
        std::string kind(kind_name(f.kind));
        kind.resize(15, ' ');
        text += line + kind + (f.derived ? "derived  " : "stored   ") + f.description + "\n";
      }
    }
    emit(out, std::move(text), true);
  });
}

nsl_status nsl_check(const nsl_object* obj, const char* profile, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(profile, "profile");
    need(out, "out");
    auto r = run_check(obj, profile);
    LabelFn label = [obj](Element x) {
      return std::visit([x](const auto& s) { return s.label(x); }, obj->value);
    };
    emit(out, render(fmt, r, label), r.passed);
  });
}

nsl_status nsl_properties(const nsl_object* obj, const char* suite, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(suite, "suite");
    need(out, "out");
    no_dot(fmt);
    std::vector<CheckReport> checks;
    auto reports = run_suite(obj, suite, checks);
    LabelFn label = [obj](Element x) {
      return std::visit([x](const auto& s) { return s.label(x); }, obj->value);
    };
    bool passed = true;
    std::string text;
    json arr = json::array();
    for (const auto& c : checks) {
      passed = passed && c.passed;
      if (fmt == NSL_JSON) arr.push_back(json::parse(render_json(c, label)));
      else text += render_text(c, label);
    }
    for (const auto& r : reports) {
      passed = passed && r.passed();
      if (fmt == NSL_JSON) arr.push_back(json::parse(render_json(r, label)));
      else text += render_text(r, label);
    }
    if (fmt == NSL_JSON) text = json{{"suite", suite}, {"passed", passed}, {"reports", arr}}.dump(2) + "\n";
    else if (reports.empty() && checks.empty()) text = std::string("suite ") + suite + ": nothing to check\n";
    emit(out, std::move(text), passed);
  });
}

nsl_status nsl_order(const nsl_object* obj, const char* which, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(which, "which");
    need(out, "out");
    const std::string w = which;
    if (w != "sum" && w != "mul") throw ArgumentError("order must be sum or mul");
    auto a = near_semiring(obj);
    auto r = induced_order(a, w == "sum" ? OrderKind::Sum : OrderKind::Mul);
    std::string text = fmt == NSL_DOT ? render_dot(r, a) : fmt == NSL_JSON ? render_json(r, a) : render_text(r, a);
    emit(out, std::move(text), true);
  });
}

nsl_status nsl_roundtrip(const nsl_object* obj, const char* via, int verbose, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(via, "via");
    need(out, "out");
    const std::string v = via;
    const bool all = verbose != 0;
    RoundTripReport r;
    if (v == "basic") {
      if (auto* b = std::get_if<BasicAlgebra>(&obj->value)) r = roundtrip_basic(*b, all);
      else if (auto* a = std::get_if<FiniteNearSemiring>(&obj->value)) r = roundtrip_via_basic(*a, all);
      else throw PreconditionError("basic round trip needs a near semiring or a basic algebra");
    } else if (v == "oml") {
      if (auto* l = std::get_if<OrthoLattice>(&obj->value)) r = roundtrip_oml(*l, all);
      else if (auto* a = std::get_if<FiniteNearSemiring>(&obj->value)) r = roundtrip_via_oml(*a, all);
      else throw PreconditionError("oml round trip needs a near semiring or an ortholattice");
    } else {
      throw ArgumentError("round trip must be via basic or oml");
    }
    LabelFn label = [obj](Element x) {
      return std::visit([x](const auto& s) { return s.label(x); }, obj->value);
    };
    emit(out, render(fmt, r, label), r.pointwise_equal);
  });
}

nsl_status nsl_congruences(const nsl_object* obj, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(out, "out");
    auto a = near_semiring(obj);
    auto cons = all_congruences(a);
    auto lattice = congruence_lattice_suite(cons);
    std::string text;
    if (fmt == NSL_DOT) {
      text = render_dot(cons, a);
    } else if (fmt == NSL_JSON) {
      json j = json::parse(render_json(cons, a));
      j["lattice"] = json::parse(render_json(lattice, labels_of(a)));
      text = j.dump(2) + "\n";
    } else {
      text = render_text(cons, a) + render_text(lattice, labels_of(a));
    }
    emit(out, std::move(text), true);
  });
}

nsl_status nsl_center(const nsl_object* obj, const char* method, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(out, "out");
    no_dot(fmt);
    const std::string m = method ? method : "equational";
    std::vector<CentralMethod> methods;
    if (m == "all") {
      methods = {CentralMethod::Equational, CentralMethod::Full, CentralMethod::Congruence};
    } else if (auto p = parse_method(m)) {
      methods = {*p};
    } else {
      throw ArgumentError("unknown method '" + m + "'");
    }
    auto a = near_semiring(obj);
    auto r = central_elements(a, methods);
    r.boolean_check = center_algebra(a).boolean_check;
    const bool passed = r.methods_agree && (!r.boolean_check || r.boolean_check->passed);
    emit(out, fmt == NSL_JSON ? render_json(r, a) : render_text(r, a), passed);
  });
}

nsl_status nsl_decompose(const nsl_object* obj, nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(obj, "obj");
    need(out, "out");
    no_dot(fmt);
    auto a = near_semiring(obj);
    auto d = decompose(a);
    emit(out, fmt == NSL_JSON ? render_json(d, a) : render_text(d, a), d.ok());
    for (const auto& f : d.factors) (*out)->models.push_back(f);
  });
}

nsl_status nsl_enumerate(size_t n, const char* constraint, const nsl_search_options* opt, nsl_format fmt,
                         nsl_report** out) {
  return guard([&] {
    need(out, "out");
    auto c = parse_constraint(str(constraint));
    auto r = enumerate(n, c, options(opt));
    search_report(out, r, c, fmt, true);
  });
}

nsl_status nsl_find(size_t n_max, const char* satisfy, const char* violate, const nsl_search_options* opt,
                    nsl_format fmt, nsl_report** out) {
  return guard([&] {
    need(out, "out");
    std::string text = str(satisfy);
    const std::string v = str(violate);
    std::size_t start = 0;
    while (start < v.size()) {
      std::size_t end = v.find(',', start);
      if (end == std::string::npos) end = v.size();
      std::string item = v.substr(start, end - start);
      if (!item.empty()) text += (text.empty() ? "!" : ",!") + item;
      start = end + 1;
    }
    auto c = parse_constraint(text);
    auto r = find_model(n_max, c, options(opt));
    search_report(out, r, c, fmt, !r.models.empty());
  });
}

int nsl_report_passed(const nsl_report* r) { return r && r->passed ? 1 : 0; }

const char* nsl_report_text(const nsl_report* r) { return r ? r->text.c_str() : ""; }

double nsl_report_elapsed(const nsl_report* r) { return r ? r->elapsed : 0; }

size_t nsl_report_model_count(const nsl_report* r) { return r ? r->models.size() : 0; }

nsl_status nsl_report_model(const nsl_report* r, size_t i, nsl_object** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    if (i >= r->models.size()) throw RangeError("model index out of range");
    *out = wrap(r->models[i]);
  });
}

void nsl_report_free(nsl_report* r) { delete r; }

}  // extern "C"
