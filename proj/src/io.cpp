#include "nslab/io.hpp"

#include <sstream>

#include "json.hpp"
#include "nslab/error.hpp"

namespace nsl {

using nlohmann::json;

namespace {

// --- reading -----------------------------------------------------------------

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Element element_value(const json& v, std::size_t n, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<unsigned long long>(x) >= n)
    throw RangeError(std::string(what) + ": entry " + std::to_string(x) + " out of range for size " +
                     std::to_string(n));
  return static_cast<Element>(x);
}

BinaryTable matrix(const json& doc, const char* key, std::size_t n) {
  const json& m = field(doc, key);
  if (!m.is_array() || m.size() != n) throw ParseError(std::string("'") + key + "' must have " + std::to_string(n) + " rows");
  std::vector<Element> entries;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != n)
      throw ParseError(std::string("'") + key + "' rows must have " + std::to_string(n) + " entries");
    for (const auto& v : row) entries.push_back(element_value(v, n, key));
  }
  return BinaryTable(n, std::move(entries));
}

UnaryTable vector_field(const json& v, const char* key, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw ParseError(std::string("'") + key + "' must have " + std::to_string(n) + " entries");
  UnaryTable t;
  for (const auto& x : v) t.push_back(element_value(x, n, key));
  return t;
}

std::size_t size_field(const json& doc) {
  const json& s = field(doc, "size");
  if (!s.is_number_integer()) throw ParseError("'size' must be an integer");
  const auto n = s.get<long long>();
  if (n <= 0) throw StructureError("universe must not be empty");
  if (n > 4096) throw StructureError("universe too large");
  return static_cast<std::size_t>(n);
}

std::string string_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) return {};
  if (!it->is_string()) throw ParseError(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

std::vector<std::string> labels_field(const json& doc, std::size_t n) {
  auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array() || it->size() != n) throw ParseError("'labels' must have one entry per element");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw ParseError("labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// --- writing -----------------------------------------------------------------

void write_matrix(std::ostringstream& os, const char* key, const BinaryTable& t) {
  os << "  \"" << key << "\": [\n";
  for (Element x = 0; x < t.size(); ++x) {
    os << "    [";
    for (Element y = 0; y < t.size(); ++y) os << (y ? ", " : "") << t(x, y);
    os << "]" << (x + 1 < t.size() ? "," : "") << "\n";
  }
  os << "  ]";
}

void write_vector(std::ostringstream& os, const char* key, const UnaryTable& t) {
  os << "  \"" << key << "\": [";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << "]";
}

void write_header(std::ostringstream& os, const std::string& name, const std::string& comment, std::size_t n,
                  const std::vector<std::string>& labels) {
  os << "{\n  \"name\": " << json(name).dump() << ",\n";
  if (!comment.empty()) os << "  \"comment\": " << json(comment).dump() << ",\n";
  os << "  \"size\": " << n << ",\n";
  if (!labels.empty()) os << "  \"labels\": " << json(labels).dump() << ",\n";
}

std::string tuple_text(const Tuple& t, const LabelFn& label) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + label(t[i]);
  return s + ")";
}

json tuple_json(const Tuple& t) { return json(std::vector<Element>(t.begin(), t.end())); }

json tuple_labels(const Tuple& t, const LabelFn& label) {
  json j = json::array();
  for (Element x : t) j.push_back(label(x));
  return j;
}

json elements_json(const std::vector<Element>& xs, const FiniteNearSemiring& a) {
  json j = json::array();
  for (Element x : xs) j.push_back({{"index", x}, {"label", a.label(x)}});
  return j;
}

std::string elements_text(const std::vector<Element>& xs, const FiniteNearSemiring& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + a.label(xs[i]);
  return s + "}";
}

std::string dot_id(const std::string& s) { return json(s).dump(); }

}  // namespace

Structure parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be an object");
  const std::size_t n = size_field(doc);
  const std::string name = string_field(doc, "name");
  const std::string comment = string_field(doc, "comment");
  auto labels = labels_field(doc, n);
  auto constant = [&](const char* key) { return element_value(field(doc, key), n, key); };

  if (doc.contains("add") || doc.contains("mul")) {
    FiniteNearSemiring a;
    a.name = name;
    a.comment = comment;
    a.n = n;
    a.add = matrix(doc, "add", n);
    a.mul = matrix(doc, "mul", n);
    if (auto it = doc.find("inv"); it != doc.end() && !it->is_null()) a.inv = vector_field(*it, "inv", n);
    a.zero = constant("zero");
    a.one = constant("one");
    a.labels = std::move(labels);
    validate_structure(a);
    return a;
  }
  if (doc.contains("oplus")) {
    BasicAlgebra b;
    b.name = name;
    b.comment = comment;
    b.n = n;
    b.oplus = matrix(doc, "oplus", n);
    b.neg = vector_field(field(doc, "neg"), "neg", n);
    b.zero = constant("zero");
    b.labels = std::move(labels);
    validate_structure(b);
    if (auto it = doc.find("one"); it != doc.end() && element_value(*it, n, "one") != b.one())
      throw StructureError("'one' must equal the negation of zero");
    return b;
  }
  if (doc.contains("join")) {
    OrthoLattice l;
    l.name = name;
    l.comment = comment;
    l.n = n;
    l.join = matrix(doc, "join", n);
    l.ortho = vector_field(field(doc, "ortho"), "ortho", n);
    l.zero = constant("zero");
    l.one = constant("one");
    l.labels = std::move(labels);
    validate_structure(l);
    return l;
  }
  throw ParseError("document has none of add/mul, oplus/neg, join/ortho");
}

FiniteNearSemiring load_algebra(std::string_view text) {
  auto s = parse_document(text);
  if (auto* a = std::get_if<FiniteNearSemiring>(&s)) return std::move(*a);
  throw ParseError("document is not a near semiring");
}

std::string to_document(const FiniteNearSemiring& a) {
  std::ostringstream os;
  write_header(os, a.name, a.comment, a.n, a.labels);
  os << "  \"zero\": " << a.zero << ",\n  \"one\": " << a.one << ",\n";
  write_matrix(os, "add", a.add);
  os << ",\n";
  write_matrix(os, "mul", a.mul);
  if (a.inv) {
    os << ",\n";
    write_vector(os, "inv", *a.inv);
  }
  os << "\n}\n";
  return os.str();
}

std::string to_document(const BasicAlgebra& b) {
  std::ostringstream os;
  write_header(os, b.name, b.comment, b.n, b.labels);
  os << "  \"zero\": " << b.zero << ",\n";
  write_matrix(os, "oplus", b.oplus);
  os << ",\n";
  write_vector(os, "neg", b.neg);
  os << "\n}\n";
  return os.str();
}

std::string to_document(const OrthoLattice& l) {
  std::ostringstream os;
  write_header(os, l.name, l.comment, l.n, l.labels);
  os << "  \"zero\": " << l.zero << ",\n  \"one\": " << l.one << ",\n";
  write_matrix(os, "join", l.join);
  os << ",\n";
  write_vector(os, "ortho", l.ortho);
  os << "\n}\n";
  return os.str();
}

std::string to_document(const Structure& s) {
  return std::visit([](const auto& x) { return to_document(x); }, s);
}

LabelFn labels_of(const FiniteNearSemiring& a) {
  return [&a](Element x) { return a.label(x); };
}

// --- check reports -------------------------------------------------------------

std::string render_text(const CheckReport& r, const LabelFn& label) {
  std::ostringstream os;
  os << "profile " << r.profile << ": " << (r.passed ? "PASS" : "FAIL");
  if (!r.passed) os << " (" << r.violations.size() << (r.violations.size() == 1 ? " violation)" : " violations)");
  os << "\n";
  for (const auto& v : r.violations) os << "  " << v.clause << " " << tuple_text(v.witness, label) << ": " << v.detail << "\n";
  for (const auto& t : r.tags) os << "  tag: " << t << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_json(const CheckReport& r, const LabelFn& label) {
  json j;
  j["profile"] = r.profile;
  j["passed"] = r.passed;
  j["violations"] = json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"clause", v.clause},
                               {"witness", tuple_json(v.witness)},
                               {"witness_labels", tuple_labels(v.witness, label)},
                               {"detail", v.detail}});
  j["tags"] = r.tags;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

// --- property reports ------------------------------------------------------------

std::string render_text(const PropertyReport& r, const LabelFn& label) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.clauses) {
    os << "  " << (c.passed ? "pass " : "FAIL ") << c.clause;
    if (c.counterexample) os << " " << tuple_text(*c.counterexample, label);
    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
    if (c.passed && !c.detail.empty()) os << " [" << c.detail << "]";
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_json(const PropertyReport& r, const LabelFn& label) {
  json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["clauses"] = json::array();
  for (const auto& c : r.clauses) {
    json e{{"clause", c.clause}, {"passed", c.passed}};
    e["counterexample"] = c.counterexample ? tuple_json(*c.counterexample) : json(nullptr);
    if (c.counterexample) e["counterexample_labels"] = tuple_labels(*c.counterexample, label);
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.note.empty()) e["note"] = c.note;
    j["clauses"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

// --- orders ------------------------------------------------------------------

namespace {

const char* order_name(OrderKind k) { return k == OrderKind::Sum ? "sum" : "mul"; }

}  // namespace

std::string render_text(const PartialOrderReport& r, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << order_name(r.kind) << " order of " << a.name << "\n";
  os << "  partial order: " << (r.is_partial_order ? "yes" : "no") << "\n";
  os << "  join semilattice: " << (r.is_join_semilattice ? "yes" : "no") << "\n";
  os << "  meet semilattice: " << (r.is_meet_semilattice ? "yes" : "no") << "\n";
  os << "  bottom: " << (r.bottom ? a.label(*r.bottom) : "none") << "\n";
  os << "  top: " << (r.top ? a.label(*r.top) : "none") << "\n";
  os << "  covers:";
  for (auto [x, y] : r.covers()) os << " " << a.label(x) << "<" << a.label(y);
  os << "\n";
  return os.str();
}

std::string render_json(const PartialOrderReport& r, const FiniteNearSemiring& a) {
  json j;
  j["order"] = order_name(r.kind);
  j["is_partial_order"] = r.is_partial_order;
  j["is_join_semilattice"] = r.is_join_semilattice;
  j["is_meet_semilattice"] = r.is_meet_semilattice;
  j["bottom"] = r.bottom ? json(*r.bottom) : json(nullptr);
  j["top"] = r.top ? json(*r.top) : json(nullptr);
  json leq = json::array();
  for (Element x = 0; x < a.n; ++x) {
    json row = json::array();
    for (Element y = 0; y < a.n; ++y) row.push_back(r.leq(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  json covers = json::array();
  for (auto [x, y] : r.covers()) covers.push_back({x, y});
  j["covers"] = std::move(covers);
  return j.dump(2) + "\n";
}

std::string render_dot(const PartialOrderReport& r, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << "digraph " << dot_id(a.name + "_" + order_name(r.kind)) << " {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element x = 0; x < a.n; ++x) os << "  n" << x << " [label=" << dot_id(a.label(x)) << "];\n";
  for (auto [x, y] : r.covers()) os << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

// --- congruences -------------------------------------------------------------

std::string render_text(const std::vector<Congruence>& cons, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << cons.size() << (cons.size() == 1 ? " congruence" : " congruences") << " of " << a.name << "\n";
  for (std::size_t i = 0; i < cons.size(); ++i) {
    os << "  #" << i << " " << cons[i].render(a);
    if (cons[i].is_identity()) os << " (Δ)";
    if (cons[i].is_all()) os << " (∇)";
    os << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<Congruence>& cons, const FiniteNearSemiring&) {
  json j = json::array();
  for (const auto& c : cons) j.push_back({{"blocks", c.blocks()}, {"classes", c.classes()}});
  return json{{"congruences", j}}.dump(2) + "\n";
}

std::string render_dot(const std::vector<Congruence>& cons, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << "digraph " << dot_id(a.name + "_congruences") << " {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cons.size(); ++i) os << "  c" << i << " [label=" << dot_id(cons[i].render(a)) << "];\n";
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = 0; j < cons.size(); ++j) {
      if (i == j || !cons[i].finer_than(cons[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < cons.size() && cover; ++k)
        if (k != i && k != j && cons[i].finer_than(cons[k]) && cons[k].finer_than(cons[j])) cover = false;
      if (cover) os << "  c" << i << " -> c" << j << " [arrowhead=none];\n";
    }
  os << "}\n";
  return os.str();
}

// --- center and decomposition ----------------------------------------------

std::string render_text(const CenterReport& r, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << "centrals of " << a.name << ": " << elements_text(r.centrals, a) << "\n";
  for (const auto& [m, cs] : r.by_method) os << "  " << method_name(m) << ": " << elements_text(cs, a) << "\n";
  os << "  methods agree: " << (r.methods_agree ? "yes" : "no") << "\n";
  os << "  atoms: " << elements_text(r.atoms, a) << "\n";
  if (r.boolean_check) {
    std::string sub = render_text(*r.boolean_check, labels_of(a));
    std::istringstream is(sub);
    for (std::string line; std::getline(is, line);) os << "  " << line << "\n";
  }
  return os.str();
}

std::string render_json(const CenterReport& r, const FiniteNearSemiring& a) {
  json j;
  j["centrals"] = elements_json(r.centrals, a);
  json by = json::object();
  for (const auto& [m, cs] : r.by_method) by[std::string(method_name(m))] = cs;
  j["by_method"] = std::move(by);
  j["methods_agree"] = r.methods_agree;
  j["atoms"] = elements_json(r.atoms, a);
  if (r.boolean_check) j["boolean_check"] = json::parse(render_json(*r.boolean_check, labels_of(a)));
  return j.dump(2) + "\n";
}

std::string render_text(const DecompositionResult& d, const FiniteNearSemiring& a) {
  std::ostringstream os;
  os << "decomposition of " << a.name << ": " << d.factors.size() << (d.factors.size() == 1 ? " factor" : " factors")
     << "\n";
  os << "  atoms: " << elements_text(d.atoms, a) << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& f = d.factors[i];
    os << "  factor " << i << " " << f.name << " size " << f.n << (d.indecomposable[i] ? " indecomposable" : "")
       << ": " << elements_text([&] {
            std::vector<Element> all(f.n);
            for (Element x = 0; x < f.n; ++x) all[x] = x;
            return all;
          }(), f)
       << "\n";
  }
  os << "  iso:\n";
  for (Element b = 0; b < a.n; ++b) {
    os << "    " << a.label(b) << " -> (";
    for (std::size_t i = 0; i < d.iso[b].size(); ++i) os << (i ? "," : "") << d.factors[i].label(d.iso[b][i]);
    os << ")\n";
  }
  std::string sub = render_text(d.checks, labels_of(a));
  std::istringstream is(sub);
  for (std::string line; std::getline(is, line);) os << "  " << line << "\n";
  return os.str();
}

std::string render_json(const DecompositionResult& d, const FiniteNearSemiring& a) {
  json j;
  j["atoms"] = d.atoms;
  j["factors"] = json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    json f = json::parse(to_document(d.factors[i]));
    f["indecomposable"] = static_cast<bool>(d.indecomposable[i]);
    j["factors"].push_back(std::move(f));
  }
  json iso = json::array();
  for (const auto& t : d.iso) iso.push_back(tuple_json(t));
  j["iso"] = std::move(iso);
  j["checks"] = json::parse(render_json(d.checks, labels_of(a)));
  return j.dump(2) + "\n";
}

// --- round trips ---------------------------------------------------------------

std::string render_text(const RoundTripReport& r, const LabelFn& label) {
  std::ostringstream os;
  os << "roundtrip " << r.direction << ": " << (r.pointwise_equal ? "PASS (pointwise equal)" : "FAIL") << "\n";
  auto one = [&](const Mismatch& m) {
    os << "  " << m.operation << tuple_text(m.args, label) << ": expected " << label(m.expected) << ", got "
       << label(m.actual) << "\n";
  };
  if (!r.all.empty())
    for (const auto& m : r.all) one(m);
  else if (r.mismatch)
    one(*r.mismatch);
  return os.str();
}

std::string render_json(const RoundTripReport& r, const LabelFn&) {
  json j{{"direction", r.direction}, {"pointwise_equal", r.pointwise_equal}};
  auto m2j = [](const Mismatch& m) {
    return json{{"operation", m.operation}, {"args", tuple_json(m.args)}, {"expected", m.expected}, {"actual", m.actual}};
  };
  j["mismatch"] = r.mismatch ? m2j(*r.mismatch) : json(nullptr);
  if (!r.all.empty()) {
    j["all"] = json::array();
    for (const auto& m : r.all) j["all"].push_back(m2j(m));
  }
  return j.dump(2) + "\n";
}

// --- search ------------------------------------------------------------------

std::string render_text(const SearchResult& r, const SearchConstraint& c) {
  std::ostringstream os;
  os << "constraint " << c.describe() << ": " << r.models.size() << (r.models.size() == 1 ? " model" : " models");
  os << (r.exhaustive ? " (exhaustive" : " (stopped at first model") << ", sizes up to " << r.size_reached << ", "
     << r.nodes << " nodes)\n";
  for (const auto& m : r.models) {
    os << "  " << m.algebra.name << " size " << m.algebra.n;
    if (m.anchor) os << " at e=" << m.algebra.label(*m.anchor);
    os << "\n";
    for (const auto& v : m.violations)
      os << "    violates " << v.identity << " " << tuple_text(v.failure.witness, labels_of(m.algebra)) << ": "
         << v.failure.detail << "\n";
  }
  return os.str();
}

std::string render_json(const SearchResult& r, const SearchConstraint& c) {
  json j;
  j["constraint"] = c.describe();
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes;
  j["size_reached"] = r.size_reached;
  j["models"] = json::array();
  for (const auto& m : r.models) {
    json e;
    e["algebra"] = json::parse(to_document(m.algebra));
    e["anchor"] = m.anchor ? json(*m.anchor) : json(nullptr);
    e["violations"] = json::array();
    for (const auto& v : m.violations)
      e["violations"].push_back(
          {{"identity", v.identity}, {"witness", tuple_json(v.failure.witness)}, {"detail", v.failure.detail}});
    j["models"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace nsl
