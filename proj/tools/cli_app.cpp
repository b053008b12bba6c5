#include "cli_app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "nslab/nslab.h"

namespace nslab_cli {

namespace {

namespace fs = std::filesystem;

// Raised for anything that must end with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ObjectDeleter {
  void operator()(nsl_object* o) const { nsl_free(o); }
};
struct ReportDeleter {
  void operator()(nsl_report* r) const { nsl_report_free(r); }
};
using Object = std::unique_ptr<nsl_object, ObjectDeleter>;
using Report = std::unique_ptr<nsl_report, ReportDeleter>;

void ok(nsl_status s) {
  if (s != NSL_OK) throw InputError(std::string(nsl_status_name(s)) + ": " + nsl_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

Object load(const std::string& target) {
  nsl_object* o = nullptr;
  constexpr std::string_view prefix = "fixtures:";
  if (target.rfind(prefix, 0) == 0) ok(nsl_fixture(target.c_str() + prefix.size(), &o));
  else ok(nsl_parse(read_file(target).c_str(), &o));
  return Object(o);
}

std::string document(const nsl_object* o) {
  nsl_report* r = nullptr;
  ok(nsl_document(o, &r));
  Report hold(r);
  return nsl_report_text(r);
}

struct Output {
  std::string out, err;
  bool passed = true;

  void take(nsl_status s, nsl_report*& r) {
    ok(s);
    Report hold(r);
    out += nsl_report_text(r);
    passed = passed && nsl_report_passed(r);
  }
};

// Writes every model of a report as <dir>/<name>.json.
void write_models(const nsl_report* r, const std::string& dir, Output& o) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir + "': " + ec.message());
  for (std::size_t i = 0; i < nsl_report_model_count(r); ++i) {
    nsl_object* m = nullptr;
    ok(nsl_report_model(r, i, &m));
    Object hold(m);
    std::string name = nsl_name(m);
    std::replace_if(name.begin(), name.end(), [](char c) { return c == '/' || c == ' '; }, '_');
    write_file(fs::path(dir) / (name + ".json"), document(m));
  }
  o.err += "wrote " + std::to_string(nsl_report_model_count(r)) + " documents to " + dir + "\n";
}

std::string elapsed_line(const nsl_report* r) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(3);
  ss << "elapsed: " << nsl_report_elapsed(r) << " s\n";
  return ss.str();
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Finite near semirings: axiom checks, translations, congruences, centers and model search", "nslab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for all commands");

  std::string target, target2, profile, suite, to, via, method = "equational", which = "both", out_file, out_dir;
  std::string constraint, satisfy, violate, fixture_name;
  bool json = false, dot = false, verbose = false, allow_large = false;
  std::size_t size = 0, max_size = 0;
  unsigned threads = 1;

  auto add_target = [&](CLI::App* c) { c->add_option("target", target, "FILE or fixtures:NAME")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", json, "Machine-readable output"); };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    c->add_flag("--allow-large", allow_large, "Allow sizes above the default bound");
    c->add_option("--out-dir", out_dir, "Write each model as a document into this directory");
    add_json(c);
  };

  auto* check = app.add_subcommand("check", "Check an axiom profile or variety");
  add_target(check);
  check->add_option("--profile", profile, "near-semiring, idempotent-add, ..., lukasiewicz, orthomodular, basic, oml")
      ->required();
  add_json(check);

  auto* props = app.add_subcommand("properties", "Run a property suite");
  add_target(props);
  props->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"core", "lukasiewicz", "sectional", "orthomodular", "oml", "central", "witness", "duality"}));
  add_json(props);

  auto* translate = app.add_subcommand("translate", "Translate to a term-equivalent structure");
  add_target(translate);
  translate->add_option("--to", to, "Target signature")->required()->check(CLI::IsMember({"basic", "lns", "ons", "oml"}));
  translate->add_option("-o,--out", out_file, "Write the document to a file");

  auto* roundtrip = app.add_subcommand("roundtrip", "Compare a structure with its double translation");
  add_target(roundtrip);
  roundtrip->add_option("--via", via, "Companion signature")->required()->check(CLI::IsMember({"basic", "oml"}));
  roundtrip->add_flag("--all", verbose, "List every mismatch");
  add_json(roundtrip);

  auto* cons = app.add_subcommand("congruences", "List the congruence lattice");
  add_target(cons);
  add_json(cons);
  cons->add_flag("--dot", dot, "Hasse diagram in DOT");

  auto* order = app.add_subcommand("order", "Induced orders");
  add_target(order);
  order->add_option("--which", which, "sum, mul or both")->check(CLI::IsMember({"sum", "mul", "both"}));
  add_json(order);
  order->add_flag("--dot", dot, "Hasse diagrams in DOT");

  auto* center = app.add_subcommand("center", "Central elements and the Boolean center");
  add_target(center);
  center->add_option("--method", method, "equational, congruence, full or all")
      ->check(CLI::IsMember({"equational", "congruence", "full", "all"}));
  add_json(center);

  auto* decompose = app.add_subcommand("decompose", "Decompose into directly indecomposable factors");
  add_target(decompose);
  decompose->add_option("--out-dir", out_dir, "Write each factor as a document into this directory");
  add_json(decompose);

  auto* iso = app.add_subcommand("isomorphic", "Decide whether two near semirings are isomorphic");
  iso->add_option("first", target, "FILE or fixtures:NAME")->required();
  iso->add_option("second", target2, "FILE or fixtures:NAME")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All models of one size up to isomorphism");
  enumerate->add_option("--size", size, "Universe size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--constraint", constraint, "Comma list of profiles and identities; !name forbids");
  add_search(enumerate);

  auto* find = app.add_subcommand("find", "First model up to a size meeting a constraint");
  find->add_option("--max", max_size, "Largest size searched")->required()->check(CLI::PositiveNumber);
  find->add_option("--satisfy", satisfy, "Profiles and identities that must hold");
  find->add_option("--violate", violate, "Identities that must fail");
  add_search(find);

  auto* fixtures = app.add_subcommand("fixtures", "Built-in algebras");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "Names and descriptions");
  add_json(list);
  auto* emit = fixtures->add_subcommand("emit", "Print a fixture document");
  emit->add_option("name", fixture_name, "Fixture name or product A*B")->required();

  CommandOutcome result;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n\n" + app.help();
    return result;
  }

  if (json && dot) {
    result.exit_code = 2;
    result.err = "error: --json and --dot are exclusive\n";
    return result;
  }
  const nsl_format fmt = dot ? NSL_DOT : json ? NSL_JSON : NSL_TEXT;
  nsl_search_options sopt{threads, allow_large ? 1 : 0};

  Output o;
  try {
    nsl_report* r = nullptr;
    if (check->parsed()) {
      auto obj = load(target);
      o.take(nsl_check(obj.get(), profile.c_str(), fmt, &r), r);
    } else if (props->parsed()) {
      auto obj = load(target);
      o.take(nsl_properties(obj.get(), suite.c_str(), fmt, &r), r);
    } else if (translate->parsed()) {
      auto obj = load(target);
      nsl_object* t = nullptr;
      ok(nsl_translate(obj.get(), to.c_str(), &t));
      Object hold(t);
      if (out_file.empty()) o.out = document(t);
      else write_file(out_file, document(t));
    } else if (roundtrip->parsed()) {
      auto obj = load(target);
      o.take(nsl_roundtrip(obj.get(), via.c_str(), verbose, fmt, &r), r);
    } else if (cons->parsed()) {
      auto obj = load(target);
      o.take(nsl_congruences(obj.get(), fmt, &r), r);
    } else if (order->parsed()) {
      auto obj = load(target);
      for (const char* w : {"sum", "mul"})
        if (which == "both" || which == w) {
          r = nullptr;
          o.take(nsl_order(obj.get(), w, fmt, &r), r);
        }
    } else if (center->parsed()) {
      auto obj = load(target);
      o.take(nsl_center(obj.get(), method.c_str(), fmt, &r), r);
    } else if (decompose->parsed()) {
      auto obj = load(target);
      ok(nsl_decompose(obj.get(), fmt, &r));
      Report hold(r);
      if (!out_dir.empty()) write_models(r, out_dir, o);
      o.out += nsl_report_text(r);
      o.passed = nsl_report_passed(r);
    } else if (iso->parsed()) {
      auto a = load(target);
      auto b = load(target2);
      int same = 0;
      ok(nsl_isomorphic(a.get(), b.get(), &same));
      o.out = same ? "isomorphic\n" : "not isomorphic\n";
      o.passed = same != 0;
    } else if (enumerate->parsed() || find->parsed()) {
      const bool enumerating = enumerate->parsed();
      ok(enumerating ? nsl_enumerate(size, constraint.c_str(), &sopt, fmt, &r)
                     : nsl_find(max_size, satisfy.c_str(), violate.c_str(), &sopt, fmt, &r));
      Report hold(r);
      if (!out_dir.empty()) write_models(r, out_dir, o);
      o.out += nsl_report_text(r);
      o.err += elapsed_line(r);
      o.passed = nsl_report_passed(r);
    } else if (list->parsed()) {
      o.take(nsl_fixture_list(fmt, &r), r);
    } else if (emit->parsed()) {
      nsl_object* f = nullptr;
      ok(nsl_fixture(fixture_name.c_str(), &f));
      Object hold(f);
      o.out = document(f);
    }
  } catch (const InputError& e) {
    result.exit_code = 2;
    result.out = o.out;
    result.err = o.err + "error: " + e.what() + "\n";
    return result;
  }
  result.exit_code = o.passed ? 0 : 1;
  result.out = std::move(o.out);
  result.err = std::move(o.err);
  return result;
}

}  // namespace nslab_cli
