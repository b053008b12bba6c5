#include "nslab/clause.hpp"

#include <algorithm>
#include <memory>

namespace nsl {

void CheckReport::finalize() {
  std::sort(violations.begin(), violations.end());
  passed = violations.empty();
}

bool CheckReport::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

const Violation* CheckReport::find(const std::string& clause) const {
  for (const auto& v : violations)
    if (v.clause == clause) return &v;
  return nullptr;
}

bool PropertyReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult* PropertyReport::find(const std::string& clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

void PropertyReport::add_flag(std::string clause, bool ok, std::string detail, std::string note) {
  ClauseResult r;
  r.clause = std::move(clause);
  r.passed = ok;
  r.detail = std::move(detail);
  r.note = std::move(note);
  clauses.push_back(std::move(r));
}

Clause Clause::formula(std::string id, std::string_view text, const term::Interpretation& in) {
  auto f = std::make_shared<term::Formula>(term::Formula::parse(text));
  const std::string vars = f->variables();
  return Clause(std::move(id), vars.size(), [f, vars, in](std::span<const Element> xs) -> std::optional<std::string> {
    term::Assignment a{};
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i] - 'a'] = xs[i];
    if (f->holds(in, a)) return std::nullopt;
    return f->describe_failure(in, a);
  });
}

std::optional<Failure> first_failure(std::size_t n, const Clause& c) { return first_failure(n, c, {}); }

std::optional<Failure> first_failure(std::size_t n, const Clause& c, std::span<const Element> prefix) {
  const std::size_t k = c.arity();
  const std::size_t p = std::min(prefix.size(), k);
  if (n == 0) return std::nullopt;
  Tuple xs(k, 0);
  std::copy(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(p), xs.begin());
  for (;;) {
    if (auto d = c.check(xs)) return Failure{xs, *d};
    std::size_t i = k;
    for (;;) {
      if (i == p) return std::nullopt;
      --i;
      if (++xs[i] < n) break;
      xs[i] = 0;
    }
  }
}

CheckReport run_check(std::string profile, std::size_t n, std::span<const Clause> clauses) {
  CheckReport r;
  r.profile = std::move(profile);
  for (const auto& c : clauses)
    if (auto f = first_failure(n, c)) r.violations.push_back({c.id(), f->witness, f->detail});
  r.finalize();
  return r;
}

ClauseResult evaluate(std::size_t n, const Clause& c) {
  ClauseResult r;
  r.clause = c.id();
  if (auto f = first_failure(n, c)) {
    r.passed = false;
    r.counterexample = f->witness;
    r.detail = f->detail;
  }
  return r;
}

void append(PropertyReport& r, std::size_t n, std::span<const Clause> clauses) {
  for (const auto& c : clauses) r.add(evaluate(n, c));
}

}  // namespace nsl
