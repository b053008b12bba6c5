#include "nslab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "nslab/error.hpp"
#include "nslab/varieties.hpp"

namespace nsl {

// --- constraints -------------------------------------------------------------

bool SearchConstraint::needs_involution() const {
  if (!require.empty() || !forbid.empty()) return true;
  return std::any_of(profiles.begin(), profiles.end(), profile_needs_involution);
}

std::string SearchConstraint::describe() const {
  std::string s;
  auto add = [&](std::string_view part) {
    if (!s.empty()) s += ',';
    s += part;
  };
  for (auto p : profiles) add(profile_name(p));
  for (const auto& r : require) add(r);
  for (const auto& f : forbid) add("!" + f);
  return s;
}

SearchConstraint parse_constraint(std::string_view text) {
  SearchConstraint c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    pos = end + 1;
    if (item.empty()) continue;
    const bool negated = item.front() == '!';
    if (negated) item.remove_prefix(1);
    if (!negated) {
      if (auto p = parse_profile(item)) {
        if (std::find(c.profiles.begin(), c.profiles.end(), *p) == c.profiles.end()) c.profiles.push_back(*p);
        continue;
      }
    }
    if (!find_identity(item)) throw ParseError("unknown profile or identity '" + std::string(item) + "'");
    (negated ? c.forbid : c.require).emplace_back(item);
  }
  return c;
}

namespace {

std::vector<const CatalogIdentity*> resolve(const std::vector<std::string>& names) {
  std::vector<const CatalogIdentity*> out;
  for (const auto& n : names) {
    const auto* id = find_identity(n);
    if (!id) throw ParseError("unknown identity '" + n + "'");
    out.push_back(id);
  }
  return out;
}

}  // namespace

bool meets_constraint(const FiniteNearSemiring& a, const SearchConstraint& c, FoundModel* out) {
  if (c.needs_involution() && !a.inv) return false;
  if (!satisfies(a, AxiomProfile::NearSemiring)) return false;
  for (auto p : c.profiles)
    if (!satisfies(a, p)) return false;
  if (!c.require.empty() || !c.forbid.empty())
    if (!satisfies(a, AxiomProfile::Involutive)) return false;

  std::vector<IdentityViolation> violations;
  std::vector<const CatalogIdentity*> req_param, forb_param;
  for (const auto* id : resolve(c.require)) {
    if (id->parametric) req_param.push_back(id);
    else if (identity_failure(a, *id)) return false;
  }
  for (const auto* id : resolve(c.forbid)) {
    if (id->parametric) {
      forb_param.push_back(id);
      continue;
    }
    auto f = identity_failure(a, *id);
    if (!f) return false;
    violations.push_back({id->name, *f});
  }

  std::optional<Element> anchor;
  if (!req_param.empty() || !forb_param.empty()) {
    for (Element e = 0; e < a.n && !anchor; ++e) {
      bool ok = std::none_of(req_param.begin(), req_param.end(),
                             [&](const CatalogIdentity* id) { return identity_failure(a, *id, e).has_value(); });
      if (!ok) continue;
      std::vector<IdentityViolation> here;
      for (const auto* id : forb_param) {
        auto f = identity_failure(a, *id, e);
        if (!f) {
          ok = false;
          break;
        }
        here.push_back({id->name, *f});
      }
      if (!ok) continue;
      anchor = e;
      violations.insert(violations.end(), here.begin(), here.end());
    }
    if (!anchor) return false;
  }
  if (out) {
    out->algebra = a;
    out->anchor = anchor;
    out->violations = std::move(violations);
  }
  return true;
}

// --- isomorphism -------------------------------------------------------------

namespace {

bool less_tables(const FiniteNearSemiring& x, const FiniteNearSemiring& y) {
  auto ax = x.add.entries(), ay = y.add.entries();
  if (auto c = std::lexicographical_compare_three_way(ax.begin(), ax.end(), ay.begin(), ay.end()); c != 0)
    return c < 0;
  const UnaryTable empty;
  const auto& ix = x.inv ? *x.inv : empty;
  const auto& iy = y.inv ? *y.inv : empty;
  if (ix != iy) return ix < iy;
  auto mx = x.mul.entries(), my = y.mul.entries();
  return std::lexicographical_compare(mx.begin(), mx.end(), my.begin(), my.end());
}

class IsoSearch {
 public:
  IsoSearch(const FiniteNearSemiring& a, const FiniteNearSemiring& b)
      : a_(a), b_(b), fwd_(a.n, kNone), bwd_(a.n, kNone) {}

  std::optional<std::vector<Element>> run() {
    std::vector<std::pair<Element, Element>> trail;
    if (!assign(a_.zero, b_.zero, trail) || !assign(a_.one, b_.one, trail)) return std::nullopt;
    if (dfs(0)) return fwd_;
    return std::nullopt;
  }

 private:
  static constexpr Element kNone = ~Element{0};

  // Adds x ↦ y and everything it forces; false on contradiction. Undo via trail.
  bool assign(Element x, Element y, std::vector<std::pair<Element, Element>>& trail) {
    std::vector<std::pair<Element, Element>> work{{x, y}};
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (fwd_[u] != kNone || bwd_[v] != kNone) {
        if (fwd_[u] != v || bwd_[v] != u) return false;
        continue;
      }
      fwd_[u] = v;
      bwd_[v] = u;
      trail.emplace_back(u, v);
      if (a_.inv) work.emplace_back(a_.alpha(u), b_.alpha(v));
      for (Element w = 0; w < a_.n; ++w) {
        if (fwd_[w] == kNone) continue;
        const Element fw = fwd_[w];
        work.emplace_back(a_.plus(u, w), b_.plus(v, fw));
        work.emplace_back(a_.plus(w, u), b_.plus(fw, v));
        work.emplace_back(a_.times(u, w), b_.times(v, fw));
        work.emplace_back(a_.times(w, u), b_.times(fw, v));
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<Element, Element>>& trail) {
    for (auto [u, v] : trail) {
      fwd_[u] = kNone;
      bwd_[v] = kNone;
    }
    trail.clear();
  }

  bool dfs(Element x) {
    while (x < a_.n && fwd_[x] != kNone) ++x;
    if (x == a_.n) return true;
    for (Element y = 0; y < b_.n; ++y) {
      if (bwd_[y] != kNone) continue;
      std::vector<std::pair<Element, Element>> trail;
      if (assign(x, y, trail) && dfs(x + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const FiniteNearSemiring& a_;
  const FiniteNearSemiring& b_;
  std::vector<Element> fwd_;
  std::vector<Element> bwd_;
};

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const FiniteNearSemiring& a, const FiniteNearSemiring& b) {
  if (a.inv.has_value() != b.inv.has_value())
    throw PreconditionError("signatures differ: only one algebra has an involution");
  if (a.n != b.n) return std::nullopt;
  return IsoSearch(a, b).run();
}

FiniteNearSemiring canonical_form(const FiniteNearSemiring& a) {
  std::vector<Element> rest;
  for (Element x = 0; x < a.n; ++x)
    if (x != a.zero && x != a.one) rest.push_back(x);
  std::optional<FiniteNearSemiring> best;
  do {
    std::vector<Element> perm(a.n);
    perm[a.zero] = 0;
    if (a.n > 1) perm[a.one] = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = static_cast<Element>(i + (a.n > 1 ? 2 : 1));
    auto r = relabel(a, perm);
    if (!best || less_tables(r, *best)) best = std::move(r);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return *best;
}

// --- enumeration -------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view kMulClauses[][2] = {
    {"mul-comm", "x·y = y·x"},
    {"mul-assoc", "(x·y)·z = x·(y·z)"},
    {"left-distrib", "x·(y+z) = (x·y)+(x·z)"},
};

// Formula evaluation over partially filled tables; kUnknown propagates.
class PartialFormula {
 public:
  static constexpr Element kUnknown = ~Element{0};

  explicit PartialFormula(std::string_view text) : f_(term::Formula::parse(text)) {}

  const std::string& variables() const { return f_.variables(); }

  struct Tables {
    const std::vector<Element>* add;
    const std::vector<Element>* mul;
    const std::vector<Element>* inv;
    std::size_t n;
    Element zero, one;
  };

  /// false only when the instance is decided and fails.
  bool holds_or_unknown(const Tables& t, const term::Assignment& a) const {
    int l = side(f_.left(), t, a);
    if (f_.connective() == term::Connective::None) return l != 0;
    int r = side(f_.right(), t, a);
    if (f_.connective() == term::Connective::Implies && l == 0) return true;
    if (l < 0 || r < 0) return true;
    if (f_.connective() == term::Connective::Implies) return !l || r;
    return l == r;
  }

 private:
  // 1 holds, 0 fails, -1 unknown.
  static int side(const std::vector<term::Atom>& atoms, const Tables& t, const term::Assignment& a) {
    int result = 1;
    for (const auto& at : atoms) {
      Element l = eval(at.lhs, t, a);
      Element r = eval(at.rhs, t, a);
      if (l == kUnknown || r == kUnknown) {
        result = -1;
        continue;
      }
      bool ok = false;
      switch (at.rel) {
        case term::Rel::Eq: ok = l == r; break;
        case term::Rel::Neq: ok = l != r; break;
        case term::Rel::Leq: ok = (*t.add)[l * t.n + r] == r; break;
      }
      if (!ok) return 0;
    }
    return result;
  }

  static Element eval(const term::Term& tm, const Tables& t, const term::Assignment& a) {
    Element buf[term::kMaxNodes];
    const auto& nodes = tm.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nd = nodes[i];
      Element v = kUnknown;
      auto l = nd.left >= 0 ? buf[nd.left] : kUnknown;
      auto r = nd.right >= 0 ? buf[nd.right] : kUnknown;
      switch (nd.op) {
        case term::Op::Var: v = a[nd.var - 'a']; break;
        case term::Op::Zero: v = t.zero; break;
        case term::Op::One: v = t.one; break;
        case term::Op::Add:
          if (l != kUnknown && r != kUnknown) v = (*t.add)[l * t.n + r];
          break;
        case term::Op::Mul:
          if (l != kUnknown && r != kUnknown) v = (*t.mul)[l * t.n + r];
          break;
        case term::Op::Alpha:
          if (l != kUnknown) v = (*t.inv)[l];
          break;
        default: throw InternalError("operation outside the near-semiring signature in a search clause");
      }
      buf[i] = v;
    }
    return buf[nodes.size() - 1];
  }

  term::Formula f_;
};

struct Perm {
  std::vector<Element> fwd;
  std::vector<Element> bwd;
};

struct Clause3 {
  std::shared_ptr<PartialFormula> f;
  std::size_t arity;
};

struct Candidate {
  FoundModel model;
};

struct Plan {
  std::size_t n = 0;
  bool involutive = false;
  bool idempotent = false;
  bool integral = false;
  std::vector<Clause3> mul_clauses;
  std::vector<Clause3> forbid_plain;
  std::vector<Clause3> require_param;
  std::vector<Clause3> forbid_param;
  std::vector<Perm> perms;
};

std::vector<Element> inverse(const std::vector<Element>& p) {
  std::vector<Element> q(p.size());
  for (Element i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Plan make_plan(std::size_t n, const SearchConstraint& c) {
  Plan p;
  p.n = n;
  p.involutive = c.needs_involution();
  auto has = [&](AxiomProfile x) { return std::find(c.profiles.begin(), c.profiles.end(), x) != c.profiles.end(); };
  p.idempotent = p.involutive || has(AxiomProfile::IdempotentAdd);
  p.integral = has(AxiomProfile::Integral) || has(AxiomProfile::InvolutiveIntegral);
  auto clause = [](std::string_view text) {
    auto f = std::make_shared<PartialFormula>(text);
    return Clause3{f, f->variables().size()};
  };
  if (has(AxiomProfile::CommutativeMul)) p.mul_clauses.push_back(clause(kMulClauses[0][1]));
  if (has(AxiomProfile::AssociativeMul) || has(AxiomProfile::Semiring)) p.mul_clauses.push_back(clause(kMulClauses[1][1]));
  if (has(AxiomProfile::Semiring)) p.mul_clauses.push_back(clause(kMulClauses[2][1]));
  for (const auto* id : resolve(c.require))
    (id->parametric ? p.require_param : p.mul_clauses).push_back(clause(id->text));
  for (const auto* id : resolve(c.forbid)) (id->parametric ? p.forbid_param : p.forbid_plain).push_back(clause(id->text));

  // Permutations of the carrier fixing 0 and 1.
  std::vector<Element> rest;
  for (Element x = 2; x < n; ++x) rest.push_back(x);
  do {
    std::vector<Element> perm(n);
    for (Element x = 0; x < std::min<std::size_t>(n, 2); ++x) perm[x] = x;
    for (std::size_t i = 0; i < rest.size(); ++i) perm[i + 2] = rest[i];
    auto back = inverse(perm);
    p.perms.push_back({std::move(perm), std::move(back)});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return p;
}

// Compares σ(T) with T row-major: negative when the image is smaller.
int compare_image(const std::vector<Element>& t, const std::vector<Element>& perm, const std::vector<Element>& inv_perm,
                  std::size_t n) {
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      const Element img = perm[t[inv_perm[i] * n + inv_perm[j]]];
      const Element cur = t[i * n + j];
      if (img != cur) return img < cur ? -1 : 1;
    }
  return 0;
}

int compare_unary_image(const std::vector<Element>& t, const std::vector<Element>& perm,
                        const std::vector<Element>& inv_perm) {
  for (Element i = 0; i < t.size(); ++i) {
    const Element img = perm[t[inv_perm[i]]];
    if (img != t[i]) return img < t[i] ? -1 : 1;
  }
  return 0;
}

class Enumerator {
 public:
  Enumerator(const Plan& plan, const SearchConstraint& c) : p_(plan), c_(c), n_(plan.n) {}

  /// Canonical addition tables in search order.
  std::vector<std::vector<Element>> additions() {
    std::vector<std::vector<Element>> out;
    add_.assign(n_ * n_, kU);
    for (Element x = 0; x < n_; ++x) {
      add_[x] = x;
      add_[x * n_] = x;
    }
    cells_.clear();
    for (Element i = 1; i < n_; ++i)
      for (Element j = i; j < n_; ++j) cells_.emplace_back(i, j);
    fill_add(0, out);
    return out;
  }

  /// Runs involution and multiplication stages for one addition table.
  /// `emit` returns false to stop. Returns false when stopped.
  template <class Emit>
  bool complete(const std::vector<Element>& add, Emit&& emit) {
    add_ = add;
    std::vector<Perm> auts;
    for (const auto& perm : p_.perms)
      if (compare_image(add_, perm.fwd, perm.bwd, n_) == 0) auts.push_back(perm);

    if (!p_.involutive) {
      inv_.clear();
      return multiply(auts, emit);
    }
    // Involutive antitone permutations, canonical under the automorphisms.
    std::vector<std::vector<Element>> invs;
    std::vector<Element> inv(n_, kU);
    collect_involutions(0, inv, invs);
    for (auto& cand : invs) {
      ++nodes;
      std::vector<Perm> stab;
      bool canonical = true;
      for (const auto& perm : auts) {
        int c = compare_unary_image(cand, perm.fwd, perm.bwd);
        if (c < 0) {
          canonical = false;
          break;
        }
        if (c == 0) stab.push_back(perm);
      }
      if (!canonical) continue;
      inv_ = cand;
      if (!multiply(stab, emit)) return false;
    }
    return true;
  }

  std::uint64_t nodes = 0;

 private:
  static constexpr Element kU = PartialFormula::kUnknown;

  Element& cell(Element i, Element j) { return add_[i * n_ + j]; }

  bool add_consistent() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        const Element xy = add_[x * n_ + y];
        for (Element z = 0; z < n_; ++z) {
          const Element yz = add_[y * n_ + z];
          if (xy == kU || yz == kU) continue;
          const Element l = add_[xy * n_ + z];
          const Element r = add_[x * n_ + yz];
          if (l != kU && r != kU && l != r) return false;
        }
      }
    return true;
  }

  void fill_add(std::size_t k, std::vector<std::vector<Element>>& out) {
    if (k == cells_.size()) {
      if (is_canonical_add()) out.push_back(add_);
      return;
    }
    auto [i, j] = cells_[k];
    Element lo = 0, hi = static_cast<Element>(n_ - 1);
    if (p_.idempotent && i == j) lo = hi = i;
    if (p_.integral && i == 1) lo = hi = 1;
    for (Element v = lo; v <= hi; ++v) {
      ++nodes;
      cell(i, j) = v;
      cell(j, i) = v;
      if (add_consistent()) fill_add(k + 1, out);
    }
    cell(i, j) = kU;
    cell(j, i) = kU;
  }

  bool is_canonical_add() const {
    for (const auto& perm : p_.perms)
      if (compare_image(add_, perm.fwd, perm.bwd, n_) < 0) return false;
    return true;
  }

  bool leq(Element x, Element y) const { return add_[x * n_ + y] == y; }

  void collect_involutions(Element x, std::vector<Element>& inv, std::vector<std::vector<Element>>& out) {
    while (x < n_ && inv[x] != kU) ++x;
    if (x == n_) {
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b)
          if (leq(a, b) && !leq(inv[b], inv[a])) return;
      out.push_back(inv);
      return;
    }
    for (Element y = x; y < n_; ++y) {
      if (inv[y] != kU) continue;
      inv[x] = y;
      inv[y] = x;
      collect_involutions(x + 1, inv, out);
      inv[y] = kU;
      inv[x] = kU;
    }
  }

  // Additive maps f with f(0) = 0, grouped by f(1).
  std::vector<std::vector<std::vector<Element>>> endomorphisms() const {
    std::vector<std::vector<std::vector<Element>>> by_one(n_);
    std::vector<Element> f(n_, kU);
    f[0] = 0;
    std::function<void(Element)> rec = [&](Element x) {
      if (x == n_) {
        by_one[f[1 % n_]].push_back(f);
        return;
      }
      for (Element v = 0; v < n_; ++v) {
        f[x] = v;
        bool ok = true;
        for (Element a = 0; a <= x && ok; ++a)
          for (Element b = 0; b <= x && ok; ++b) {
            const Element s = add_[a * n_ + b];
            if (s <= x && f[s] != add_[f[a] * n_ + f[b]]) ok = false;
          }
        if (ok) rec(x + 1);
      }
      f[x] = kU;
    };
    rec(1);
    return by_one;
  }

  bool instance_ok(const Clause3& c, const PartialFormula::Tables& t, Element prefix, bool use_prefix) const {
    term::Assignment a{};
    const auto& vars = c.f->variables();
    const std::size_t k = c.arity;
    std::vector<Element> xs(k, 0);
    std::size_t start = 0;
    if (use_prefix && k > 0) {
      xs[0] = prefix;
      start = 1;
    }
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) a[vars[i] - 'a'] = xs[i];
      if (!c.f->holds_or_unknown(t, a)) return false;
      std::size_t i = k;
      for (;;) {
        if (i == start) return true;
        --i;
        if (++xs[i] < n_) break;
        xs[i] = 0;
      }
    }
  }

  // Whether the (complete) clause fails somewhere, with the first entry of the tuple fixed to e when asked.
  bool fails_somewhere(const Clause3& c, const PartialFormula::Tables& t, Element e, bool use_prefix) const {
    return !instance_ok(c, t, e, use_prefix);
  }

  template <class Emit>
  bool multiply(const std::vector<Perm>& group, Emit&& emit) {
    auto ends = endomorphisms();
    mul_.assign(n_ * n_, kU);
    for (Element x = 0; x < n_; ++x) {
      mul_[x * n_ + 0] = 0;
      if (n_ > 1) mul_[x * n_ + 1] = x;
    }
    return fill_mul(n_ > 1 ? 2 : 1, ends, group, emit);
  }

  PartialFormula::Tables tables() const {
    return {&add_, &mul_, p_.involutive ? &inv_ : nullptr, n_, 0, static_cast<Element>(n_ > 1 ? 1 : 0)};
  }

  template <class Emit>
  bool fill_mul(Element z, const std::vector<std::vector<std::vector<Element>>>& ends,
                const std::vector<Perm>& group, Emit&& emit) {
    if (z >= n_) return leaf(group, emit);
    for (const auto& f : ends[z]) {
      ++nodes;
      for (Element x = 0; x < n_; ++x) mul_[x * n_ + z] = f[x];
      const auto t = tables();
      bool ok = true;
      for (const auto& c : p_.mul_clauses)
        if (!instance_ok(c, t, 0, false)) {
          ok = false;
          break;
        }
      if (ok && !fill_mul(z + 1, ends, group, emit)) return false;
    }
    for (Element x = 0; x < n_; ++x) mul_[x * n_ + z] = kU;
    return true;
  }

  template <class Emit>
  bool leaf(const std::vector<Perm>& group, Emit&& emit) {
    for (const auto& perm : group)
      if (compare_image(mul_, perm.fwd, perm.bwd, n_) < 0) return true;
    const auto t = tables();
    for (const auto& c : p_.forbid_plain)
      if (!fails_somewhere(c, t, 0, false)) return true;
    if (!p_.require_param.empty() || !p_.forbid_param.empty()) {
      bool any = false;
      for (Element e = 0; e < n_ && !any; ++e) {
        bool ok = true;
        for (const auto& c : p_.require_param) ok = ok && instance_ok(c, t, e, true);
        for (const auto& c : p_.forbid_param) ok = ok && fails_somewhere(c, t, e, true);
        any = ok;
      }
      if (!any) return true;
    }
    FiniteNearSemiring a;
    a.n = n_;
    a.add = BinaryTable(n_, add_);
    a.mul = BinaryTable(n_, mul_);
    if (p_.involutive) a.inv = inv_;
    a.zero = 0;
    a.one = n_ > 1 ? 1 : 0;
    // Independent re-verification through the ordinary checkers.
    FoundModel m;
    if (!meets_constraint(a, c_, &m)) return true;
    return emit(std::move(m));
  }

  const Plan& p_;
  const SearchConstraint& c_;
  std::size_t n_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<Element> add_;
  std::vector<Element> inv_;
  std::vector<Element> mul_;
};

void check_bound(std::size_t n, const SearchOptions& opt) {
  if (n == 0) throw PreconditionError("size must be at least 1");
  if (n > opt.bound && !opt.allow_large)
    throw BoundError("size " + std::to_string(n) + " exceeds the search bound " + std::to_string(opt.bound));
}

std::vector<FoundModel> trivial_models(const SearchConstraint& c) {
  FiniteNearSemiring a;
  a.n = 1;
  a.add = BinaryTable(1, std::vector<Element>{0});
  a.mul = BinaryTable(1, std::vector<Element>{0});
  if (c.needs_involution()) a.inv = UnaryTable{0};
  FoundModel m;
  if (meets_constraint(a, c, &m)) return {m};
  return {};
}

void name_models(std::vector<FoundModel>& ms, std::size_t n) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ms[i].algebra.name = "M" + std::to_string(n) + "_" + std::to_string(i + 1);
    ms[i].algebra.comment = "enumerated model " + std::to_string(i + 1) + " of size " + std::to_string(n);
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

SearchResult enumerate(std::size_t n, const SearchConstraint& c, const SearchOptions& opt) {
  check_bound(n, opt);
  const auto t0 = Clock::now();
  SearchResult r;
  r.size_reached = n;
  r.exhaustive = true;
  if (n == 1) {
    r.models = trivial_models(c);
    name_models(r.models, n);
    r.nodes = 1;
    r.elapsed_seconds = seconds_since(t0);
    return r;
  }
  const Plan plan = make_plan(n, c);
  Enumerator root(plan, c);
  const auto adds = root.additions();
  r.nodes = root.nodes;

  std::vector<std::vector<FoundModel>> per(adds.size());
  std::vector<std::uint64_t> nodes(adds.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      Enumerator e(plan, c);
      for (std::size_t i; (i = next++) < adds.size();) {
        const auto before = e.nodes;
        e.complete(adds[i], [&](FoundModel m) {
          per[i].push_back(std::move(m));
          return true;
        });
        nodes[i] = e.nodes - before;
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < adds.size(); ++i) {
    r.nodes += nodes[i];
    for (auto& m : per[i]) r.models.push_back(std::move(m));
  }
  std::sort(r.models.begin(), r.models.end(),
            [](const FoundModel& x, const FoundModel& y) { return less_tables(x.algebra, y.algebra); });
  name_models(r.models, n);
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

SearchResult find_model(std::size_t n_max, const SearchConstraint& c, const SearchOptions& opt) {
  check_bound(n_max, opt);
  const auto t0 = Clock::now();
  SearchResult r;
  for (std::size_t n = 1; n <= n_max; ++n) {
    r.size_reached = n;
    if (n == 1) {
      ++r.nodes;
      r.models = trivial_models(c);
    } else {
      const Plan plan = make_plan(n, c);
      Enumerator e(plan, c);
      for (const auto& add : e.additions()) {
        const bool done = !e.complete(add, [&](FoundModel m) {
          r.models.push_back(std::move(m));
          return false;
        });
        if (done) break;
      }
      r.nodes += e.nodes;
    }
    if (!r.models.empty()) {
      r.models.resize(1);
      r.models[0].algebra.name = "F" + std::to_string(n);
      r.models[0].algebra.comment = "first model of size " + std::to_string(n) + " for " + c.describe();
      r.exhaustive = false;
      r.elapsed_seconds = seconds_since(t0);
      return r;
    }
  }
  r.exhaustive = true;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

}  // namespace nsl
