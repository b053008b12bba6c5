#include "nslab/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nslab/error.hpp"
#include "nslab/varieties.hpp"

namespace nsl {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }

  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  std::vector<Element> labels() {
    std::vector<Element> out(parent.size());
    for (Element x = 0; x < parent.size(); ++x) out[x] = find(x);
    return out;
  }

  std::vector<Element> parent;
};

}  // namespace

Congruence::Congruence(std::vector<Element> blocks) : blocks_(std::move(blocks)) {
  std::vector<Element> seen;
  for (auto& b : blocks_) {
    auto it = std::find(seen.begin(), seen.end(), b);
    if (it == seen.end()) {
      seen.push_back(b);
      b = static_cast<Element>(seen.size() - 1);
    } else {
      b = static_cast<Element>(it - seen.begin());
    }
  }
  count_ = seen.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), Element{0});
  return Congruence(std::move(b));
}

Congruence Congruence::all(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out(count_);
  for (Element x = 0; x < blocks_.size(); ++x) out[blocks_[x]].push_back(x);
  return out;
}

Relation Congruence::relation() const {
  Relation r(size());
  for (Element x = 0; x < size(); ++x)
    for (Element y = 0; y < size(); ++y) r.set(x, y, same(x, y));
  return r;
}

bool Congruence::finer_than(const Congruence& o) const {
  for (Element x = 0; x < size(); ++x)
    for (Element y = x + 1; y < size(); ++y)
      if (same(x, y) && !o.same(x, y)) return false;
  return true;
}

std::string Congruence::render(const FiniteNearSemiring& a) const {
  std::string s;
  for (const auto& cls : classes()) {
    s += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) s += ',';
      s += a.label(cls[i]);
    }
    s += '}';
  }
  return s;
}

bool Congruence::operator<(const Congruence& o) const {
  if (count_ != o.count_) return count_ > o.count_;
  return blocks_ < o.blocks_;
}

std::optional<std::string> compatibility_failure(const FiniteNearSemiring& a, const Congruence& c) {
  if (c.size() != a.n) return "partition size does not match the algebra";
  auto lab = [&](Element x) { return a.label(x); };
  for (Element x = 0; x < a.n; ++x)
    for (Element y = x + 1; y < a.n; ++y) {
      if (!c.same(x, y)) continue;
      if (a.inv && !c.same(a.alpha(x), a.alpha(y)))
        return lab(x) + "≡" + lab(y) + " but α(" + lab(x) + ")≢α(" + lab(y) + ")";
      for (Element z = 0; z < a.n; ++z) {
        if (!c.same(a.plus(x, z), a.plus(y, z)))
          return lab(x) + "≡" + lab(y) + " but " + lab(x) + "+" + lab(z) + "≢" + lab(y) + "+" + lab(z);
        if (!c.same(a.plus(z, x), a.plus(z, y)))
          return lab(x) + "≡" + lab(y) + " but " + lab(z) + "+" + lab(x) + "≢" + lab(z) + "+" + lab(y);
        if (!c.same(a.times(x, z), a.times(y, z)))
          return lab(x) + "≡" + lab(y) + " but " + lab(x) + "·" + lab(z) + "≢" + lab(y) + "·" + lab(z);
        if (!c.same(a.times(z, x), a.times(z, y)))
          return lab(x) + "≡" + lab(y) + " but " + lab(z) + "·" + lab(x) + "≢" + lab(z) + "·" + lab(y);
      }
    }
  return std::nullopt;
}

bool is_compatible(const FiniteNearSemiring& a, const Congruence& c) { return !compatibility_failure(a, c); }

Congruence principal_congruence(const FiniteNearSemiring& a, Element x, Element y) {
  if (x >= a.n || y >= a.n) throw RangeError("element out of range");
  UnionFind uf(a.n);
  std::vector<std::pair<Element, Element>> work{{x, y}};
  // Only pairs that actually merged two classes need to be pushed through the
  // translations: images of a chain of merged pairs form a chain again.
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    if (a.inv) work.emplace_back(a.alpha(u), a.alpha(v));
    for (Element z = 0; z < a.n; ++z) {
      work.emplace_back(a.plus(u, z), a.plus(v, z));
      work.emplace_back(a.plus(z, u), a.plus(z, v));
      work.emplace_back(a.times(u, z), a.times(v, z));
      work.emplace_back(a.times(z, u), a.times(z, v));
    }
  }
  return Congruence(uf.labels());
}

Congruence join(const Congruence& p, const Congruence& q) {
  UnionFind uf(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (p.same(x, y) || q.same(x, y)) uf.unite(x, y);
  return Congruence(uf.labels());
}

Congruence meet(const Congruence& p, const Congruence& q) {
  std::vector<Element> b(p.size());
  for (Element x = 0; x < p.size(); ++x) b[x] = static_cast<Element>(p.block(x) * q.size() + q.block(x));
  return Congruence(std::move(b));
}

Relation compose(const Congruence& p, const Congruence& q) {
  const auto n = static_cast<Element>(p.size());
  Relation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (q.same(y, z)) r.set(x, z);
    }
  return r;
}

std::vector<Congruence> all_congruences(const FiniteNearSemiring& a) {
  std::set<Congruence> found;
  found.insert(Congruence::identity(a.n));
  std::vector<Congruence> principals;
  for (Element x = 0; x < a.n; ++x)
    for (Element y = x + 1; y < a.n; ++y) {
      auto c = principal_congruence(a, x, y);
      if (found.insert(c).second) principals.push_back(c);
    }
  // Every congruence is a join of principal ones; close the set under joins with them.
  std::vector<Congruence> frontier(principals);
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& p : principals) {
        auto j = join(c, p);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(found.begin(), found.end());
  for (const auto& c : out)
    if (auto f = compatibility_failure(a, c)) throw InternalError("closure produced a non-congruence: " + *f);
  return out;
}

bool is_factor_pair(const FiniteNearSemiring& a, const Congruence& p, const Congruence& q) {
  if (auto f = compatibility_failure(a, p)) throw PreconditionError("first partition is not a congruence: " + *f);
  if (auto f = compatibility_failure(a, q)) throw PreconditionError("second partition is not a congruence: " + *f);
  if (!meet(p, q).is_identity() || !join(p, q).is_all()) return false;
  const Relation full = Congruence::all(a.n).relation();
  return compose(p, q) == full && compose(q, p) == full;
}

FiniteNearSemiring quotient(const FiniteNearSemiring& a, const Congruence& c) {
  if (auto f = compatibility_failure(a, c)) throw PreconditionError("not a congruence: " + *f);
  const auto classes = c.classes();
  const std::size_t k = classes.size();
  FiniteNearSemiring q;
  q.name = a.name + "/θ";
  q.n = k;
  q.add = BinaryTable(k);
  q.mul = BinaryTable(k);
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) {
      q.add.set(i, j, c.block(a.plus(classes[i][0], classes[j][0])));
      q.mul.set(i, j, c.block(a.times(classes[i][0], classes[j][0])));
    }
  if (a.inv) {
    UnaryTable inv(k);
    for (Element i = 0; i < k; ++i) inv[i] = c.block(a.alpha(classes[i][0]));
    q.inv = std::move(inv);
  }
  q.zero = c.block(a.zero);
  q.one = c.block(a.one);
  for (const auto& cls : classes) q.labels.push_back("[" + a.label(cls[0]) + "]");
  q.comment = "quotient of " + a.name + " by " + c.render(a);
  return q;
}

namespace {

// Textual substitution of single-letter placeholders X, Y, Z.
std::string instantiate(std::string_view tmpl, char x, char y, char z) {
  std::string s;
  for (char ch : tmpl) {
    if (ch == 'X') s += x;
    else if (ch == 'Y') s += y;
    else if (ch == 'Z') s += z;
    else s += ch;
  }
  return s;
}

constexpr std::string_view kMalcev = "α((α(X·α(Y))·α(Z))+(α(Z·α(Y))·α(X)))";
constexpr std::string_view kMajority = "(α(α(X)+α(Y))+α(α(Y)+α(Z)))+α(α(Z)+α(X))";

}  // namespace

PropertyReport witness_term_checks(const FiniteNearSemiring& a) {
  if (!check_lukasiewicz(a).passed) throw PreconditionError("the Łukasiewicz identity fails");
  NearSemiringView v(a);
  std::vector<Clause> cs;
  cs.push_back(v.clause("regularity", "((x·α(y))+(y·α(x)))+z = z & α((x·α(y))+(y·α(x)))·z = z ⇔ x = y"));
  cs.push_back(v.clause("malcev-xyy", instantiate(kMalcev, 'x', 'y', 'y') + " = x"));
  cs.push_back(v.clause("malcev-xxy", instantiate(kMalcev, 'x', 'x', 'y') + " = y"));
  cs.push_back(v.clause("majority-xxy", instantiate(kMajority, 'x', 'x', 'y') + " = x"));
  cs.push_back(v.clause("majority-xyx", instantiate(kMajority, 'x', 'y', 'x') + " = x"));
  cs.push_back(v.clause("majority-yxx", instantiate(kMajority, 'y', 'x', 'x') + " = x"));
  PropertyReport r;
  r.suite = "witness-terms";
  append(r, a.n, cs);
  return r;
}

PropertyReport congruence_lattice_suite(const std::vector<Congruence>& cons) {
  PropertyReport r;
  r.suite = "congruence-lattice";
  const std::size_t k = cons.size();
  std::string permute_detail;
  for (std::size_t i = 0; i < k && permute_detail.empty(); ++i)
    for (std::size_t j = i + 1; j < k && permute_detail.empty(); ++j)
      if (compose(cons[i], cons[j]) != compose(cons[j], cons[i]))
        permute_detail = "congruences #" + std::to_string(i) + " and #" + std::to_string(j) + " do not permute";
  r.add_flag("permutable", permute_detail.empty(), permute_detail);

  std::string distrib_detail;
  for (std::size_t i = 0; i < k && distrib_detail.empty(); ++i)
    for (std::size_t j = 0; j < k && distrib_detail.empty(); ++j)
      for (std::size_t l = 0; l < k && distrib_detail.empty(); ++l) {
        const auto& p = cons[i];
        const auto& q = cons[j];
        const auto& s = cons[l];
        if (meet(p, join(q, s)) != join(meet(p, q), meet(p, s)))
          distrib_detail = "distributivity fails at congruences #" + std::to_string(i) + ", #" + std::to_string(j) +
                           ", #" + std::to_string(l);
      }
  r.add_flag("distributive", distrib_detail.empty(), distrib_detail);
  return r;
}

}  // namespace nsl
