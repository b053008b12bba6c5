#include "nslab/transforms.hpp"

#include "nslab/error.hpp"

namespace nsl {

BasicAlgebra basic_from_lns(const FiniteNearSemiring& r) {
  if (!check_lukasiewicz(r).passed) throw PreconditionError("the Łukasiewicz identity fails");
  BasicAlgebra b;
  b.name = "B(" + r.name + ")";
  b.n = r.n;
  b.oplus = BinaryTable(r.n);
  for (Element x = 0; x < r.n; ++x)
    for (Element y = 0; y < r.n; ++y) b.oplus.set(x, y, r.alpha(r.times(r.plus(r.alpha(x), y), r.alpha(y))));
  b.neg = *r.inv;
  b.zero = r.zero;
  b.labels = r.labels;
  b.comment = "basic algebra of " + r.name;
  return b;
}

FiniteNearSemiring lns_from_basic(const BasicAlgebra& b) {
  if (!check_basic_algebra(b).passed) throw PreconditionError("not a basic algebra");
  FiniteNearSemiring r;
  r.name = "R(" + b.name + ")";
  r.n = b.n;
  r.add = BinaryTable(b.n);
  r.mul = BinaryTable(b.n);
  const auto& neg = b.neg;
  for (Element x = 0; x < b.n; ++x)
    for (Element y = 0; y < b.n; ++y) {
      r.add.set(x, y, b.oplus(neg[b.oplus(neg[x], y)], y));
      r.mul.set(x, y, neg[b.oplus(neg[x], neg[y])]);
    }
  r.inv = neg;
  r.zero = b.zero;
  r.one = b.one();
  r.labels = b.labels;
  r.comment = "near semiring of " + b.name;
  return r;
}

FiniteNearSemiring ons_from_oml(const OrthoLattice& l) {
  if (!check_oml(l).passed) throw PreconditionError("not an orthomodular lattice");
  FiniteNearSemiring r;
  r.name = "ONS(" + l.name + ")";
  r.n = l.n;
  r.add = l.join;
  r.mul = BinaryTable(l.n);
  for (Element x = 0; x < l.n; ++x)
    for (Element y = 0; y < l.n; ++y) r.mul.set(x, y, l.meet(l.join(x, l.ortho[y]), y));
  r.inv = l.ortho;
  r.zero = l.zero;
  r.one = l.one;
  r.labels = l.labels;
  r.comment = "Sasaki near semiring of " + l.name;
  return r;
}

OrthoLattice oml_from_ons(const FiniteNearSemiring& r) {
  if (!check_orthomodular_ns(r).passed) throw PreconditionError("not an orthomodular near semiring");
  OrthoLattice l;
  l.name = "L(" + r.name + ")";
  l.n = r.n;
  l.join = r.add;
  l.ortho = *r.inv;
  l.zero = r.zero;
  l.one = r.one;
  l.labels = r.labels;
  l.comment = "lattice of " + r.name;
  return l;
}

namespace {

class Comparison {
 public:
  Comparison(std::string direction, bool verbose) : verbose_(verbose) { r_.direction = std::move(direction); }

  void binary(const char* op, const BinaryTable& expected, const BinaryTable& actual) {
    for (Element x = 0; x < expected.size(); ++x)
      for (Element y = 0; y < expected.size(); ++y) record(op, {x, y}, expected(x, y), actual(x, y));
  }
  void unary(const char* op, const UnaryTable& expected, const UnaryTable& actual) {
    for (Element x = 0; x < expected.size(); ++x) record(op, {x}, expected[x], actual[x]);
  }
  void constant(const char* op, Element expected, Element actual) { record(op, {}, expected, actual); }

  RoundTripReport take() { return std::move(r_); }

 private:
  void record(const char* op, Tuple args, Element e, Element a) {
    if (e == a) return;
    Mismatch m{op, std::move(args), e, a};
    r_.pointwise_equal = false;
    if (!r_.mismatch) r_.mismatch = m;
    if (verbose_) r_.all.push_back(std::move(m));
  }

  bool verbose_;
  RoundTripReport r_;
};

void compare_ns(Comparison& c, const FiniteNearSemiring& e, const FiniteNearSemiring& a) {
  c.binary("+", e.add, a.add);
  c.binary("·", e.mul, a.mul);
  c.unary("α", *e.inv, *a.inv);
  c.constant("0", e.zero, a.zero);
  c.constant("1", e.one, a.one);
}

}  // namespace

RoundTripReport roundtrip_via_basic(const FiniteNearSemiring& r, bool verbose) {
  Comparison c("near-semiring→basic→near-semiring", verbose);
  compare_ns(c, r, lns_from_basic(basic_from_lns(r)));
  return c.take();
}

RoundTripReport roundtrip_basic(const BasicAlgebra& b, bool verbose) {
  Comparison c("basic→near-semiring→basic", verbose);
  auto back = basic_from_lns(lns_from_basic(b));
  c.binary("⊕", b.oplus, back.oplus);
  c.unary("′", b.neg, back.neg);
  c.constant("0", b.zero, back.zero);
  return c.take();
}

RoundTripReport roundtrip_via_oml(const FiniteNearSemiring& r, bool verbose) {
  Comparison c("near-semiring→oml→near-semiring", verbose);
  compare_ns(c, r, ons_from_oml(oml_from_ons(r)));
  return c.take();
}

RoundTripReport roundtrip_oml(const OrthoLattice& l, bool verbose) {
  Comparison c("oml→near-semiring→oml", verbose);
  auto back = oml_from_ons(ons_from_oml(l));
  c.binary("∨", l.join, back.join);
  c.unary("′", l.ortho, back.ortho);
  c.constant("0", l.zero, back.zero);
  c.constant("1", l.one, back.one);
  return c.take();
}

}  // namespace nsl
