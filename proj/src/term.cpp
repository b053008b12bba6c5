#include "nslab/term.hpp"

#include <algorithm>

#include "nslab/error.hpp"

namespace nsl::term {

namespace {

enum class Tok : std::uint8_t {
  End, LParen, RParen, Zero, One, Var,
  Add, Mul, Oplus, Join, Meet, Alpha, Tilde, Prime,
  Eq, Neq, Leq, And, Implies, Iff,
};

struct Lexeme {
  Tok tok = Tok::End;
  char var = 0;
  std::size_t pos = 0;
};

struct Spelling {
  std::string_view text;
  Tok tok;
};

// Longer spellings first so that "<=>" wins over "<=" and "=>" over "=".
constexpr Spelling kSpellings[] = {
    {"<=>", Tok::Iff},   {"⇔", Tok::Iff},     {"=>", Tok::Implies}, {"⇒", Tok::Implies},
    {"<=", Tok::Leq},    {"≤", Tok::Leq},     {"!=", Tok::Neq},     {"≠", Tok::Neq},
    {"=", Tok::Eq},      {"&", Tok::And},     {"(", Tok::LParen},   {")", Tok::RParen},
    {"+", Tok::Add},     {"·", Tok::Mul},     {"*", Tok::Mul},      {"⊕", Tok::Oplus},
    {"∨", Tok::Join},    {"∧", Tok::Meet},    {"α", Tok::Alpha},    {"~", Tok::Tilde},
    {"′", Tok::Prime},   {"'", Tok::Prime},   {"0", Tok::Zero},     {"1", Tok::One},
};

std::vector<Lexeme> lex(std::string_view s) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    if (s[i] >= 'a' && s[i] <= 'z') {
      out.push_back({Tok::Var, s[i], i});
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& sp : kSpellings) {
      if (s.substr(i, sp.text.size()) == sp.text) {
        out.push_back({sp.tok, 0, i});
        i += sp.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unexpected character in term at offset " + std::to_string(i));
  }
  out.push_back({Tok::End, 0, s.size()});
  return out;
}

bool is_binary(Op op) {
  return op == Op::Add || op == Op::Mul || op == Op::Oplus || op == Op::Join || op == Op::Meet;
}

}  // namespace

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), lex_(lex(text)) {}

  Term term_only() {
    Term t = parse_term();
    expect_end();
    return t;
  }

  Term parse_term() {
    Term t;
    auto root = loose(t);
    (void)root;
    return t;
  }

  Tok peek() const { return lex_[pos_].tok; }
  Lexeme next() { return lex_[pos_++]; }

  void expect_end() {
    if (peek() != Tok::End) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(lex_[pos_].pos) + " in '" + std::string(text_) + "'");
  }

 private:
  std::int16_t push(Term& t, Node n) {
    if (t.nodes_.size() >= kMaxNodes) fail("term too large");
    t.nodes_.push_back(n);
    return static_cast<std::int16_t>(t.nodes_.size() - 1);
  }

  std::int16_t loose(Term& t) {
    auto left = tight(t);
    for (;;) {
      Op op;
      switch (peek()) {
        case Tok::Add: op = Op::Add; break;
        case Tok::Oplus: op = Op::Oplus; break;
        case Tok::Join: op = Op::Join; break;
        default: return left;
      }
      next();
      auto right = tight(t);
      left = push(t, {op, left, right, 0});
    }
  }

  std::int16_t tight(Term& t) {
    auto left = postfix(t);
    for (;;) {
      Op op;
      switch (peek()) {
        case Tok::Mul: op = Op::Mul; break;
        case Tok::Meet: op = Op::Meet; break;
        default: return left;
      }
      next();
      auto right = postfix(t);
      left = push(t, {op, left, right, 0});
    }
  }

  std::int16_t postfix(Term& t) {
    auto x = primary(t);
    while (peek() == Tok::Prime) {
      next();
      x = push(t, {Op::Prime, x, -1, 0});
    }
    return x;
  }

  std::int16_t primary(Term& t) {
    Lexeme l = next();
    switch (l.tok) {
      case Tok::LParen: {
        auto x = loose(t);
        if (next().tok != Tok::RParen) {
          --pos_;
          fail("expected ')'");
        }
        return x;
      }
      case Tok::Alpha:
      case Tok::Tilde: {
        auto x = l.tok == Tok::Alpha ? primary(t) : postfix(t);
        return push(t, {Op::Alpha, x, -1, 0});
      }
      case Tok::Zero: return push(t, {Op::Zero, -1, -1, 0});
      case Tok::One: return push(t, {Op::One, -1, -1, 0});
      case Tok::Var: {
        if (t.vars_.find(l.var) == std::string::npos) t.vars_.push_back(l.var);
        return push(t, {Op::Var, -1, -1, l.var});
      }
      default:
        --pos_;
        fail("expected a term");
    }
  }

  std::string_view text_;
  std::vector<Lexeme> lex_;
  std::size_t pos_ = 0;

  friend class nsl::term::Formula;
};

Term Term::parse(std::string_view text) {
  Parser p(text);
  return p.term_only();
}

std::string Interpretation::label(Element x) const {
  if (labels != nullptr && x < labels->size()) return (*labels)[x];
  return std::to_string(x);
}

namespace {

Element eval_at(const Term& t, const Interpretation& in, const Assignment& a, std::array<Element, kMaxNodes>& v) {
  const auto& nodes = t.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& nd = nodes[i];
    switch (nd.op) {
      case Op::Var: v[i] = a[nd.var - 'a']; break;
      case Op::Zero: v[i] = in.zero; break;
      case Op::One: v[i] = in.one; break;
      case Op::Add: v[i] = (*in.add)(v[nd.left], v[nd.right]); break;
      case Op::Mul: v[i] = (*in.mul)(v[nd.left], v[nd.right]); break;
      case Op::Oplus: v[i] = (*in.oplus)(v[nd.left], v[nd.right]); break;
      case Op::Join: v[i] = (*in.join)(v[nd.left], v[nd.right]); break;
      case Op::Meet: v[i] = (*in.meet)(v[nd.left], v[nd.right]); break;
      case Op::Alpha: v[i] = (*in.alpha)[v[nd.left]]; break;
      case Op::Prime: v[i] = (*in.prime)[v[nd.left]]; break;
    }
  }
  return v[nodes.size() - 1];
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Mul: return "·";
    case Op::Oplus: return "⊕";
    case Op::Join: return "∨";
    case Op::Meet: return "∧";
    default: return "";
  }
}

void render_node(const Term& t, std::int16_t i, const Interpretation& in, const Assignment& a, std::string& out) {
  const Node& nd = t.nodes()[i];
  auto child = [&](std::int16_t c, bool wrap_binary) {
    bool wrap = wrap_binary && is_binary(t.nodes()[c].op);
    if (wrap) out += '(';
    render_node(t, c, in, a, out);
    if (wrap) out += ')';
  };
  switch (nd.op) {
    case Op::Var: out += in.label(a[nd.var - 'a']); break;
    case Op::Zero: out += '0'; break;
    case Op::One: out += '1'; break;
    case Op::Alpha:
      out += "α(";
      child(nd.left, false);
      out += ')';
      break;
    case Op::Prime: {
      bool wrap = t.nodes()[nd.left].op != Op::Var && t.nodes()[nd.left].op != Op::Zero &&
                  t.nodes()[nd.left].op != Op::One && t.nodes()[nd.left].op != Op::Prime;
      if (wrap) out += '(';
      render_node(t, nd.left, in, a, out);
      if (wrap) out += ')';
      out += "′";
      break;
    }
    default:
      child(nd.left, true);
      out += symbol(nd.op);
      child(nd.right, true);
      break;
  }
}

}  // namespace

Element eval(const Term& t, const Interpretation& in, const Assignment& a) {
  std::array<Element, kMaxNodes> v{};
  return eval_at(t, in, a, v);
}

std::string render(const Term& t, const Interpretation& in, const Assignment& a) {
  std::string out;
  render_node(t, static_cast<std::int16_t>(t.nodes().size() - 1), in, a, out);
  return out;
}

const std::string& witness_order() {
  static const std::string order = "exyzuvwabcdfghijklmnopqrst";
  return order;
}

Formula Formula::parse(std::string_view text) {
  Parser p(text);
  Formula f;
  auto conj = [&](std::vector<Atom>& atoms) {
    for (;;) {
      Atom at;
      at.lhs = p.parse_term();
      switch (p.next().tok) {
        case Tok::Eq: at.rel = Rel::Eq; break;
        case Tok::Neq: at.rel = Rel::Neq; break;
        case Tok::Leq: at.rel = Rel::Leq; break;
        default:
          --p.pos_;
          p.fail("expected '=', '≠' or '≤'");
      }
      at.rhs = p.parse_term();
      atoms.push_back(std::move(at));
      if (p.peek() != Tok::And) return;
      p.next();
    }
  };
  conj(f.left_);
  if (p.peek() == Tok::Implies || p.peek() == Tok::Iff) {
    f.conn_ = p.next().tok == Tok::Implies ? Connective::Implies : Connective::Iff;
    conj(f.right_);
  }
  p.expect_end();

  std::string seen;
  for (const auto* side : {&f.left_, &f.right_})
    for (const auto& at : *side)
      for (const auto* tm : {&at.lhs, &at.rhs})
        for (char c : tm->variables())
          if (seen.find(c) == std::string::npos) seen.push_back(c);
  const auto& order = witness_order();
  std::sort(seen.begin(), seen.end(), [&](char x, char y) { return order.find(x) < order.find(y); });
  f.vars_ = seen;
  return f;
}

namespace {

bool atom_holds(const Atom& at, const Interpretation& in, const Assignment& a) {
  Element l = eval(at.lhs, in, a);
  Element r = eval(at.rhs, in, a);
  switch (at.rel) {
    case Rel::Eq: return l == r;
    case Rel::Neq: return l != r;
    case Rel::Leq: return (*in.leq)(l, r);
  }
  return false;
}

bool all_hold(const std::vector<Atom>& atoms, const Interpretation& in, const Assignment& a) {
  return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& at) { return atom_holds(at, in, a); });
}

const char* rel_symbol(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Neq: return "≠";
    case Rel::Leq: return "≤";
  }
  return "?";
}

std::string instance(const Atom& at, const Interpretation& in, const Assignment& a) {
  return render(at.lhs, in, a) + rel_symbol(at.rel) + render(at.rhs, in, a);
}

std::string instances(const std::vector<Atom>& atoms, const Interpretation& in, const Assignment& a) {
  std::string s;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += " & ";
    s += instance(atoms[i], in, a);
  }
  return s;
}

// "b+b=a, expected b" for equations with an atomic right side, values spelled out otherwise.
std::string atom_failure(const Atom& at, const Interpretation& in, const Assignment& a) {
  Element l = eval(at.lhs, in, a);
  Element r = eval(at.rhs, in, a);
  std::string lt = render(at.lhs, in, a);
  std::string rt = render(at.rhs, in, a);
  switch (at.rel) {
    case Rel::Eq:
      if (at.rhs.is_atomic()) return lt + "=" + in.label(l) + ", expected " + in.label(r);
      return lt + "=" + in.label(l) + " but " + rt + "=" + in.label(r);
    case Rel::Neq:
      return lt + "=" + rt + "=" + in.label(l);
    case Rel::Leq:
      return lt + "≤" + rt + " fails: " + in.label(l) + "≰" + in.label(r);
  }
  return {};
}

std::string first_failure(const std::vector<Atom>& atoms, const Interpretation& in, const Assignment& a) {
  for (const auto& at : atoms)
    if (!atom_holds(at, in, a)) return atom_failure(at, in, a);
  return {};
}

}  // namespace

bool Formula::holds(const Interpretation& in, const Assignment& a) const {
  bool l = all_hold(left_, in, a);
  switch (conn_) {
    case Connective::None: return l;
    case Connective::Implies: return !l || all_hold(right_, in, a);
    case Connective::Iff: return l == all_hold(right_, in, a);
  }
  return false;
}

std::string Formula::describe_failure(const Interpretation& in, const Assignment& a) const {
  switch (conn_) {
    case Connective::None: return first_failure(left_, in, a);
    case Connective::Implies: return instances(left_, in, a) + " holds but " + first_failure(right_, in, a);
    case Connective::Iff: {
      bool l = all_hold(left_, in, a);
      return instances(left_, in, a) + (l ? " holds" : " fails") + " but " + instances(right_, in, a) +
             (l ? " fails" : " holds");
    }
  }
  return {};
}

}  // namespace nsl::term
