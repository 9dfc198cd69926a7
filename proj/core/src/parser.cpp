#include "matforms/parser.hpp"

#include <cctype>

#include "matforms/errors.hpp"
#include "matforms/quiver_o.hpp"

namespace matforms {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    skip();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
  }

  Expr node(Expr::Kind k) const {
    Expr e;
    e.kind = k;
    e.line = line_;
    e.column = col_;
    return e;
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    return d;
  }
  std::uint32_t small_int() {
    skip();
    std::string d = digits();
    if (d.empty()) fail("expected a nonnegative integer");
    if (d.size() > 9) fail("integer " + d + " is too large here");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  Expr expr() {
    Expr sum = node(Expr::Kind::Sum);
    do {
      bool neg = false;
      for (;;) {
        if (accept('-')) {
          neg = !neg;
        } else if (accept('+')) {
        } else {
          break;
        }
      }
      sum.children.push_back(product());
      sum.negated.push_back(neg);
      skip();
    } while (peek() == '+' || peek() == '-');
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  Expr product() {
    Expr p = node(Expr::Kind::Product);
    p.children.push_back(unary());
    while (accept('*')) p.children.push_back(unary());
    if (p.children.size() == 1) return std::move(p.children[0]);
    return p;
  }

  Expr unary() {
    skip();
    if (peek() == '-') {
      Expr s = node(Expr::Kind::Sum);
      advance();
      s.children.push_back(unary());
      s.negated.push_back(true);
      return s;
    }
    return postfix();
  }

  Expr postfix() {
    Expr e = primary();
    for (;;) {
      skip();
      if (peek() == '\'') {
        Expr t = node(Expr::Kind::Transpose);
        advance();
        if (e.kind == Expr::Kind::Letter) {
          e.transposed = !e.transposed;
        } else if (e.kind == Expr::Kind::Transpose) {
          e = std::move(e.children[0]);
        } else {
          t.children.push_back(std::move(e));
          e = std::move(t);
        }
      } else if (peek() == '^') {
        Expr p = node(Expr::Kind::Power);
        advance();
        p.exponent = small_int();
        p.children.push_back(std::move(e));
        e = std::move(p);
      } else {
        return e;
      }
    }
  }

  Expr primary() {
    skip();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr n = node(Expr::Kind::Number);
      n.number = mpz_class(digits());
      return n;
    }
    if (c == '(') {
      advance();
      Expr e = expr();
      expect(')');
      return e;
    }
    if ((c == 'x' || c == 'y' || c == 'z') && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      Expr l = node(Expr::Kind::Letter);
      advance();
      const std::string d = digits();
      if (d.size() > 9) fail("letter index " + d + " is too large");
      const auto k = static_cast<std::uint32_t>(std::stoul(d));
      if (k == 0) fail("letter indices start at 1");
      if (c != 'x' && k >= kYOffset) fail(std::string(1, c) + "-letter indices stay below 1000");
      l.index = k + (c == 'y' ? kYOffset : c == 'z' ? kZOffset : 0);
      return l;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return call();
    fail(std::string("unexpected '") + c + "'");
  }

  std::vector<DegreeVector> bracket() {
    std::vector<DegreeVector> groups(1);
    expect('[');
    groups.back().push_back(small_int());
    for (;;) {
      if (accept(',')) {
        groups.back().push_back(small_int());
      } else if (accept(';')) {
        groups.emplace_back();
        groups.back().push_back(small_int());
      } else {
        break;
      }
    }
    expect(']');
    return groups;
  }

  Expr call() {
    Expr e = node(Expr::Kind::Call);
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      name += peek();
      advance();
    }
    auto arity_fail = [&](const std::string& what) {
      throw ParseError(name + " " + what, e.line, e.column);
    };
    if (name == "tr") {
      e.func = Expr::Func::Sigma;
      e.params = {{1}};
    } else if (name == "s") {
      e.func = Expr::Func::Sigma;
      e.params = bracket();
      if (e.params.size() != 1) arity_fail("takes a single degree list");
    } else if (name == "sigma") {
      e.func = Expr::Func::SigmaTriple;
      e.params = bracket();
      if (e.params.size() != 3) arity_fail("needs three degree lists t;r;s");
    } else if (name == "chi") {
      e.func = Expr::Func::Chi;
      e.params = bracket();
      if (e.params.size() != 1 || e.params[0].size() > 2) arity_fail("takes [t] or [t,r]");
    } else if (name == "zeta") {
      e.func = Expr::Func::Zeta;
      e.params = bracket();
      if (e.params.size() != 1 || e.params[0].size() != 2) arity_fail("takes [t,r]");
    } else {
      throw ParseError("unknown function '" + name + "'", e.line, e.column);
    }
    expect('(');
    e.children.push_back(expr());
    while (accept(',')) e.children.push_back(expr());
    expect(')');

    std::size_t want = 0;
    switch (e.func) {
      case Expr::Func::Sigma:
        want = e.params[0].size();
        break;
      case Expr::Func::SigmaTriple:
        want = e.params[0].size() + e.params[1].size() + e.params[2].size();
        break;
      case Expr::Func::Chi:
        want = e.params[0].size() == 1 ? 1 : 3;
        break;
      case Expr::Func::Zeta:
        want = 3;
        break;
    }
    if (e.children.size() != want) {
      arity_fail("expects " + std::to_string(want) + " argument(s), got " + std::to_string(e.children.size()));
    }
    return e;
  }
};

std::string join(const DegreeVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

bool is_atom(const Expr& e) {
  return e.kind == Expr::Kind::Number || e.kind == Expr::Kind::Letter || e.kind == Expr::Kind::Call;
}

std::string print_args(const Expr& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? ", " : "") + print(e.children[i]);
  return s + ")";
}

}  // namespace

bool Expr::uses_orthogonal() const {
  switch (kind) {
    case Kind::Letter:
      return transposed || index > kYOffset;
    case Kind::Transpose:
      return true;
    case Kind::Call:
      if (func == Func::SigmaTriple || func == Func::Zeta) return true;
      if (func == Func::Chi && params[0].size() == 2) return true;
      break;
    default:
      break;
  }
  for (const Expr& c : children) {
    if (c.uses_orthogonal()) return true;
  }
  return false;
}

Expr parse(std::string_view source) { return Parser(source).run(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number.get_str();
    case Expr::Kind::Letter:
      return "x" + std::to_string(e.index) + (e.transposed ? "'" : "");
    case Expr::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        std::string t = print(c);
        if (c.kind == Expr::Kind::Sum) t = "(" + t + ")";
        if (i == 0) {
          s = e.negated[i] ? "-" + t : t;
        } else {
          s += (e.negated[i] ? " - " : " + ") + t;
        }
      }
      return s;
    }
    case Expr::Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        std::string t = print(c);
        if (c.kind == Expr::Kind::Sum || c.kind == Expr::Kind::Product) t = "(" + t + ")";
        s += (i ? "*" : "") + t;
      }
      return s;
    }
    case Expr::Kind::Transpose:
    case Expr::Kind::Power: {
      const Expr& c = e.children[0];
      std::string t = print(c);
      if (!is_atom(c) && c.kind != Expr::Kind::Power && c.kind != Expr::Kind::Transpose) t = "(" + t + ")";
      // a transposed letter under ^ keeps its quote inside the atom
      return e.kind == Expr::Kind::Transpose ? t + "'" : t + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Call:
      switch (e.func) {
        case Expr::Func::Sigma:
          if (e.params[0] == DegreeVector{1}) return "tr" + print_args(e);
          return "s[" + join(e.params[0]) + "]" + print_args(e);
        case Expr::Func::SigmaTriple:
          return "sigma[" + join(e.params[0]) + ";" + join(e.params[1]) + ";" + join(e.params[2]) + "]" + print_args(e);
        case Expr::Func::Chi:
          return "chi[" + join(e.params[0]) + "]" + print_args(e);
        case Expr::Func::Zeta:
          return "zeta[" + join(e.params[0]) + "]" + print_args(e);
      }
  }
  throw InternalError("print: unknown node");
}

Alphabet infer_alphabet(const Expr& e) { return e.uses_orthogonal() ? Alphabet::O : Alphabet::GL; }

namespace {

struct Lowering {
  CoeffRing ring;
  Alphabet alphabet;

  [[noreturn]] void fail(const Expr& e, const std::string& msg) const {
    throw InvalidArgument(msg + " at line " + std::to_string(e.line) + ", column " + std::to_string(e.column));
  }

  MixedExpr constant(const mpq_class& v) const {
    return MixedExpr::scalar(SigmaExprTree::constant(ring, alphabet, v));
  }

  LinComb word_sum(const Expr& e) const {
    auto l = lower(e).as_lincomb();
    if (!l) fail(e, "argument must be a linear combination of words");
    return *l;
  }
  std::vector<LinComb> word_sums(const Expr& e, std::size_t from, std::size_t count) const {
    std::vector<LinComb> out;
    for (std::size_t i = from; i < from + count; ++i) out.push_back(word_sum(e.children[i]));
    return out;
  }

  MixedExpr lower(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return constant(mpq_class(e.number));
      case Expr::Kind::Letter:
        if (e.transposed && alphabet == Alphabet::GL) fail(e, "transpose needs the O alphabet");
        return MixedExpr::from(LinComb(ring, Word::letter(e.index, alphabet, e.transposed)));
      case Expr::Kind::Sum: {
        MixedExpr s(ring, alphabet);
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          s = e.negated[i] ? s - lower(e.children[i]) : s + lower(e.children[i]);
        }
        return s;
      }
      case Expr::Kind::Product: {
        MixedExpr p = lower(e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i) p = p * lower(e.children[i]);
        return p;
      }
      case Expr::Kind::Transpose:
        if (alphabet == Alphabet::GL) fail(e, "transpose needs the O alphabet");
        return lower(e.children[0]).transpose();
      case Expr::Kind::Power: {
        const MixedExpr base = lower(e.children[0]);
        MixedExpr p = constant(1);
        for (std::uint32_t i = 0; i < e.exponent; ++i) p = p * base;
        return p;
      }
      case Expr::Kind::Call:
        return call(e);
    }
    throw InternalError("lower: unknown node");
  }

  MixedExpr call(const Expr& e) const {
    const auto& ps = e.params;
    switch (e.func) {
      case Expr::Func::Sigma: {
        if (ps[0].size() == 1) {
          if (ps[0][0] == 0) return constant(1);
          return MixedExpr::scalar(SigmaExprTree::sigma(ps[0][0], word_sum(e.children[0])));
        }
        return MixedExpr::from(sigma_multi(ps[0], word_sums(e, 0, ps[0].size())));
      }
      case Expr::Func::SigmaTriple: {
        if (alphabet != Alphabet::O) fail(e, "sigma[t;r;s] needs the O alphabet");
        const auto u = ps[0].size(), v = ps[1].size(), w = ps[2].size();
        return MixedExpr::from(
            sigma_trs(ps[0], ps[1], ps[2], word_sums(e, 0, u), word_sums(e, u, v), word_sums(e, u + v, w)));
      }
      case Expr::Func::Chi:
        if (ps[0].size() == 1) return chi_expr(ps[0][0], word_sum(e.children[0]));
        [[fallthrough]];
      case Expr::Func::Zeta: {
        if (alphabet != Alphabet::O) fail(e, "orthogonal Cayley-Hamilton forms need the O alphabet");
        const auto args = word_sums(e, 0, 3);
        const MixedElement m = e.func == Expr::Func::Chi ? chi_tr(ps[0][0], ps[0][1], args[0], args[1], args[2])
                                                         : zeta_tr(ps[0][0], ps[0][1], args[0], args[1], args[2]);
        return MixedExpr::from(m);
      }
    }
    throw InternalError("lower: unknown call");
  }
};

}  // namespace

MixedExpr lower(const Expr& e, CoeffRing ring, Alphabet alphabet) {
  check_ring_for_alphabet(ring, alphabet);
  return Lowering{ring, alphabet}.lower(e);
}

MixedExpr lower(const Expr& e, CoeffRing ring) { return lower(e, ring, infer_alphabet(e)); }

MixedElement evaluate(std::string_view source, CoeffRing ring) { return normalize(lower(parse(source), ring)); }

}  // namespace matforms
