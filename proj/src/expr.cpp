#include "expr_internal.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace ctgeo::detail {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_constant(const ExprPtr& e) { return e->op == Op::constant; }
bool is_constant(const ExprPtr& e, double v) {
  return e->op == Op::constant && e->value == v;
}

bool is_integral(double v) {
  return std::floor(v) == v && std::abs(v) < 9.007199254740992e15;
}

}  // namespace

const char* func_name(Func f) {
  switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::tan: return "tan";
    case Func::exp: return "exp";
    case Func::log: return "log";
    case Func::sqrt: return "sqrt";
  }
  return "?";
}

bool is_zero(const ExprPtr& e) { return is_constant(e, 0.0); }
bool is_one(const ExprPtr& e) { return is_constant(e, 1.0); }

ExprPtr make_constant(double v) { return node({.op = Op::constant, .value = v}); }

ExprPtr make_coordinate(int index) { return node({.op = Op::coordinate, .coord = index}); }

ExprPtr make_add(ExprPtr a, ExprPtr b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (is_constant(a) && is_constant(b)) return make_constant(a->value + b->value);
  return node({.op = Op::add, .a = std::move(a), .b = std::move(b)});
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
  if (is_zero(b)) return a;
  if (is_zero(a)) return make_neg(std::move(b));
  if (is_constant(a) && is_constant(b)) return make_constant(a->value - b->value);
  if (a == b) return make_constant(0.0);
  return node({.op = Op::sub, .a = std::move(a), .b = std::move(b)});
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
  if (is_zero(a) || is_zero(b)) return make_constant(0.0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  if (is_constant(a) && is_constant(b)) return make_constant(a->value * b->value);
  return node({.op = Op::mul, .a = std::move(a), .b = std::move(b)});
}

ExprPtr make_div(ExprPtr a, ExprPtr b) {
  if (is_zero(a)) return a;
  if (is_one(b)) return a;
  if (is_constant(a) && is_constant(b) && b->value != 0.0)
    return make_constant(a->value / b->value);
  return node({.op = Op::div, .a = std::move(a), .b = std::move(b)});
}

ExprPtr make_pow(ExprPtr a, ExprPtr b) {
  if (is_constant(b)) {
    if (b->value == 1.0) return a;
    if (b->value == 0.0) return make_constant(1.0);
    if (is_constant(a)) {
      const double v = std::pow(a->value, b->value);
      if (std::isfinite(v)) return make_constant(v);
    }
  }
  return node({.op = Op::pow, .a = std::move(a), .b = std::move(b)});
}

ExprPtr make_neg(ExprPtr a) {
  if (is_constant(a)) return make_constant(-a->value);
  if (a->op == Op::neg) return a->a;
  return node({.op = Op::neg, .a = std::move(a)});
}

ExprPtr make_call(Func f, ExprPtr a) {
  if (is_constant(a)) {
    double v = 0.0;
    switch (f) {
      case Func::sin: v = std::sin(a->value); break;
      case Func::cos: v = std::cos(a->value); break;
      case Func::tan: v = std::tan(a->value); break;
      case Func::exp: v = std::exp(a->value); break;
      case Func::log: v = std::log(a->value); break;
      case Func::sqrt: v = std::sqrt(a->value); break;
    }
    if (std::isfinite(v)) return make_constant(v);
  }
  return node({.op = Op::call, .func = f, .a = std::move(a)});
}

// ------------------------------------------------------------------
// differentiation

namespace {

struct DiffKey {
  const Expr* expr;
  int coord;
  bool operator==(const DiffKey&) const = default;
};

struct DiffKeyHash {
  std::size_t operator()(const DiffKey& k) const {
    return std::hash<const void*>()(k.expr) ^ (std::hash<int>()(k.coord) * 0x9e3779b97f4a7c15ULL);
  }
};

// The cache pins the source node so pointer keys cannot be reused by a
// later allocation.
struct DiffCache {
  std::mutex mu;
  std::unordered_map<DiffKey, std::pair<ExprPtr, ExprPtr>, DiffKeyHash> map;
};

DiffCache& diff_cache() {
  static DiffCache cache;
  return cache;
}

ExprPtr diff_uncached(const ExprPtr& e, int coord);

ExprPtr diff(const ExprPtr& e, int coord) {
  {
    std::scoped_lock lock(diff_cache().mu);
    auto it = diff_cache().map.find({e.get(), coord});
    if (it != diff_cache().map.end()) return it->second.second;
  }
  ExprPtr d = diff_uncached(e, coord);
  std::scoped_lock lock(diff_cache().mu);
  diff_cache().map.emplace(DiffKey{e.get(), coord}, std::make_pair(e, d));
  return d;
}

ExprPtr diff_uncached(const ExprPtr& e, int coord) {
  switch (e->op) {
    case Op::constant:
      return make_constant(0.0);
    case Op::coordinate:
      return make_constant(e->coord == coord ? 1.0 : 0.0);
    case Op::add:
      return make_add(diff(e->a, coord), diff(e->b, coord));
    case Op::sub:
      return make_sub(diff(e->a, coord), diff(e->b, coord));
    case Op::mul:
      return make_add(make_mul(diff(e->a, coord), e->b), make_mul(e->a, diff(e->b, coord)));
    case Op::div:
      return make_div(
          make_sub(make_mul(diff(e->a, coord), e->b), make_mul(e->a, diff(e->b, coord))),
          make_pow(e->b, make_constant(2.0)));
    case Op::pow: {
      if (is_constant(e->b)) {
        // power rule; keeps negative bases valid for integer exponents
        const double c = e->b->value;
        return make_mul(make_constant(c),
                        make_mul(make_pow(e->a, make_constant(c - 1.0)), diff(e->a, coord)));
      }
      // f^g = exp(g log f)
      ExprPtr term = make_add(make_mul(diff(e->b, coord), make_call(Func::log, e->a)),
                              make_div(make_mul(e->b, diff(e->a, coord)), e->a));
      return make_mul(node({.op = Op::pow, .a = e->a, .b = e->b}), term);
    }
    case Op::neg:
      return make_neg(diff(e->a, coord));
    case Op::call: {
      ExprPtr da = diff(e->a, coord);
      switch (e->func) {
        case Func::sin:
          return make_mul(make_call(Func::cos, e->a), da);
        case Func::cos:
          return make_neg(make_mul(make_call(Func::sin, e->a), da));
        case Func::tan:
          return make_div(da, make_pow(make_call(Func::cos, e->a), make_constant(2.0)));
        case Func::exp:
          return make_mul(make_call(Func::exp, e->a), da);
        case Func::log:
          return make_div(da, e->a);
        case Func::sqrt:
          return make_div(da, make_mul(make_constant(2.0), make_call(Func::sqrt, e->a)));
      }
      break;
    }
  }
  throw Error("differentiate: unreachable node kind");
}

}  // namespace

ExprPtr differentiate(const ExprPtr& e, int coord) { return diff(e, coord); }

// ------------------------------------------------------------------
// evaluation

namespace {

double check_finite(const char* what, double arg, double result) {
  if (!std::isfinite(result)) throw DomainError(what, arg);
  return result;
}

double eval_node(const Expr* e, std::span<const double> coords,
                 std::unordered_map<const Expr*, double>& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  double r = 0.0;
  switch (e->op) {
    case Op::constant:
      r = e->value;
      break;
    case Op::coordinate:
      r = coords[static_cast<std::size_t>(e->coord)];
      break;
    case Op::add:
      r = check_finite("+", 0.0,
                       eval_node(e->a.get(), coords, memo) + eval_node(e->b.get(), coords, memo));
      break;
    case Op::sub:
      r = check_finite("-", 0.0,
                       eval_node(e->a.get(), coords, memo) - eval_node(e->b.get(), coords, memo));
      break;
    case Op::mul:
      r = check_finite("*", 0.0,
                       eval_node(e->a.get(), coords, memo) * eval_node(e->b.get(), coords, memo));
      break;
    case Op::div: {
      const double num = eval_node(e->a.get(), coords, memo);
      const double den = eval_node(e->b.get(), coords, memo);
      if (den == 0.0) throw DomainError("division", den);
      r = check_finite("/", den, num / den);
      break;
    }
    case Op::pow: {
      const double base = eval_node(e->a.get(), coords, memo);
      const double expo = eval_node(e->b.get(), coords, memo);
      if (base < 0.0 && !is_integral(expo)) throw DomainError("pow", base);
      if (base == 0.0 && expo < 0.0) throw DomainError("pow", base);
      r = check_finite("pow", base, std::pow(base, expo));
      break;
    }
    case Op::neg:
      r = -eval_node(e->a.get(), coords, memo);
      break;
    case Op::call: {
      const double arg = eval_node(e->a.get(), coords, memo);
      switch (e->func) {
        case Func::sin: r = std::sin(arg); break;
        case Func::cos: r = std::cos(arg); break;
        case Func::tan: r = check_finite("tan", arg, std::tan(arg)); break;
        case Func::exp: r = check_finite("exp", arg, std::exp(arg)); break;
        case Func::log:
          if (arg <= 0.0) throw DomainError("log", arg);
          r = std::log(arg);
          break;
        case Func::sqrt:
          if (arg < 0.0) throw DomainError("sqrt", arg);
          r = std::sqrt(arg);
          break;
      }
      break;
    }
  }
  memo.emplace(e, r);
  return r;
}

}  // namespace

double evaluate(const ExprPtr& e, std::span<const double> coords) {
  std::unordered_map<const Expr*, double> memo;
  return eval_node(e.get(), coords, memo);
}

// ------------------------------------------------------------------
// printing

std::string exact_double_text_impl(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Precedence levels: 1 additive, 2 multiplicative, 3 unary minus, 4 power,
// 5 atoms. Parenthesization preserves the tree shape so a reparse evaluates
// identically.
int level(const Expr& e) {
  switch (e.op) {
    case Op::constant:
      return e.value < 0.0 ? 3 : 5;
    case Op::coordinate:
    case Op::call:
      return 5;
    case Op::add:
    case Op::sub:
      return 1;
    case Op::mul:
    case Op::div:
      return 2;
    case Op::neg:
      return 3;
    case Op::pow:
      return 4;
  }
  return 5;
}

struct Printer {
  const Chart& chart;
  std::string out;

  void child(const ExprPtr& e, int required) {
    if (level(*e) < required) {
      out += '(';
      node(e);
      out += ')';
    } else {
      node(e);
    }
  }

  void node(const ExprPtr& e) {
    switch (e->op) {
      case Op::constant:
        out += exact_double_text_impl(e->value);
        break;
      case Op::coordinate:
        out += chart.coord_name(e->coord);
        break;
      case Op::add:
        child(e->a, 1);
        out += '+';
        child(e->b, 2);
        break;
      case Op::sub:
        child(e->a, 1);
        out += '-';
        child(e->b, 2);
        break;
      case Op::mul:
        child(e->a, 2);
        out += '*';
        child(e->b, 3);
        break;
      case Op::div:
        child(e->a, 2);
        out += '/';
        child(e->b, 3);
        break;
      case Op::neg:
        out += '-';
        child(e->a, 3);
        break;
      case Op::pow:
        child(e->a, 5);
        out += '^';
        child(e->b, 3);
        break;
      case Op::call:
        out += func_name(e->func);
        out += '(';
        node(e->a);
        out += ')';
        break;
    }
  }
};

}  // namespace

std::string print(const ExprPtr& e, const Chart& chart) {
  Printer p{chart, {}};
  p.node(e);
  return p.out;
}

// ------------------------------------------------------------------
// parsing

namespace {

enum class Tok : unsigned char {
  number,
  ident,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  comma,
  end,
};

struct Token {
  Tok kind;
  std::size_t offset = 0;
  double number = 0.0;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& current() const { return tok_; }

  void advance() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::end;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_.kind = Tok::ident;
      tok_.text = src_.substr(begin, pos_ - begin);
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.kind = Tok::plus; return;
      case '-': tok_.kind = Tok::minus; return;
      case '*': tok_.kind = Tok::star; return;
      case '/': tok_.kind = Tok::slash; return;
      case '^': tok_.kind = Tok::caret; return;
      case '(': tok_.kind = Tok::lparen; return;
      case ')': tok_.kind = Tok::rparen; return;
      case ',': tok_.kind = Tok::comma; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tok_.offset);
    }
  }

 private:
  void lex_number() {
    std::size_t begin = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to a following identifier, not the number
      }
    }
    if (pos_ == begin || (pos_ - begin == 1 && src_[begin] == '.'))
      throw ParseError("malformed number", begin);
    tok_.kind = Tok::number;
    tok_.text = src_.substr(begin, pos_ - begin);
    tok_.number = std::strtod(std::string(tok_.text).c_str(), nullptr);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart) : lex_(src), chart_(chart) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (lex_.current().kind != Tok::end)
      throw ParseError("unexpected trailing input", lex_.current().offset);
    return e;
  }

 private:
  // expr  := term (('+'|'-') term)*
  // term  := unary (('*'|'/') unary)*
  // unary := '-' unary | power
  // power := primary ('^' unary)?          (right-associative)
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (lex_.current().kind == Tok::plus) {
        lex_.advance();
        lhs = make_add(lhs, parse_term());
      } else if (lex_.current().kind == Tok::minus) {
        lex_.advance();
        lhs = make_sub(lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    for (;;) {
      if (lex_.current().kind == Tok::star) {
        lex_.advance();
        lhs = make_mul(lhs, parse_unary());
      } else if (lex_.current().kind == Tok::slash) {
        lex_.advance();
        lhs = make_div(lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    if (lex_.current().kind == Tok::minus) {
      lex_.advance();
      return make_neg(parse_unary());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (lex_.current().kind == Tok::caret) {
      lex_.advance();
      return make_pow(base, parse_unary());
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Token tok = lex_.current();
    switch (tok.kind) {
      case Tok::number:
        lex_.advance();
        return make_constant(tok.number);
      case Tok::lparen: {
        lex_.advance();
        ExprPtr e = parse_expr();
        expect(Tok::rparen, "expected ')'");
        return e;
      }
      case Tok::ident:
        return parse_name(tok);
      default:
        throw ParseError("expected a value", tok.offset);
    }
  }

  ExprPtr parse_name(const Token& tok) {
    static constexpr std::pair<std::string_view, Func> functions[] = {
        {"sin", Func::sin}, {"cos", Func::cos}, {"tan", Func::tan},
        {"exp", Func::exp}, {"log", Func::log}, {"sqrt", Func::sqrt},
    };
    lex_.advance();
    for (const auto& [name, func] : functions) {
      if (tok.text == name) {
        if (lex_.current().kind != Tok::lparen)
          throw ParseError("expected '(' after function '" + std::string(name) + "'",
                           lex_.current().offset);
        lex_.advance();
        ExprPtr arg = parse_expr();
        if (lex_.current().kind == Tok::comma)
          throw FunctionArityError(std::string(name), lex_.current().offset);
        expect(Tok::rparen, "expected ')'");
        return make_call(func, arg);
      }
    }
    if (auto index = chart_.find(tok.text)) return make_coordinate(*index);
    throw UnknownIdentifierError(std::string(tok.text), tok.offset);
  }

  void expect(Tok kind, const char* message) {
    if (lex_.current().kind != kind) throw ParseError(message, lex_.current().offset);
    lex_.advance();
  }

  Lexer lex_;
  const Chart& chart_;
};

}  // namespace

ExprPtr parse(std::string_view src, const Chart& chart) {
  if (src.empty()) throw ParseError("empty expression", 0);
  return Parser(src, chart).run();
}

ExprPtr substitute(const ExprPtr& e, std::span<const ExprPtr> coordinate_map) {
  switch (e->op) {
    case Op::constant:
      return e;
    case Op::coordinate:
      return coordinate_map[static_cast<std::size_t>(e->coord)];
    case Op::add:
      return make_add(substitute(e->a, coordinate_map), substitute(e->b, coordinate_map));
    case Op::sub:
      return make_sub(substitute(e->a, coordinate_map), substitute(e->b, coordinate_map));
    case Op::mul:
      return make_mul(substitute(e->a, coordinate_map), substitute(e->b, coordinate_map));
    case Op::div:
      return make_div(substitute(e->a, coordinate_map), substitute(e->b, coordinate_map));
    case Op::pow:
      return make_pow(substitute(e->a, coordinate_map), substitute(e->b, coordinate_map));
    case Op::neg:
      return make_neg(substitute(e->a, coordinate_map));
    case Op::call:
      return make_call(e->func, substitute(e->a, coordinate_map));
  }
  throw Error("substitute: unreachable node kind");
}

}  // namespace ctgeo::detail
