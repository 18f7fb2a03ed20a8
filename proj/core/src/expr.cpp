#include "nullplane/expr.hpp"

#include "nullplane/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nullplane {

namespace {

struct Token {
  enum Kind {
    Plus, Minus, Star, Slash, Caret, LParen, RParen, Ox, Number, Gen, Macro,
    Func, ZSym, End
  } kind;
  BigInt number;
  int id = -1;          // generator id or function id
  std::string name;
  int col = 0;
};

class Lexer {
public:
  Lexer(const std::string& text, const SymbolTable& syms, int line)
      : text_(text), syms_(syms), line_(line) {
    for (const auto& [name, id] : syms.generators) names_.push_back(name);
    for (const auto& [name, e] : syms.macros) names_.push_back(name);
    std::sort(names_.begin(), names_.end(),
              [](const std::string& a, const std::string& b) {
                return a.size() > b.size();
              });
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, line_, at.col);
  }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what, tok_);
    advance();
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
    tok_ = Token{};
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (c >= '0' && c <= '9') {
      size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        ++pos_;
      tok_.kind = Token::Number;
      tok_.number = BigInt(text_.substr(start, pos_ - start));
      return;
    }
    // Declared names first (longest match), so "P+" beats the '+' operator.
    for (const auto& name : names_) {
      if (text_.compare(pos_, name.size(), name) == 0) {
        tok_.name = name;
        if (auto it = syms_.generators.find(name);
            it != syms_.generators.end()) {
          tok_.kind = Token::Gen;
          tok_.id = it->second;
        } else {
          tok_.kind = Token::Macro;
        }
        pos_ += name.size();
        return;
      }
    }
    // Reserved words: functions, the tensor separator, and z itself.
    for (const char* fn : {"sinhz", "sinh", "cosh", "exp"}) {
      size_t len = std::char_traits<char>::length(fn);
      if (text_.compare(pos_, len, fn) == 0) {
        tok_.kind = Token::Func;
        tok_.name = fn;
        pos_ += len;
        return;
      }
    }
    if (text_.compare(pos_, 2, "ox") == 0) {
      tok_.kind = Token::Ox;
      pos_ += 2;
      return;
    }
    if (c == 'z') {
      tok_.kind = Token::ZSym;
      ++pos_;
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.kind = Token::Plus; return;
      case '-': tok_.kind = Token::Minus; return;
      case '*': tok_.kind = Token::Star; return;
      case '/': tok_.kind = Token::Slash; return;
      case '^': tok_.kind = Token::Caret; return;
      case '(': tok_.kind = Token::LParen; return;
      case ')': tok_.kind = Token::RParen; return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     tok_.col);
  }

  const std::string& text_;
  const SymbolTable& syms_;
  int line_;
  size_t pos_ = 0;
  Token tok_;
  std::vector<std::string> names_;
};

void expr_append(Expr& e, Term t) {
  if (t.coeff == 0) return;
  e.terms.push_back(std::move(t));
}

Term term_mul(const Term& a, const Term& b) {
  Term out;
  out.coeff = a.coeff * b.coeff;
  out.z_pow = a.z_pow + b.z_pow;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

class Parser {
public:
  Parser(Lexer& lex, const SymbolTable& syms) : lex_(lex), syms_(syms) {}

  Expr expr() {
    Expr out;
    bool neg = sign();
    append_product(out, neg);
    while (lex_.peek().kind == Token::Plus ||
           lex_.peek().kind == Token::Minus) {
      bool n = lex_.take().kind == Token::Minus;
      append_product(out, n);
    }
    return out;
  }

  TensorExpr tensor_expr() {
    TensorExpr out;
    bool neg = sign();
    append_tensor_term(out, neg);
    while (lex_.peek().kind == Token::Plus ||
           lex_.peek().kind == Token::Minus) {
      bool n = lex_.take().kind == Token::Minus;
      append_tensor_term(out, n);
    }
    return out;
  }

  void finish() {
    if (lex_.peek().kind != Token::End)
      lex_.fail("trailing input", lex_.peek());
  }

private:
  bool sign() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return true;
    }
    if (lex_.peek().kind == Token::Plus) lex_.take();
    return false;
  }

  void append_product(Expr& out, bool neg) {
    Expr p = product();
    if (neg) p = expr_neg(std::move(p));
    for (auto& t : p.terms) expr_append(out, std::move(t));
  }

  void append_tensor_term(TensorExpr& out, bool neg) {
    std::vector<Expr> segments;
    segments.push_back(product());
    while (lex_.peek().kind == Token::Ox) {
      lex_.take();
      segments.push_back(product());
    }
    int rank = static_cast<int>(segments.size());
    if (out.rank == 0)
      out.rank = rank;
    else if (out.rank != rank)
      lex_.fail("inconsistent tensor rank across terms", lex_.peek());
    // Cross product of the segment sums.
    std::vector<TensorTerm> acc(1);
    acc[0].coeff = neg ? -1 : 1;
    for (const Expr& seg : segments) {
      std::vector<TensorTerm> next;
      for (const auto& partial : acc) {
        for (const auto& t : seg.terms) {
          TensorTerm tt = partial;
          tt.coeff *= t.coeff;
          tt.z_pow += t.z_pow;
          tt.slots.push_back(t.factors);
          next.push_back(std::move(tt));
        }
      }
      acc = std::move(next);
    }
    for (auto& tt : acc)
      if (tt.coeff != 0) out.terms.push_back(std::move(tt));
  }

  // A chain of primaries joined by '*' (or '/' integer).
  Expr product() {
    Expr out = primary();
    for (;;) {
      if (lex_.peek().kind == Token::Star) {
        lex_.take();
        out = expr_mul(out, primary());
      } else if (lex_.peek().kind == Token::Slash) {
        Token slash = lex_.take();
        if (lex_.peek().kind != Token::Number)
          lex_.fail("expected integer after '/'", slash);
        BigInt den = lex_.take().number;
        if (den == 0) lex_.fail("division by zero", slash);
        out = expr_scale(std::move(out), Rational(BigInt(1), den));
      } else {
        return out;
      }
    }
  }

  int power_suffix() {
    if (lex_.peek().kind != Token::Caret) return 1;
    Token caret = lex_.take();
    if (lex_.peek().kind != Token::Number)
      lex_.fail("expected integer exponent", caret);
    BigInt p = lex_.take().number;
    if (p < 0 || p > 64) lex_.fail("exponent out of range", caret);
    return static_cast<int>(p);
  }

  Expr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: {
        Term term;
        term.coeff = Rational(t.number);
        Expr e;
        expr_append(e, std::move(term));
        return e;
      }
      case Token::ZSym: {
        Term term;
        term.z_pow = power_suffix();
        Expr e;
        expr_append(e, std::move(term));
        return e;
      }
      case Token::Gen: {
        Term term;
        int p = power_suffix();
        if (p == 0) {
          // X^0 is the unit.
        } else {
          term.factors.push_back(GenPow{t.id, p});
        }
        Expr e;
        expr_append(e, std::move(term));
        return e;
      }
      case Token::Macro: {
        const Expr& body = syms_.macros.at(t.name);
        int p = power_suffix();
        return expr_pow(body, p);
      }
      case Token::Func:
        return func_factor(t);
      case Token::LParen: {
        Expr inner = expr();
        lex_.expect(Token::RParen, "')'");
        int p = power_suffix();
        return expr_pow(inner, p);
      }
      default:
        lex_.fail("expected a factor", t);
    }
  }

  Expr expr_pow(const Expr& base, int p) {
    Expr out;
    expr_append(out, Term{});
    for (int i = 0; i < p; ++i) out = expr_mul(out, base);
    return out;
  }

  Expr func_factor(const Token& fn_tok) {
    SeriesFn fn = series_fn_from_name(fn_tok.name);
    lex_.expect(Token::LParen, "'('");
    Rational scale = 1;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      scale = -1;
    }
    if (lex_.peek().kind == Token::Number) {
      BigInt num = lex_.take().number;
      Rational mag(num);
      if (lex_.peek().kind == Token::Slash) {
        lex_.take();
        if (lex_.peek().kind != Token::Number)
          lex_.fail("expected integer denominator", lex_.peek());
        BigInt den = lex_.take().number;
        if (den == 0) lex_.fail("division by zero in function scale", fn_tok);
        mag /= Rational(den);
      }
      scale *= mag;
      lex_.expect(Token::Star, "'*'");
    }
    if (fn != SeriesFn::SinhOverZ) {
      if (lex_.peek().kind != Token::ZSym)
        lex_.fail("function argument must contain z", lex_.peek());
      lex_.take();
      lex_.expect(Token::Star, "'*'");
    }
    if (lex_.peek().kind != Token::Gen)
      lex_.fail("function argument must be a declared generator",
                lex_.peek());
    Token gen = lex_.take();
    if (!syms_.series_allowed(gen.id))
      lex_.fail("function argument must be a designated series generator",
                gen);
    lex_.expect(Token::RParen, "')'");
    int p = power_suffix();
    Term term;
    if (p > 0) term.factors.push_back(FuncFactor{fn, scale, gen.id, p});
    Expr e;
    expr_append(e, std::move(term));
    return e;
  }

  Lexer& lex_;
  const SymbolTable& syms_;
};

} // namespace

Expr parse_expr(const std::string& text, const SymbolTable& syms,
                int line_no) {
  Lexer lex(text, syms, line_no);
  Parser p(lex, syms);
  Expr e = p.expr();
  p.finish();
  return e;
}

TensorExpr parse_tensor_expr(const std::string& text, const SymbolTable& syms,
                             int line_no) {
  Lexer lex(text, syms, line_no);
  Parser p(lex, syms);
  TensorExpr e = p.tensor_expr();
  p.finish();
  return e;
}

Expr expr_neg(Expr e) {
  for (auto& t : e.terms) t.coeff = -t.coeff;
  return e;
}

Expr expr_scale(Expr e, const Rational& r) {
  if (r == 0) return Expr{};
  for (auto& t : e.terms) t.coeff *= r;
  return e;
}

Expr expr_mul(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) expr_append(out, term_mul(ta, tb));
  return out;
}

namespace {

std::string rational_body(const Rational& r) {
  return rational_str(r);
}

std::string factor_str(const Factor& f,
                       const std::vector<std::string>& names) {
  std::ostringstream os;
  if (const auto* g = std::get_if<GenPow>(&f)) {
    os << names[g->gen];
    if (g->pow != 1) os << "^" << g->pow;
  } else {
    const auto& ff = std::get<FuncFactor>(f);
    os << series_fn_name(ff.fn) << "(";
    Rational s = ff.scale;
    if (s < 0) {
      os << "-";
      s = -s;
    }
    if (s != 1) os << rational_body(s) << "*";
    if (ff.fn != SeriesFn::SinhOverZ) os << "z*";
    os << names[ff.gen] << ")";
    if (ff.pow != 1) os << "^" << ff.pow;
  }
  return os.str();
}

// Shared formatting of coeff/z/body for plain and tensor terms.
void term_prefix(std::ostringstream& os, const Rational& mag, int z_pow,
                 bool has_factors) {
  bool printed = false;
  if (mag != 1 || (z_pow == 0 && !has_factors)) {
    os << rational_body(mag);
    printed = true;
  }
  if (z_pow > 0) {
    if (printed) os << "*";
    os << "z";
    if (z_pow > 1) os << "^" << z_pow;
    printed = true;
  }
  if (has_factors && printed) os << "*";
}

} // namespace

std::string term_str(const Term& t, const std::vector<std::string>& names) {
  std::ostringstream os;
  Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
  term_prefix(os, mag, t.z_pow, !t.factors.empty());
  for (size_t i = 0; i < t.factors.size(); ++i) {
    if (i) os << "*";
    os << factor_str(t.factors[i], names);
  }
  return os.str();
}

std::string tensor_term_str(const TensorTerm& t,
                            const std::vector<std::string>& names) {
  std::ostringstream os;
  Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
  // Slots always render (an empty slot prints as "1"), so the coefficient
  // never needs to stand in for the body.
  term_prefix(os, mag, t.z_pow, !t.slots.empty());
  for (size_t s = 0; s < t.slots.size(); ++s) {
    if (s) os << " ox ";
    if (t.slots[s].empty()) {
      os << "1";
    } else {
      for (size_t i = 0; i < t.slots[s].size(); ++i) {
        if (i) os << "*";
        os << factor_str(t.slots[s][i], names);
      }
    }
  }
  return os.str();
}

std::string expr_str(const Expr& e, const std::vector<std::string>& names) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    if (i == 0) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    os << term_str(t, names);
  }
  return os.str();
}

std::string tensor_expr_str(const TensorExpr& e,
                            const std::vector<std::string>& names) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    const TensorTerm& t = e.terms[i];
    if (i == 0) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    os << tensor_term_str(t, names);
  }
  return os.str();
}

void collect_gens(const std::vector<Factor>& fs, std::vector<bool>& bare,
                  std::vector<bool>& in_func) {
  for (const auto& f : fs) {
    if (const auto* g = std::get_if<GenPow>(&f))
      bare[g->gen] = true;
    else
      in_func[std::get<FuncFactor>(f).gen] = true;
  }
}

} // namespace nullplane
