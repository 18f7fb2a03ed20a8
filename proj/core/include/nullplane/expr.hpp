#pragma once
#include "nullplane/rational.hpp"
#include "nullplane/zseries.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace nullplane {

// One multiplicative factor: a generator power, or an unexpanded series
// function of (scale * z * generator) — sinhz(G) stands for sinh(z*G)/z.
struct GenPow {
  int gen;
  int pow = 1;
  bool operator==(const GenPow&) const = default;
};
struct FuncFactor {
  SeriesFn fn;
  Rational scale;
  int gen;
  int pow = 1;
  bool operator==(const FuncFactor&) const = default;
};
using Factor = std::variant<GenPow, FuncFactor>;

struct Term {
  Rational coeff = 1;
  int z_pow = 0;
  std::vector<Factor> factors;
  bool operator==(const Term&) const = default;
};

// Flat sum of terms; parentheses and macros are distributed while parsing.
struct Expr {
  std::vector<Term> terms;
  bool operator==(const Expr&) const = default;
};

// Tensor counterpart: each term's factors are split across rank slots.
struct TensorTerm {
  Rational coeff = 1;
  int z_pow = 0;
  std::vector<std::vector<Factor>> slots;
  bool operator==(const TensorTerm&) const = default;
};
struct TensorExpr {
  int rank = 0; // 0 until the first term fixes it
  std::vector<TensorTerm> terms;
  bool operator==(const TensorExpr&) const = default;
};

// Name resolution for the expression parser.  Generator names are matched
// longest-first so names like "P+" survive next to the '+' operator.
struct SymbolTable {
  std::map<std::string, int> generators;
  std::map<std::string, Expr> macros;
  std::vector<int> series_gens; // generators allowed inside functions
  bool series_allowed(int gen) const {
    for (int g : series_gens)
      if (g == gen) return true;
    return false;
  }
};

Expr parse_expr(const std::string& text, const SymbolTable& syms,
                int line_no = 1);
TensorExpr parse_tensor_expr(const std::string& text, const SymbolTable& syms,
                             int line_no = 1);

Expr expr_neg(Expr e);
Expr expr_scale(Expr e, const Rational& r);
Expr expr_mul(const Expr& a, const Expr& b);

// Rendering in the definition-file syntax (canonical: '*' between factors,
// coefficient first, terms joined with +/-).
std::string expr_str(const Expr& e, const std::vector<std::string>& names);
std::string tensor_expr_str(const TensorExpr& e,
                            const std::vector<std::string>& names);
std::string term_str(const Term& t, const std::vector<std::string>& names);
std::string tensor_term_str(const TensorTerm& t,
                            const std::vector<std::string>& names);

// Records which generators a factor list mentions, separately for bare
// generator powers and for function arguments.
void collect_gens(const std::vector<Factor>& fs, std::vector<bool>& bare,
                  std::vector<bool>& in_func);

} // namespace nullplane
