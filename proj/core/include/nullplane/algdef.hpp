#pragma once
#include "nullplane/expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nullplane {

struct GeneratorInfo {
  std::string name;
  int goodness = 0;
  bool operator==(const GeneratorInfo&) const = default;
};

// A Hopf-algebra presentation as read from a definition file.  Generator ids
// equal their position in `generators`, which is also the PBW rank.
struct HopfPresentation {
  std::string name;
  std::vector<GeneratorInfo> generators;
  std::vector<int> series_gens;          // allowed inside series functions
  std::vector<std::string> center;       // names: generators or macros
  std::vector<std::pair<std::string, Expr>> defines; // in file order
  // Brackets normalized to orientation (hi, lo), hi > lo by rank.
  std::map<std::pair<int, int>, Expr> brackets;
  std::vector<TensorExpr> coproduct;     // by generator id, rank 2
  std::vector<Expr> counit;              // scalar-valued
  std::vector<Expr> antipode;
  // Optional identification onto another presentation: target algebra name
  // and one expression over the target's symbols per generator id.
  std::string identify_target;
  std::vector<Expr> identify;

  int n_gens() const { return static_cast<int>(generators.size()); }
  int gen_id(const std::string& name) const; // -1 if absent
  std::vector<std::string> gen_names() const;
  // Symbol table over this presentation's generators and macros.
  SymbolTable symbols() const;
  const Expr* find_define(const std::string& name) const;
};

HopfPresentation parse_presentation(const std::string& text);
std::string serialize_presentation(const HopfPresentation& p);

// Parsed, validated bundled presentation by name (e.g. "poincare-quantum").
const HopfPresentation& load_bundled(const std::string& name);

// The z -> 0 limit: drops every term carrying a positive z power, collapses
// exp/sinh/cosh factors, and turns sinhz(s*G) into s*G.  `rename` maps old
// symbol names (generators and defines) to new ones.
HopfPresentation z0_limit(const HopfPresentation& p,
                          const std::string& new_name,
                          const std::map<std::string, std::string>& rename);

// One identity "[a, b] = rhs" from an identity-list file.
struct Identity {
  std::string key;
  Expr lhs_a, lhs_b, rhs;
  int line = 0;
};
std::vector<Identity> parse_identity_list(const std::string& text,
                                          const SymbolTable& syms);

} // namespace nullplane
