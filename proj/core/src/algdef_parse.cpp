#include "nullplane/algdef.hpp"

#include "nullplane/bundled.hpp"
#include "nullplane/errors.hpp"

#include <sstream>

namespace nullplane {

int HopfPresentation::gen_id(const std::string& name) const {
  for (int i = 0; i < n_gens(); ++i)
    if (generators[i].name == name) return i;
  return -1;
}

std::vector<std::string> HopfPresentation::gen_names() const {
  std::vector<std::string> names;
  names.reserve(generators.size());
  for (const auto& g : generators) names.push_back(g.name);
  return names;
}

SymbolTable HopfPresentation::symbols() const {
  SymbolTable syms;
  for (int i = 0; i < n_gens(); ++i) syms.generators[generators[i].name] = i;
  for (const auto& [name, body] : defines) syms.macros[name] = body;
  syms.series_gens = series_gens;
  return syms;
}

const Expr* HopfPresentation::find_define(const std::string& name) const {
  for (const auto& [n, body] : defines)
    if (n == name) return &body;
  return nullptr;
}

namespace {

struct Line {
  std::string text;
  int number;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    lines.push_back({raw.substr(a, b - a + 1), n});
  }
  return lines;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

// "lhs = rhs" split at the first '=' that is not part of a name.
std::pair<std::string, std::string> split_assign(const Line& line) {
  auto eq = line.text.find('=');
  if (eq == std::string::npos)
    throw ParseError("expected '='", line.number, 1);
  std::string lhs = line.text.substr(0, eq);
  std::string rhs = line.text.substr(eq + 1);
  auto trim = [](std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  };
  trim(lhs);
  trim(rhs);
  if (lhs.empty() || rhs.empty())
    throw ParseError("empty side of '='", line.number, 1);
  return {lhs, rhs};
}

// "[A,B]" -> A, B.
std::pair<std::string, std::string> split_pair(const std::string& s,
                                               int line_no) {
  if (s.size() < 5 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected a bracket pair [A,B]", line_no, 1);
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected ',' inside bracket pair", line_no, 1);
  auto trim = [](std::string t) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  return {trim(s.substr(1, comma - 1)),
          trim(s.substr(comma + 1, s.size() - comma - 2))};
}

// "Delta(X)" / "eps(X)" / "S(X)" -> X.
std::string unwrap_head(const std::string& s, const std::string& head,
                        int line_no) {
  if (s.compare(0, head.size(), head) != 0 || s.size() < head.size() + 3 ||
      s[head.size()] != '(' || s.back() != ')')
    throw ParseError("expected " + head + "(generator)", line_no, 1);
  return s.substr(head.size() + 1, s.size() - head.size() - 2);
}

} // namespace

HopfPresentation parse_presentation(const std::string& text) {
  HopfPresentation p;
  enum Section {
    None, Grading, Define, Brackets, Coproduct, Counit, Antipode, Identify
  } section = None;
  bool have_gens = false;
  std::vector<bool> have_coproduct, have_counit, have_antipode, have_identify;
  SymbolTable syms;         // grows as DEFINE lines are parsed
  SymbolTable target_syms;  // for IDENTIFY expressions
  const HopfPresentation* target = nullptr;

  auto require_gens = [&](const Line& line) {
    if (!have_gens)
      throw ParseError("GENERATORS must come first", line.number, 1);
  };
  auto gen_or_throw = [&](const std::string& name, int line_no) {
    int id = p.gen_id(name);
    if (id < 0)
      throw ParseError("undeclared generator '" + name + "'", line_no, 1);
    return id;
  };

  for (const Line& line : split_lines(text)) {
    auto words = split_words(line.text);
    const std::string& head = words[0];

    if (head == "ALGEBRA") {
      if (words.size() != 2)
        throw ParseError("ALGEBRA takes one name", line.number, 1);
      p.name = words[1];
      continue;
    }
    if (head == "GENERATORS") {
      if (have_gens)
        throw ParseError("duplicate GENERATORS", line.number, 1);
      if (words.size() < 2)
        throw ParseError("GENERATORS needs at least one name", line.number, 1);
      for (size_t i = 1; i < words.size(); ++i) {
        if (words[i] == "z" || words[i] == "ox" || words[i] == "exp" ||
            words[i] == "sinh" || words[i] == "cosh" || words[i] == "sinhz")
          throw ParseError("reserved word used as generator name: '" +
                               words[i] + "'",
                           line.number, 1);
        if (p.gen_id(words[i]) >= 0)
          throw ParseError("duplicate generator '" + words[i] + "'",
                           line.number, 1);
        p.generators.push_back({words[i], 0});
      }
      have_gens = true;
      int n = p.n_gens();
      p.coproduct.resize(n);
      p.counit.resize(n);
      p.antipode.resize(n);
      have_coproduct.assign(n, false);
      have_counit.assign(n, false);
      have_antipode.assign(n, false);
      for (int i = 0; i < n; ++i) syms.generators[p.generators[i].name] = i;
      continue;
    }
    if (head == "SERIES") {
      require_gens(line);
      for (size_t i = 1; i < words.size(); ++i)
        p.series_gens.push_back(gen_or_throw(words[i], line.number));
      syms.series_gens = p.series_gens;
      continue;
    }
    if (head == "CENTER") {
      require_gens(line);
      for (size_t i = 1; i < words.size(); ++i) p.center.push_back(words[i]);
      continue;
    }
    if (head == "GRADING") { section = Grading; continue; }
    if (head == "DEFINE") { section = Define; continue; }
    if (head == "BRACKETS") { require_gens(line); section = Brackets; continue; }
    if (head == "COPRODUCT") { require_gens(line); section = Coproduct; continue; }
    if (head == "COUNIT") { require_gens(line); section = Counit; continue; }
    if (head == "ANTIPODE") { require_gens(line); section = Antipode; continue; }
    if (head == "IDENTIFY") {
      require_gens(line);
      if (words.size() != 2)
        throw ParseError("IDENTIFY takes the target algebra name",
                         line.number, 1);
      p.identify_target = words[1];
      target = &load_bundled(p.identify_target);
      target_syms = target->symbols();
      p.identify.resize(p.n_gens());
      have_identify.assign(p.n_gens(), false);
      section = Identify;
      continue;
    }

    switch (section) {
      case Grading: {
        require_gens(line);
        if (words.size() != 2)
          throw ParseError("GRADING lines read: <generator> <integer>",
                           line.number, 1);
        int id = gen_or_throw(words[0], line.number);
        try {
          p.generators[id].goodness = std::stoi(words[1]);
        } catch (const std::exception&) {
          throw ParseError("bad goodness value '" + words[1] + "'",
                           line.number, 1);
        }
        break;
      }
      case Define: {
        require_gens(line);
        auto [lhs, rhs] = split_assign(line);
        if (syms.generators.count(lhs) || syms.macros.count(lhs))
          throw ParseError("duplicate symbol '" + lhs + "'", line.number, 1);
        Expr body = parse_expr(rhs, syms, line.number);
        p.defines.emplace_back(lhs, body);
        syms.macros[lhs] = std::move(body);
        break;
      }
      case Brackets: {
        auto [lhs, rhs] = split_assign(line);
        auto [a, b] = split_pair(lhs, line.number);
        int x = gen_or_throw(a, line.number);
        int y = gen_or_throw(b, line.number);
        if (x == y)
          throw ParseError("bracket of a generator with itself", line.number,
                           1);
        Expr value = parse_expr(rhs, syms, line.number);
        int hi = x, lo = y;
        if (hi < lo) {
          std::swap(hi, lo);
          value = expr_neg(std::move(value));
        }
        if (p.brackets.count({hi, lo}))
          throw ParseError("duplicate bracket for pair [" + a + "," + b + "]",
                           line.number, 1);
        p.brackets.emplace(std::pair{hi, lo}, std::move(value));
        break;
      }
      case Coproduct: {
        auto [lhs, rhs] = split_assign(line);
        int id = gen_or_throw(unwrap_head(lhs, "Delta", line.number),
                              line.number);
        if (have_coproduct[id])
          throw ParseError("duplicate coproduct", line.number, 1);
        TensorExpr value = parse_tensor_expr(rhs, syms, line.number);
        if (value.rank != 2)
          throw ParseError("coproduct must have tensor rank 2", line.number,
                           1);
        p.coproduct[id] = std::move(value);
        have_coproduct[id] = true;
        break;
      }
      case Counit: {
        auto [lhs, rhs] = split_assign(line);
        int id =
            gen_or_throw(unwrap_head(lhs, "eps", line.number), line.number);
        if (have_counit[id])
          throw ParseError("duplicate counit", line.number, 1);
        Expr value = parse_expr(rhs, syms, line.number);
        for (const auto& t : value.terms)
          if (!t.factors.empty())
            throw ParseError("counit values must be scalar", line.number, 1);
        p.counit[id] = std::move(value);
        have_counit[id] = true;
        break;
      }
      case Antipode: {
        auto [lhs, rhs] = split_assign(line);
        int id = gen_or_throw(unwrap_head(lhs, "S", line.number), line.number);
        if (have_antipode[id])
          throw ParseError("duplicate antipode", line.number, 1);
        p.antipode[id] = parse_expr(rhs, syms, line.number);
        have_antipode[id] = true;
        break;
      }
      case Identify: {
        auto [lhs, rhs] = split_assign(line);
        int id = gen_or_throw(lhs, line.number);
        if (have_identify[id])
          throw ParseError("duplicate identification", line.number, 1);
        p.identify[id] = parse_expr(rhs, target_syms, line.number);
        have_identify[id] = true;
        break;
      }
      case None:
        throw ParseError("content before any section header", line.number, 1);
    }
  }

  if (!have_gens) throw EngineError("presentation lacks a GENERATORS line");
  if (p.name.empty()) throw EngineError("presentation lacks an ALGEBRA name");
  auto all = [](const std::vector<bool>& v) {
    for (bool b : v)
      if (!b) return false;
    return true;
  };
  if (!all(have_coproduct))
    throw EngineError(p.name + ": coproduct not defined on every generator");
  if (!all(have_counit))
    throw EngineError(p.name + ": counit not defined on every generator");
  if (!all(have_antipode))
    throw EngineError(p.name + ": antipode not defined on every generator");
  if (!p.identify.empty() && !all(have_identify))
    throw EngineError(p.name +
                      ": identification not defined on every generator");
  for (const auto& c : p.center)
    if (p.gen_id(c) < 0 && !p.find_define(c))
      throw EngineError(p.name + ": unknown CENTER symbol '" + c + "'");
  return p;
}

std::vector<Identity> parse_identity_list(const std::string& text,
                                          const SymbolTable& syms) {
  std::vector<Identity> out;
  for (const Line& line : split_lines(text)) {
    auto [lhs, rhs] = split_assign(line);
    auto [a, b] = split_pair(lhs, line.number);
    Identity id;
    id.key = "[" + a + "," + b + "]";
    id.lhs_a = parse_expr(a, syms, line.number);
    id.lhs_b = parse_expr(b, syms, line.number);
    id.rhs = parse_expr(rhs, syms, line.number);
    id.line = line.number;
    out.push_back(std::move(id));
  }
  return out;
}

} // namespace nullplane
