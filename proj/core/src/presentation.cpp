#include "nullplane/structures.hpp"

#include "nullplane/bundled.hpp"
#include "nullplane/errors.hpp"

#include <map>

namespace nullplane {

namespace {

// Expansion of one factor as sum_j coeff_j z^(zp_j) gen^j.
AlgebraElement expand_factor(const Factor& f, int K) {
  if (const auto* g = std::get_if<GenPow>(&f)) {
    AlgebraElement e(K);
    e.add_term(Word(g->pow, static_cast<uint8_t>(g->gen)), ZSeries(K, 1));
    return e;
  }
  const auto& ff = std::get<FuncFactor>(f);
  AlgebraElement single(K);
  for (const auto& t : expand_function_of_symbol(ff.fn, ff.scale, K))
    single.add_term(Word(t.gen_power, static_cast<uint8_t>(ff.gen)),
                    ZSeries::monomial(K, t.z_power, t.coeff));
  AlgebraElement out = single;
  for (int i = 1; i < ff.pow; ++i) out = out * single;
  return out;
}

AlgebraElement expand_factors(const std::vector<Factor>& fs, int K) {
  AlgebraElement out = AlgebraElement::unit(K);
  for (const auto& f : fs) out = out * expand_factor(f, K);
  return out;
}

} // namespace

AlgebraElement expand_expr(const Expr& e, int K) {
  AlgebraElement out(K);
  for (const auto& t : e.terms) {
    if (t.z_pow > K) continue;
    AlgebraElement body = expand_factors(t.factors, K);
    ZSeries scale = ZSeries::monomial(K, t.z_pow, t.coeff);
    out.add_scaled(body, scale);
  }
  return out;
}

TensorElement expand_tensor_expr(const TensorExpr& e, int K, int rank) {
  if (e.rank != 0) rank = e.rank;
  TensorElement out(K, rank);
  for (const auto& t : e.terms) {
    if (t.z_pow > K) continue;
    TensorElement term = TensorElement::unit(K, rank, 1);
    for (int s = 0; s < rank; ++s) {
      AlgebraElement slot = expand_factors(t.slots[s], K);
      TensorElement next(K, rank);
      for (const auto& [k, c] : term.terms()) {
        for (const auto& [w, wc] : slot.terms()) {
          TensorElement::Key key = k;
          key[s].insert(key[s].end(), w.begin(), w.end());
          next.add_term(std::move(key), c * wc);
        }
      }
      term = std::move(next);
    }
    ZSeries scale = ZSeries::monomial(K, t.z_pow, t.coeff);
    out.add_scaled(term, scale);
  }
  return out;
}

HopfStructures build_structures(const HopfPresentation& p, int K) {
  int n = p.n_gens();
  HopfStructures s{&p, K, BracketTable(n, K), {}, {}, {}, nullptr};

  for (const auto& [pair, value] : p.brackets)
    s.table.set(pair.first, pair.second, expand_expr(value, K));
  s.orderer = std::make_unique<NormalOrderer>(s.table);

  // Normalize the stored bracket values themselves (the rewriting engine
  // only needs them to be correct as elements, but reports and the z = 0
  // comparison want normal forms).
  for (const auto& [pair, value] : p.brackets) {
    const AlgebraElement* raw = s.table.get(pair.first, pair.second);
    if (!raw) continue;
    AlgebraElement nf = s.orderer->normal_form(*raw);
    s.table.set(pair.first, pair.second, std::move(nf));
  }

  s.coproduct.anti = false;
  s.counit.anti = false;
  s.antipode.anti = true;
  for (int i = 0; i < n; ++i) {
    TensorElement d = expand_tensor_expr(p.coproduct[i], K);
    TensorElement ordered(K, 2);
    for (const auto& [k, c] : d.terms()) {
      auto na = s.orderer->word_normal_form(k[0]);
      auto nb = s.orderer->word_normal_form(k[1]);
      ordered.add_scaled(tensor(na, nb), c);
    }
    s.coproduct.images.push_back(std::move(ordered));

    ZSeries eps(K);
    AlgebraElement eps_e = expand_expr(p.counit[i], K);
    for (const auto& [w, c] : eps_e.terms()) {
      if (!w.empty())
        throw EngineError(p.name + ": counit image is not scalar");
      eps += c;
    }
    s.counit.images.push_back(std::move(eps));

    s.antipode.images.push_back(
        s.orderer->normal_form(expand_expr(p.antipode[i], K)));
  }
  return s;
}

namespace {

// z -> 0 on one term's factor list; false if the term vanishes.
bool z0_factors(const std::vector<Factor>& in, std::vector<Factor>& out,
                Rational& coeff) {
  for (const auto& f : in) {
    if (const auto* g = std::get_if<GenPow>(&f)) {
      out.push_back(*g);
      continue;
    }
    const auto& ff = std::get<FuncFactor>(f);
    switch (ff.fn) {
      case SeriesFn::Exp:
      case SeriesFn::Cosh:
        break; // constant term 1: the factor disappears
      case SeriesFn::Sinh:
        return false; // O(z): kills the term
      case SeriesFn::SinhOverZ:
        for (int i = 0; i < ff.pow; ++i) coeff *= ff.scale;
        out.push_back(GenPow{ff.gen, ff.pow});
        break;
    }
  }
  return true;
}

Expr z0_expr(const Expr& e) {
  Expr out;
  for (const auto& t : e.terms) {
    if (t.z_pow > 0) continue;
    Term nt;
    nt.coeff = t.coeff;
    if (!z0_factors(t.factors, nt.factors, nt.coeff)) continue;
    out.terms.push_back(std::move(nt));
  }
  return out;
}

TensorExpr z0_tensor_expr(const TensorExpr& e) {
  TensorExpr out;
  out.rank = e.rank;
  for (const auto& t : e.terms) {
    if (t.z_pow > 0) continue;
    TensorTerm nt;
    nt.coeff = t.coeff;
    bool alive = true;
    for (const auto& slot : t.slots) {
      nt.slots.emplace_back();
      if (!z0_factors(slot, nt.slots.back(), nt.coeff)) {
        alive = false;
        break;
      }
    }
    if (alive) out.terms.push_back(std::move(nt));
  }
  return out;
}

std::string renamed(const std::string& name,
                    const std::map<std::string, std::string>& rename) {
  auto it = rename.find(name);
  return it == rename.end() ? name : it->second;
}

} // namespace

HopfPresentation z0_limit(const HopfPresentation& p,
                          const std::string& new_name,
                          const std::map<std::string, std::string>& rename) {
  HopfPresentation out;
  out.name = new_name;
  for (const auto& g : p.generators)
    out.generators.push_back({renamed(g.name, rename), g.goodness});
  out.series_gens = p.series_gens;
  for (const auto& c : p.center) out.center.push_back(renamed(c, rename));
  for (const auto& [name, body] : p.defines)
    out.defines.emplace_back(renamed(name, rename), z0_expr(body));
  for (const auto& [pair, value] : p.brackets) {
    Expr v = z0_expr(value);
    if (!v.terms.empty()) out.brackets.emplace(pair, std::move(v));
  }
  for (const auto& d : p.coproduct) out.coproduct.push_back(z0_tensor_expr(d));
  for (const auto& e : p.counit) out.counit.push_back(z0_expr(e));
  for (const auto& a : p.antipode) out.antipode.push_back(z0_expr(a));
  return out;
}

uint64_t presentation_hash(const HopfPresentation& p) {
  std::string text = serialize_presentation(p);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

HopfPresentation parse_and_check(const std::string& text) {
  HopfPresentation p = parse_presentation(text);
  // Light structural validation at load: expansion at a small order throws
  // on anything malformed (unknown ids cannot happen post-parse).
  build_structures(p, 1);
  return p;
}

} // namespace

const HopfPresentation& load_bundled(const std::string& name) {
  static std::map<std::string, HopfPresentation> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const std::string& text = bundled_file(name + ".algdef");
  auto [pos, ok] = cache.emplace(name, parse_and_check(text));
  return pos->second;
}

} // namespace nullplane
