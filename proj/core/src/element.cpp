#include "nullplane/element.hpp"

#include <sstream>

namespace nullplane {

void AlgebraElement::add_term(Word w, const ZSeries& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::add_scaled(const AlgebraElement& e, const ZSeries& c) {
  for (const auto& [w, ec] : e.terms_) add_term(w, ec * c);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(order_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= r;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const ZSeries& c) {
  AlgebraElement out(order_);
  for (const auto& [w, wc] : terms_) out.add_term(w, wc * c);
  *this = std::move(out);
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
  return a += b;
}
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  return a -= b;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.order());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      ZSeries c = ca * cb;
      if (c.is_zero()) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), c);
    }
  }
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    size_t run = i;
    while (run + 1 < w.size() && w[run + 1] == w[i]) ++run;
    if (i > 0) os << "*";
    os << names[w[i]];
    if (run > i) os << "^" << (run - i + 1);
    i = run;
  }
  return os.str();
}

namespace {

// Formats coeff*words with the series parenthesized when it has multiple
// terms; used by both element printers.
void append_term(std::ostringstream& os, bool& first, const std::string& body,
                 const ZSeries& c) {
  std::string cs = c.str();
  bool negated = false;
  if (cs != "1") {
    // A single leading '-' can be pulled out for readability.
    if (cs[0] == '-' && cs.find(" + ") == std::string::npos &&
        cs.find(" - ") == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
  }
  if (first) {
    if (negated) os << "-";
    first = false;
  } else {
    os << (negated ? " - " : " + ");
  }
  bool wrap = cs.find(' ') != std::string::npos;
  if (cs == "1" && body != "1") {
    os << body;
  } else if (body == "1") {
    os << (wrap ? "(" + cs + ")" : cs);
  } else {
    os << (wrap ? "(" + cs + ")" : cs) << "*" << body;
  }
}

} // namespace

std::string AlgebraElement::str(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_)
    append_term(os, first, word_str(w, names), c);
  return os.str();
}

void TensorElement::add_term(Key k, const ZSeries& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_scaled(const TensorElement& e, const ZSeries& c) {
  for (const auto& [k, ec] : e.terms_) add_term(k, ec * c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(order_, rank_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out(a.order(), a.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      ZSeries c = ca * cb;
      if (c.is_zero()) continue;
      TensorElement::Key k = ka;
      for (int s = 0; s < a.rank(); ++s)
        k[s].insert(k[s].end(), kb[s].begin(), kb[s].end());
      out.add_term(std::move(k), c);
    }
  }
  return out;
}

TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement out(a.order(), 2);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      out.add_term({wa, wb}, ca * cb);
  return out;
}

TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b,
                     const AlgebraElement& c) {
  TensorElement out(a.order(), 3);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      for (const auto& [wc, cc] : c.terms())
        out.add_term({wa, wb, wc}, ca * cb * cc);
  return out;
}

std::string TensorElement::str(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body;
    for (int s = 0; s < rank_; ++s) {
      if (s) body += " ox ";
      body += word_str(k[s], names);
    }
    append_term(os, first, body, c);
  }
  return os.str();
}

} // namespace nullplane
