#include "nullplane/zseries.hpp"

#include <sstream>

namespace nullplane {

bool ZSeries::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  check_order(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  check_order(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ZSeries& ZSeries::operator*=(const Rational& r) {
  for (auto& ck : c_) ck *= r;
  return *this;
}

ZSeries ZSeries::operator-() const {
  ZSeries out(order());
  for (size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
  return out;
}

ZSeries ZSeries::shifted(int shift) const {
  ZSeries out(order());
  for (int k = 0; k + shift <= order(); ++k)
    if (c_[k] != 0) out.c_[k + shift] = c_[k];
  return out;
}

ZSeries ZSeries::truncated(int new_order) const {
  if (new_order > order())
    throw OrderMismatchError(order(), new_order);
  ZSeries out(new_order);
  for (int k = 0; k <= new_order; ++k) out.c_[k] = c_[k];
  return out;
}

double ZSeries::at(double z) const {
  double acc = 0;
  for (int k = order(); k >= 0; --k) acc = acc * z + rational_double(c_[k]);
  return acc;
}

Rational ZSeries::at(const Rational& z) const {
  Rational acc = 0;
  for (int k = order(); k >= 0; --k) acc = acc * z + c_[k];
  return acc;
}

ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  a.check_order(b);
  ZSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

ZSeries operator*(const Rational& r, ZSeries a) { return a *= r; }

std::string ZSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k] == 0) continue;
    Rational mag = c_[k] < 0 ? Rational(-c_[k]) : c_[k];
    if (first) {
      if (c_[k] < 0) os << "-";
      first = false;
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    bool frac = denominator(mag) != 1;
    if (k == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) {
        if (frac)
          os << "(" << rational_str(mag) << ")";
        else
          os << rational_str(mag);
      }
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

SeriesFn series_fn_from_name(const std::string& name) {
  if (name == "exp") return SeriesFn::Exp;
  if (name == "sinh") return SeriesFn::Sinh;
  if (name == "cosh") return SeriesFn::Cosh;
  if (name == "sinhz") return SeriesFn::SinhOverZ;
  throw EngineError("unknown series function: '" + name + "'");
}

std::string series_fn_name(SeriesFn fn) {
  switch (fn) {
    case SeriesFn::Exp: return "exp";
    case SeriesFn::Sinh: return "sinh";
    case SeriesFn::Cosh: return "cosh";
    case SeriesFn::SinhOverZ: return "sinhz";
  }
  return "?";
}

std::vector<FnTerm> expand_function_of_symbol(SeriesFn fn, const Rational& scale,
                                              int order) {
  std::vector<FnTerm> out;
  Rational power = 1; // scale^j
  for (int j = 0;; ++j) {
    int zp = fn == SeriesFn::SinhOverZ ? j - 1 : j;
    if (zp > order) break;
    bool keep = true;
    switch (fn) {
      case SeriesFn::Exp: break;
      case SeriesFn::Sinh:
      case SeriesFn::SinhOverZ: keep = j % 2 == 1; break;
      case SeriesFn::Cosh: keep = j % 2 == 0; break;
    }
    if (keep) out.push_back({j, zp, power / factorial(j)});
    power *= scale;
  }
  return out;
}

ZSeries expand_function(SeriesFn fn, const Rational& scale, int order) {
  ZSeries s(order);
  for (const auto& t : expand_function_of_symbol(fn, scale, order))
    s[t.z_power] += t.coeff;
  return s;
}

} // namespace nullplane
