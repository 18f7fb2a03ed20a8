#include "nullplane/algdef.hpp"

#include <sstream>

namespace nullplane {

std::string serialize_presentation(const HopfPresentation& p) {
  std::ostringstream os;
  auto names = p.gen_names();

  os << "ALGEBRA " << p.name << "\n";
  os << "GENERATORS";
  for (const auto& g : p.generators) os << " " << g.name;
  os << "\n";
  os << "GRADING\n";
  for (const auto& g : p.generators)
    os << g.name << " " << g.goodness << "\n";
  if (!p.series_gens.empty()) {
    os << "SERIES";
    for (int g : p.series_gens) os << " " << names[g];
    os << "\n";
  }
  if (!p.center.empty()) {
    os << "CENTER";
    for (const auto& c : p.center) os << " " << c;
    os << "\n";
  }
  if (!p.defines.empty()) {
    os << "DEFINE\n";
    for (const auto& [name, body] : p.defines)
      os << name << " = " << expr_str(body, names) << "\n";
  }
  os << "BRACKETS\n";
  for (const auto& [pair, value] : p.brackets)
    os << "[" << names[pair.first] << "," << names[pair.second]
       << "] = " << expr_str(value, names) << "\n";
  os << "COPRODUCT\n";
  for (int i = 0; i < p.n_gens(); ++i)
    os << "Delta(" << names[i]
       << ") = " << tensor_expr_str(p.coproduct[i], names) << "\n";
  os << "COUNIT\n";
  for (int i = 0; i < p.n_gens(); ++i)
    os << "eps(" << names[i] << ") = " << expr_str(p.counit[i], names)
       << "\n";
  os << "ANTIPODE\n";
  for (int i = 0; i < p.n_gens(); ++i)
    os << "S(" << names[i] << ") = " << expr_str(p.antipode[i], names)
       << "\n";
  if (!p.identify.empty()) {
    os << "IDENTIFY " << p.identify_target << "\n";
    auto target_names = load_bundled(p.identify_target).gen_names();
    for (int i = 0; i < p.n_gens(); ++i)
      os << names[i] << " = " << expr_str(p.identify[i], target_names)
         << "\n";
  }
  return os.str();
}

} // namespace nullplane
