#include "nullplane/bundled.hpp"

#include "nullplane/errors.hpp"

#include <map>

namespace nullplane {

static const std::map<std::string, std::string>& bundled_map() {
  static const std::map<std::string, std::string> m = [] {
    std::map<std::string, std::string> out;
    for (int i = 0; i < detail::kBundledFileCount; ++i)
      out.emplace(detail::kBundledFiles[i].name,
                  detail::kBundledFiles[i].contents);
    return out;
  }();
  return m;
}

std::vector<std::string> bundled_algebra_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : bundled_map()) {
    auto pos = name.rfind(".algdef");
    if (pos != std::string::npos && pos + 7 == name.size())
      names.push_back(name.substr(0, pos));
  }
  return names;
}

const std::string& bundled_file(const std::string& name) {
  const auto& m = bundled_map();
  auto it = m.find(name);
  if (it == m.end()) throw EngineError("no bundled file named '" + name + "'");
  return it->second;
}

} // namespace nullplane
