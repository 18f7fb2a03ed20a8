#pragma once
#include <string>
#include <vector>

namespace nullplane {

namespace detail {
struct BundledFile {
  const char* name;
  const char* contents;
};
extern const BundledFile kBundledFiles[];
extern const int kBundledFileCount;
} // namespace detail

// Names of the algebra definitions compiled into the library (without the
// .algdef extension).
std::vector<std::string> bundled_algebra_names();

// Raw text of a bundled file ("poincare-quantum.algdef",
// "appendix-quantum.idlist", ...); throws if absent.
const std::string& bundled_file(const std::string& name);

} // namespace nullplane
