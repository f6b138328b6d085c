#pragma once
// Descriptor strings name catalog entries: "Xi(p=3,i=1)", "Uj(p=5,j=2)",
// "U0(p=3)", "Y0(p=3)", "Yi(p=3,i=2)", "Lemma12(p=2)", "Thm1(p=2,s=3,n=1)",
// "DeltaN(n=2)", "DeltaNStar(n=1)", "WN(n=1)", "WNStar(n=0)",
// "DeltaT(p=2,s=3,t=2)".

#include "crys/catalog.hpp"

#include <map>
#include <stdexcept>

namespace crys {

// Parse failure (bad syntax, unknown name, non-prime p, missing or extra keys).
struct DescriptorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse succeeded but the entry could not be built (range violations etc.).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Descriptor {
  std::string name;
  std::map<std::string, long> args;

  long arg(const std::string& key) const;  // throws DescriptorError if absent
};

Descriptor parse_descriptor(const std::string& text);

// Builds the named catalog entry.  DeltaT yields a bare lattice entry with no
// canonical cocycles.
CatalogEntry build_entry(const std::string& descriptor);

}  // namespace crys
