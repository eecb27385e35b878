#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "llg/framing.hpp"
#include "llg/tensor.hpp"

namespace llg {

// Built-in framings with known invariants.
struct CatalogEntry {
  FramingSpec spec;
  bool expect_flat = true;
  // Known nonzero structure constants C^(i)_(j)(k) as (i, j, k, value),
  // 0-based; every other entry is expected to be zero. Empty when unknown.
  std::vector<std::tuple<int, int, int, double>> expected_c;
  std::optional<double> expected_scalar_curvature;
};

// Sorted by name.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();

// Throws UnknownExample.
const CatalogEntry& get_example(const std::string& name);

// Expected C as a tensor (zero where not listed).
Tensor expected_constants(const CatalogEntry& e);

}  // namespace llg
