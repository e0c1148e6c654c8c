#pragma once

#include <string>
#include <vector>

#include "steenrod/complexes.hpp"

namespace steenrod::testing {

std::string fixture_path(const std::string& name);
std::string fixture_text(const std::string& name);
/// Parses and validates tests/fixtures/<name>.json.
ComplexPtr load_fixture(const std::string& name);
/// Parses without validating.
DeltaComplex load_fixture_unchecked(const std::string& name);

/// The complexes every whole-corpus property runs over.
const std::vector<std::string>& corpus();

}  // namespace steenrod::testing
