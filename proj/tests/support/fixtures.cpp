#include "fixtures.hpp"

#include "steenrod/io.hpp"

namespace steenrod::testing {

std::string fixture_path(const std::string& name) { return std::string(STEENROD_FIXTURE_DIR) + "/" + name; }

std::string fixture_text(const std::string& name) { return read_file(fixture_path(name)); }

ComplexPtr load_fixture(const std::string& name) {
  auto parsed = parse_complex(fixture_text(name + ".json"));
  require_valid(parsed.complex);
  return std::make_shared<const DeltaComplex>(std::move(parsed.complex));
}

DeltaComplex load_fixture_unchecked(const std::string& name) { return parse_complex(fixture_text(name + ".json")).complex; }

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"point",  "delta1", "delta2",  "delta3",      "delta4",
                                              "boundary_delta3", "circle", "circle2", "circle2_cyclic",
                                              "torus",  "torus_relabeled", "klein", "rp2", "two_circles",
                                              "two_disjoint_edges"};
  return names;
}

}  // namespace steenrod::testing
