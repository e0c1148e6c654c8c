#pragma once

#include <string>
#include <vector>

namespace steenrod {

/// One entry of a validation report. `kind` is a short machine tag
/// ("face-identity", "dangling-face", "chain-map", ...), `where` names the
/// offending simplex/generator and `detail` is human-readable.
struct Violation {
  std::string kind;
  std::string where;
  std::string detail;
};

/// Collected violations; an empty report means the checked object is valid.
class ValidationReport {
 public:
  void add(std::string kind, std::string where, std::string detail) {
    items_.push_back({std::move(kind), std::move(where), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  [[nodiscard]] bool ok() const { return items_.empty(); }
  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] const std::vector<Violation>& items() const { return items_; }
  [[nodiscard]] std::size_t count(const std::string& kind) const {
    std::size_t n = 0;
    for (const auto& v : items_) n += (v.kind == kind) ? 1 : 0;
    return n;
  }

  /// One line per violation: "kind: where: detail".
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& v : items_) out += v.kind + ": " + v.where + ": " + v.detail + "\n";
    return out;
  }

 private:
  std::vector<Violation> items_;
};

}  // namespace steenrod
