#pragma once

#include <string>
#include <vector>

#include "steenrod/integer.hpp"

namespace steenrod {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] IntMatrix operator*(const IntMatrix& other) const;
  [[nodiscard]] IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Smith normal form U·A·V = D with D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
  /// The nonzero diagonal entries, each dividing the next.
  std::vector<Coeff> invariant_factors;
  /// Only filled when transforms are requested: U (rows x rows), V and V^-1
  /// (cols x cols), all unimodular.
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;

  [[nodiscard]] std::size_t rank() const { return invariant_factors.size(); }
  /// Invariant factors greater than one.
  [[nodiscard]] std::vector<Coeff> torsion() const;
};

/// Exact elimination, pivoting on the entry of least absolute value.
/// Throws std::overflow_error if an intermediate leaves the 64-bit range.
SmithForm smith_normal_form(IntMatrix a, bool with_transforms = false);

std::string to_string(const IntMatrix& m);

}  // namespace steenrod
