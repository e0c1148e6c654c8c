#include "steenrod/smith.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace steenrod {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coeff a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<Coeff> SmithForm::torsion() const {
  std::vector<Coeff> out;
  for (Coeff d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

namespace {

class Reducer {
 public:
  Reducer(IntMatrix a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(a_.rows());
      v_ = IntMatrix::identity(a_.cols());
      vinv_ = IntMatrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithForm out;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_min_to(t)) break;
      reduce_at(t);
      if (a_(t, t) < 0) negate_row(t);
      out.invariant_factors.push_back(a_(t, t));
    }
    if (track_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
      out.right_inverse = std::move(vinv_);
    }
    return out;
  }

 private:
  // Moves the least nonzero |entry| of the trailing submatrix to (t, t).
  bool bring_min_to(std::size_t t) {
    bool found = false;
    std::size_t br = t;
    std::size_t bc = t;
    Coeff best = 0;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Coeff v = std::llabs(a_(r, c));
        if (v != 0 && (!found || v < best)) {
          found = true;
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void reduce_at(std::size_t t) {
    while (true) {
      // Pivot on the least |entry| of row t and column t.
      std::size_t br = t;
      std::size_t bc = t;
      Coeff best = std::llabs(a_(t, t));
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        const Coeff v = std::llabs(a_(r, t));
        if (v != 0 && v < best) best = v, br = r, bc = t;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        const Coeff v = std::llabs(a_(t, c));
        if (v != 0 && v < best) best = v, br = t, bc = c;
      }
      swap_rows(t, br);
      swap_cols(t, bc);

      const Coeff p = a_(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        add_row(r, t, -(a_(r, t) / p));
        clean = clean && a_(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        add_col(c, t, -(a_(t, c) / p));
        clean = clean && a_(t, c) == 0;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the remainder.
      bool divisible = true;
      for (std::size_t r = t + 1; r < a_.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
          if (a_(r, c) % p != 0) {
            add_row(t, r, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
      for (std::size_t c = 0; c < vinv_.cols(); ++c) std::swap(vinv_(i, c), vinv_(j, c));
    }
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, Coeff k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(dst, c) = checked_add(a_(dst, c), checked_mul(k, a_(src, c)));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) = checked_add(u_(dst, c), checked_mul(k, u_(src, c)));
    }
  }

  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, Coeff k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, dst) = checked_add(a_(r, dst), checked_mul(k, a_(r, src)));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) = checked_add(v_(r, dst), checked_mul(k, v_(r, src)));
      // V^-1 picks up the inverse elementary operation on rows.
      for (std::size_t c = 0; c < vinv_.cols(); ++c) vinv_(src, c) = checked_sub(vinv_(src, c), checked_mul(k, vinv_(dst, c)));
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    }
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix vinv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, bool with_transforms) { return Reducer(std::move(a), with_transforms).run(); }

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << ']';
  return os.str();
}

}  // namespace steenrod
