#pragma once

#include "grinv/geometry.hpp"
#include "grinv/profile.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <type_traits>
#include <vector>

namespace grinv {

/// What the caller knows about the matrix from theory.
struct LocalBounds {
  /// Upper bound on the valuation of the product of the nonzero invariant
  /// factors. Elimination never runs at precision above det_val + 1.
  std::optional<std::int64_t> det_val;
  /// Number of zero invariant factors (rank deficiency over Q).
  std::int64_t corank = 0;
};

namespace detail {

/// Writes row `i` of the input as int64 into `out` (length cols).
using RowFetch = std::function<void(Eigen::Index, std::int64_t *)>;

DivisorProfile local_profile_rows(Eigen::Index rows, Eigen::Index cols, const RowFetch &fetch,
                                  std::uint64_t ell, const LocalBounds &bounds);
int rank_mod_rows(Eigen::Index rows, Eigen::Index cols, const RowFetch &fetch, std::uint64_t ell);

template <typename Derived> RowFetch row_fetch(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  return [&m](Eigen::Index i, std::int64_t *out) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_floating_point_v<Scalar>)
        out[j] = std::llround(m(i, j));
      else
        out[j] = static_cast<std::int64_t>(m(i, j));
    }
  };
}

} // namespace detail

/// Rank of an integer matrix over GF(ell).
template <typename Derived> int rank_mod(const Eigen::MatrixBase<Derived> &m, std::uint64_t ell) {
  return detail::rank_mod_rows(m.rows(), m.cols(), detail::row_fetch(m), ell);
}

/// Elementary-divisor profile of a square integer matrix at the prime ell.
///
/// Elimination runs over Z/ell^P with minimum-valuation pivoting (ties go to
/// the smallest (row, col) of the current block). The profile is accepted once
/// the number of entries left at valuation >= P equals the declared corank;
/// otherwise P is doubled, never beyond det_val + 1. Floating-point entries
/// must hold exact integers.
///
/// Throws PrecisionExceeded when the residual cannot be certified within the
/// budget, CorankMismatch when the rank mod ell^P already exceeds
/// dim - corank, DimensionError for non-square input.
template <typename Derived>
DivisorProfile local_profile(const Eigen::MatrixBase<Derived> &m, std::uint64_t ell,
                             const LocalBounds &bounds) {
  return detail::local_profile_rows(m.rows(), m.cols(), detail::row_fetch(m), ell, bounds);
}

/// Default size limit for the exact big-integer Smith form.
inline constexpr Eigen::Index kExactSnfCap = 200;

/// Invariant factors d_1 | d_2 | ... (zeros last) of an integer matrix by
/// integer row/column reduction over GMP integers, pivoting on the smallest
/// nonzero magnitude. Throws DimensionCap above `cap`.
std::vector<mpz_class> snf_diag(const IntegerMatrix &m, Eigen::Index cap = kExactSnfCap);

} // namespace grinv
