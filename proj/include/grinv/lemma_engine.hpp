#pragma once

#include "grinv/profile.hpp"

#include <cstdint>
#include <vector>

namespace grinv {

/// One rung of a valuation staircase: the reduction of M_exponent has
/// dimension at least `bound`.
struct LemmaStep {
  std::int64_t exponent = 0;
  std::int64_t bound = 0;
  friend bool operator==(const LemmaStep &, const LemmaStep &) = default;
};

/// Inputs of the staircase multiplicity lemma. `d` is the valuation of the
/// product of nonzero invariant factors, `kernel_dim` the rank of the kernel.
/// Exponents strictly increase from a positive start, bounds strictly decrease,
/// and Σ_j (b_j - b_{j+1}) a_j = d with b_{h+1} = kernel_dim.
struct LemmaInput {
  std::int64_t d = 0;
  std::int64_t ambient_dim = 0;
  std::int64_t kernel_dim = 0;
  std::vector<LemmaStep> steps;
  friend bool operator==(const LemmaInput &, const LemmaInput &) = default;
};

/// The profile the staircase forces: e_{a_j} = b_j - b_{j+1},
/// e_0 = ambient_dim - b_1, zero_count = kernel_dim, nothing else.
///
/// Throws MonotonicityError for malformed staircases, InconsistentBudget when
/// the staircase does not spend exactly d.
DivisorProfile resolve_multiplicities(const LemmaInput &input, std::uint64_t prime);

} // namespace grinv
