#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grinv {

/// Elementary divisors of an integer matrix at one prime: e_i is the number
/// of invariant factors with valuation exactly i, and zero_count the number of
/// zero invariant factors. Only nonzero multiplicities are stored.
struct DivisorProfile {
  std::uint64_t prime = 0;
  std::map<int, std::int64_t> mults;
  std::int64_t zero_count = 0;

  std::int64_t at(int exponent) const {
    const auto it = mults.find(exponent);
    return it == mults.end() ? 0 : it->second;
  }
  /// Adds to e_exponent, dropping the entry if it reaches zero.
  void add(int exponent, std::int64_t count);

  /// Σ e_i + zero_count.
  std::int64_t dimension() const;
  /// Σ i·e_i, the valuation of the product of nonzero invariant factors.
  std::int64_t weighted_sum() const;

  /// "0:6 1:14 2:8 zero:0"
  std::string to_string() const;

  friend bool operator==(const DivisorProfile &, const DivisorProfile &) = default;
};

/// Profile at `prime` of an explicit list of invariant factors.
DivisorProfile profile_from_invariants(const std::vector<mpz_class> &invariants, std::uint64_t prime);

} // namespace grinv
