#pragma once

#include "grinv/geometry.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grinv {

using Int = std::int64_t;

/// Gaussian binomial [m k]_q. Throws DomainError unless 0 <= k <= m, q >= 2;
/// std::overflow_error if the value leaves int64.
Int qbinom(Int m, Int k, Int q);

/// [m 1]_{q^2} = 1 + q^2 + ... + q^(2m-2); zero for m = 0.
Int qqbinom1(Int m, Int q);

/// Largest e with ell^e | x. Throws DomainError for x = 0 or ell < 2.
int val(Int ell, Int x);
int val(Int ell, const mpz_class &x);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// A nonzero integer as sign times a product of prime powers.
class FactoredInteger {
public:
  FactoredInteger() = default;
  /// Factors |x| by trial division below 10^6, then Pollard rho.
  static FactoredInteger of(Int x);

  int sign() const { return sign_; }
  const std::map<std::uint64_t, Int> &exponents() const { return exps_; }
  Int valuation(std::uint64_t prime) const;
  std::vector<std::uint64_t> primes() const;
  mpz_class value() const;
  FactoredInteger abs() const;

  FactoredInteger pow(Int e) const;
  FactoredInteger &operator*=(const FactoredInteger &other);
  /// Exact division; throws DomainError when the quotient is not an integer.
  FactoredInteger &operator/=(const FactoredInteger &other);
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger &b) { return a *= b; }
  friend FactoredInteger operator/(FactoredInteger a, const FactoredInteger &b) { return a /= b; }
  friend bool operator==(const FactoredInteger &, const FactoredInteger &) = default;

  /// e.g. "2^52" or "-3^2 * 5".
  std::string to_string() const;

private:
  int sign_ = 1;
  std::map<std::uint64_t, Int> exps_;
};

struct SrgParameters {
  Int v = 0, k = 0, lambda = 0, mu = 0;
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  friend bool operator==(const SrgParameters &, const SrgParameters &) = default;
};

/// Eigenvalue theta0 on the all-one vector, r with multiplicity f, s with
/// multiplicity g.
struct SpectralData {
  Int theta0 = 0, r = 0, s = 0;
  Int f = 0, g = 0;
  friend bool operator==(const SpectralData &, const SpectralData &) = default;
};

/// Throws DimensionError for n < 4.
SrgParameters srg_params(int n, Int q, GraphKind graph);
SpectralData spectrum(int n, Int q, GraphKind graph, MatrixKind matrix);

/// |theta0 r^f s^g| for adjacency matrices; the critical-group order
/// (product of nonzero eigenvalues over v) for Laplacians.
FactoredInteger group_order(int n, Int q, GraphKind graph, MatrixKind matrix);

/// Product of the nonzero eigenvalues in absolute value, factored. Equals
/// group_order for adjacency matrices and v * group_order for Laplacians.
FactoredInteger nonzero_eigenvalue_product(int n, Int q, GraphKind graph, MatrixKind matrix);

/// The gcd and divisibility facts about r, s, k' of the Grassmann adjacency
/// and r, s of the skew Laplacian that the cross-characteristic case split
/// relies on.
bool numtheory_checks(int n, Int q);

/// Shorthand bundle of the bracket values used throughout the predictors.
struct Brackets {
  Int q, p;
  int t;
  Int n1, n1m1, n2, n3; // [n 1], [n-1 1], [n-2 1], [n-3 1]
  Int v, f, g;          // [n 2], [n 1] - 1, [n 2] - [n 1]
};
Brackets brackets(int n, Int q);

} // namespace grinv
