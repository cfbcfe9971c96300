#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace grinv {

/// An element of GF(p^t), stored as its polynomial representative packed in
/// base p (constant coefficient is the least significant digit). The code is
/// also the element's index in [0, q), which fixes the enumeration order.
struct FieldScalar {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldScalar, FieldScalar) = default;
};

/// GF(q) with q = p^t, realized as GF(p)[x] / (modulus).
///
/// The modulus is the monic irreducible polynomial of degree t whose lower
/// coefficients, read as a base-p number with the constant term least
/// significant, are smallest. For t = 1 the modulus is x (a placeholder) and
/// arithmetic is plain mod-p arithmetic.
///
/// Arithmetic goes through addition/multiplication tables that are filled by
/// direct polynomial arithmetic at construction; a Field is immutable and cheap
/// to copy.
class Field {
public:
  static constexpr int kMaxOrder = 256;

  /// Throws NotAPrimePower for q that is not a prime power, DomainError for
  /// q < 2 or q > kMaxOrder.
  static Field make(std::int64_t q);

  int p() const { return data_->p; }
  int t() const { return data_->t; }
  int q() const { return data_->q; }
  /// Coefficients of the monic modulus, constant term first (length t + 1).
  const std::vector<int> &modulus() const { return data_->modulus; }

  FieldScalar zero() const { return {0}; }
  FieldScalar one() const { return {1}; }
  FieldScalar element(int index) const;

  FieldScalar from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldScalar a) const;

  FieldScalar add(FieldScalar a, FieldScalar b) const {
    return {data_->add[a.code * data_->q + b.code]};
  }
  FieldScalar mul(FieldScalar a, FieldScalar b) const {
    return {data_->mul[a.code * data_->q + b.code]};
  }
  FieldScalar neg(FieldScalar a) const { return {data_->neg[a.code]}; }
  FieldScalar sub(FieldScalar a, FieldScalar b) const { return add(a, neg(b)); }
  /// Throws DivisionByZero on zero.
  FieldScalar inv(FieldScalar a) const;
  FieldScalar pow(FieldScalar a, std::uint64_t e) const;

  bool same_field(const Field &other) const {
    return data_ == other.data_ || (q() == other.q() && modulus() == other.modulus());
  }

private:
  struct Data {
    int p = 0;
    int t = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add, mul, neg, inv;
  };
  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Factor q = p^t. Throws NotAPrimePower / DomainError.
struct PrimePower {
  std::int64_t p;
  int t;
};
PrimePower split_prime_power(std::int64_t q);

} // namespace grinv
