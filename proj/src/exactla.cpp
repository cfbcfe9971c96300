#include "grinv/exactla.hpp"

#include "grinv/errors.hpp"
#include "grinv/qarith.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <utility>

namespace grinv {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Modular inverse of a unit `a` modulo `m` (extended Euclid over signed 128).
u64 inverse_mod(u64 a, u64 m) {
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 quo = r0 / r1;
    std::swap(r0, r1);
    r1 -= quo * r0;
    std::swap(s0, s1);
    s1 -= quo * s0;
  }
  __int128 inv = s0 % static_cast<__int128>(m);
  if (inv < 0)
    inv += m;
  return static_cast<u64>(inv);
}

// Powers ell^0 .. ell^precision.
std::vector<u64> powers_of(u64 ell, int precision) {
  std::vector<u64> out(precision + 1, 1);
  for (int i = 1; i <= precision; ++i)
    out[i] = out[i - 1] * ell;
  return out;
}

// Shared valuation logic for rings whose residues fit in a machine word.
struct WordValuation {
  u64 ell = 0;
  int precision = 0;
  std::vector<u64> pow;

  int valuation(u64 x) const {
    if (x == 0)
      return precision;
    if (ell == 2)
      return std::min(precision, std::countr_zero(x));
    int e = 0;
    while (x % ell == 0) {
      x /= ell;
      ++e;
    }
    return e;
  }
  // Valuation is exactly `floor`, given every entry has valuation >= floor.
  bool valuation_is(u64 x, int floor) const {
    if (x == 0)
      return false;
    return floor + 1 >= precision || x % pow[floor + 1] != 0;
  }
};

// Residues mod ell^P in doubles with ell^P < 2^26, so f * x < 2^52 is exact.
// Row updates are Eigen array expressions and vectorize.
struct FloatRing : WordValuation {
  using Scalar = double;
  static constexpr u64 kLimit = u64{1} << 26;
  double m = 0, invm = 0;
  u64 mi = 0;

  FloatRing(u64 ell_, int p) {
    ell = ell_;
    precision = p;
    pow = powers_of(ell_, p);
    mi = pow[p];
    m = static_cast<double>(mi);
    invm = 1.0 / m;
  }
  Scalar from_int(std::int64_t x) const {
    const auto mm = static_cast<std::int64_t>(mi);
    return static_cast<double>(((x % mm) + mm) % mm);
  }
  u64 word(Scalar x) const { return static_cast<u64>(x); }
  int val(Scalar x) const { return valuation(word(x)); }
  bool val_is(Scalar x, int floor) const { return valuation_is(word(x), floor); }
  bool is_zero(Scalar x) const { return x == 0.0; }
  // (x / ell^v) * u^{-1} mod m where pivot = ell^v u.
  Scalar factor(Scalar x, Scalar pivot, int v) const {
    const u64 unit = word(pivot) / pow[v];
    const u64 inv = inverse_mod(unit, mi);
    return static_cast<double>(static_cast<u64>(static_cast<u128>(word(x) / pow[v]) * inv % mi));
  }
  void axpy(Scalar *dst, const Scalar *src, Scalar f, Eigen::Index len) const {
    Eigen::Map<Eigen::ArrayXd> d(dst, len);
    const Eigen::Map<const Eigen::ArrayXd> s(src, len);
    d = (d - f * s) - m * ((d - f * s) * invm).floor();
    d = (d < 0.0).select(d + m, d);
    d = (d >= m).select(d - m, d);
  }
};

// Residues mod ell^P < 2^62 in 64-bit words, products through 128 bits.
struct WordRing : WordValuation {
  using Scalar = u64;
  static constexpr u64 kLimit = u64{1} << 62;
  u64 m = 0;

  WordRing(u64 ell_, int p) {
    ell = ell_;
    precision = p;
    pow = powers_of(ell_, p);
    m = pow[p];
  }
  Scalar from_int(std::int64_t x) const {
    const auto mm = static_cast<__int128>(m);
    return static_cast<u64>(((x % mm) + mm) % mm);
  }
  int val(Scalar x) const { return valuation(x); }
  bool val_is(Scalar x, int floor) const { return valuation_is(x, floor); }
  bool is_zero(Scalar x) const { return x == 0; }
  Scalar factor(Scalar x, Scalar pivot, int v) const {
    const u64 inv = inverse_mod(pivot / pow[v], m);
    return static_cast<u64>(static_cast<u128>(x / pow[v]) * inv % m);
  }
  void axpy(Scalar *dst, const Scalar *src, Scalar f, Eigen::Index len) const {
    for (Eigen::Index j = 0; j < len; ++j) {
      const u64 t = static_cast<u64>(static_cast<u128>(f) * src[j] % m);
      dst[j] = dst[j] >= t ? dst[j] - t : dst[j] + (m - t);
    }
  }
};

// Arbitrary precision fallback.
struct BigRing {
  using Scalar = mpz_class;
  mpz_class ell, m;
  int precision = 0;
  std::vector<mpz_class> pow;

  BigRing(u64 ell_, int p) : ell(static_cast<unsigned long>(ell_)), precision(p) {
    pow.resize(p + 1);
    pow[0] = 1;
    for (int i = 1; i <= p; ++i)
      pow[i] = pow[i - 1] * ell;
    m = pow[p];
  }
  Scalar from_int(std::int64_t x) const {
    mpz_class out = static_cast<long>(x);
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
    return out;
  }
  int val(const Scalar &x) const {
    if (x == 0)
      return precision;
    mpz_class rest = x;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), ell.get_mpz_t()));
  }
  bool val_is(const Scalar &x, int floor) const {
    if (x == 0)
      return false;
    return floor + 1 >= precision || !mpz_divisible_p(x.get_mpz_t(), pow[floor + 1].get_mpz_t());
  }
  bool is_zero(const Scalar &x) const { return x == 0; }
  Scalar factor(const Scalar &x, const Scalar &pivot, int v) const {
    mpz_class unit = pivot / pow[v], inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
    mpz_class out = (x / pow[v]) * inv;
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
    return out;
  }
  void axpy(Scalar *dst, const Scalar *src, const Scalar &f, Eigen::Index len) const {
    for (Eigen::Index j = 0; j < len; ++j) {
      dst[j] -= f * src[j];
      mpz_fdiv_r(dst[j].get_mpz_t(), dst[j].get_mpz_t(), m.get_mpz_t());
    }
  }
};

struct Elimination {
  std::vector<int> pivot_valuations;
};

// Minimum-valuation elimination of a row-major rows x cols residue matrix.
// Stops when the remaining block is zero modulo ell^P.
template <class Ring>
Elimination eliminate(const Ring &ring, Eigen::Index rows, Eigen::Index cols, const detail::RowFetch &fetch) {
  using Scalar = typename Ring::Scalar;
  std::vector<Scalar> a(static_cast<std::size_t>(rows * cols));
  {
    std::vector<std::int64_t> row(static_cast<std::size_t>(cols));
    for (Eigen::Index i = 0; i < rows; ++i) {
      fetch(i, row.data());
      for (Eigen::Index j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(i * cols + j)] = ring.from_int(row[j]);
    }
  }
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Scalar & { return a[static_cast<std::size_t>(i * cols + j)]; };

  Elimination out;
  const Eigen::Index steps = std::min(rows, cols);
  int floor = 0; // every entry of the active block has valuation >= floor
  for (Eigen::Index k = 0; k < steps; ++k) {
    Eigen::Index pi = -1, pj = -1;
    int best = ring.precision;
    for (Eigen::Index i = k; i < rows && best > floor; ++i) {
      for (Eigen::Index j = k; j < cols; ++j) {
        const Scalar &x = at(i, j);
        if (ring.is_zero(x))
          continue;
        if (ring.val_is(x, floor)) {
          pi = i;
          pj = j;
          best = floor;
          break;
        }
        const int v = ring.val(x);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0)
      break;
    floor = best;
    out.pivot_valuations.push_back(best);

    if (pi != k)
      for (Eigen::Index j = 0; j < cols; ++j)
        std::swap(at(pi, j), at(k, j));
    if (pj != k)
      for (Eigen::Index i = k; i < rows; ++i)
        std::swap(at(i, pj), at(i, k));

    const Scalar pivot = at(k, k);
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      if (ring.is_zero(at(i, k)))
        continue;
      const Scalar f = ring.factor(at(i, k), pivot, best);
      ring.axpy(&at(i, k + 1), &at(k, k + 1), f, cols - k - 1);
    }
  }
  return out;
}

Elimination eliminate_at(u64 ell, int precision, Eigen::Index rows, Eigen::Index cols,
                         const detail::RowFetch &fetch) {
  // ell^precision against the ring limits, without overflow.
  auto fits = [&](u64 limit) {
    u64 acc = 1;
    for (int i = 0; i < precision; ++i) {
      if (acc > limit / ell)
        return false;
      acc *= ell;
    }
    return acc < limit;
  };
  if (fits(FloatRing::kLimit))
    return eliminate(FloatRing(ell, precision), rows, cols, fetch);
  if (fits(WordRing::kLimit))
    return eliminate(WordRing(ell, precision), rows, cols, fetch);
  return eliminate(BigRing(ell, precision), rows, cols, fetch);
}

int float_precision(u64 ell) {
  int p = 0;
  u64 acc = 1;
  while (acc <= (FloatRing::kLimit - 1) / ell) {
    acc *= ell;
    ++p;
  }
  return std::max(p, 1);
}

void require_prime(u64 ell) {
  if (!is_prime(ell))
    throw DomainError(std::to_string(ell) + " is not prime");
}

} // namespace

namespace detail {

int rank_mod_rows(Eigen::Index rows, Eigen::Index cols, const RowFetch &fetch, std::uint64_t ell) {
  require_prime(ell);
  return static_cast<int>(eliminate_at(ell, 1, rows, cols, fetch).pivot_valuations.size());
}

DivisorProfile local_profile_rows(Eigen::Index rows, Eigen::Index cols, const RowFetch &fetch,
                                  std::uint64_t ell, const LocalBounds &bounds) {
  require_prime(ell);
  if (rows != cols)
    throw DimensionError("local_profile needs a square matrix");
  if (bounds.corank < 0 || bounds.corank > rows)
    throw DomainError("corank out of range");
  if (bounds.det_val && *bounds.det_val < 0)
    throw DomainError("negative valuation budget");

  const int ceiling = bounds.det_val ? static_cast<int>(*bounds.det_val) + 1 : 1 << 12;
  int precision = std::min(float_precision(ell), ceiling);
  while (true) {
    const Elimination e = eliminate_at(ell, precision, rows, cols, fetch);
    const auto remaining = rows - static_cast<Eigen::Index>(e.pivot_valuations.size());
    if (remaining < bounds.corank)
      throw CorankMismatch("rank modulo " + std::to_string(ell) + "^" + std::to_string(precision) +
                           " exceeds dimension minus declared corank");
    if (remaining == bounds.corank) {
      DivisorProfile out;
      out.prime = ell;
      for (int v : e.pivot_valuations)
        out.add(v, 1);
      out.zero_count = bounds.corank;
      return out;
    }
    // Some nonzero invariant factors sit at valuation >= precision.
    std::int64_t certified = 0;
    for (int v : e.pivot_valuations)
      certified += v;
    const std::int64_t uncovered = remaining - bounds.corank;
    if (precision >= ceiling ||
        (bounds.det_val && certified + uncovered * precision > *bounds.det_val))
      throw PrecisionExceeded(std::to_string(uncovered) + " invariant factor(s) at " + std::to_string(ell) +
                              " not certified within precision " + std::to_string(precision));
    precision = std::min(2 * precision, ceiling);
  }
}

} // namespace detail

std::vector<mpz_class> snf_diag(const IntegerMatrix &input, Eigen::Index cap) {
  if (std::max(input.rows(), input.cols()) > cap)
    throw DimensionCap("exact Smith form limited to dimension " + std::to_string(cap));
  const Eigen::Index rows = input.rows(), cols = input.cols();
  std::vector<mpz_class> a(static_cast<std::size_t>(rows * cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      a[static_cast<std::size_t>(i * cols + j)] = static_cast<long>(input(i, j));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> mpz_class & { return a[static_cast<std::size_t>(i * cols + j)]; };

  std::vector<mpz_class> diag;
  const Eigen::Index steps = std::min(rows, cols);
  mpz_class quo;
  for (Eigen::Index k = 0; k < steps; ++k) {
    // Smallest nonzero magnitude in the block becomes the pivot.
    auto place_min_pivot = [&]() {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < rows; ++i)
        for (Eigen::Index j = k; j < cols; ++j)
          if (at(i, j) != 0 && (pi < 0 || mpz_cmpabs(at(i, j).get_mpz_t(), at(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0)
        return false;
      if (pi != k)
        for (Eigen::Index j = 0; j < cols; ++j)
          std::swap(at(pi, j), at(k, j));
      if (pj != k)
        for (Eigen::Index i = 0; i < rows; ++i)
          std::swap(at(i, pj), at(i, k));
      return true;
    };
    if (!place_min_pivot())
      break;

    while (true) {
      bool clean = true;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (at(i, k) == 0)
          continue;
        mpz_fdiv_q(quo.get_mpz_t(), at(i, k).get_mpz_t(), at(k, k).get_mpz_t());
        for (Eigen::Index j = k; j < cols; ++j)
          at(i, j) -= quo * at(k, j);
        clean = clean && at(i, k) == 0;
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (at(k, j) == 0)
          continue;
        mpz_fdiv_q(quo.get_mpz_t(), at(k, j).get_mpz_t(), at(k, k).get_mpz_t());
        for (Eigen::Index i = k; i < rows; ++i)
          at(i, j) -= quo * at(i, k);
        clean = clean && at(k, j) == 0;
      }
      if (!clean) {
        // A remainder is now smaller than the pivot; restart from it.
        place_min_pivot();
        continue;
      }
      // Pivot row and column are clear; enforce divisibility of the block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = k + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(at(i, j).get_mpz_t(), at(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0)
        break;
      for (Eigen::Index j = k; j < cols; ++j)
        at(k, j) += at(bad, j);
    }
    diag.push_back(abs(at(k, k)));
  }
  diag.resize(static_cast<std::size_t>(steps), mpz_class(0));
  return diag;
}

} // namespace grinv
