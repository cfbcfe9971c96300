#include "grinv/qarith.hpp"

#include "grinv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grinv {
namespace {

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in q-arithmetic");
  return out;
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in q-arithmetic");
  return out;
}

Int ipow(Int base, Int e) {
  Int out = 1;
  for (Int i = 0; i < e; ++i)
    out = checked_mul(out, base);
  return out;
}

void require_n(int n) {
  if (n < 4)
    throw DimensionError("n must be at least 4, got " + std::to_string(n));
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  for (a %= m; e; e >>= 1) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0)
    return 2;
  std::mt19937_64 rng(n);
  while (true) {
    const u64 c = rng() % (n - 1) + 1;
    u64 x = rng() % n, y = x, d = 1;
    auto step = [&](u64 z) { return (mulmod(z, z, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
      return d;
  }
}

void factor_into(u64 n, std::map<u64, Int> &out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

Int qbinom(Int m, Int k, Int q) {
  if (k < 0 || k > m)
    throw DomainError("qbinom needs 0 <= k <= m");
  if (q < 2)
    throw DomainError("qbinom needs q >= 2");
  // After step i the running value is [m i+1]_q, so every division is exact.
  // GMP keeps the intermediate products from overflowing; only the result
  // has to fit.
  k = std::min(k, m - k);
  mpz_class out = 1, qq = static_cast<long>(q);
  for (Int i = 0; i < k; ++i) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(m - i));
    mpz_pow_ui(den.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
    out *= num - 1;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), mpz_class(den - 1).get_mpz_t());
  }
  if (!out.fits_slong_p())
    throw std::overflow_error("qbinom overflows int64");
  return out.get_si();
}

Int qqbinom1(Int m, Int q) {
  if (m < 0)
    throw DomainError("qqbinom1 needs m >= 0");
  Int out = 0;
  const Int q2 = checked_mul(q, q);
  Int term = 1;
  for (Int i = 0; i < m; ++i) {
    out = checked_add(out, term);
    if (i + 1 < m)
      term = checked_mul(term, q2);
  }
  return out;
}

int val(Int ell, Int x) {
  if (ell < 2)
    throw DomainError("valuation base must be >= 2");
  if (x == 0)
    throw DomainError("valuation of zero");
  int e = 0;
  while (x % ell == 0) {
    x /= ell;
    ++e;
  }
  return e;
}

int val(Int ell, const mpz_class &x) {
  if (ell < 2)
    throw DomainError("valuation base must be >= 2");
  if (x == 0)
    throw DomainError("valuation of zero");
  mpz_class rest = x;
  const mpz_class base = static_cast<long>(ell);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t()));
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2)
    return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i)
      composite[j] = true;
  }
  return out;
}

FactoredInteger FactoredInteger::of(Int x) {
  if (x == 0)
    throw DomainError("cannot factor zero");
  FactoredInteger out;
  out.sign_ = x < 0 ? -1 : 1;
  u64 n = x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
  for (u64 d = 2; d < 1000000 && d * d <= n; ++d) {
    while (n % d == 0) {
      ++out.exps_[d];
      n /= d;
    }
  }
  factor_into(n, out.exps_);
  return out;
}

Int FactoredInteger::valuation(std::uint64_t prime) const {
  const auto it = exps_.find(prime);
  return it == exps_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> FactoredInteger::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto &[p, e] : exps_)
    if (e > 0)
      out.push_back(p);
  return out;
}

mpz_class FactoredInteger::value() const {
  mpz_class out = sign_;
  mpz_class pp;
  for (const auto &[p, e] : exps_) {
    mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(e));
    out *= pp;
  }
  return out;
}

FactoredInteger FactoredInteger::abs() const {
  FactoredInteger out = *this;
  out.sign_ = 1;
  return out;
}

FactoredInteger FactoredInteger::pow(Int e) const {
  if (e < 0)
    throw DomainError("negative exponent");
  FactoredInteger out;
  out.sign_ = (sign_ < 0 && e % 2 == 1) ? -1 : 1;
  if (e == 0)
    return out;
  for (const auto &[p, x] : exps_)
    out.exps_[p] = checked_mul(x, e);
  return out;
}

FactoredInteger &FactoredInteger::operator*=(const FactoredInteger &other) {
  sign_ *= other.sign_;
  for (const auto &[p, e] : other.exps_)
    exps_[p] += e;
  return *this;
}

FactoredInteger &FactoredInteger::operator/=(const FactoredInteger &other) {
  sign_ *= other.sign_;
  for (const auto &[p, e] : other.exps_) {
    Int &mine = exps_[p];
    if (mine < e)
      throw DomainError("inexact division of factored integers");
    mine -= e;
    if (mine == 0)
      exps_.erase(p);
  }
  return *this;
}

std::string FactoredInteger::to_string() const {
  std::ostringstream os;
  if (sign_ < 0)
    os << '-';
  if (exps_.empty())
    os << '1';
  bool first = true;
  for (const auto &[p, e] : exps_) {
    if (!first)
      os << " * ";
    first = false;
    os << p;
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

Brackets brackets(int n, Int q) {
  require_n(n);
  const auto pp = split_prime_power(q);
  Brackets b{};
  b.q = q;
  b.p = pp.p;
  b.t = pp.t;
  b.n1 = qbinom(n, 1, q);
  b.n1m1 = qbinom(n - 1, 1, q);
  b.n2 = qbinom(n - 2, 1, q);
  b.n3 = qbinom(n - 3, 1, q);
  b.v = qbinom(n, 2, q);
  b.f = b.n1 - 1;
  b.g = b.v - b.n1;
  return b;
}

SrgParameters srg_params(int n, Int q, GraphKind graph) {
  const Brackets b = brackets(n, q);
  SrgParameters grassmann;
  grassmann.v = b.v;
  grassmann.k = checked_mul(checked_mul(q, q + 1), b.n2);
  grassmann.lambda = b.n1m1 + q * q - 2;
  grassmann.mu = (q + 1) * (q + 1);
  if (graph == GraphKind::Grassmann)
    return grassmann;

  SrgParameters skew;
  skew.v = b.v;
  skew.k = b.v - grassmann.k - 1;
  skew.lambda = b.v - 2 * grassmann.k + grassmann.mu - 2;
  skew.mu = b.v - 2 * grassmann.k + grassmann.lambda;
  return skew;
}

SpectralData spectrum(int n, Int q, GraphKind graph, MatrixKind matrix) {
  const Brackets b = brackets(n, q);
  SpectralData adj;
  adj.f = b.f;
  adj.g = b.g;
  if (graph == GraphKind::SkewLines) {
    adj.theta0 = checked_mul(ipow(q, 4), qbinom(n - 2, 2, q));
    adj.r = -checked_mul(q * q, b.n3);
    adj.s = q;
  } else {
    adj.theta0 = checked_mul(checked_mul(q, q + 1), b.n2);
    adj.r = checked_mul(q * q, b.n3) - 1;
    adj.s = -(q + 1);
  }
  if (matrix == MatrixKind::Adjacency)
    return adj;
  SpectralData lap = adj;
  lap.theta0 = 0;
  lap.r = adj.theta0 - adj.r;
  lap.s = adj.theta0 - adj.s;
  return lap;
}

FactoredInteger nonzero_eigenvalue_product(int n, Int q, GraphKind graph, MatrixKind matrix) {
  const SpectralData sp = spectrum(n, q, graph, matrix);
  FactoredInteger out = FactoredInteger::of(sp.r).pow(sp.f) * FactoredInteger::of(sp.s).pow(sp.g);
  if (sp.theta0 != 0)
    out *= FactoredInteger::of(sp.theta0);
  return out.abs();
}

FactoredInteger group_order(int n, Int q, GraphKind graph, MatrixKind matrix) {
  FactoredInteger prod = nonzero_eigenvalue_product(n, q, graph, matrix);
  if (matrix == MatrixKind::Laplacian)
    prod /= FactoredInteger::of(qbinom(n, 2, q));
  return prod;
}

bool numtheory_checks(int n, Int q) {
  const Brackets b = brackets(n, q);
  bool ok = true;

  // Grassmann adjacency: r, s, k'.
  {
    const SpectralData sp = spectrum(n, q, GraphKind::Grassmann, MatrixKind::Adjacency);
    const Int r = std::abs(sp.r), s = std::abs(sp.s), k = sp.theta0;
    if (n % 2 == 1) {
      ok = ok && std::gcd(r, s) == 1 && std::gcd(k, s) == q + 1 && std::gcd(k, r) == 1;
    } else {
      ok = ok && std::gcd(r, s) == q + 1 && std::gcd(s, k) == q + 1;
      for (auto ell : FactoredInteger::of(std::gcd(r, k)).primes())
        ok = ok && (q + 1) % static_cast<Int>(ell) == 0;
    }
  }

  // Skew Laplacian: r, s.
  {
    const SpectralData sp = spectrum(n, q, GraphKind::SkewLines, MatrixKind::Laplacian);
    const Int common = std::gcd(sp.r, sp.s);
    for (auto ell : FactoredInteger::of(common).primes()) {
      if (static_cast<Int>(ell) == b.p)
        continue;
      if (n % 2 == 1)
        ok = false;
      else
        ok = ok && (q * (q + 1)) % static_cast<Int>(ell) == 0;
    }
    ok = ok && checked_mul(sp.s, q + 1) % b.n1m1 == 0;
  }
  return ok;
}

} // namespace grinv
