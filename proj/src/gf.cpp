#include "grinv/gf.hpp"

#include "grinv/errors.hpp"

#include <string>

namespace grinv {
namespace {

using Poly = std::vector<int>; // constant term first

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b, int p) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

int inverse_mod_prime(int a, int p) {
  int result = 1;
  for (int e = p - 2, base = a % p; e > 0; e >>= 1) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Remainder of a modulo a nonzero polynomial m.
Poly poly_rem(Poly a, const Poly &m, int p) {
  trim(a);
  const int lead_inv = inverse_mod_prime(m.back(), p);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t code, int p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len; ++i) {
    out[i] = static_cast<int>(code % p);
    code /= p;
  }
  return out;
}

std::uint32_t encode(const Poly &a, int p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    code = code * p + static_cast<std::uint32_t>(a[i]);
  return code;
}

Poly monic_from_code(std::uint32_t code, int p, int degree) {
  Poly m = decode(code, p, degree);
  m.push_back(1);
  return m;
}

bool irreducible(const Poly &m, int p) {
  const int degree = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= degree; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i)
      count *= p;
    for (std::uint32_t c = 0; c < count; ++c)
      if (poly_rem(m, monic_from_code(c, p, d), p).empty())
        return false;
  }
  return true;
}

} // namespace

PrimePower split_prime_power(std::int64_t q) {
  if (q < 2)
    throw DomainError("field order must be at least 2, got " + std::to_string(q));
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0)
    return {q, 1};
  int t = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++t;
  }
  if (rest != 1)
    throw NotAPrimePower(std::to_string(q) + " is not a prime power");
  return {p, t};
}

Field Field::make(std::int64_t q) {
  const auto [p64, t] = split_prime_power(q);
  if (q > kMaxOrder)
    throw DomainError("field order " + std::to_string(q) + " exceeds supported maximum " +
                      std::to_string(kMaxOrder));
  auto d = std::make_shared<Data>();
  d->p = static_cast<int>(p64);
  d->t = t;
  d->q = static_cast<int>(q);
  const int p = d->p;

  if (t == 1) {
    d->modulus = {0, 1};
  } else {
    std::uint32_t count = 1;
    for (int i = 0; i < t; ++i)
      count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly m = monic_from_code(c, p, t);
      if (m[0] != 0 && irreducible(m, p)) {
        d->modulus = std::move(m);
        break;
      }
    }
  }

  const auto n = static_cast<std::size_t>(d->q);
  d->add.resize(n * n);
  d->mul.resize(n * n);
  d->neg.resize(n);
  d->inv.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const Poly pa = decode(a, p, t);
    Poly na(t);
    for (int i = 0; i < t; ++i)
      na[i] = (p - pa[i]) % p;
    d->neg[a] = static_cast<std::uint16_t>(encode(na, p));
    for (std::uint32_t b = 0; b < n; ++b) {
      const Poly pb = decode(b, p, t);
      Poly sum(t);
      for (int i = 0; i < t; ++i)
        sum[i] = (pa[i] + pb[i]) % p;
      d->add[a * n + b] = static_cast<std::uint16_t>(encode(sum, p));
      Poly prod = t == 1 ? Poly{pa[0] * pb[0] % p} : poly_rem(poly_mul(pa, pb, p), d->modulus, p);
      d->mul[a * n + b] = static_cast<std::uint16_t>(encode(prod, p));
    }
  }
  for (std::uint32_t a = 1; a < n; ++a)
    for (std::uint32_t b = 1; b < n; ++b)
      if (d->mul[a * n + b] == 1) {
        d->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
  return Field(std::move(d));
}

FieldScalar Field::element(int index) const {
  if (index < 0 || index >= q())
    throw DomainError("field element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

FieldScalar Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > t())
    throw DomainError("too many coefficients for GF(" + std::to_string(q()) + ")");
  Poly a(coeffs.begin(), coeffs.end());
  for (int &c : a)
    c = ((c % p()) + p()) % p();
  return {encode(a, p())};
}

std::vector<int> Field::coeffs(FieldScalar a) const { return decode(a.code, p(), t()); }

FieldScalar Field::inv(FieldScalar a) const {
  if (a.code == 0)
    throw DivisionByZero("inverse of zero in GF(" + std::to_string(q()) + ")");
  return {data_->inv[a.code]};
}

FieldScalar Field::pow(FieldScalar a, std::uint64_t e) const {
  FieldScalar result = one();
  for (; e > 0; e >>= 1) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

} // namespace grinv
