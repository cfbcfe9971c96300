#include "grinv/predict_charp.hpp"

#include "grinv/errors.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace grinv {

namespace {

Int to_int(const mpz_class &x) {
  if (!x.fits_slong_p())
    throw std::overflow_error("coefficient leaves int64");
  return x.get_si();
}

mpz_class binom(Int m, Int k) {
  if (k < 0 || m < 0 || k > m)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

// Odometer over [1, n-1]^t.
template <typename F> void for_each_tuple(int n, int t, F &&f) {
  if (n < 2 || t < 1)
    return;
  Tuple s(static_cast<std::size_t>(t), 1);
  for (;;) {
    f(s);
    int i = t - 1;
    while (i >= 0 && s[i] == n - 1)
      s[i--] = 1;
    if (i < 0)
      return;
    ++s[i];
  }
}

} // namespace

Int dk_coeff(int n, Int p, Int k) {
  if (n < 1 || !is_prime(static_cast<std::uint64_t>(p)))
    throw DomainError("dk_coeff needs n >= 1 and p prime");
  if (k < 0 || k > n * (p - 1))
    return 0;
  mpz_class sum = 0;
  for (Int j = 0; j <= n && j * p <= k; ++j) {
    const mpz_class term = binom(n, j) * binom(n + k - j * p - 1, n - 1);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return to_int(sum);
}

Int dk_by_expansion(int n, Int p, Int k) {
  if (k < 0 || k > n * (p - 1))
    return 0;
  std::vector<mpz_class> poly{1};
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> next(poly.size() + static_cast<std::size_t>(p - 1), 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (Int b = 0; b < p; ++b)
        next[a + static_cast<std::size_t>(b)] += poly[a];
    poly = std::move(next);
  }
  return to_int(poly[static_cast<std::size_t>(k)]);
}

TupleSet h_alpha(int n, int t, int alpha) {
  TupleSet out;
  if (alpha < 0 || alpha > t)
    return out;
  for_each_tuple(n, t, [&](const Tuple &s) {
    int sum = 0;
    for (int x : s)
      sum += std::max(0, 2 - x);
    if (sum == alpha)
      out.insert(s);
  });
  return out;
}

TupleSet reflected_h(int n, int t, int beta) {
  TupleSet out;
  for (Tuple s : h_alpha(n, t, beta)) {
    for (int &x : s)
      x = n - x;
    out.insert(std::move(s));
  }
  return out;
}

TupleSet gamma_set(int n, int t, int i) {
  TupleSet out;
  for (int alpha = 0; alpha <= t; ++alpha) {
    const int beta = i - alpha;
    if (beta < 0 || beta > t)
      continue;
    const TupleSet ha = h_alpha(n, t, alpha);
    for (const Tuple &s : reflected_h(n, t, beta))
      if (ha.contains(s))
        out.insert(s);
  }
  return out;
}

std::vector<Int> lambda_vec(const Tuple &s, Int p) {
  const std::size_t t = s.size();
  std::vector<Int> out(t);
  for (std::size_t i = 0; i < t; ++i)
    out[i] = p * s[(i + 1) % t] - s[i];
  return out;
}

Int tuple_weight(int n, const Tuple &s, Int p) {
  mpz_class w = 1;
  for (Int l : lambda_vec(s, p))
    w *= dk_coeff(n, p, l);
  return to_int(w);
}

DivisorProfile predict_product_profile(int n, Int q) {
  const Brackets b = brackets(n, q);
  DivisorProfile out;
  out.prime = static_cast<std::uint64_t>(b.p);
  for (int i = 0; i <= 2 * b.t; ++i) {
    Int e = 0;
    for (const Tuple &s : gamma_set(n, b.t, i))
      e += tuple_weight(n, s, b.p);
    out.add(i, e);
  }
  out.add(4 * b.t, 1);
  out.zero_count = b.v - out.dimension();
  return out;
}

DivisorProfile predict_charp(int n, Int q, GraphKind graph, MatrixKind matrix) {
  const Brackets b = brackets(n, q);
  const int t = b.t;
  DivisorProfile out;
  out.prime = static_cast<std::uint64_t>(b.p);

  if (graph == GraphKind::Grassmann) {
    out.add(0, b.v - 1);
    if (matrix == MatrixKind::Adjacency)
      out.add(t, 1);
    else
      out.zero_count = 1;
    return out;
  }

  // Below 4t the skew adjacency and Laplacian agree; the low range comes from
  // the incidence product and is mirrored about 3t/2.
  const DivisorProfile product = predict_product_profile(n, q);
  Int low = 0;
  for (int i = 0; i < t; ++i) {
    const Int e = product.at(i);
    out.add(i, e);
    out.add(3 * t - i, e);
    low += e;
  }
  out.add(t, b.g - low);
  out.add(2 * t, b.f - low);
  if (matrix == MatrixKind::Adjacency)
    out.add(4 * t, 1);
  else
    out.zero_count = 1;
  return out;
}

} // namespace grinv
