#pragma once

#include "grinv/geometry.hpp"
#include "grinv/profile.hpp"
#include "grinv/qarith.hpp"

#include <set>
#include <vector>

namespace grinv {

using Tuple = std::vector<int>;
using TupleSet = std::set<Tuple>;

/// Coefficient of x^k in (1 + x + ... + x^(p-1))^n, by the alternating sum
/// Σ_j (-1)^j C(n,j) C(n+k-jp-1, n-1). Zero outside [0, n(p-1)].
Int dk_coeff(int n, Int p, Int k);
/// Same coefficient by repeated polynomial multiplication (test oracle).
Int dk_by_expansion(int n, Int p, Int k);

/// Tuples s in [1, n-1]^t with Σ max(0, 2 - s_i) = alpha, i.e. exactly alpha
/// coordinates equal to 1.
TupleSet h_alpha(int n, int t, int alpha);
/// The reflection s_i -> n - s_i applied to h_alpha(n, t, beta).
TupleSet reflected_h(int n, int t, int beta);
/// Union over alpha + beta = i of reflected_h(beta) ∩ h_alpha(alpha).
TupleSet gamma_set(int n, int t, int i);

/// λ_i = p·s_{(i+1) mod t} - s_i for i = 0..t-1.
std::vector<Int> lambda_vec(const Tuple &s, Int p);
/// Π_i d_{λ_i}.
Int tuple_weight(int n, const Tuple &s, Int p);

/// p-adic profile of the product of the 2-vs-1 and 1-vs-2 trivial-intersection
/// incidence matrices (a v x v matrix of rank [n 1]).
DivisorProfile predict_product_profile(int n, Int q);

/// p-adic profile of any of the four matrices, p the characteristic of GF(q).
DivisorProfile predict_charp(int n, Int q, GraphKind graph, MatrixKind matrix);

} // namespace grinv
