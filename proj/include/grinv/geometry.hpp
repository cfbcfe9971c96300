#pragma once

#include "grinv/gf.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace grinv {

enum class GraphKind { Grassmann, SkewLines };
enum class MatrixKind { Adjacency, Laplacian };

std::string_view to_string(GraphKind g);
std::string_view to_string(MatrixKind m);
/// Accepts "grassmann" / "skew" (and "skewlines", "skew-lines").
GraphKind parse_graph_kind(std::string_view s);
/// Accepts "adjacency" / "laplacian".
MatrixKind parse_matrix_kind(std::string_view s);

/// Dense integer matrix templated on the entry type; IntegerMatrix is the
/// exact form every builder returns.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = DenseMatrix<std::int64_t>;

/// A k-subspace of GF(q)^n given by its reduced row echelon basis, which is
/// unique per subspace.
struct SubspaceBasis {
  int k = 0;
  int n = 0;
  int q = 0;
  std::vector<int> pivots;       // k strictly increasing pivot columns
  std::vector<FieldScalar> rows; // k*n, row-major

  FieldScalar at(int i, int j) const { return rows[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const SubspaceBasis &, const SubspaceBasis &) = default;
};

/// All k-subspaces in canonical order: pivot column sets lexicographically,
/// then the free entries (row-major) lexicographically by element index.
std::vector<SubspaceBasis> enumerate_subspaces(int n, const Field &field, int k);

/// Rank over GF(q) of a row-major r x c matrix.
int rank_over(const Field &field, std::vector<FieldScalar> entries, int rows, int cols);

/// dim(U ∩ W) = dim U + dim W - rank[U; W]. Throws MismatchedAmbient.
int intersection_dim(const SubspaceBasis &u, const SubspaceBasis &w, const Field &field);

/// Adjacency or Laplacian matrix of the Grassmann / skew-lines graph on the
/// 2-subspaces of GF(q)^n, indexed in enumerate_subspaces order. n >= 4.
IntegerMatrix build_matrix(int n, const Field &field, GraphKind graph, MatrixKind matrix);

/// 0/1 matrix between r-subspaces (rows) and s-subspaces (columns); entry 1
/// iff the two subspaces meet trivially.
IntegerMatrix build_cross_incidence(int n, const Field &field, int r, int s);

/// Plain-text dense dump: "rows cols" then one space-separated row per line.
void write_matrix(std::ostream &os, const IntegerMatrix &m);
IntegerMatrix read_matrix(std::istream &is);

} // namespace grinv
