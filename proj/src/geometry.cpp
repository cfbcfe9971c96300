#include "grinv/geometry.hpp"

#include "grinv/errors.hpp"
#include "grinv/qarith.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace grinv {

std::string_view to_string(GraphKind g) {
  return g == GraphKind::Grassmann ? "grassmann" : "skew";
}

std::string_view to_string(MatrixKind m) {
  return m == MatrixKind::Adjacency ? "adjacency" : "laplacian";
}

GraphKind parse_graph_kind(std::string_view s) {
  if (s == "grassmann")
    return GraphKind::Grassmann;
  if (s == "skew" || s == "skewlines" || s == "skew-lines")
    return GraphKind::SkewLines;
  throw DomainError("unknown graph kind '" + std::string(s) + "'");
}

MatrixKind parse_matrix_kind(std::string_view s) {
  if (s == "adjacency")
    return MatrixKind::Adjacency;
  if (s == "laplacian")
    return MatrixKind::Laplacian;
  throw DomainError("unknown matrix kind '" + std::string(s) + "'");
}

namespace {

// Advance `c` to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<int> &c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Odometer over [0, base)^len with the first digit most significant.
bool next_digits(std::vector<int> &digits, int base) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < base)
      return true;
    digits[pos] = 0;
  }
  return false;
}

// In-place Gaussian elimination; `m` is row-major rows x cols.
int rank_in_place(const Field &field, FieldScalar *m, int rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * cols + col].code != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j)
        std::swap(m[pivot * cols + j], m[rank * cols + j]);
    const FieldScalar inv = field.inv(m[rank * cols + col]);
    for (int r = rank + 1; r < rows; ++r) {
      const FieldScalar x = m[r * cols + col];
      if (x.code == 0)
        continue;
      const FieldScalar factor = field.mul(x, inv);
      for (int j = col; j < cols; ++j)
        m[r * cols + j] = field.sub(m[r * cols + j], field.mul(factor, m[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

void check_same_ambient(const SubspaceBasis &u, const SubspaceBasis &w, const Field &field) {
  if (u.n != w.n || u.q != w.q || u.q != field.q())
    throw MismatchedAmbient("subspaces live in different ambient spaces");
}

int intersection_dim_scratch(const SubspaceBasis &u, const SubspaceBasis &w, const Field &field,
                             std::vector<FieldScalar> &scratch) {
  scratch.assign(u.rows.begin(), u.rows.end());
  scratch.insert(scratch.end(), w.rows.begin(), w.rows.end());
  return u.k + w.k - rank_in_place(field, scratch.data(), u.k + w.k, u.n);
}

} // namespace

std::vector<SubspaceBasis> enumerate_subspaces(int n, const Field &field, int k) {
  if (n < 1 || k < 1 || k > n)
    throw DimensionError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  const auto count = qbinom(n, k, field.q());
  std::vector<SubspaceBasis> out;
  out.reserve(static_cast<std::size_t>(count));

  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i)
    pivots[i] = i;
  do {
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots)
      is_pivot[c] = true;
    // Free positions, row-major.
    std::vector<std::size_t> free_slots;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j])
          free_slots.push_back(static_cast<std::size_t>(i) * n + j);

    SubspaceBasis base{k, n, field.q(), pivots, std::vector<FieldScalar>(static_cast<std::size_t>(k) * n)};
    for (int i = 0; i < k; ++i)
      base.rows[static_cast<std::size_t>(i) * n + pivots[i]] = field.one();

    std::vector<int> digits(free_slots.size(), 0);
    do {
      SubspaceBasis s = base;
      for (std::size_t f = 0; f < free_slots.size(); ++f)
        s.rows[free_slots[f]] = field.element(digits[f]);
      out.push_back(std::move(s));
    } while (next_digits(digits, field.q()));
  } while (next_combination(pivots, n));
  return out;
}

int rank_over(const Field &field, std::vector<FieldScalar> entries, int rows, int cols) {
  if (static_cast<std::size_t>(rows) * cols != entries.size())
    throw DimensionError("entry count does not match shape");
  return rank_in_place(field, entries.data(), rows, cols);
}

int intersection_dim(const SubspaceBasis &u, const SubspaceBasis &w, const Field &field) {
  check_same_ambient(u, w, field);
  std::vector<FieldScalar> scratch;
  return intersection_dim_scratch(u, w, field, scratch);
}

IntegerMatrix build_matrix(int n, const Field &field, GraphKind graph, MatrixKind matrix) {
  if (n < 4)
    throw DimensionError("graphs on lines need n >= 4, got " + std::to_string(n));
  const auto lines = enumerate_subspaces(n, field, 2);
  const auto v = static_cast<Eigen::Index>(lines.size());
  const int adjacent_dim = graph == GraphKind::SkewLines ? 0 : 1;

  IntegerMatrix a = IntegerMatrix::Zero(v, v);
  std::vector<FieldScalar> scratch;
  for (Eigen::Index i = 0; i < v; ++i)
    for (Eigen::Index j = i + 1; j < v; ++j)
      if (intersection_dim_scratch(lines[i], lines[j], field, scratch) == adjacent_dim)
        a(i, j) = a(j, i) = 1;

  if (matrix == MatrixKind::Adjacency)
    return a;
  const IntegerMatrix degrees = a.rowwise().sum();
  IntegerMatrix l = -a;
  l.diagonal() += degrees.col(0);
  return l;
}

IntegerMatrix build_cross_incidence(int n, const Field &field, int r, int s) {
  if (r < 1 || s < 1 || r > n - 1 || s > n - 1)
    throw DimensionError("cross incidence needs 1 <= r, s <= n-1");
  const auto left = enumerate_subspaces(n, field, r);
  const auto right = r == s ? left : enumerate_subspaces(n, field, s);
  IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(left.size()),
                                        static_cast<Eigen::Index>(right.size()));
  std::vector<FieldScalar> scratch;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (intersection_dim_scratch(left[i], right[j], field, scratch) == 0)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1;
  return m;
}

void write_matrix(std::ostream &os, const IntegerMatrix &m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

IntegerMatrix read_matrix(std::istream &is) {
  Eigen::Index rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw DomainError("malformed matrix header");
  IntegerMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!(is >> m(i, j)))
        throw DomainError("matrix dump truncated");
  return m;
}

} // namespace grinv
