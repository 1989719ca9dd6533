#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "fsc/errors.hpp"
#include "fsc/scalar.hpp"

namespace fsc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class S>
struct RrefResult {
  Mat<S> mat;                  // canonical reduced row echelon form
  std::vector<Index> pivots;   // strictly increasing pivot column indices
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Throw if a GF matrix mixes moduli. Rat matrices are always uniform.
template <class S>
void check_uniform_field(const Mat<S>& m) {
  if constexpr (scalar_traits<S>::is_prime_field) {
    long long p = 0;
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i) {
        long long q = field_char(m(i, j));
        if (q == 0) continue;
        if (p == 0) p = q;
        else if (p != q)
          throw input_error("matrix mixes prime fields");
      }
  }
}

template <class S>
RrefResult<S> rref(Mat<S> m) {
  check_uniform_field(m);
  RrefResult<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

template <class S>
Index rank(const Mat<S>& m) {
  return rref(m).rank();
}

// Canonical kernel basis: one column per free variable, taken in ascending
// column order; the free variable is set to 1 and pivot variables are filled
// from the reduced echelon form.
template <class S>
Mat<S> nullspace(const Mat<S>& m) {
  RrefResult<S> rr = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const Index dim = cols - rr.rank();
  Mat<S> ker(cols, dim);
  ker.setConstant(S(0));
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    ker(f, k) = S(1);
    for (Index i = 0; i < rr.rank(); ++i)
      ker(rr.pivots[static_cast<size_t>(i)], k) = -rr.mat(i, f);
    ++k;
  }
  return ker;
}

// One exact solution of m x = b with all free variables set to zero, or
// nullopt when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (b.rows() != m.rows())
    throw input_error("solve: right-hand side has wrong dimension");
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RrefResult<S> rr = rref(std::move(aug));
  for (Index i = 0; i < rr.rank(); ++i)
    if (rr.pivots[static_cast<size_t>(i)] == m.cols())
      return std::nullopt;
  Vec<S> x(m.cols());
  x.setConstant(S(0));
  for (Index i = 0; i < rr.rank(); ++i)
    x(rr.pivots[static_cast<size_t>(i)]) = rr.mat(i, m.cols());
  return x;
}

}  // namespace fsc
