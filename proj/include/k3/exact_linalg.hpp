#pragma once

// Exact dense linear algebra on Eigen matrices whose scalars are GMP
// integers or rationals. Nothing here touches floating point.

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <utility>
#include <vector>

#include "k3/scalar.hpp"

namespace k3 {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Counts of positive, negative and zero entries of a congruence-diagonal form.
struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Derived>
Integer bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input.template cast<Integer>();
  Integer sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Inertia of a symmetric matrix by exact rational congruence
/// diagonalization. A zero diagonal pivot with a nonzero off-diagonal entry
/// is repaired by e_i <- e_i + e_j before eliminating.
template <typename Derived>
Inertia congruence_inertia(const Eigen::MatrixBase<Derived>& input) {
  if (input.rows() != input.cols()) throw DomainError("inertia of a non-square matrix");
  const Eigen::Index n = input.rows();
  RatMatrix a = input.template cast<Rational>();
  if (a != a.transpose()) throw DomainError("inertia of a non-symmetric matrix");
  Inertia out;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        out.zeros += static_cast<int>(n - k);
        break;
      }
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      a.col(k).swap(a.col(pivot));
    }
    const Rational d = a(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / d;
      a.row(r) -= f * a.row(k);
      a.col(r) -= f * a.col(k);
    }
    (d > 0 ? out.positives : out.negatives) += 1;
  }
  return out;
}

/// Exact inverse by Gauss-Jordan elimination over Q. DomainError if singular.
template <typename Derived>
RatMatrix exact_inverse(const Eigen::MatrixBase<Derived>& input) {
  if (input.rows() != input.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = input.rows();
  RatMatrix a = input.template cast<Rational>();
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw DomainError("inverse of a singular matrix");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rational d = a(k, k);
    a.row(k) /= d;
    inv.row(k) /= d;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == k || a(r, k) == 0) continue;
      const Rational f = a(r, k);
      a.row(r) -= f * a.row(k);
      inv.row(r) -= f * inv.row(k);
    }
  }
  return inv;
}

/// Diagonal of the Smith normal form (nonnegative, each dividing the next,
/// zeros last). Length is min(rows, cols).
template <typename Derived>
std::vector<Integer> smith_diagonal(const Eigen::MatrixBase<Derived>& input) {
  IntMatrix m = input.template cast<Integer>();
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const Eigen::Index n = std::min(rows, cols);
  std::vector<Integer> diag;
  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (m(i, j) != 0 && (bi < 0 || abs_value(m(i, j)) < abs_value(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) {
        diag.resize(static_cast<std::size_t>(n), Integer(0));
        return diag;
      }
      m.row(t).swap(m.row(bi));
      m.col(t).swap(m.col(bj));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Integer q = m(i, t) / m(t, t);
        m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Integer q = m(t, j) / m(t, t);
        m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      m.row(t) += m.row(bad);
    }
    diag.push_back(abs_value(m(t, t)));
  }
  return diag;
}

}  // namespace k3
