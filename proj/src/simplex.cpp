#include "prevision/simplex.hpp"

#include <vector>

#include "prevision/errors.hpp"

namespace prevision {

namespace {

constexpr long kPivotCap = 1000000;

// Dense tableau: rows x (cols+1), last column is the right-hand side.
// `obj` holds reduced costs with obj[cols] = -(current objective value).
struct Tableau {
  RMatrix T;
  RVector obj;
  std::vector<int> basis;
  int cols = 0;
  long pivots = 0;

  int rows() const { return static_cast<int>(T.rows()); }

  void pivot(int p, int q) {
    if (++pivots > kPivotCap) throw StateError("simplex pivot cap exceeded");
    T.row(p) /= T(p, q);
    for (int r = 0; r < rows(); ++r)
      if (r != p && T(r, q) != 0) T.row(r) -= T(r, q) * T.row(p);
    if (obj[q] != 0) obj -= obj[q] * T.row(p).transpose();
    basis[p] = q;
  }

  // Bland's rule: entering = smallest column with negative reduced cost,
  // leaving = smallest basic index among the ratio-test minimizers.
  LpStatus minimize() {
    for (;;) {
      int q = -1;
      for (int j = 0; j < cols; ++j)
        if (obj[j] < 0) {
          q = j;
          break;
        }
      if (q < 0) return LpStatus::Optimal;
      int p = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (T(i, q) <= 0) continue;
        Rational ratio = T(i, cols) / T(i, q);
        if (p < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[p])) {
          p = i;
          best = ratio;
        }
      }
      if (p < 0) return LpStatus::Unbounded;
      pivot(p, q);
    }
  }
};

void verify_farkas(const RMatrix& A, const RVector& b, const RVector& y) {
  if ((y.transpose() * b)(0) <= 0)
    throw StateError("invalid infeasibility certificate (y^T b <= 0)");
  RVector yA = A.transpose() * y;
  for (int j = 0; j < yA.size(); ++j)
    if (yA[j] > 0)
      throw StateError("invalid infeasibility certificate (y^T A > 0)");
}

LpResult solve(const RMatrix& A, const RVector& b, const RVector& c,
               bool maximize) {
  const int r = static_cast<int>(A.rows());
  const int m = static_cast<int>(A.cols());
  if (b.size() != r || c.size() != m)
    throw InputError("LP dimension mismatch");

  // Phase 1: minimize the artificial sum over [A | I] x = b with b >= 0.
  std::vector<int> sign(r, 1);
  Tableau t;
  t.cols = m + r;
  t.T.resize(r, t.cols + 1);
  t.T.setZero();
  for (int i = 0; i < r; ++i) {
    if (b[i] < 0) sign[i] = -1;
    t.T.block(i, 0, 1, m) = sign[i] * A.row(i);
    t.T(i, m + i) = 1;
    t.T(i, t.cols) = sign[i] * b[i];
  }
  t.basis.resize(r);
  for (int i = 0; i < r; ++i) t.basis[i] = m + i;
  t.obj = RVector::Zero(t.cols + 1);
  for (int j = 0; j <= t.cols; ++j)
    for (int i = 0; i < r; ++i) t.obj[j] -= t.T(i, j);
  for (int i = 0; i < r; ++i) t.obj[m + i] = 0;

  if (t.minimize() != LpStatus::Optimal)
    throw StateError("phase 1 cannot be unbounded");

  LpResult result;
  if (-t.obj[t.cols] > 0) {
    // Simplex multipliers off the artificial reduced costs, flipped back
    // to the original row orientation.
    result.status = LpStatus::Infeasible;
    result.farkas.resize(r);
    for (int i = 0; i < r; ++i)
      result.farkas[i] = sign[i] * (1 - t.obj[m + i]);
    verify_farkas(A, b, result.farkas);
    return result;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot on
  // any structural column are redundant and dropped.
  std::vector<bool> keep(r, true);
  for (int i = 0; i < t.rows(); ++i) {
    if (t.basis[i] < m) continue;
    int q = -1;
    for (int j = 0; j < m; ++j)
      if (t.T(i, j) != 0) {
        q = j;
        break;
      }
    if (q >= 0)
      t.pivot(i, q);
    else
      keep[i] = false;
  }

  // Phase 2 tableau: structural columns only.
  Tableau t2;
  int rows2 = 0;
  for (int i = 0; i < r; ++i)
    if (keep[i]) ++rows2;
  t2.cols = m;
  t2.T.resize(rows2, m + 1);
  t2.basis.resize(rows2);
  for (int i = 0, k = 0; i < r; ++i) {
    if (!keep[i]) continue;
    t2.T.block(k, 0, 1, m) = t.T.block(i, 0, 1, m);
    t2.T(k, m) = t.T(i, t.cols);
    t2.basis[k] = t.basis[i];
    ++k;
  }
  RVector d = maximize ? RVector(-c) : c;
  t2.obj = RVector::Zero(m + 1);
  for (int j = 0; j <= m; ++j) {
    t2.obj[j] = (j < m) ? d[j] : Rational(0);
    for (int i = 0; i < rows2; ++i) t2.obj[j] -= d[t2.basis[i]] * t2.T(i, j);
  }

  LpStatus status = t2.minimize();
  if (status == LpStatus::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x = RVector::Zero(m);
  for (int i = 0; i < rows2; ++i) result.x[t2.basis[i]] = t2.T(i, m);
  result.objective = (c.transpose() * result.x)(0);
  return result;
}

}  // namespace

LpResult lp_maximize(const RMatrix& A, const RVector& b, const RVector& c) {
  return solve(A, b, c, true);
}

LpResult lp_minimize(const RMatrix& A, const RVector& b, const RVector& c) {
  return solve(A, b, c, false);
}

LpResult lp_feasible(const RMatrix& A, const RVector& b) {
  return solve(A, b, RVector::Zero(A.cols()), false);
}

}  // namespace prevision
