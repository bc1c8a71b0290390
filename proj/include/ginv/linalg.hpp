#pragma once

#include "ginv/error.hpp"
#include "ginv/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ginv::linalg {

// Field policies.  All elimination code is shared between the rationals and
// prime fields by parameterizing on one of these.  Arithmetic is exact; the
// library contains no floating point.

struct RationalField {
  using Scalar = Rational;
  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar neg(const Scalar& a) const { return -a; }
  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
};

// GF(p) with residues stored in [0, p).  p must be prime and at most 2^31 so
// that products fit in 64 bits.
struct PrimeField {
  std::uint64_t p;
  using Scalar = std::uint64_t;
  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p - b) % p; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar neg(Scalar a) const { return (p - a) % p; }
  bool is_zero(Scalar a) const { return a == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }

  Scalar inv(Scalar a) const {
    // extended Euclid; a must be nonzero mod p
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
    while (new_r != 0) {
      long long q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw GinvError(Err::not_a_unit, "no inverse mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<Scalar>(t);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
};

template <class F>
struct Mat {
  using Scalar = typename F::Scalar;
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> e;  // row-major

  Mat() = default;
  Mat(int r, int c, Scalar fill) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, fill) {}

  Scalar& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

template <class F>
Mat<F> zeros(const F& f, int r, int c) {
  return Mat<F>(r, c, f.zero());
}

template <class F>
Mat<F> identity(const F& f, int n) {
  Mat<F> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
bool eq(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (!f.eq(a.e[i], b.e[i])) return false;
  return true;
}

template <class F>
bool is_zero(const F& f, const Mat<F>& a) {
  for (const auto& x : a.e)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw GinvError(Err::shape_mismatch, "matrix add");
  Mat<F> r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = f.add(a.e[i], b.e[i]);
  return r;
}

template <class F>
Mat<F> sub(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw GinvError(Err::shape_mismatch, "matrix sub");
  Mat<F> r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = f.sub(a.e[i], b.e[i]);
  return r;
}

template <class F>
Mat<F> neg(const F& f, const Mat<F>& a) {
  Mat<F> r = a;
  for (auto& x : r.e) x = f.neg(x);
  return r;
}

template <class F>
Mat<F> mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols != b.rows) throw GinvError(Err::shape_mismatch, "matrix mul");
  Mat<F> r(a.rows, b.cols, f.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  Mat<F> r;
  r.rows = a.cols;
  r.cols = a.rows;
  r.e.resize(a.e.size());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

template <class F>
struct RrefResult {
  Mat<F> m;
  std::vector<int> pivot_cols;  // ascending; size is the rank
};

// Deterministic reduced row echelon form: pivots are chosen as the first
// nonzero entry in column order, scaled to 1, and cleared above and below.
template <class F>
RrefResult<F> rref(const F& f, Mat<F> m) {
  RrefResult<F> out;
  int pr = 0;  // next pivot row
  for (int c = 0; c < m.cols && pr < m.rows; ++c) {
    int sel = -1;
    for (int r = pr; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, c))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    const auto piv = m.at(pr, c);
    for (int j = c; j < m.cols; ++j) m.at(pr, j) = f.div(m.at(pr, j), piv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == pr || f.is_zero(m.at(r, c))) continue;
      const auto factor = m.at(r, c);
      for (int j = c; j < m.cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(pr, j)));
    }
    out.pivot_cols.push_back(c);
    ++pr;
  }
  out.m = std::move(m);
  return out;
}

template <class F>
int rank(const F& f, const Mat<F>& m) {
  return static_cast<int>(rref(f, m).pivot_cols.size());
}

// Canonical solution of a*x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero, so the result is deterministic.
template <class F>
std::optional<Mat<F>> solve_right(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows) throw GinvError(Err::shape_mismatch, "solve_right");
  Mat<F> aug(a.rows, a.cols + b.cols, f.zero());
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
  }
  auto r = rref(f, std::move(aug));
  for (int c : r.pivot_cols)
    if (c >= a.cols) return std::nullopt;
  Mat<F> x(a.cols, b.cols, f.zero());
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    int pc = r.pivot_cols[k];
    for (int j = 0; j < b.cols; ++j) x.at(pc, j) = r.m.at(static_cast<int>(k), a.cols + j);
  }
  return x;
}

// Canonical solution of x*a = b via transposition.
template <class F>
std::optional<Mat<F>> solve_left(const F& f, const Mat<F>& a, const Mat<F>& b) {
  auto xt = solve_right(f, transpose(a), transpose(b));
  if (!xt) return std::nullopt;
  return transpose(*xt);
}

// Two-sided inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Mat<F>> invert_unit(const F& f, const Mat<F>& m) {
  if (m.rows != m.cols) throw GinvError(Err::shape_mismatch, "invert_unit");
  const int n = m.rows;
  Mat<F> aug(n, 2 * n, f.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto r = rref(f, std::move(aug));
  if (static_cast<int>(r.pivot_cols.size()) < n || r.pivot_cols[n - 1] != n - 1)
    return std::nullopt;
  Mat<F> inv(n, n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

// Canonical inner inverse g with a*g*a = a, for any square a, via the rank
// factorization a = C*R taken from the reduced echelon form (C = pivot
// columns of a, R = nonzero rows).  The result also satisfies g*a*g = g.
template <class F>
Mat<F> one_inverse(const F& f, const Mat<F>& a) {
  if (a.rows != a.cols) throw GinvError(Err::shape_mismatch, "one_inverse");
  const int n = a.rows;
  auto rr = rref(f, a);
  const int rk = static_cast<int>(rr.pivot_cols.size());
  if (rk == 0) return zeros(f, n, n);
  Mat<F> c(n, rk, f.zero());
  for (int k = 0; k < rk; ++k)
    for (int i = 0; i < n; ++i) c.at(i, k) = a.at(i, rr.pivot_cols[k]);
  Mat<F> rowpart(rk, n, f.zero());
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < n; ++j) rowpart.at(i, j) = rr.m.at(i, j);
  // rowpart has full row rank and c full column rank, so both solves succeed.
  auto x = solve_right(f, rowpart, identity(f, rk));
  auto y = solve_left(f, c, identity(f, rk));
  if (!x || !y) throw GinvError(Err::internal_error, "rank factorization solve failed");
  return mul(f, *x, *y);
}

}  // namespace ginv::linalg
