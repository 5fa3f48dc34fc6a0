#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace loewy {

// Dense row-major matrix over a runtime field object F (Gfp or Gfq).
template <class F>
struct Mat {
  using El = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<El> a;

  Mat() = default;
  Mat(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, f.zero()) {}

  El& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const El& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(const F& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<F> C(f, A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const auto& aik = A.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
    }
  return C;
}

template <class F>
Mat<F> mat_pow(const F& f, Mat<F> A, std::uint64_t e) {
  if (A.rows != A.cols) throw std::invalid_argument("mat_pow: square matrix required");
  Mat<F> R = Mat<F>::identity(f, A.rows);
  while (e) {
    if (e & 1) R = mat_mul(f, R, A);
    A = mat_mul(f, A, A);
    e >>= 1;
  }
  return R;
}

// In-place reduction to the (unique) reduced row echelon form; returns rank.
// Rows below the rank are zero.  Pivots are normalized to 1 and their
// columns cleared, so the result is canonical for the row space.
template <class F>
std::size_t rref(const F& f, Mat<F>& M) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
    std::size_t piv = rank;
    while (piv < M.rows && f.is_zero(M.at(piv, col))) ++piv;
    if (piv == M.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
    const auto ipv = f.inv(M.at(rank, col));
    for (std::size_t j = col; j < M.cols; ++j) M.at(rank, j) = f.mul(M.at(rank, j), ipv);
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == rank) continue;
      const auto c = M.at(i, col);
      if (f.is_zero(c)) continue;
      for (std::size_t j = col; j < M.cols; ++j)
        M.at(i, j) = f.sub(M.at(i, j), f.mul(c, M.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

template <class F>
struct RrefKernel {
  std::size_t rank = 0;
  Mat<F> rref;    // canonical echelon form, zero rows dropped
  Mat<F> kernel;  // rows form the canonical basis of the right kernel
};

// Rank, canonical echelon form and canonical kernel basis of M (kernel of
// the map x -> M x, as row vectors of length cols).
template <class F>
RrefKernel<F> rref_kernel(const F& f, Mat<F> M) {
  RrefKernel<F> out;
  out.rank = rref(f, M);
  const std::size_t n = M.cols;
  // pivot columns in row order
  std::vector<std::size_t> pivot_col(out.rank);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t r = 0; r < out.rank; ++r) {
    std::size_t c = 0;
    while (c < n && f.is_zero(M.at(r, c))) ++c;
    pivot_col[r] = c;
    is_pivot[c] = 1;
  }
  out.rref = Mat<F>(f, out.rank, n);
  for (std::size_t r = 0; r < out.rank; ++r)
    for (std::size_t j = 0; j < n; ++j) out.rref.at(r, j) = M.at(r, j);
  const std::size_t nul = n - out.rank;
  out.kernel = Mat<F>(f, nul, n);
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    out.kernel.at(k, c) = f.one();
    for (std::size_t r = 0; r < out.rank; ++r)
      out.kernel.at(k, pivot_col[r]) = f.neg(out.rref.at(r, c));
    ++k;
  }
  return out;
}

// Reduce v against the rows of an rref matrix in place; returns true if v
// reduced to zero (i.e. v was in the row space).
template <class F>
bool reduce_against_rref(const F& f, const Mat<F>& R, std::vector<typename F::Elem>& v) {
  for (std::size_t r = 0; r < R.rows; ++r) {
    std::size_t c = 0;
    while (c < R.cols && f.is_zero(R.at(r, c))) ++c;
    if (c == R.cols) continue;
    const auto coef = v[c];
    if (f.is_zero(coef)) continue;
    for (std::size_t j = c; j < R.cols; ++j) v[j] = f.sub(v[j], f.mul(coef, R.at(r, j)));
  }
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

} // namespace loewy
