#include "drinfeld/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace drinfeld {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMaxCharacteristic || !is_prime(p))
    throw std::invalid_argument("PrimeField: characteristic must be a prime <= " +
                                std::to_string(kMaxCharacteristic) + ", got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_, b = a % p_;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

MatrixFp::MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFp MatrixFp::identity(std::uint32_t p, std::size_t n) {
  MatrixFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void MatrixFp::set_column(std::size_t j, std::span<const std::uint32_t> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = i < v.size() ? v[i] : 0;
}

std::vector<std::uint32_t> MatrixFp::column(std::size_t j) const {
  std::vector<std::uint32_t> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("MatrixFp: shape mismatch");
  MatrixFp out(p_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const std::uint32_t* b = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += a * b[j];
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<std::uint32_t>(acc[j] % p_);
  }
  return out;
}

std::vector<std::uint32_t> MatrixFp::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("MatrixFp::apply: length mismatch");
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::uint32_t* r = data_.data() + i * cols_;
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(r[j]) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// row_i <- row_i - f * row_k over the column range [from, cols)
void eliminate(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t from,
               std::size_t cols, std::uint32_t p) {
  const std::uint64_t nf = p - f;
  for (std::size_t j = from; j < cols; ++j) {
    if (src[j] == 0) continue;
    dst[j] = static_cast<std::uint32_t>((dst[j] + nf * src[j]) % p);
  }
}

}  // namespace

RowEchelon row_reduce(MatrixFp m) {
  const std::uint32_t p = m.modulus();
  const PrimeField fp(p);
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const std::uint32_t inv = fp.inv(m(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = fp.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      eliminate(m.row(i).data(), m.row(r).data(), m(i, c), c, m.cols(), p);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const MatrixFp& m) { return row_reduce(m).rank(); }

std::vector<std::vector<std::uint32_t>> null_space(const MatrixFp& m) {
  const RowEchelon e = row_reduce(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      const std::uint32_t a = e.matrix(i, free);
      v[e.pivot_cols[i]] = a == 0 ? 0 : p - a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve(const MatrixFp& m, std::span<const std::uint32_t> b) {
  return LinearSolver(m).solve(b);
}

LinearSolver::LinearSolver(const MatrixFp& m) : p_(m.modulus()), cols_(m.cols()) {
  MatrixFp aug(p_, m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = 1;
  }
  // Only pivot inside the original block; the identity block records the row operations.
  const PrimeField fp(p_);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && aug(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(piv, j), aug(r, j));
    const std::uint32_t inv = fp.inv(aug(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < aug.cols(); ++j) aug(r, j) = fp.mul(aug(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || aug(i, c) == 0) continue;
      eliminate(aug.row(i).data(), aug.row(r).data(), aug(i, c), c, aug.cols(), p_);
    }
    pivot_cols_.push_back(c);
    ++r;
  }
  reduced_ = std::move(aug);
}

std::optional<std::vector<std::uint32_t>> LinearSolver::solve(std::span<const std::uint32_t> b) const {
  const std::size_t rows = reduced_.rows();
  if (b.size() != rows) throw std::invalid_argument("LinearSolver: right-hand side length mismatch");
  // transformed rhs = E b, where E is the recorded row-operation block
  std::vector<std::uint32_t> eb(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < rows; ++k)
      acc += static_cast<std::uint64_t>(reduced_(i, cols_ + k)) * b[k];
    eb[i] = static_cast<std::uint32_t>(acc % p_);
  }
  for (std::size_t i = pivot_cols_.size(); i < rows; ++i)
    if (eb[i] != 0) return std::nullopt;
  std::vector<std::uint32_t> x(cols_, 0);
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = eb[i];
  return x;
}

}  // namespace drinfeld
