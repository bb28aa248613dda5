#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace drinfeld {

/// Largest characteristic accepted anywhere in the library. Products of two
/// reduced residues then fit in 32 bits, and up to 2^32 of them can be
/// accumulated in a 64-bit word before reduction.
inline constexpr std::uint32_t kMaxCharacteristic = 65521;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ. Values are always kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over Z/pZ.
class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols);

  static MatrixFp identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void set_column(std::size_t j, std::span<const std::uint32_t> v);
  std::vector<std::uint32_t> column(std::size_t j) const;

  MatrixFp operator*(const MatrixFp& rhs) const;
  /// Computes M v.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;
  MatrixFp transpose() const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  MatrixFp matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

RowEchelon row_reduce(MatrixFp m);
std::size_t rank(const MatrixFp& m);

/// Basis of {x : M x = 0}, one vector per free column, in increasing order of
/// the free column index.
std::vector<std::vector<std::uint32_t>> null_space(const MatrixFp& m);

/// Some solution of M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<std::uint32_t>> solve(const MatrixFp& m, std::span<const std::uint32_t> b);

/// Precomputed solver for repeated right-hand sides against one matrix.
class LinearSolver {
 public:
  explicit LinearSolver(const MatrixFp& m);
  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  std::optional<std::vector<std::uint32_t>> solve(std::span<const std::uint32_t> b) const;

 private:
  std::uint32_t p_;
  std::size_t cols_;
  MatrixFp reduced_;     // RREF of [M | I]
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace drinfeld
