#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hsg {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

class PrimeField {
 public:
  static constexpr std::uint32_t default_characteristic = 101;

  /// Throws invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = default_characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue inv(Residue a) const;
  /// Representative in (-p/2, p/2].
  std::int64_t symmetric(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

class Matrix {
 public:
  Matrix() : Matrix(0, 0, PrimeField{}) {}
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  /// Builds a matrix whose columns are the given vectors; each must have `rows` entries.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, PrimeField field);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Residue* row_data(std::size_t r) const noexcept { return data_.data() + r * cols_; }
  Residue* row_data(std::size_t r) noexcept { return data_.data() + r * cols_; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix scaled(Residue s) const;
  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_to_block(std::size_t r0, std::size_t c0, const Matrix& b, Residue scale = 1);

  const std::vector<Residue>& raw() const noexcept { return data_; }

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<Residue> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks, PrimeField field);

struct Echelon {
  Matrix reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space; exactly cols - rank vectors.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Basis of the left null space (row vectors y with y m = 0).
std::vector<Vector> left_kernel_basis(const Matrix& m);
/// Basis of the column space, chosen among the columns of m.
std::vector<Vector> image_basis(const Matrix& m);
/// Indices of columns of `candidates` that greedily extend span(columns of `base`) to span(base | candidates).
std::vector<std::size_t> extending_columns(const Matrix& base, const Matrix& candidates);

struct Solution {
  Vector x;
};
struct Witness {
  Vector y;  // y m = 0 and y b != 0
};

/// Either a solution of m x = b or a left null vector certifying infeasibility.
std::variant<Solution, Witness> solve_or_witness(const Matrix& m, const Vector& b);

/// Solves a X = b for a matrix right-hand side; returns false when no solution exists.
bool solve_matrix(const Matrix& a, const Matrix& b, Matrix& x);

/// Throws invalid_argument on a singular or non-square input.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
bool is_nilpotent(const Matrix& m);
Residue trace(const Matrix& m);

/// Evaluation pairing between the dual basis of k^n and the standard basis:
/// entry (i, j) is <e_i^*, e_j>.
Matrix dual_pairing(std::size_t n, PrimeField field);
/// Matrix of the transpose map D W -> D V in dual bases, for f : V -> W.
Matrix dual_map(const Matrix& f);

Residue dot(const Vector& a, const Vector& b, const PrimeField& f);

/// Opt-in self-check of every kernel and solve: kernel vectors are annihilated and number
/// cols - rank (rank recomputed on the transpose), solutions and witnesses are verified.
struct SolveAudit {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

void set_solve_audit(bool enabled);
SolveAudit solve_audit();
void reset_solve_audit();

}  // namespace hsg
