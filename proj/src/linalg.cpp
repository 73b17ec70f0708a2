#include "linalg.hpp"

#include <atomic>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace hsg {

namespace {

std::atomic<bool> audit_enabled{false};
std::atomic<std::uint64_t> audit_checks{0};
std::atomic<std::uint64_t> audit_violations{0};

void audit(bool ok) {
  ++audit_checks;
  if (!ok) ++audit_violations;
}

bool is_zero_vector(const Vector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

void set_solve_audit(bool enabled) { audit_enabled = enabled; }
SolveAudit solve_audit() { return SolveAudit{audit_checks.load(), audit_violations.load()}; }
void reset_solve_audit() {
  audit_checks = 0;
  audit_violations = 0;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    fail(ErrorCode::invalid_argument, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "division by zero in F_p");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows, PrimeField field) {
  Matrix m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::dimension_mismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) fail(ErrorCode::dimension_mismatch, "ragged row list");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
  const std::uint64_t p = field_.characteristic();
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* row = row_data(r);
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>(row[c]) * v[c]) % p;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::dimension_mismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::dimension_mismatch, "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::dimension_mismatch, "matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                            std::to_string(b.cols_));
  const std::uint64_t p = a.field_.characteristic();
  Matrix out(a.rows_, b.cols_, a.field_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t x = a(r, k);
      if (x == 0) continue;
      const Residue* brow = b.row_data(k);
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) = static_cast<Residue>(acc[c]);
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::dimension_mismatch, "block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::dimension_mismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void Matrix::add_to_block(std::size_t r0, std::size_t c0, const Matrix& b, Residue scale) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::dimension_mismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c)
      (*this)(r0 + r, c0 + c) = field_.add((*this)(r0 + r, c0 + c), field_.mul(scale, b(r, c)));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.symmetric((*this)(r, c));
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::dimension_mismatch, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(ErrorCode::dimension_mismatch, "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, PrimeField field) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix m(nr, nc, field);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Echelon row_reduce(Matrix m) {
  const PrimeField f = m.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(sel, k), m(pr, k));
    Residue* prow = m.row_data(pr);
    Residue scale = f.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      Residue* row = m.row_data(r);
      Residue factor = row[c];
      if (factor == 0) continue;
      std::uint64_t neg = p - factor;
      for (std::size_t k = c; k < cols; ++k)
        if (prow[k] != 0) row[k] = static_cast<Residue>((row[k] + neg * prow[k]) % p);
    }
    pivots.push_back(c);
    ++pr;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Reduce along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).rank();
  return row_reduce(m).rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  const PrimeField& f = m.field();
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  if (audit_enabled) {
    bool ok = basis.size() + rank(m.transpose()) == cols;
    for (const auto& v : basis) ok = ok && is_zero_vector(m.apply(v));
    audit(ok);
  }
  return basis;
}

std::vector<Vector> left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

std::vector<Vector> image_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<Vector> out;
  out.reserve(e.rank());
  for (auto c : e.pivots) out.push_back(m.column(c));
  return out;
}

std::vector<std::size_t> extending_columns(const Matrix& base, const Matrix& candidates) {
  Echelon e = row_reduce(hstack(base, candidates));
  std::vector<std::size_t> out;
  for (auto c : e.pivots)
    if (c >= base.cols()) out.push_back(c - base.cols());
  return out;
}

std::variant<Solution, Witness> solve_or_witness(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::dimension_mismatch, "right-hand side length mismatch");
  const PrimeField& f = m.field();
  Matrix aug(m.rows(), m.cols() + 1, f);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
    for (const auto& y : left_kernel_basis(m))
      if (dot(y, b, f) != 0) {
        if (audit_enabled) audit(is_zero_vector(m.transpose().apply(y)));
        return Witness{y};
      }
    fail(ErrorCode::internal, "inconsistent system without a left-kernel witness");
  }
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  if (audit_enabled) audit(m.apply(x) == b);
  return Solution{std::move(x)};
}

bool solve_matrix(const Matrix& a, const Matrix& b, Matrix& x) {
  if (a.rows() != b.rows()) fail(ErrorCode::dimension_mismatch, "solve_matrix row mismatch");
  Echelon e = row_reduce(hstack(a, b));
  const std::size_t n = a.cols();
  x = Matrix(n, b.cols(), a.field());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return false;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, n + c);
  }
  if (audit_enabled) audit(a * x == b);
  return true;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::invalid_argument, "inverse of a non-square matrix");
  Matrix x;
  if (rank(m) != m.rows() || !solve_matrix(m, Matrix::identity(m.rows(), m.field()), x))
    fail(ErrorCode::invalid_argument, "inverse of a singular matrix");
  return x;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::invalid_argument, "nilpotency of a non-square matrix");
  Matrix power = m;
  // m^n = 0 iff m^(2^k) = 0 for 2^k >= n.
  for (std::size_t e = 1; e < m.rows(); e *= 2) power = power * power;
  return power.is_zero();
}

Residue trace(const Matrix& m) {
  Residue t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t = m.field().add(t, m(i, i));
  return t;
}

Matrix dual_pairing(std::size_t n, PrimeField field) {
  // <e_i^*, e_j> = delta_ij by definition of the dual basis.
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix dual_map(const Matrix& f) { return f.transpose(); }

Residue dot(const Vector& a, const Vector& b, const PrimeField& f) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "dot product length mismatch");
  std::uint64_t acc = 0;
  const std::uint64_t p = f.characteristic();
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  return static_cast<Residue>(acc);
}

}  // namespace hsg
