#include "knotmeta/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotmeta {

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntMat needs positive dimensions");
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix: row " + std::to_string(r));
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& row : rows) {
    auto& back = v.emplace_back();
    for (long x : row) back.emplace_back(x);
  }
  return from_rows(v);
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::vector<Int>> IntMat::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(e_.begin() + static_cast<long>(r * cols_),
                                                          e_.begin() + static_cast<long>((r + 1) * cols_));
  return out;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in +");
  IntMat out = a;
  for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] += b.e_[k];
  return out;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in -");
  IntMat out = a;
  for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] -= b.e_[k];
  return out;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  IntMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Int det(const IntMat& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// --- Smith normal form -----------------------------------------------------

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_dst -= q * row_src
void row_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

// col_dst -= q * col_src
void col_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SnfResult smith_normal_form(const IntMat& w) {
  if (!w.is_square()) throw std::invalid_argument("smith_normal_form: matrix is not square");
  const std::size_t n = w.rows();
  SnfResult res{IntMat::identity(n), w, IntMat::identity(n)};
  IntMat& d = res.D;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of the trailing block.
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(d(i, j)) != 0 && (pr == n || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == n) return res;  // trailing block is zero
      swap_rows(d, t, pr);
      swap_rows(res.U, t, pr);
      swap_cols(d, t, pc);
      swap_cols(res.Vt, t, pc);

      bool clean = true;
      Int q;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(res.U, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(res.Vt, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == n) break;
      row_axpy(d, t, bad, Int(-1));
      row_axpy(res.U, t, bad, Int(-1));
    }
    if (sgn(d(t, t)) < 0) {
      row_axpy(d, t, t, Int(2));  // negate row t
      row_axpy(res.U, t, t, Int(2));
    }
  }
  return res;
}

// --- rotation vectors and torsion ----------------------------------------------

RotationVector::RotationVector(std::vector<Rat> thetas) : t_(std::move(thetas)) {
  for (auto& x : t_) x = frac_part(x);
}

bool RotationVector::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RotationVector RotationVector::negated() const {
  std::vector<Rat> out;
  out.reserve(t_.size());
  for (const auto& x : t_) out.push_back(-x);
  return RotationVector(std::move(out));
}

Int RotationVector::order() const {
  Int acc = 1;
  for (const auto& x : t_) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_den_mpz_t());
  return acc;
}

std::strong_ordering operator<=>(const RotationVector& a, const RotationVector& b) {
  const std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.t_[i], b.t_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.t_.size() <=> b.t_.size();
}

std::string RotationVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < t_.size(); ++i) s += (i ? ", " : "") + t_[i].get_str();
  return s + ")";
}

std::vector<RotationVector> torsion_solutions(const IntMat& w) {
  if (!w.is_square()) throw std::invalid_argument("torsion_solutions: matrix is not square");
  const SnfResult snf = smith_normal_form(w);
  const std::vector<Int> d = snf.diagonal();
  const std::size_t n = d.size();
  for (const auto& di : d)
    if (sgn(di) == 0) throw MathError("torsion_solutions: det W = 0, the solution set is infinite");

  // theta = Vt * (k_1/d_1, ..., k_n/d_n) mod 1 over the mixed-radix grid.
  std::vector<RotationVector> out;
  std::vector<Int> k(n, 0);
  for (;;) {
    std::vector<Rat> theta(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(k[j]) == 0) continue;
      Rat psi(k[j], d[j]);
      psi.canonicalize();
      for (std::size_t i = 0; i < n; ++i) theta[i] += Rat(snf.Vt(i, j)) * psi;
    }
    for (auto& x : theta) x.canonicalize();
    out.emplace_back(std::move(theta));

    std::size_t pos = 0;
    while (pos < n) {
      ++k[pos];
      if (k[pos] < d[pos]) break;
      k[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long first_nonintegral_row(const IntMat& w, const RotationVector& theta) {
  if (theta.size() != w.cols()) throw std::invalid_argument("rotation vector length does not match matrix");
  for (std::size_t i = 0; i < w.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < w.cols(); ++j) acc += Rat(w(i, j)) * theta[j];
    acc.canonicalize();
    if (acc.get_den() != 1) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace knotmeta
