#include "hcluster/integer_matrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "hcluster/checked.hpp"

namespace hcluster {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(a(i, k), b(k, j)));
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c));
    }
    out += "]\n";
  }
  return out;
}

std::int64_t determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::int64_t num =
            checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j)));
        a(i, j) = checked::div_exact(num, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

IntMatrix unimodular_inverse(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = input.rows();
  IntMatrix a = input;
  IntMatrix inv = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t r, std::size_t s) {
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(r, c), a(s, c));
      std::swap(inv(r, c), inv(s, c));
    }
  };
  // row[r] -= q * row[s]
  auto axpy = [&](std::size_t r, std::size_t s, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = checked::sub(a(r, c), checked::mul(q, a(s, c)));
      inv(r, c) = checked::sub(inv(r, c), checked::mul(q, inv(s, c)));
    }
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Euclid on column k (rows k..n-1) until a single nonzero entry remains.
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = k; r < n; ++r) {
        if (a(r, k) != 0 && (best == n || std::llabs(a(r, k)) < std::llabs(a(best, k)))) best = r;
      }
      if (best == n) throw std::domain_error("matrix is singular");
      if (best != k) swap_rows(k, best);
      bool done = true;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a(r, k) == 0) continue;
        axpy(r, k, a(r, k) / a(k, k));
        if (a(r, k) != 0) done = false;
      }
      if (done) break;
    }
    if (a(k, k) != 1 && a(k, k) != -1) throw std::domain_error("matrix is not unimodular");
    if (a(k, k) == -1) {
      for (std::size_t c = 0; c < n; ++c) {
        a(k, c) = checked::neg(a(k, c));
        inv(k, c) = checked::neg(inv(k, c));
      }
    }
  }
  // Back substitution on the unit upper-triangular matrix.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t r = 0; r < k; ++r) axpy(r, k, a(r, k));
  }
  return inv;
}

}  // namespace hcluster
