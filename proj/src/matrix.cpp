#include "omegalab/matrix.hpp"

#include <algorithm>
#include <utility>

namespace omegalab {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

EchelonForm reduced_row_echelon(const RationalMatrix& input) {
  RationalMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  EchelonForm out;
  out.reduced = RationalMatrix(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.reduced(i, j) = a(i, j);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }
std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RationalMatrix nullspace(const RationalMatrix& m) {
  const auto ech = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(0, cols);
  return reduced_row_echelon(RationalMatrix::from_rows(basis, cols)).reduced;
}

bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto ech = reduced_row_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
  return true;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  std::vector<Integer> divisors;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
            found = true;
          }
      return found;
    };
    std::size_t pr = t, pc = t;
    if (!find_pivot(pr, pc)) break;

    while (true) {
      swap_rows(a, t, pr);
      swap_rows(left, t, pr);
      swap_cols(a, t, pc);
      swap_cols(right, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = floor_div(a(i, t), a(t, t));
        add_row(a, i, t, q);
        add_row(left, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = floor_div(a(t, j), a(t, t));
        add_col(a, j, t, q);
        add_col(right, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) {
        // divisibility: fold any offending row into row t and go again
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a(i, j) % a(t, t) != 0) {
              add_row(a, t, i, -1);
              add_row(left, t, i, -1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      pr = t;
      pc = t;
      find_pivot(pr, pc);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
    divisors.push_back(a(t, t));
  }
  return SmithForm{std::move(divisors), std::move(left), std::move(right)};
}

IntMatrix hermite_row_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      swap_rows(a, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        add_row(a, i, r, floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) add_row(a, i, r, floor_div(a(i, c), a(r, c)));
    pivots.push_back(c);
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const std::size_t rk = snf.divisors.size();
  const std::size_t cols = m.cols();
  IntMatrix k(cols - rk, cols);
  for (std::size_t i = rk; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) k(i - rk, j) = snf.right(j, i);
  return k;
}

}  // namespace omegalab
