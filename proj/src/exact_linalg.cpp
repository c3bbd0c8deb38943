#include "abel/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace abel {
namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<int> pivot_cols;  // pivot column of row i, for i < rank
  int cols = 0;                 // coefficient columns (excludes augmented one)
};

// Scale each row (and optional rhs entry) by the lcm of its denominators.
std::vector<IntRow> integerize(const ExactMatrix& m, const ExactVector* rhs) {
  const auto width = static_cast<std::size_t>(m.cols()) + (rhs != nullptr ? 1 : 0);
  std::vector<IntRow> out(static_cast<std::size_t>(m.rows()), IntRow(width));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    if (rhs != nullptr) l = lcm(l, (*rhs)(i).get_den());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    if (rhs != nullptr) out[static_cast<std::size_t>(i)].back() = (*rhs)(i).get_num() * (l / (*rhs)(i).get_den());
  }
  return out;
}

// Fraction-free forward elimination over the first `cols` columns. Pivot is
// the entry of largest magnitude in the column.
Echelon bareiss(std::vector<IntRow> rows, int cols) {
  Echelon e;
  e.cols = cols;
  const int nrows = static_cast<int>(rows.size());
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int best = -1;
    for (int i = r; i < nrows; ++i) {
      const auto& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (sgn(v) == 0) continue;
      if (best < 0 || mpz_cmpabs(v.get_mpz_t(), rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)].get_mpz_t()) > 0) best = i;
    }
    if (best < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(best)]);
    const IntRow& piv = rows[static_cast<std::size_t>(r)];
    const mpz_class& p = piv[static_cast<std::size_t>(c)];
    for (int i = r + 1; i < nrows; ++i) {
      IntRow& row = rows[static_cast<std::size_t>(i)];
      const mpz_class f = row[static_cast<std::size_t>(c)];
      for (std::size_t j = static_cast<std::size_t>(c) + 1; j < width; ++j) {
        mpz_class v = p * row[j] - f * piv[j];
        if (mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()) == 0) {
          throw std::logic_error("bareiss: non-exact division");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[j] = std::move(v);
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

// Back substitution: x[free] given, solve pivot rows for the pivot variables.
ExactVector back_substitute(const Echelon& e, ExactVector x, bool augmented) {
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (int i = rank - 1; i >= 0; --i) {
    const IntRow& row = e.rows[static_cast<std::size_t>(i)];
    const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
    Rational acc = augmented ? Rational(row.back()) : Rational(0);
    for (int j = pc + 1; j < e.cols; ++j) {
      if (sgn(row[static_cast<std::size_t>(j)]) != 0) acc -= Rational(row[static_cast<std::size_t>(j)]) * x(j);
    }
    x(pc) = acc / Rational(row[static_cast<std::size_t>(pc)]);
    x(pc).canonicalize();
  }
  return x;
}

ExactVector make_primitive(ExactVector v) {
  mpz_class den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v(i).get_den());
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) *= den;
    v(i).canonicalize();
    g = gcd(g, v(i).get_num());
  }
  int sign = 0;
  for (Eigen::Index i = 0; i < v.size() && sign == 0; ++i) sign = sgn(v(i));
  if (g == 0) return v;
  if (sign < 0) g = -g;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) /= Rational(g);
    v(i).canonicalize();
  }
  return v;
}

}  // namespace

int exact_rank(const ExactMatrix& m) {
  return static_cast<int>(bareiss(integerize(m, nullptr), static_cast<int>(m.cols())).pivot_cols.size());
}

std::vector<ExactVector> exact_nullspace(const ExactMatrix& m) {
  const int cols = static_cast<int>(m.cols());
  const Echelon e = bareiss(integerize(m, nullptr), cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;

  std::vector<ExactVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    ExactVector x = ExactVector::Constant(cols, Rational(0));
    x(f) = 1;
    basis.push_back(make_primitive(back_substitute(e, std::move(x), false)));
  }
  return basis;
}

std::optional<ExactVector> exact_solve(const ExactMatrix& m, const ExactVector& rhs) {
  const int cols = static_cast<int>(m.cols());
  const Echelon e = bareiss(integerize(m, &rhs), cols);
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (std::size_t i = static_cast<std::size_t>(rank); i < e.rows.size(); ++i) {
    if (sgn(e.rows[i].back()) != 0) return std::nullopt;
  }
  return back_substitute(e, ExactVector::Constant(cols, Rational(0)), true);
}

}  // namespace abel
