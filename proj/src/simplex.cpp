#include "snc/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "snc/errors.hpp"

namespace snc {

namespace {

void check_dimensions(const RationalMatrix& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("A has " + std::to_string(a.size()) + " rows but b has " + std::to_string(b.size()));
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw std::invalid_argument("ragged constraint matrix");
  }
}

class Phase1Tableau {
 public:
  Phase1Tableau(const RationalMatrix& a, const RationalVector& b)
      : rows_(a.size()), cols_(a.empty() ? 0 : a.front().size()), sign_(rows_, 1), basis_(rows_) {
    const std::size_t width = cols_ + rows_ + 1;
    table_.assign(rows_, RationalVector(width, Rational(0)));
    reduced_.assign(width, Rational(0));
    // Rows are flipped so the right-hand side is nonnegative and the
    // artificial basis is feasible.
    for (std::size_t i = 0; i < rows_; ++i) {
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < cols_; ++j) table_[i][j] = sign_[i] * a[i][j];
      table_[i][cols_ + i] = 1;
      table_[i][rhs()] = sign_[i] * b[i];
      basis_[i] = cols_ + i;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= table_[i][j];
      reduced_[rhs()] -= table_[i][rhs()];
    }
  }

  void solve() {
    while (auto entering = entering_column()) {
      auto leaving = leaving_row(*entering);
      if (!leaving) throw InternalError("phase-1 objective unbounded");
      pivot(*leaving, *entering);
    }
  }

  Rational objective() const { return -reduced_[rhs()]; }

  RationalVector primal() const {
    RationalVector x(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = table_[i][rhs()];
    }
    return x;
  }

  // Dual of the phase-1 problem is y_i = 1 - d_{art i}; the Farkas vector
  // of the flipped system is -y, mapped back through the row signs.
  RationalVector farkas() const {
    RationalVector p(rows_);
    for (std::size_t i = 0; i < rows_; ++i) p[i] = sign_[i] * (reduced_[cols_ + i] - 1);
    return p;
  }

 private:
  std::size_t rhs() const { return cols_ + rows_; }

  // Bland: lowest-index column with negative reduced cost.
  std::optional<std::size_t> entering_column() const {
    for (std::size_t j = 0; j < rhs(); ++j) {
      if (reduced_[j] < 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio, ties broken by the lowest basic variable index.
  std::optional<std::size_t> leaving_row(std::size_t column) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (table_[i][column] <= 0) continue;
      Rational ratio = table_[i][rhs()] / table_[i][column];
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t column) {
    auto& pivot_row = table_[row];
    const Rational inverse = 1 / pivot_row[column];
    for (auto& entry : pivot_row) {
      if (entry != 0) entry *= inverse;
    }
    auto eliminate = [&](RationalVector& target) {
      if (target[column] == 0) return;
      const Rational factor = target[column];
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
      }
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != row) eliminate(table_[i]);
    }
    eliminate(reduced_);
    basis_[row] = column;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  RationalMatrix table_;
  RationalVector reduced_;
};

}  // namespace

bool is_primal_solution(const RationalMatrix& a, const RationalVector& b, const RationalVector& x) {
  check_dimensions(a, b);
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  if (x.size() != cols) return false;
  for (const auto& xi : x) {
    if (xi < 0) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] != 0 && x[j] != 0) sum += a[i][j] * x[j];
    }
    if (sum != b[i]) return false;
  }
  return true;
}

bool is_farkas_certificate(const RationalMatrix& a, const RationalVector& b, const RationalVector& p) {
  check_dimensions(a, b);
  if (p.size() != a.size()) return false;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t j = 0; j < cols; ++j) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (p[i] != 0 && a[i][j] != 0) sum += p[i] * a[i][j];
    }
    if (sum < 0) return false;
  }
  Rational pb = 0;
  for (std::size_t i = 0; i < b.size(); ++i) pb += p[i] * b[i];
  return pb < 0;
}

FeasibilityResult lp_feasible(const RationalMatrix& a, const RationalVector& b) {
  check_dimensions(a, b);
  Phase1Tableau tableau(a, b);
  tableau.solve();

  if (tableau.objective() == 0) {
    Feasible result{tableau.primal()};
    if (!is_primal_solution(a, b, result.x)) throw InternalError("simplex returned an invalid primal solution");
    return result;
  }
  Infeasible result{tableau.farkas()};
  if (!is_farkas_certificate(a, b, result.p)) throw InternalError("simplex returned an invalid Farkas certificate");
  return result;
}

}  // namespace snc
