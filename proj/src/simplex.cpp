#include "ptsym/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptsym::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-11;
constexpr int kDegenerateLimit = 50;

class Tableau {
 public:
  // rows: m equality rows of M y = c, columns: n structural + m artificial.
  Tableau(const Eigen::MatrixXd& m, const Eigen::VectorXd& c)
      : rows_(static_cast<int>(m.rows())),
        structural_(static_cast<int>(m.cols())),
        tab_(Eigen::MatrixXd::Zero(m.rows(), m.cols() + m.rows() + 1)),
        sign_(m.rows()),
        basic_(m.rows()) {
    for (int i = 0; i < rows_; ++i) {
      sign_(i) = c(i) >= 0.0 ? 1.0 : -1.0;
      tab_.row(i).head(structural_) = sign_(i) * m.row(i);
      tab_(i, structural_ + i) = 1.0;
      tab_(i, rhs()) = sign_(i) * c(i);
      basic_[i] = structural_ + i;
    }
  }

  int rhs() const { return structural_ + rows_; }
  bool artificial(int j) const { return j >= structural_; }

  // Minimizes cost.y; returns false when unbounded.
  enum class Outcome { Optimal, Unbounded, Limit };
  Outcome run(const Eigen::VectorXd& cost, bool allow_artificial, int& pivots, int max_pivots) {
    const int cols = structural_ + rows_;
    Eigen::VectorXd reduced(cols);
    int degenerate = 0;
    for (;;) {
      // reduced costs r_j = cost_j - cost_B . column_j
      Eigen::VectorXd cb(rows_);
      for (int i = 0; i < rows_; ++i) cb(i) = cost(basic_[i]);
      reduced = cost.head(cols) - tab_.leftCols(cols).transpose() * cb;
      const double scale = 1.0 + cost.head(cols).cwiseAbs().maxCoeff();
      // Dantzig pricing; Bland's rule once degenerate pivots pile up, which
      // rules out cycling.
      const bool bland = degenerate > kDegenerateLimit;
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (!allow_artificial && artificial(j)) continue;
        if (reduced(j) < -kCostTol * scale && !is_basic(j)) {
          if (enter < 0 || reduced(j) < reduced(enter)) enter = j;
          if (bland) break;
        }
      }
      if (enter < 0) return Outcome::Optimal;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < rows_; ++i) {
        const double a = tab_(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = tab_(i, rhs()) / a;
        if (leave < 0 || ratio < best - 1e-14 ||
            (ratio <= best + 1e-14 && basic_[i] < basic_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Outcome::Unbounded;
      if (++pivots > max_pivots) return Outcome::Limit;
      if (best <= 1e-12) ++degenerate;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    tab_.row(row) /= tab_(row, col);
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const double f = tab_(i, col);
      if (f != 0.0) tab_.row(i) -= f * tab_.row(row);
    }
    basic_[row] = col;
  }

  bool is_basic(int j) const { return std::find(basic_.begin(), basic_.end(), j) != basic_.end(); }

  // Pivots zero-level artificials out of the basis where possible.
  void drive_out_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (!artificial(basic_[i])) continue;
      int best = -1;
      for (int j = 0; j < structural_; ++j)
        if (!is_basic(j) && std::abs(tab_(i, j)) > kPivotTol &&
            (best < 0 || std::abs(tab_(i, j)) > std::abs(tab_(i, best))))
          best = j;
      if (best >= 0) pivot(i, best);
    }
  }

  double artificial_sum() const {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i)
      if (artificial(basic_[i])) s += tab_(i, rhs());
    return s;
  }

  // Simplex multipliers pi = c_B B^{-1}, with B^{-1} = (artificial block) S.
  Eigen::VectorXd multipliers(const Eigen::VectorXd& cost) const {
    Eigen::VectorXd cb(rows_);
    for (int i = 0; i < rows_; ++i) cb(i) = cost(basic_[i]);
    Eigen::VectorXd pi = tab_.middleCols(structural_, rows_).transpose() * cb;
    return pi.cwiseProduct(sign_);
  }

  const std::vector<int>& basis() const { return basic_; }

 private:
  int rows_;
  int structural_;
  Eigen::MatrixXd tab_;
  Eigen::VectorXd sign_;
  std::vector<int> basic_;
};

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
    case Status::IterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

Polytope::Polytope(int variables) : variables_(variables) {
  if (variables <= 0) throw std::invalid_argument("polytope needs at least one variable");
}

void Polytope::add_upper(const Eigen::VectorXd& a, double b) {
  if (a.size() != variables_) throw std::invalid_argument("constraint has wrong length");
  const double norm = a.norm();
  if (norm == 0.0) {
    if (b < -1e-12) inconsistent_ = true;
    return;
  }
  rows_.push_back(a / norm);
  bounds_.push_back(b / norm);
}

void Polytope::add_range(const Eigen::VectorXd& a, double lo, double hi) {
  add_upper(a, hi);
  add_upper(-a, -lo);
}

void Polytope::add_equality(const Eigen::VectorXd& a, double value) { add_range(a, value, value); }

double Polytope::max_violation(const Eigen::VectorXd& x) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    worst = std::max(worst, rows_[i].dot(x) - bounds_[i]);
  return worst;
}

Result Polytope::maximize(const Eigen::VectorXd& objective, int max_pivots) const {
  if (objective.size() != variables_) throw std::invalid_argument("objective has wrong length");
  Result out;
  if (inconsistent_) {
    out.status = Status::Infeasible;
    return out;
  }
  const int n = rows();
  const int m = variables_;
  Eigen::MatrixXd mt(m, n);
  Eigen::VectorXd b(n + m);
  for (int j = 0; j < n; ++j) {
    mt.col(j) = rows_[static_cast<std::size_t>(j)];
    b(j) = bounds_[static_cast<std::size_t>(j)];
  }

  Tableau tab(mt, objective);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  auto outcome = tab.run(phase1, true, out.pivots, max_pivots);
  if (outcome == Tableau::Outcome::Limit) return out;
  const double feas_tol = 1e-9 * (1.0 + objective.cwiseAbs().sum());
  if (tab.artificial_sum() > feas_tol) {
    // dual infeasible: the primal is unbounded (or itself infeasible)
    out.status = Status::Unbounded;
    return out;
  }
  tab.drive_out_artificials();

  b.tail(m).setZero();
  outcome = tab.run(b, false, out.pivots, max_pivots);
  if (outcome == Tableau::Outcome::Limit) return out;
  if (outcome == Tableau::Outcome::Unbounded) {
    out.status = Status::Infeasible;
    return out;
  }

  // The m basic dual columns are primal rows that are tight at the optimum.
  const auto& basis = tab.basis();
  bool structural = std::all_of(basis.begin(), basis.end(), [&](int j) { return j < n; });
  Eigen::VectorXd x;
  if (structural) {
    Eigen::MatrixXd ab(m, m);
    Eigen::VectorXd bb(m);
    for (int i = 0; i < m; ++i) {
      ab.row(i) = rows_[static_cast<std::size_t>(basis[i])].transpose();
      bb(i) = bounds_[static_cast<std::size_t>(basis[i])];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ab);
    if (lu.isInvertible()) x = lu.solve(bb);
  }
  if (x.size() == 0) x = tab.multipliers(b);
  out.x = x;
  out.objective = objective.dot(x);
  out.status = Status::Optimal;
  return out;
}

}  // namespace ptsym::lp
