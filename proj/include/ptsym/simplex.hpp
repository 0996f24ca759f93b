// Small dense LP engine.
//
// Solves   maximize c.x  subject to  A x <= b,  x free
// by running a tableau primal simplex (two phases, Dantzig pricing with a
// switch to Bland's rule after repeated degenerate pivots) on the dual
//   minimize b.y  subject to  A^T y = c,  y >= 0.
// The dual has one row per primal variable, which keeps the tableau tiny when
// there are few variables and many inequalities. The primal optimum is read
// back from the simplex multipliers.
#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ptsym::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(Status s);

struct Result {
  Status status = Status::IterationLimit;
  Eigen::VectorXd x;
  double objective = 0.0;
  int pivots = 0;
};

/// Inequality system A x <= b built row by row.
class Polytope {
 public:
  explicit Polytope(int variables);

  int variables() const { return variables_; }
  int rows() const { return static_cast<int>(bounds_.size()); }

  /// a.x <= b. Rows are scaled to unit norm; zero rows are checked for
  /// consistency and dropped.
  void add_upper(const Eigen::VectorXd& a, double b);
  /// lo <= a.x <= hi.
  void add_range(const Eigen::VectorXd& a, double lo, double hi);
  void add_equality(const Eigen::VectorXd& a, double value);

  /// Largest violation max(a.x - b, 0) over all rows.
  double max_violation(const Eigen::VectorXd& x) const;

  Result maximize(const Eigen::VectorXd& objective, int max_pivots = 20000) const;

 private:
  int variables_;
  std::vector<Eigen::VectorXd> rows_;
  std::vector<double> bounds_;
  bool inconsistent_ = false;
};

}  // namespace ptsym::lp
