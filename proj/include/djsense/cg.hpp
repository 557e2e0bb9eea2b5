#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "djsense/types.hpp"

namespace djsense {

using CVec = std::vector<Complex>;

struct CgReport {
  int iterations_run = 0;
  double final_residual_norm = 0.0;
  std::vector<double> residual_history;  // length iterations_run + 1
};

struct CgResult {
  CVec solution;
  CgReport report;
};

/* Thrown when a search direction has non-positive curvature or the
 * operator turns out not to be self-adjoint (complex curvature).
 */
class CgBreakdown : public std::runtime_error {
 public:
  CgBreakdown(int iteration, const std::string &what)
      : std::runtime_error("CG breakdown at iteration " + std::to_string(iteration) + ": " + what),
        iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

/* Conjugate gradients for self-adjoint positive (semi)definite op on flat
 * complex vectors with the standard inner product <a,b> = sum conj(a_i) b_i.
 *
 * Runs from x0 for at most max_iters steps; with rel_tol = 0 (the default)
 * the iteration count is structural and only an exactly-zero residual stops
 * the solve early. An all-zero rhs returns the zero solution immediately.
 * The optional on_iterate callback sees every iterate x_k (k >= 1).
 */
CgResult cg_solve(const std::function<CVec(const CVec &)> &op, const CVec &rhs, const CVec &x0,
                  int max_iters, double rel_tol = 0.0,
                  const std::function<void(int, const CVec &)> &on_iterate = {});

// <a,b> with conjugation on the first argument.
Complex cdot(const CVec &a, const CVec &b);
double cnorm(const CVec &a);

}  // namespace djsense
