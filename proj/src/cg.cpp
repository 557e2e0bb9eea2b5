#include "djsense/cg.hpp"

#include <cmath>

namespace djsense {

Complex cdot(const CVec &a, const CVec &b) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

double cnorm(const CVec &a) {
  double s = 0.0;
  for (const auto &v : a)
    s += std::norm(v);
  return std::sqrt(s);
}

CgResult cg_solve(const std::function<CVec(const CVec &)> &op, const CVec &rhs, const CVec &x0,
                  int max_iters, double rel_tol,
                  const std::function<void(int, const CVec &)> &on_iterate) {
  if (rhs.size() != x0.size())
    throw std::invalid_argument("cg_solve: rhs and x0 sizes differ");
  if (max_iters < 0)
    throw std::invalid_argument("cg_solve: max_iters must be >= 0");

  const double rhs_norm = cnorm(rhs);
  CgResult result;
  if (rhs_norm == 0.0) {
    result.solution.assign(rhs.size(), Complex(0.0, 0.0));
    result.report.residual_history = {0.0};
    return result;
  }

  CVec x = x0;
  CVec r(rhs.size());
  {
    CVec ax = op(x);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = rhs[i] - ax[i];
  }
  CVec p = r;
  double rho = std::real(cdot(r, r));
  result.report.residual_history.push_back(std::sqrt(rho));

  int k = 0;
  while (k < max_iters) {
    const double res_norm = result.report.residual_history.back();
    if (res_norm == 0.0 || res_norm <= rel_tol * rhs_norm)
      break;
    ++k;
    CVec ap = op(p);
    const Complex curv = cdot(p, ap);
    // a self-adjoint operator gives a real curvature up to round-off
    if (std::abs(curv.imag()) > 1e-8 * std::abs(curv.real()) + 1e-300)
      throw CgBreakdown(k, "curvature has a non-negligible imaginary part");
    if (curv.real() <= 0.0)
      throw CgBreakdown(k, "non-positive curvature (operator not positive definite)");
    const double alpha = rho / curv.real();
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    const double rho_new = std::real(cdot(r, r));
    result.report.residual_history.push_back(std::sqrt(rho_new));
    if (on_iterate)
      on_iterate(k, x);
    const double beta = rho_new / rho;
    rho = rho_new;
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] = r[i] + beta * p[i];
  }

  result.solution = std::move(x);
  result.report.iterations_run = k;
  result.report.final_residual_norm = result.report.residual_history.back();
  return result;
}

}  // namespace djsense
