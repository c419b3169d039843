#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace brachist {

// thrown when an iterative solver fails to reach its tolerance; carries the
// best residual / objective seen so that callers can report diagnostics
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what, double best = 0.0)
      : std::runtime_error(what), best_residual(best) {}
  double best_residual;
};

// ---------------------------------------------------------------------------
// Levenberg-Marquardt least squares
// ---------------------------------------------------------------------------

struct LmOptions {
  int max_iterations = 120;
  double ftol = 1e-15;        // stop when the cost improvement is below this
  double xtol = 1e-13;        // stop when the step is below this
  double initial_lambda = 1e-3;
  double jacobian_step = 1e-7;
};

struct LmResult {
  Eigen::VectorXd x;
  double cost = 0.0;          // 0.5 * ||r||^2
  double residual_norm = 0.0; // ||r||
  int iterations = 0;
  bool converged = false;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// damped Gauss-Newton on a residual vector; Jacobian by central differences
LmResult least_squares_lm(const ResidualFn& f, const Eigen::VectorXd& x0,
                          const LmOptions& opts = {});

// ---------------------------------------------------------------------------
// scalar root bracketing / refinement
// ---------------------------------------------------------------------------

// all sign-change roots of f on [a,b], scanned on a uniform grid and refined
// by bisection to |interval| < tol
std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    double a, double b, int grid, double tol);

// ---------------------------------------------------------------------------
// deterministic randomness
// ---------------------------------------------------------------------------

// splitmix64: tiny, platform-independent generator used for all Monte Carlo
// sampling so that seeded results are bit-stable across compilers
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();             // in (0,1)
  double normal(double mean = 0.0, double sigma = 1.0);

 private:
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// derive an independent stream seed for sample index i
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// ---------------------------------------------------------------------------
// summation
// ---------------------------------------------------------------------------

// pairwise summation; order-insensitive to ~1e-16 relative for the sizes here
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);
double sample_std(std::span<const double> values);

}  // namespace brachist
