#include "brachist/numeric.hpp"

#include <cmath>

namespace brachist {

static Eigen::MatrixXd numeric_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& r0, double step) {
  const int m = static_cast<int>(r0.size());
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd J(m, n);
  for (int j = 0; j < n; ++j) {
    const double h = step * std::max(1.0, std::abs(x[j]));
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    J.col(j) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return J;
}

LmResult least_squares_lm(const ResidualFn& f, const Eigen::VectorXd& x0,
                          const LmOptions& opts) {
  LmResult out;
  out.x = x0;
  Eigen::VectorXd r = f(out.x);
  out.cost = 0.5 * r.squaredNorm();
  double lambda = opts.initial_lambda;

  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    const Eigen::MatrixXd J = numeric_jacobian(f, out.x, r, opts.jacobian_step);
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;

    bool stepped = false;
    for (int attempt = 0; attempt < 16; ++attempt) {
      Eigen::MatrixXd A = JtJ;
      A.diagonal().array() += lambda * (JtJ.diagonal().array() + 1e-12);
      const Eigen::VectorXd dx = A.ldlt().solve(-g);
      const Eigen::VectorXd xn = out.x + dx;
      const Eigen::VectorXd rn = f(xn);
      const double cn = 0.5 * rn.squaredNorm();
      if (cn < out.cost) {
        const double improvement = out.cost - cn;
        out.x = xn;
        r = rn;
        const double step_norm = dx.norm();
        out.cost = cn;
        lambda = std::max(lambda * 0.3, 1e-14);
        stepped = true;
        if (improvement < opts.ftol * (1.0 + out.cost) || step_norm < opts.xtol) {
          out.converged = true;
          out.residual_norm = std::sqrt(2.0 * out.cost);
          return out;
        }
        break;
      }
      lambda *= 8.0;
    }
    if (!stepped) {
      out.converged = out.cost < 1e-18;
      break;
    }
    if (out.cost < 1e-24) {
      out.converged = true;
      break;
    }
  }
  out.residual_norm = std::sqrt(2.0 * out.cost);
  return out;
}

std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    double a, double b, int grid, double tol) {
  std::vector<double> roots;
  if (!(b > a) || grid < 2) return roots;
  double x0 = a, f0 = f(a);
  const double h = (b - a) / grid;
  for (int i = 1; i <= grid; ++i) {
    const double x1 = a + i * h;
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if (f0 * f1 < 0.0) {
      double lo = x0, hi = x1, flo = f0;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  // 53-bit mantissa, strictly inside (0,1)
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitMix64::normal(double mean, double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + sigma * spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return mean + sigma * r * std::cos(phi);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return g.next();
}

double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

double mean(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("mean of empty range");
  return pairwise_sum(v) / static_cast<double>(v.size());
}

double sample_std(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - m) * (v[i] - m);
  return std::sqrt(pairwise_sum(sq) / static_cast<double>(v.size() - 1));
}

}  // namespace brachist
