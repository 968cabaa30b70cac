#include "rellich/mode_opt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

constexpr std::size_t kDenseLimit = 2000;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double backward_error(const ModeMatrices& m, std::span<const double> x, double mu,
                      double norm_k, double norm_m) {
  const std::size_t n = x.size();
  std::vector<double> kx(n), mx(n);
  m.numerator.multiply(x, kx);
  m.denominator.multiply(x, mx);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = kx[i] - mu * mx[i];
    r += d * d;
  }
  const double xn = std::sqrt(dot(x, x));
  return std::sqrt(r) / ((norm_k + std::abs(mu) * norm_m) * xn);
}

std::size_t negatives_below(const ModeMatrices& m, double sigma) {
  return BandedLDLT(m.numerator.axpy(-sigma, m.denominator)).negative_count();
}

ModeMinimum finish(const ModeProblem& prob, const ModeMatrices& mats, std::vector<double> x,
                   double value, double residual, EigenMethod method, int iterations) {
  const double d = mats.denominator.quadratic_form(x);
  const double scale = 1.0 / std::sqrt(d);
  double sum = 0.0;
  for (double v : x) sum += v;
  const double sign = sum < 0.0 ? -1.0 : 1.0;

  ModeMinimum out;
  out.value = value;
  out.residual = residual;
  out.bound = prob.flat_limit();
  out.method_used = method;
  out.iterations = iterations;
  out.minimizer.assign(prob.grid.points, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) out.minimizer[i + 1] = sign * scale * x[i];
  return out;
}

ModeMinimum solve_dense(const ModeProblem& prob, const ModeMatrices& mats,
                        const SolverOptions& options) {
  const std::size_t n = mats.numerator.size();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  const std::size_t bw = mats.numerator.bandwidth();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i >= bw ? i - bw : 0; j <= std::min(n - 1, i + bw); ++j) {
      K(i, j) = mats.numerator(i, j);
      M(i, j) = mats.denominator(i, j);
    }
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M);
  if (es.info() != Eigen::Success) throw SolverError("dense generalized eigensolver failed");
  const double mu = es.eigenvalues()(0);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = es.eigenvectors()(i, 0);
  const double res = backward_error(mats, x, mu, mats.numerator.norm_inf(),
                                    mats.denominator.norm_inf());
  if (!(res <= options.residual_tolerance)) {
    throw SolverError("dense solver residual " + std::to_string(res) + " above tolerance");
  }
  return finish(prob, mats, std::move(x), mu, res, EigenMethod::Dense, 0);
}

// Inertia bisection brackets the smallest eigenvalue; inverse iteration
// shifted at the (positive definite) lower end of the bracket refines it.
ModeMinimum solve_banded(const ModeProblem& prob, const ModeMatrices& mats,
                         const SolverOptions& options) {
  const std::size_t n = mats.numerator.size();
  const double norm_k = mats.numerator.norm_inf();
  const double norm_m = mats.denominator.norm_inf();

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::sin(std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(n + 1));
  }
  double hi = mats.numerator.quadratic_form(x) / mats.denominator.quadratic_form(x);
  hi = hi * (1.0 + 1e-12) + std::numeric_limits<double>::min();
  for (int guard = 0; negatives_below(mats, hi) == 0; ++guard) {
    if (guard > 60) throw SolverError("could not bracket the smallest eigenvalue");
    hi = 2.0 * hi + 1.0;
  }
  double lo = 0.0;
  for (int guard = 0; negatives_below(mats, lo) > 0; ++guard) {
    if (guard > 60) throw SolverError("numerator matrix is not semidefinite");
    lo -= std::max(1.0, std::abs(hi));
  }
  for (int it = 0; it < 200; ++it) {
    if (hi - lo <= 1e-13 * std::max(std::abs(hi), 1e-300)) break;
    const double mid = 0.5 * (lo + hi);
    if (negatives_below(mats, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  double sigma = lo;
  BandedLDLT shifted(mats.numerator.axpy(-sigma, mats.denominator));
  if (!shifted.positive_definite()) {
    sigma = lo - 1e-10 * std::max(1.0, std::abs(lo));
    shifted = BandedLDLT(mats.numerator.axpy(-sigma, mats.denominator));
    if (!shifted.positive_definite()) throw SolverError("shifted matrix is not definite");
  }

  std::vector<double> y(n);
  double mu = hi;
  double res = std::numeric_limits<double>::infinity();
  int iterations = 0;
  for (; iterations < options.max_inverse_iterations; ++iterations) {
    mats.denominator.multiply(x, y);
    shifted.solve_in_place(y);
    const double norm = std::sqrt(mats.denominator.quadratic_form(y));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw SolverError("inverse iteration broke down");
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    mu = mats.numerator.quadratic_form(x);
    res = backward_error(mats, x, mu, norm_k, norm_m);
    if (res <= options.residual_tolerance) {
      ++iterations;
      break;
    }
  }
  if (!(res <= options.residual_tolerance)) {
    throw SolverError("inverse iteration did not reach residual tolerance (residual " +
                      std::to_string(res) + ")");
  }
  return finish(prob, mats, std::move(x), mu, res, EigenMethod::Banded, iterations);
}

}  // namespace

ModeProblem ModeProblem::from(const Params& p, double lambda, ModeGrid grid) {
  ModeProblem prob;
  prob.A = p.A;
  prob.Bl = p.B + lambda;
  prob.Cl = p.C + lambda;
  prob.grid = grid;
  prob.validate();
  return prob;
}

void ModeProblem::validate() const {
  if (!(Cl > 0.0)) throw InvalidArgument("C + lambda must be positive, got " + std::to_string(Cl));
  if (grid.points < 3) throw InvalidArgument("mode grid needs at least 3 points");
  if (!(grid.half_length > 0.0) || !std::isfinite(grid.half_length)) {
    throw InvalidArgument("mode grid half-length must be positive");
  }
  if (!std::isfinite(A) || !std::isfinite(Bl) || !std::isfinite(Cl)) {
    throw InvalidArgument("mode coefficients must be finite");
  }
}

ModeMatrices assemble_mode_matrices(const ModeProblem& prob) {
  prob.validate();
  const std::size_t N = prob.grid.points;
  const std::size_t n = N - 2;
  const double h = prob.grid.step();

  const double coeff[3] = {1.0 / (h * h) - prob.A / (2.0 * h), -2.0 / (h * h) - prob.Bl,
                           1.0 / (h * h) + prob.A / (2.0 * h)};

  ModeMatrices m{BandedSymmetric(n, 2), BandedSymmetric(n, 1)};
  // Row of T at node i touches nodes i-1, i, i+1; unknown u = node - 1.
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t idx[3];
    double val[3];
    int cnt = 0;
    for (int o = -1; o <= 1; ++o) {
      const long node = static_cast<long>(i) + o;
      if (node < 1 || node > static_cast<long>(N) - 2) continue;
      idx[cnt] = static_cast<std::size_t>(node - 1);
      val[cnt] = coeff[o + 1];
      ++cnt;
    }
    for (int a = 0; a < cnt; ++a) {
      for (int b = 0; b <= a; ++b) m.numerator.lower(idx[a], idx[b]) += h * val[a] * val[b];
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    m.denominator.lower(u, u) = 2.0 / h + prob.Cl * h;
    if (u + 1 < n) m.denominator.lower(u + 1, u) = -1.0 / h;
  }
  return m;
}

ModeMinimum minimize_mode(const ModeProblem& prob, const SolverOptions& options) {
  const ModeMatrices mats = assemble_mode_matrices(prob);
  if (options.method == EigenMethod::Dense) return solve_dense(prob, mats, options);
  try {
    return solve_banded(prob, mats, options);
  } catch (const SolverError&) {
    if (options.method == EigenMethod::Auto && prob.grid.points <= kDenseLimit) {
      return solve_dense(prob, mats, options);
    }
    throw;
  }
}

double scaled_family_value(double A, double Bl, double Cl, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!(Cl > 0.0)) throw InvalidArgument("C + lambda must be positive");
  // Resolve the bump with at least 4000 cells regardless of epsilon.
  const double step = std::min(0.025, 2.0 / (epsilon * 4000.0));
  const CylinderFunction w = bump_family(epsilon, 0.0, step);
  return mode_quotient(w, A, Bl, Cl).ratio;
}

double scaled_family_value(const Params& p, double lambda, double epsilon) {
  if (!(p.h + lambda > 0.0)) throw InvalidArgument("h + lambda must be positive");
  return scaled_family_value(p.A, p.B + lambda, p.C + lambda, epsilon);
}

bool lemma_V_hypothesis(double Bl, double Cl) { return Bl > 0.0 && Bl <= 2.0 * Cl; }

bool lemma_Y_hypothesis(double A, double Bl, double Cl) {
  return Cl > 0.0 && A * A + 2.0 * Bl > Bl * Bl / Cl;
}

LemmaCheck lemma_V_check(const ModeProblem& prob, double tol, double family_epsilon) {
  if (!lemma_V_hypothesis(prob.Bl, prob.Cl)) {
    throw InvalidArgument("hypothesis 0 < B+lambda <= 2(C+lambda) fails");
  }
  LemmaCheck out;
  const ModeMinimum m = minimize_mode(prob);
  out.value = m.value;
  out.bound = prob.flat_limit();
  out.passed = out.value >= out.bound - tol;
  out.family_value = scaled_family_value(prob.A, prob.Bl, prob.Cl, family_epsilon);
  out.upper_ok = *out.family_value <= out.bound + tol;
  return out;
}

LemmaCheck lemma_Y_check(const ModeProblem& prob, double tol) {
  if (!lemma_Y_hypothesis(prob.A, prob.Bl, prob.Cl)) {
    throw InvalidArgument("hypothesis A^2 + 2(B+lambda) > (B+lambda)^2/(C+lambda) fails");
  }
  LemmaCheck out;
  const ModeMinimum m = minimize_mode(prob);
  out.value = m.value;
  out.bound = prob.flat_limit();
  out.passed = out.value >= out.bound - tol;
  return out;
}

double phi(const Params& p, double t) {
  const double a = (p.n - 2.0) * (p.n - 2.0) / 2.0 + (p.alpha - 2.0) * (p.alpha - 2.0) / 2.0;
  return (2.0 * t + a) * (t + p.h) - (t + p.gamma) * (t + p.gamma);
}

DecompositionBound decompose_and_bound(std::span<const ModeComponent> modes, const Params& p) {
  if (modes.empty()) throw InvalidArgument("decompose_and_bound needs at least one mode");

  // Merge components sharing an eigenvalue.
  std::vector<ModeComponent> groups;
  for (const ModeComponent& c : modes) {
    if (!(p.C + c.lambda > 0.0)) {
      throw InvalidArgument("mode with C + lambda <= 0 (lambda = " + std::to_string(c.lambda) + ")");
    }
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const ModeComponent& g) { return g.lambda == c.lambda; });
    if (it == groups.end()) {
      groups.push_back(c);
      continue;
    }
    const SGrid& a = it->g.grid;
    const SGrid& b = c.g.grid;
    if (a.count != b.count || a.start != b.start || a.step != b.step) {
      throw InvalidArgument("components of one eigenspace must share a grid");
    }
    for (std::size_t i = 0; i < a.count; ++i) it->g.g[i] += c.g.g[i];
    if (it->g.has_derivatives() && c.g.has_derivatives()) {
      for (std::size_t i = 0; i < a.count; ++i) {
        it->g.dg[i] += c.g.dg[i];
        it->g.d2g[i] += c.g.d2g[i];
      }
    } else {
      it->g.dg.clear();
      it->g.d2g.clear();
    }
  }

  std::vector<double> num(groups.size()), den(groups.size());
  double total = 0.0;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const CylinderFunction& g = groups[j].g;
    const double A = p.A, Bl = p.B + groups[j].lambda, Cl = p.C + groups[j].lambda;
    bool zero = std::all_of(g.g.begin(), g.g.end(), [](double v) { return v == 0.0; });
    if (zero) continue;
    const QuotientResult q = mode_quotient(g, A, Bl, Cl);
    num[j] = q.numerator;
    den[j] = q.denominator;
    total += q.denominator;
  }
  if (!(total > 0.0)) throw InvalidArgument("zero total denominator");

  DecompositionBound out;
  bool first = true;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (den[j] == 0.0) continue;
    const double q = num[j] / den[j];
    const double theta = den[j] / total;
    out.quotients.push_back(q);
    out.weights.push_back(theta);
    out.combined += theta * q;
    out.min_quotient = first ? q : std::min(out.min_quotient, q);
    out.max_quotient = first ? q : std::max(out.max_quotient, q);
    first = false;
  }
  out.direct = combined_quotient(modes, p).ratio;
  return out;
}

}  // namespace rellich
