#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rellich/banded.hpp"
#include "rellich/cylinder.hpp"
#include "rellich/params.hpp"

namespace rellich {

/// Truncation [-half_length, half_length] sampled by `points` nodes
/// (endpoints included, where g = 0).
struct ModeGrid {
  double half_length = 100.0;
  std::size_t points = 8000;

  double step() const { return 2.0 * half_length / static_cast<double>(points - 1); }
};

/// One-dimensional Rayleigh quotient of a single angular mode:
///
///   int |g'' + A g' - Bl g|^2 ds / int (|g'|^2 + Cl |g|^2) ds
///
/// with Bl = B + lambda and Cl = C + lambda.
struct ModeProblem {
  double A = 0.0;
  double Bl = 0.0;
  double Cl = 1.0;
  ModeGrid grid;

  static ModeProblem from(const Params& p, double lambda, ModeGrid grid = {});

  /// Bl^2 / Cl, the value approached by flat profiles.
  double flat_limit() const { return Bl * Bl / Cl; }
  void validate() const;
};

enum class EigenMethod {
  Auto,    ///< banded; dense fallback on breakdown when points <= 2000
  Banded,  ///< inertia bisection + shifted inverse iteration
  Dense,   ///< Eigen generalized self-adjoint solver
};

struct SolverOptions {
  EigenMethod method = EigenMethod::Auto;
  double residual_tolerance = 1e-10;
  int max_inverse_iterations = 50;
};

struct ModeMinimum {
  double value = 0.0;
  std::vector<double> minimizer;  ///< g at every grid node, D(g) = 1
  double residual = 0.0;          ///< normwise backward error
  double bound = 0.0;             ///< Bl^2 / Cl
  EigenMethod method_used = EigenMethod::Banded;
  int iterations = 0;
};

/// Discrete numerator and denominator matrices on the interior unknowns.
/// The numerator is h T^T T with T the finite-difference operator
/// g -> g'' + A g' - Bl g evaluated at every node where it can be nonzero
/// (g extended by zero), so it is positive semidefinite by construction.
struct ModeMatrices {
  BandedSymmetric numerator;
  BandedSymmetric denominator;
};

ModeMatrices assemble_mode_matrices(const ModeProblem& prob);

/// Smallest generalized eigenvalue of the assembled pair.
ModeMinimum minimize_mode(const ModeProblem& prob, const SolverOptions& options = {});

/// Mode quotient of g0(epsilon s) computed through cylinder_quotient.
double scaled_family_value(const Params& p, double lambda, double epsilon);

/// (A, Bl, Cl) variant of scaled_family_value.
double scaled_family_value(double A, double Bl, double Cl, double epsilon);

struct LemmaCheck {
  bool passed = false;  ///< discrete minimum >= bound - tol
  double value = 0.0;   ///< discrete minimum
  double bound = 0.0;   ///< Bl^2 / Cl
  std::optional<double> family_value;  ///< scaled-family upper witness
  bool upper_ok = false;  ///< family_value <= bound + tol
};

/// Hypothesis 0 < Bl <= 2 Cl of the V-space lower bound.
bool lemma_V_hypothesis(double Bl, double Cl);
/// Hypothesis A^2 + 2 Bl > Bl^2 / Cl, Cl > 0 of the single-mode lower bound.
bool lemma_Y_hypothesis(double A, double Bl, double Cl);

/// Discrete minimum >= Bl^2/Cl - tol. The equality direction is reported
/// separately through the scaled family at `family_epsilon`. Throws
/// InvalidArgument when the hypothesis fails.
LemmaCheck lemma_V_check(const ModeProblem& prob, double tol = 1e-3,
                         double family_epsilon = 1e-2);

/// Discrete minimum >= Bl^2/Cl - tol. Throws InvalidArgument when the
/// hypothesis fails.
LemmaCheck lemma_Y_check(const ModeProblem& prob, double tol = 1e-3);

/// Phi(t) = (2t + (n-2)^2/2 + (alpha-2)^2/2)(t + h) - (t + gamma)^2.
/// Phi(lambda)/(h+lambda) = A^2 + 2(B+lambda) - (B+lambda)^2/(C+lambda).
double phi(const Params& p, double t);

struct DecompositionBound {
  double combined = 0.0;             ///< sum theta_j q_j
  double direct = 0.0;               ///< N(w)/D(w) of the merged function
  std::vector<double> quotients;     ///< q_j = N(v_j)/D(v_j)
  std::vector<double> weights;       ///< theta_j = D(v_j)/D(w)
  double min_quotient = 0.0;
  double max_quotient = 0.0;
};

/// Splits w = v_1 + ... + v_k by mode and returns the convex combination of
/// the per-mode quotients. Throws InvalidArgument on an empty list, a zero
/// total denominator, or a mode with C + lambda <= 0.
DecompositionBound decompose_and_bound(std::span<const ModeComponent> modes,
                                       const Params& p);

}  // namespace rellich
