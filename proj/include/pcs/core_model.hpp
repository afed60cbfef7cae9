#pragma once

#include "pcs/spectral.hpp"
#include "pcs/types.hpp"

#include <optional>

namespace pcs {

enum class Provenance { measured, assumed };

/// One relative perturbation bound. `value` is the end used by every theorem
/// evaluation; when exact computation was infeasible it is a safe upper bound
/// and `lower` carries the sampled lower end of the interval.
struct BudgetEntry {
  double value = 0.0;
  double lower = 0.0;
  Provenance provenance = Provenance::assumed;
  bool exact = true;
};

/// Relative perturbation budget: eps_A = ||E||/||A||, eps_A^(K), eps_A^(2K),
/// eps_b = ||e||/||b||. All values live in [0, 1).
struct PerturbationBudget {
  BudgetEntry eps_A;
  BudgetEntry eps_A_K;
  BudgetEntry eps_A_2K;
  BudgetEntry eps_b;

  static PerturbationBudget assumed(double eps_a, double eps_a_k, double eps_a_2k, double eps_b);
};

/// Best K-term head x_K, tail x - x_K, and the tail-weight ratios
/// r_K = ||tail||_2 / ||head||_2, s_K = ||tail||_1 / ||head||_2.
struct HeadTailSplit {
  Vector head;
  Vector tail;
  SupportSet support;  // nonzero positions of the head
  int K = 0;
  double r_K = 0.0;
  double s_K = 0.0;
  bool zero_signal = false;  // x == 0: ratios defined as 0, support empty

  double head_norm2() const { return head.norm(); }
  double tail_norm1() const { return tail.lpNorm<1>(); }
  double tail_norm2() const { return tail.norm(); }
};

/// Magnitude ties are broken toward the lowest index, so the split is
/// deterministic.
HeadTailSplit head_tail_split(const Vector& x, int k);

/// The completely perturbed observation model: clean b = A x, observed
/// b_hat = A x + e, decoding matrix A_hat = A + E.
struct PerturbedProblem {
  Matrix A;
  std::optional<Matrix> E;
  std::optional<Vector> e;
  std::optional<Vector> x;  // ground truth, when known
  Vector b;
  Vector b_hat;

  Matrix a_hat() const;

  static PerturbedProblem from_ground_truth(Matrix a, std::optional<Matrix> e_mat,
                                            std::optional<Vector> e_vec, Vector x);
};

/// Measures all four relative bounds from a fully specified problem.
/// eps_A^(K) and eps_A^(2K) are exact when the submatrix enumeration fits the
/// budget; otherwise the safe interval [sampled lower, ||E||_2 / sampled
/// sigma_max^(K)(A)] is reported with exact = false.
PerturbationBudget measure_budget(const PerturbedProblem& problem, int k,
                                  const EnumerationOptions& opts = {});

}  // namespace pcs
