#pragma once

#include "pcs/core_model.hpp"
#include "pcs/types.hpp"

namespace pcs {

/// Conditioning quantities of the measurement matrix entering the stability
/// formulas: kappa_K = sqrt(1+delta_K)/sqrt(1-delta_K) bounds the ratio of
/// extremal K-column singular values, alpha = ||A||_2 / sqrt(1-delta_K).
struct MatrixConditioning {
  double delta_K = 0.0;
  double delta_2K = 0.0;
  double kappa_K = 1.0;
  double alpha = 0.0;
  double spectral_norm_A = 0.0;
  bool delta_exact = true;  // false when deltas come from sampled-mode reports

  static MatrixConditioning from_deltas(double delta_k, double delta_2k, double norm_a,
                                        bool exact = true);
};

struct Condition1 {
  bool ok = false;
  double threshold = 0.0;  // sqrt(2)/(1+eps_A_2K)^2 - 1
  double margin = 0.0;     // threshold - delta_2K
  /// Derived consequence when ok: the perturbed RIC bound stays below sqrt(2)-1.
  bool perturbed_ric_below_limit = false;
};

struct Condition2 {
  bool ok = false;
  double threshold = 0.0;  // 1 / kappa_K
  double margin = 0.0;     // threshold - (r_K + s_K/sqrt(K))
};

/// Everything Theorem 2 and the least-squares comparison produce for one
/// (matrix, budget, signal) triple.
struct StabilityConstants {
  double delta_hat_max_K = 0.0;
  double delta_hat_max_2K = 0.0;
  double alpha_hat = 0.0;
  double rho_hat = 0.0;
  double C0 = 0.0;
  double C1 = 0.0;
  double eps_prime = 0.0;
  double C2 = 0.0;
  double zeta_prime = 0.0;
  bool cond1_ok = false;
  bool cond2_ok = false;
  bool ls_assumption_ok = false;
  double cond1_margin = 0.0;
  double cond2_margin = 0.0;
};

struct ImageLowerBound {
  double value = 0.0;
  /// False when condition 2 fails: the bound is returned but not guaranteed
  /// positive.
  bool guaranteed_positive = false;
};

struct LsConstants {
  double C2 = 1.0;
  double zeta_prime = 0.0;
  bool ls_assumption_ok = false;
};

/// T-restricted data for checking the least-squares perturbation assumption
/// directly instead of through the sufficient conditions.
struct TRestriction {
  Matrix A_T;
  Matrix E_T;
  double norm_e = 0.0;
  double norm_b = 0.0;
};

/// Worst-case RIC of A + E: (1 + delta_K) (1 + eps_A_K)^2 - 1.
double perturbed_ric_bound(double delta_k, double eps_a_k);

/// First Theorem-2 assumption: delta_2K < sqrt(2)/(1+eps_A_2K)^2 - 1.
Condition1 condition1(double delta_2k, double eps_a_2k);

/// Second Theorem-2 assumption: r_K + s_K/sqrt(K) < 1/kappa_K.
Condition2 condition2(double r_k, double s_k, int k, double kappa_k);

/// Total noise parameter eps'_{A,K,b}; upper-bounds ||Ex||_2 + ||e||_2.
double total_noise(const PerturbationBudget& budget, const MatrixConditioning& cond,
                   const HeadTailSplit& split, double norm_b);

/// ||b||_2 <= ||b_hat||_2 / (1 - eps_b): the observed-side norm substitution.
double observed_norm_b_bound(double norm_b_hat, double eps_b);

/// C0, C1, alpha_hat, rho_hat from (delta_2K, eps_A_2K). Throws when
/// condition 1 fails (the denominators would be nonpositive). The returned
/// record has only the Theorem-2 fields populated.
StabilityConstants stability_constants(double delta_2k, double eps_a_2k);

/// Right-hand side of the Basis Pursuit stability bound:
/// C0 K^{-1/2} ||x - x_K||_1 + C1 eps'.
double bp_error_bound(const StabilityConstants& consts, const HeadTailSplit& split, int k);

/// ||A x||_2 <= sqrt(1+delta_K) (||x||_2 + ||x||_1 / sqrt(K)).
double image_upper_bound(const MatrixConditioning& cond, const Vector& x, int k);

/// ||A x||_2 >= sqrt(1-delta_K) (||x_K||_2 - kappa (||tail||_2 + ||tail||_1/sqrt(K))).
ImageLowerBound image_lower_bound(const MatrixConditioning& cond, const HeadTailSplit& split,
                                  int k);

/// C2 = 1/sqrt(1-delta_K) and zeta'_{A,K,b}. The perturbation assumption is
/// checked directly when T-restricted data is supplied, otherwise through the
/// sufficient conditions on eps_A^(2K) and eps_b.
LsConstants ls_constants(const MatrixConditioning& cond, const PerturbationBudget& budget,
                         const HeadTailSplit& split, double norm_b,
                         const TRestriction* restriction = nullptr);

/// ||x - x_K||_2 + C2 zeta'.
double ls_error_bound(double c2, double zeta_prime, const HeadTailSplit& split);

/// K-sparse collapse of the least-squares bound: C2 (kappa eps_A_K + eps_b) ||b||.
double ls_error_bound_sparse(double c2, double kappa_k, double eps_a_k, double eps_b,
                             double norm_b);

/// eps_A^(K) implied by a perturbation that is a beta-scaled random matrix
/// with RIC delta_R_K: beta sqrt(1+delta_R_K)/sqrt(1-delta_K).
double scaled_random_eps(double beta, double delta_r_k, double delta_k);

/// Spectral-norm bound implied by condition 1: ||E||^(2K) < 2^{1/4} - sqrt(1+delta_2K).
double rank_preservation_norm_bound(double delta_2k);

/// Full evaluation for one problem: conditions, Theorem-2 constants, total
/// noise, and the least-squares side. Sampled (lower-bound) deltas are
/// refused unless allow_sampled_delta is set; sampled eps entries always use
/// their safe upper end. Does not throw on failed conditions - the verdicts
/// and margins record them, and dependent fields are left NaN.
StabilityConstants evaluate_stability(const MatrixConditioning& cond,
                                      const PerturbationBudget& budget,
                                      const HeadTailSplit& split, double norm_b,
                                      bool allow_sampled_delta = false,
                                      const TRestriction* restriction = nullptr);

}  // namespace pcs
