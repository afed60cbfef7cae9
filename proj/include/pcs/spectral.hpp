#pragma once

#include "pcs/types.hpp"

#include <cstdint>
#include <vector>

namespace pcs {

enum class SpectralMode { exact, sampled };

struct EnumerationOptions {
  /// Exact enumeration runs when C(n, K) does not exceed this.
  std::uint64_t budget = 2'000'000;
  /// Sampled mode draws sample_factor * n random supports per call.
  int sample_factor = 10;
  /// Fixed sampling seed: results must not depend on who calls.
  std::uint64_t sample_seed = 0x5a3c1ed50b5e55edULL;
  /// Worker threads for exact enumeration (1 = sequential). The reduction is
  /// order-free, so the result is identical for any thread count.
  int threads = 1;
};

/// Extremal singular values over all K-column submatrices.
/// In sampled mode sigma_max is a lower bound and sigma_min an upper bound.
struct KExtremes {
  int K = 0;
  double sigma_max = 0.0;
  double sigma_min = 0.0;          // true minimum, zeros included
  double sigma_min_nonzero = 0.0;  // smallest singular value above the rank cutoff
  int max_rank = 0;                // largest submatrix rank encountered
  SupportSet argmax_support;
  SupportSet argmin_support;
  SpectralMode mode = SpectralMode::exact;
  std::uint64_t submatrices_examined = 0;
};

struct RicReport {
  int K = 0;
  /// max(sigma_max^2 - 1, 1 - sigma_min^2); only a lower bound in sampled mode.
  double delta_K = 0.0;
  double sigma_max_K = 0.0;
  double sigma_min_K = 0.0;
  double sigma_min_nonzero_K = 0.0;
  SpectralMode mode = SpectralMode::exact;
  std::uint64_t submatrices_examined = 0;
  SupportSet argmax_support;
  SupportSet argmin_support;
  int max_rank = 0;
};

/// Largest singular value, relative accuracy well inside 1e-10.
double spectral_norm(const Matrix& m);

KExtremes extremal_singular_k(const Matrix& m, int k, const EnumerationOptions& opts = {});

RicReport ric(const Matrix& m, int k, const EnumerationOptions& opts = {});

enum class RankVerdict { holds, fails, undecided };

struct RankPreservationRow {
  int k = 0;
  double sigma_max_E = 0.0;
  double sigma_min_A = 0.0;
  int rank_A = 0;
  int rank_A_hat = 0;
  SpectralMode mode = SpectralMode::exact;
  bool strict_inequality = false;  // sigma_max^(k)(E) < sigma_min^(k)(A)
  bool rank_equal = false;
};

struct RankPreservationReport {
  RankVerdict verdict = RankVerdict::undecided;
  std::vector<RankPreservationRow> rows;
};

/// Checks, for every k <= min(2K, n), that the perturbation cannot reduce the
/// rank of any k-column submatrix: sigma_max^(k)(E) < sigma_min^(k)(A), and
/// that the extremal submatrix ranks of A and A+E agree. Certified verdicts
/// require exact enumeration; with sampled bounds that straddle, the verdict
/// is undecided.
RankPreservationReport rank_preservation_check(const Matrix& a, const Matrix& e, int big_k,
                                               const EnumerationOptions& opts = {});

/// C(n, k), saturating at cap + 1.
std::uint64_t binomial_capped(Index n, int k, std::uint64_t cap);

}  // namespace pcs
