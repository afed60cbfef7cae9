#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Violated mathematical precondition (zero denominator, failed theorem
/// assumption, out-of-scope budget). The CLI maps this to exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input that never reaches the math (bad file, bad shape,
/// out-of-range argument). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(const Matrix& m) { return m.allFinite(); }
inline bool is_finite(const Vector& v) { return v.allFinite(); }

/// Strictly increasing set of column (or coordinate) indices, 0-based.
struct SupportSet {
  std::vector<Index> indices;

  SupportSet() = default;

  /// Sorts and validates: indices must be unique and, when n >= 0, inside [0, n).
  explicit SupportSet(std::vector<Index> idx, Index n = -1);

  Index size() const { return static_cast<Index>(indices.size()); }
  bool empty() const { return indices.empty(); }
  bool contains(Index i) const;

  bool operator==(const SupportSet& other) const { return indices == other.indices; }
};

/// Columns of M indexed by T, in increasing index order.
Matrix restrict_columns(const Matrix& m, const SupportSet& t);

/// Entries of v indexed by T, in increasing index order.
Vector restrict_entries(const Vector& v, const SupportSet& t);

/// Inverse of restrict_entries: places vT on support T of an n-vector, zero elsewhere.
Vector scatter_to_full(const Vector& v_t, const SupportSet& t, Index n);

}  // namespace pcs
