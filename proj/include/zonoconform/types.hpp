#ifndef ZONOCONFORM_TYPES_HPP_
#define ZONOCONFORM_TYPES_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace zonoconform {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Data matrix convention: rows are samples, columns are dimensions.
using SampleMatrix = Matrix;

/// Default boundary tolerance for set membership, relative to generator scale.
inline constexpr double kDefaultTol = 1e-9;

/// Membership score assigned to points outside the base set. Sorts below
/// every grid level, so such points can only loosen a calibrated quantile.
inline constexpr double kBelowGridScore = -1.0;

/// Input spans a lower-dimensional subspace than the operation requires.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested dimension is outside the supported range of an operation.
class UnsupportedDimensionError : public std::invalid_argument {
 public:
  explicit UnsupportedDimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Sample covariance is singular or too badly conditioned to invert.
class SingularCovarianceError : public std::runtime_error {
 public:
  explicit SingularCovarianceError(const std::string& what)
      : std::runtime_error(what) {}
};

inline void check_arg(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_domain(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

inline void check_finite(const Matrix& m, const std::string& name) {
  if (!m.allFinite()) throw std::invalid_argument(name + ": non-finite entries");
}

}  // namespace zonoconform

#endif  // ZONOCONFORM_TYPES_HPP_
