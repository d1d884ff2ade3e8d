#pragma once

#include <Eigen/Dense>

namespace cipsim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// True when every entry of m is finite (no NaN/Inf).
inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace cipsim
