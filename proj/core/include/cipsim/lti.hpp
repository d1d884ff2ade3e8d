#pragma once

#include "cipsim/freq_template.hpp"
#include "cipsim/types.hpp"

namespace cipsim {

/// Matrix exponential exp(M t). M must be square; t may be negative.
Matrix expm(const Matrix& m, double t);

/// Homogeneous LTI solution x(t) = exp(A t) x0.
Vector solve_homogeneous(const Matrix& a, const Vector& x0, double t);

/// Which template signal drives a convolution input channel.
enum class Drive { Rocof, Deviation };

/// Convolution of the state transition with a template-driven input:
///
///   integral_0^t exp(A (t - s)) B u(s) ds
///
/// where u is the template ROCOF (Drive::Rocof) or the template deviation
/// (Drive::Deviation). Evaluated exactly (to matrix-exponential accuracy) by
/// one exponential of an augmented block matrix in which the input signal is
/// generated by an autonomous companion system; no quadrature, and no
/// invertibility requirement on A or A + bI.
Vector convolve_poly_exp(const Matrix& a, const Matrix& b,
                         const FreqTemplate& tpl, double t, Drive drive);

struct ForcedSolution {
    Vector homogeneous;      ///< exp(A t) x0
    Vector deviation_forced; ///< B1 channel driven by the deviation
    Vector rocof_forced;     ///< B2 channel driven by the ROCOF
    Vector total() const { return homogeneous + deviation_forced + rocof_forced; }
};

/// Superposition solution of dx/dt = A x + B1 dw + B2 dw_dot driven by the
/// template, split into its three initial-value-problem components.
ForcedSolution solve_forced(const Matrix& a, const Matrix& b1, const Matrix& b2,
                            const Vector& x0, const FreqTemplate& tpl, double t);

}  // namespace cipsim
