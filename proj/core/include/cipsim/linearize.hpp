#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cipsim/types.hpp"

namespace cipsim {

/// Nonlinear converter-interfaced power source (CIPS) model in semi-explicit
/// DAE form, with the equivalent-machine frequency deviation dw and ROCOF
/// dw_dot entering as inputs:
///
///   dx/dt = F(x, y, V, dw, dw_dot)        n_x differential residuals
///   0     = G(x, y, V, dw, dw_dot)        n_y algebraic residuals
///   P_gen = P(x, y, V, dw, dw_dot)        active power output
///   V     = voltage_map(x, y, dw, dw_dot) grid-side voltage coupling
///
/// n_y and n_v may be zero (pure ODE / voltage-decoupled models).
struct NonlinearCipsModel {
    Index n_x = 0;
    Index n_y = 0;
    Index n_v = 0;

    using ResidualFn = std::function<Vector(const Vector& x, const Vector& y, const Vector& v,
                                            double dw, double dw_dot)>;
    using OutputFn = std::function<double(const Vector& x, const Vector& y, const Vector& v,
                                          double dw, double dw_dot)>;
    using VoltageFn = std::function<Vector(const Vector& x, const Vector& y,
                                           double dw, double dw_dot)>;

    ResidualFn residual_f;   ///< differential residuals, size n_x
    ResidualFn residual_g;   ///< algebraic residuals, size n_y (unused when n_y == 0)
    OutputFn output_p;       ///< P_gen
    VoltageFn voltage_map;   ///< voltage closure, size n_v (unused when n_v == 0)

    /// Optional validity box around the equilibrium for the differential
    /// states; find_equilibrium rejects guesses outside it.
    std::optional<std::pair<Vector, Vector>> state_box;
};

/// Operating point with dw = dw_dot = 0 and all residuals at zero.
struct EquilibriumPoint {
    Vector x;
    Vector y;
    Vector v;
    double residual_norm = 0.0;  ///< inf-norm of [F; G] at the point
    int iterations = 0;
};

/// Linear small-signal model
///   dx/dt  = A dx + B1 dw + B2 dw_dot
///   dP_gen = C dx + D1 dw + D2 dw_dot
struct LinearCipsModel {
    Matrix a;   ///< n x n
    Matrix b1;  ///< n x 1
    Matrix b2;  ///< n x 1
    Matrix c;   ///< 1 x n
    double d1 = 0.0;
    double d2 = 0.0;

    Vector x_ep;                            ///< equilibrium the model was cut at
    Eigen::VectorXcd eigenvalues;           ///< spectrum of A
    bool stable = true;                     ///< all Re(eig) < 0

    LinearCipsModel() = default;
    /// Validates dimensions and finiteness, computes the spectrum and the
    /// stability flag (instability is recorded, not rejected).
    LinearCipsModel(Matrix a, Matrix b1, Matrix b2, Matrix c, double d1, double d2,
                    Vector x_ep = Vector());

    Index dim() const { return a.rows(); }
    /// Smallest |Re(eigenvalue)| of A; the slowest decay rate when stable.
    double min_decay_rate() const;
};

/// Newton solve of the stacked residuals [F; G] = 0 at dw = dw_dot = 0.
/// Converges to inf-norm <= 1e-10 within 50 iterations or throws
/// ConvergenceError; a singular Jacobian throws SingularMatrixError.
/// A guess already at residual <= 1e-10 is returned unchanged.
EquilibriumPoint find_equilibrium(const NonlinearCipsModel& model,
                                  const Vector& x_guess,
                                  const Vector& y_guess = Vector());

/// Central-finite-difference linearization at an equilibrium, eliminating
/// the algebraic variables and the voltage coupling by Schur complement on
/// the algebraic block. Throws SingularMatrixError (with the condition
/// number) when the algebraic block is not invertible.
LinearCipsModel linearize(const NonlinearCipsModel& model, const EquilibriumPoint& ep);

/// Parameters of the built-in first-order converter power loop
///
///   tau dP/dt = (P_ref + K_dr dw + K_ie dw_dot) - P
///   P_gen     = P + curvature * (P - P_ref)^2
///
/// The quadratic output term vanishes at the equilibrium (P = P_ref) along
/// with its first derivative, so the small-signal matrices are independent
/// of it; curvature = 0 (the default) makes the model exactly affine.
struct DroopParams {
    double tau = 0.05;      ///< tracking time constant [s]
    double p_ref = 0.5;     ///< reference power [pu]
    double k_dr = 0.0;      ///< frequency-deviation gain [pu/pu]
    double k_ie = 0.0;      ///< ROCOF gain [pu.s/pu]
    double curvature = 0.0; ///< output curvature [1/pu]
};

/// Build the droop model as a NonlinearCipsModel (n_y = n_v = 0).
NonlinearCipsModel make_droop_model(const DroopParams& p);

/// Hand linearization of the droop model:
/// A = [[-1/tau]], B1 = [[K_dr/tau]], B2 = [[K_ie/tau]], C = [[1]], D1 = D2 = 0.
LinearCipsModel droop_linear_model(const DroopParams& p);

}  // namespace cipsim
