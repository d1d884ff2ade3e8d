#pragma once

#include <vector>

#include "cipsim/types.hpp"

namespace cipsim {

/// Parametric frequency-excursion template.
///
/// ROCOF:     dw_dot(t) = P(t) * exp(-b t),  P(t) = c0 + c1 t + ... + cn t^n
/// deviation: dw(t)     = integral_0^t P(s) exp(-b s) ds   (closed form)
///
/// Coefficients are stored in ascending powers; c0 may be nonzero (a step in
/// ROCOF at t = 0). decay_b must be positive so the deviation stays bounded.
struct FreqTemplate {
    Vector coeffs;     ///< c0..cn, ascending powers [pu/s]
    double decay_b;    ///< exponential decay rate b [1/s], > 0

    FreqTemplate(Vector c, double b);

    /// Polynomial order n (coeffs.size() - 1).
    Index order() const { return coeffs.size() - 1; }

    /// Ramp-ROCOF template dw_dot = a t exp(-b t).
    static FreqTemplate ramp(double a, double b);

    /// True for the one-term ramp family (order 1, c0 == 0).
    bool is_ramp() const;
};

/// ROCOF value P(t) exp(-b t); requires t >= 0.
double eval_rocof(const FreqTemplate& tpl, double t);

/// Frequency deviation: the exact antiderivative of the ROCOF from 0 to t.
double eval_deviation(const FreqTemplate& tpl, double t);

/// Limit of the deviation as t -> infinity: sum_k c_k k! / b^(k+1).
double deviation_limit(const FreqTemplate& tpl);

/// Which signal a sample series represents.
enum class SignalKind { Rocof, Deviation };

struct FitResult {
    FreqTemplate tpl;
    double rms_residual;  ///< RMS of sample residuals at the fitted (b, coeffs)
};

/// Fit a template to samples of the ROCOF (or the deviation) by golden-section
/// search on b over [b_min, b_max] with a linear least-squares solve for the
/// polynomial coefficients at each candidate b.
///
/// Requires at least order + 2 samples with strictly increasing times
/// starting at or after 0. All-zero samples yield the zero template with
/// zero residual.
FitResult fit_template(const std::vector<double>& times,
                       const std::vector<double>& values,
                       Index order, double b_min, double b_max,
                       SignalKind kind = SignalKind::Rocof);

}  // namespace cipsim
