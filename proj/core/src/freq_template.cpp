#include "cipsim/freq_template.hpp"

#include <cmath>

#include "cipsim/errors.hpp"

namespace cipsim {

FreqTemplate::FreqTemplate(Vector c, double b) : coeffs(std::move(c)), decay_b(b) {
    if (coeffs.size() < 1) throw Error("FreqTemplate: need at least one coefficient");
    if (!all_finite(coeffs)) throw Error("FreqTemplate: coefficients must be finite");
    if (!(decay_b > 0.0)) throw Error("FreqTemplate: decay_b must be > 0");
}

FreqTemplate FreqTemplate::ramp(double a, double b) {
    Vector c(2);
    c << 0.0, a;
    return FreqTemplate(c, b);
}

bool FreqTemplate::is_ramp() const {
    return coeffs.size() == 2 && coeffs(0) == 0.0;
}

double eval_rocof(const FreqTemplate& tpl, double t) {
    if (t < 0.0) throw Error("eval_rocof: t must be >= 0");
    // Horner evaluation of the polynomial.
    double p = 0.0;
    for (Index k = tpl.coeffs.size() - 1; k >= 0; --k) p = p * t + tpl.coeffs(k);
    return p * std::exp(-tpl.decay_b * t);
}

double eval_deviation(const FreqTemplate& tpl, double t) {
    if (t < 0.0) throw Error("eval_deviation: t must be >= 0");
    const double b = tpl.decay_b;
    const double ebt = std::exp(-b * t);
    // I_k = integral_0^t s^k exp(-b s) ds via the stable upward recurrence
    // I_k = (k I_{k-1} - t^k exp(-b t)) / b, I_0 = (1 - exp(-b t)) / b.
    double ik = -std::expm1(-b * t) / b;
    double tk = 1.0;  // t^k
    double acc = tpl.coeffs(0) * ik;
    for (Index k = 1; k < tpl.coeffs.size(); ++k) {
        tk *= t;
        ik = (static_cast<double>(k) * ik - tk * ebt) / b;
        acc += tpl.coeffs(k) * ik;
    }
    return acc;
}

double deviation_limit(const FreqTemplate& tpl) {
    const double b = tpl.decay_b;
    double acc = 0.0;
    double kfact_over_bk1 = 1.0 / b;  // k! / b^(k+1)
    acc += tpl.coeffs(0) * kfact_over_bk1;
    for (Index k = 1; k < tpl.coeffs.size(); ++k) {
        kfact_over_bk1 *= static_cast<double>(k) / b;
        acc += tpl.coeffs(k) * kfact_over_bk1;
    }
    return acc;
}

namespace {

// Least-squares fit of the polynomial coefficients at a fixed b.
// Returns the RMS residual; coefficients land in coeffs_out.
double fit_at_b(const std::vector<double>& times, const std::vector<double>& values,
                Index order, double b, SignalKind kind, Vector& coeffs_out) {
    const Index rows = static_cast<Index>(times.size());
    const Index cols = order + 1;
    Matrix design(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const double t = times[static_cast<std::size_t>(i)];
        if (kind == SignalKind::Rocof) {
            const double ebt = std::exp(-b * t);
            double tk = 1.0;
            for (Index k = 0; k < cols; ++k) {
                design(i, k) = tk * ebt;
                tk *= t;
            }
        } else {
            // Basis I_k(t; b), same recurrence as eval_deviation.
            const double ebt = std::exp(-b * t);
            double ik = -std::expm1(-b * t) / b;
            double tk = 1.0;
            design(i, 0) = ik;
            for (Index k = 1; k < cols; ++k) {
                tk *= t;
                ik = (static_cast<double>(k) * ik - tk * ebt) / b;
                design(i, k) = ik;
            }
        }
    }
    Eigen::Map<const Vector> rhs(values.data(), rows);
    coeffs_out = design.colPivHouseholderQr().solve(rhs);
    return std::sqrt((design * coeffs_out - rhs).squaredNorm() / static_cast<double>(rows));
}

}  // namespace

FitResult fit_template(const std::vector<double>& times, const std::vector<double>& values,
                       Index order, double b_min, double b_max, SignalKind kind) {
    if (order < 0) throw Error("fit_template: order must be >= 0");
    if (times.size() != values.size()) throw DimensionError("fit_template: times/values size mismatch");
    if (static_cast<Index>(times.size()) < order + 2)
        throw Error("fit_template: need at least order + 2 = " + std::to_string(order + 2) +
                    " samples, got " + std::to_string(times.size()));
    if (times.front() < 0.0) throw Error("fit_template: sample times must start at or after 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw Error("fit_template: sample times must be strictly increasing");
    if (!(b_min > 0.0) || !(b_max >= b_min))
        throw Error("fit_template: need 0 < b_min <= b_max");

    bool all_zero = true;
    for (double v : values)
        if (v != 0.0) { all_zero = false; break; }
    if (all_zero) {
        return FitResult{FreqTemplate(Vector::Zero(order + 1), 0.5 * (b_min + b_max)), 0.0};
    }

    auto objective = [&](double b, Vector& c) { return fit_at_b(times, values, order, b, kind, c); };

    // Golden-section search on [b_min, b_max].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = b_min, hi = b_max;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    Vector c1, c2;
    double f1 = objective(x1, c1);
    double f2 = objective(x2, c2);
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1; f2 = f1; c2 = c1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1, c1);
        } else {
            lo = x1;
            x1 = x2; f1 = f2; c1 = c2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2, c2);
        }
    }
    double b_best = (f1 <= f2) ? x1 : x2;
    Vector c_best;
    double res = objective(b_best, c_best);
    return FitResult{FreqTemplate(c_best, b_best), res};
}

}  // namespace cipsim
