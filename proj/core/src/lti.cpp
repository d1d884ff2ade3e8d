#include "cipsim/lti.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "cipsim/errors.hpp"

namespace cipsim {

Matrix expm(const Matrix& m, double t) {
    if (m.rows() != m.cols())
        throw DimensionError("expm: matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!std::isfinite(t)) throw Error("expm: t must be finite");
    return (m * t).exp();
}

Vector solve_homogeneous(const Matrix& a, const Vector& x0, double t) {
    if (a.rows() != a.cols()) throw DimensionError("solve_homogeneous: A must be square");
    if (x0.size() != a.rows())
        throw DimensionError("solve_homogeneous: dim(x0) = " + std::to_string(x0.size()) +
                             " does not match dim(A) = " + std::to_string(a.rows()));
    return expm(a, t) * x0;
}

namespace {

// Companion system generating the template signal as an autonomous LTI
// output. State w_k(s) = s^k exp(-b s) / k!, so dW/ds = (L - b I) W with L
// the subdiagonal shift, W(0) = e0, and the ROCOF is c~^T W with c~_k = c_k k!.
// The deviation gets one extra integrator state appended.
struct SignalGenerator {
    Matrix sys;     // autonomous system matrix
    Vector w0;      // initial state
    Eigen::RowVectorXd out;  // output row picking the signal
};

SignalGenerator make_generator(const FreqTemplate& tpl, Drive drive) {
    const Index m = tpl.coeffs.size();
    Matrix shift = Matrix::Zero(m, m);
    for (Index k = 1; k < m; ++k) shift(k, k - 1) = 1.0;
    Matrix f = shift - tpl.decay_b * Matrix::Identity(m, m);

    Eigen::RowVectorXd rocof_row(m);
    double kfact = 1.0;
    for (Index k = 0; k < m; ++k) {
        if (k > 0) kfact *= static_cast<double>(k);
        rocof_row(k) = tpl.coeffs(k) * kfact;
    }

    SignalGenerator gen;
    if (drive == Drive::Rocof) {
        gen.sys = f;
        gen.w0 = Vector::Unit(m, 0);
        gen.out = rocof_row;
    } else {
        // Append the deviation as an integrator of the ROCOF output.
        gen.sys = Matrix::Zero(m + 1, m + 1);
        gen.sys.topLeftCorner(m, m) = f;
        gen.sys.bottomLeftCorner(1, m) = rocof_row;
        gen.w0 = Vector::Zero(m + 1);
        gen.w0(0) = 1.0;
        gen.out = Eigen::RowVectorXd::Zero(m + 1);
        gen.out(m) = 1.0;
    }
    return gen;
}

}  // namespace

Vector convolve_poly_exp(const Matrix& a, const Matrix& b,
                         const FreqTemplate& tpl, double t, Drive drive) {
    const Index n = a.rows();
    if (a.rows() != a.cols()) throw DimensionError("convolve_poly_exp: A must be square");
    if (b.rows() != n || b.cols() != 1)
        throw DimensionError("convolve_poly_exp: B must be " + std::to_string(n) + "x1");
    if (t < 0.0) throw Error("convolve_poly_exp: t must be >= 0");

    const SignalGenerator gen = make_generator(tpl, drive);
    const Index m = gen.sys.rows();

    // Block system [x; w]' = [[A, B*out],[0, sys]] [x; w]; the convolution is
    // the top block of its flow from [0; w0].
    Matrix block = Matrix::Zero(n + m, n + m);
    block.topLeftCorner(n, n) = a;
    block.topRightCorner(n, m) = b * gen.out;
    block.bottomRightCorner(m, m) = gen.sys;

    const Matrix phi = expm(block, t);
    return phi.topRightCorner(n, m) * gen.w0;
}

ForcedSolution solve_forced(const Matrix& a, const Matrix& b1, const Matrix& b2,
                            const Vector& x0, const FreqTemplate& tpl, double t) {
    ForcedSolution sol;
    sol.homogeneous = solve_homogeneous(a, x0, t);
    sol.deviation_forced = convolve_poly_exp(a, b1, tpl, t, Drive::Deviation);
    sol.rocof_forced = convolve_poly_exp(a, b2, tpl, t, Drive::Rocof);
    return sol;
}

}  // namespace cipsim
