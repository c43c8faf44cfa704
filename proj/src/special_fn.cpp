#include "relayarq/special_fn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

// Minimax rational approximations for K1 after Russon & Blair (Chalk River
// AECL-3461), double-precision refit. Split at x = 1: polynomial-plus-log
// region below, exponentially scaled rational region above.

namespace relayarq {
namespace {

template <int N>
double eval_poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (int i = N - 2; i >= 0; --i) r = r * x + c[i];
    return r;
}

// x <= 1 region. K1(x) = rat2(x^2)*x + 1/x + log(x)*i1ish(x) where
// i1ish approximates I1(x).
constexpr double kY1 = 8.69547128677368164e-02;
constexpr double kP1[] = {
    -3.62137953440350228e-03, 7.11842087490330300e-03,
    1.00302560256614306e-05, 1.77231085381040811e-06};
constexpr double kQ1[] = {
    1.00000000000000000e+00, -4.80414794429043831e-02,
    9.85972641934416525e-04, -8.91196859397070326e-06};
constexpr double kP2[] = {
    -3.07965757829206184e-01, -7.80929703673074907e-02,
    -2.70619343754051620e-03, -2.49549522229072008e-05};
constexpr double kQ2[] = {
    1.00000000000000000e+00, -2.36316836412163098e-02,
    2.64524577525962719e-04, -1.49749618004162787e-06};

// x > 1 region, K1(x) = (rat3(1/x) + Y3) * exp(-x) / sqrt(x).
constexpr double kY3 = 1.45034217834472656e+00;
constexpr double kP3[] = {
    -1.97028041029226295e-01, -2.32408961548087617e+00,
    -7.98269784507699938e+00, -2.39968410774221632e+00,
    3.28314043780858713e+01, 5.67713761158496058e+01,
    3.30907788466509823e+01, 6.62582288933739787e+00,
    3.08851840645286691e-01};
constexpr double kQ3[] = {
    1.00000000000000000e+00, 1.41811409298826118e+01,
    7.35979466317556420e+01, 1.77821793937080859e+02,
    2.11014501598705982e+02, 1.19425262951064454e+02,
    2.88448064302447607e+01, 2.27912927104139732e+00,
    2.50358186953478678e-02};

// Half of I1(x)/(x/2): the series factor shared by K1 and x*K1.
double i1_over_half_x(double x) {
    double y = 0.25 * x * x;
    return (eval_poly(kP1, y) / eval_poly(kQ1, y) + kY1) * y * y + 0.5 * y + 1.0;
}

} // namespace

double bessel_k1(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel_k1: argument must be positive and finite");
    if (x <= 1.0) {
        double xx = x * x;
        double i1ish = i1_over_half_x(x) * x / 2.0;
        return eval_poly(kP2, xx) / eval_poly(kQ2, xx) * x + 1.0 / x +
               std::log(x) * i1ish;
    }
    double ix = 1.0 / x;
    double r = (eval_poly(kP3, ix) / eval_poly(kQ3, ix) + kY3) * std::exp(-x) /
               std::sqrt(x);
    // flush subnormals so callers see a clean underflow
    if (r < std::numeric_limits<double>::min()) return 0.0;
    return r;
}

double xi_k1_factor(double xi) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw std::domain_error("xi_k1_factor: argument must be nonnegative and finite");
    if (xi == 0.0) return 1.0;
    double x = std::sqrt(xi);
    if (x <= 1.0) {
        // x*K1(x) with the 1/x * x pair cancelled symbolically, so the
        // small-argument limit approaches 1 from below without rounding
        // above it.
        double xx = x * x;
        return 1.0 + eval_poly(kP2, xx) / eval_poly(kQ2, xx) * xx +
               0.5 * xx * std::log(x) * i1_over_half_x(x);
    }
    return x * bessel_k1(x);
}

} // namespace relayarq
