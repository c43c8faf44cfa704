#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace relayarq::oracles {

double k1_quadrature(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("k1_quadrature: x must be positive");
    // cut where exp(-x cosh T) is ~e^-52 of the result scale
    double T = std::acosh(1.0 + 52.0 / x);
    const int n = 4000;
    double h = T / n;
    double acc = 0.5 * (std::exp(-x) + std::exp(-x * std::cosh(T)) * std::cosh(T));
    for (int i = 1; i < n; ++i) {
        double c = std::cosh(i * h);
        acc += std::exp(-x * c) * c;
    }
    return acc * h;
}

double af_tree_mean_slots(double eps1, double eps2) {
    double p1 = 1.0 - eps1;
    double p2 = eps1 * (1.0 - eps2);
    double p3 = eps1 * eps2;
    double acc = 0.0;
    double w = 1.0;  // p3^j
    for (long j = 0; j < 1000000; ++j) {
        double term = w * ((2.0 * j + 1.0) * p1 + (2.0 * j + 2.0) * p2);
        acc += term;
        w *= p3;
        if (w * (2.0 * j + 4.0) < 1e-18 * (acc + 1.0)) break;
    }
    return acc;
}

double df_tree_mean_slots(double eps1, double eps2, double eps3) {
    // relay retry branch: mass and mean retry count, enumerated
    double inner_mass = 0.0, inner_mean = 0.0;
    double w = 1.0 - eps3;  // e3^(m-1) * (1-e3)
    for (long m = 1; m < 1000000; ++m) {
        inner_mass += w;
        inner_mean += static_cast<double>(m) * w;
        w *= eps3;
        if (w * (static_cast<double>(m) + 2.0) < 1e-18) break;
    }
    double acc = 0.0;
    double outer = 1.0;  // (e1*e2)^j
    for (long j = 0; j < 1000000; ++j) {
        double src_tx = static_cast<double>(j) + 1.0;  // source slots so far
        double direct = (1.0 - eps1) * src_tx;
        double relayed = eps1 * (1.0 - eps2) * (src_tx * inner_mass + inner_mean);
        acc += outer * (direct + relayed);
        outer *= eps1 * eps2;
        if (outer * (src_tx + inner_mean + 4.0) < 1e-18 * (acc + 1.0)) break;
    }
    return acc;
}

} // namespace relayarq::oracles
