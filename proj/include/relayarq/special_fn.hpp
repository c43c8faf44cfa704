#pragma once

namespace relayarq {

/// Modified Bessel function of the second kind, order one.
///
/// Accurate to a few ulps over the normal double range. Returns 0 once the
/// true value drops below the smallest normal positive double (x ~ 706).
/// Throws std::domain_error for x <= 0 or non-finite x.
double bessel_k1(double x);

/// sqrt(xi) * K1(sqrt(xi)), extended by continuity to 1 at xi = 0.
///
/// Strictly decreasing in xi with values in (0, 1]; underflows to 0 for very
/// large xi. Throws std::domain_error for negative or non-finite xi.
double xi_k1_factor(double xi);

} // namespace relayarq
