#pragma once

#include "fht/types.hpp"

namespace fht {

// Principal-branch log-gamma, continuous on the plane cut along (-inf,0].
cplx ln_gamma(cplx z);

// Gamma via exp(ln_gamma); safe for the moderate arguments used here.
cplx cgamma(cplx z);

// Digamma Psi(z).
cplx digamma(cplx z);

struct HypParams {
    cplx a, b, c;
};

// Gauss 2F1(a,b;c;z).  z may be tagged with a shore when it lies on the cut
// [1,inf).  Dispatches between the direct series, the Pfaff transform, and
// the 1-z / 1/z connection formulas; connection coefficients at integer
// degeneracies are handled by eps-perturbation of `a` with two-point
// Richardson extrapolation.
cplx gauss_2f1(const HypParams& p, CPoint z);

// Maclaurin series only (|z|<1); exposed for cross-checks.
cplx hyp_series(cplx a, cplx b, cplx c, cplx z);

// Values of the solution pair about eta=infinity and their derivatives.
struct HypPairValue {
    cplx h, h_prime, s, s_prime;

    // h*s' - s*h', equal to -(2a+1) for all eta
    cplx wronskian() const { return h * s_prime - s * h_prime; }
};

// The pair (h, s) solving eta(1-eta) w'' + a(a+1) w = 0, normalized at
// infinity as h ~ e^{a pi i} eta^{-a}, s ~ -e^{-a pi i} eta^{a+1}.
// eta must lie off [0,1] or carry a shore tag; additionally eta on the
// negative axis uses its shore for the power prefactors.
HypPairValue hyp_pair_at_infinity(cplx a, CPoint eta);

// log(1-z) and log(-z) honoring a shore tag for z on the positive axis.
cplx log1m(CPoint z);
cplx log_neg(CPoint z);
// principal log honoring a shore tag for z on the negative axis
cplx log_shore(CPoint z);
// z^p via log_shore
cplx pow_shore(CPoint z, cplx p);

}  // namespace fht
