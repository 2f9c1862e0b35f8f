#pragma once

#include "fht/spectral_param.hpp"
#include "fht/types.hpp"

namespace fht {

// Plain-branch fundamental matrix [[h, s],[h', s']] built from
// hyp_pair_at_infinity.  Analytic off eta in (-inf,0] u (0,1]; continuous
// across (1,inf).  det = -(2a+1) everywhere.
Matrix2 gamma_hat(cplx a, CPoint eta);

struct QMatrix {
    Matrix2 value;
    Matrix2 D;  // diagonal factor with value = D (1 + i e^{a pi i} sigma_2)
};

QMatrix q_matrix(cplx a);

// The branch of gamma_hat whose only cuts are (-inf,0] and [1,inf): plain
// principal evaluation in the upper half plane, times the constant `glue`
// (the monodromy about eta=1) in the lower half plane.  The two pieces match
// across (0,1), and the induced jumps across the remaining rays are the
// monodromy matrices that produce the triangular jumps of Gamma.
struct GammaHatBranch {
    cplx a;
    Matrix2 glue;
};

GammaHatBranch make_gamma_hat_branch(cplx a);

// Evaluate the branch above.  Real eta outside [0,1] requires a shore tag;
// inside (0,1) the branches agree and no tag is needed.
Matrix2 gamma_hat_branched(const GammaHatBranch& br, CPoint eta);

// Per-lambda cache for gamma_solve.
struct GammaContext {
    Geometry geom;
    CPoint lambda;
    cplx a;
    Matrix2 Q, Qinv;
    GammaHatBranch branch;
    Matrix2 ghat_inf;  // branched gamma_hat at eta = M1(inf)
    Matrix2 prefix;    // sigma2 Q^{-1} ghat_inf^{-1}
};

GammaContext make_gamma_context(CPoint lambda, const Geometry& geom);

// The closed-form RHP solution.  z off [bl,br] or shore-tagged (z not an
// endpoint); a shore tag on real z is mapped through the orientation-reversing
// M1 to an eta shore.
Matrix2 gamma_solve(CPoint z, const GammaContext& ctx);
Matrix2 gamma_solve(CPoint z, CPoint lambda, const Geometry& geom);

// d Gamma / dz at the same points, in closed form: the fundamental pair
// solves eta(1-eta) w'' + a(a+1) w = 0, so the eta-derivative of the
// branched matrix is [[0,1],[-q,0]] times itself, q = a(a+1)/(eta(1-eta)).
Matrix2 gamma_derivative(CPoint z, const GammaContext& ctx);

// Jump matrix of Gamma across the real z axis: [[1,-i/lambda],[0,1]] on
// (bl,0), [[1,0],[i/lambda,1]] on (0,br), identity elsewhere.
Matrix2 z_jump_matrix(double x, cplx lambda, const Geometry& geom);

// Relative residual of Gamma(x+) = Gamma(x-) J(x), with both boundary values
// obtained independently at x +- i eps (eps = 1e-8) and Richardson
// extrapolated, so the check does not reuse the shore mechanism it verifies.
double verify_z_jump(double x, CPoint lambda, const Geometry& geom);

// Relative residual of the lambda-plane jump
//   Gamma(z;l+) = Gamma(z;l-) [1 - f2 g2^t / z]
// for real lambda in (-1/2,0) u (0,1/2); for |lambda| > 1/2 it measures
// two-sided continuity in lambda instead.
double verify_lambda_jump(cplx z, double lambda, const Geometry& geom);

}  // namespace fht
