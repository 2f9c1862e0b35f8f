#pragma once

#include <functional>
#include <vector>

#include "fht/types.hpp"

namespace fht {

// Everything in this header works in the symmetric normalization
// br = -bl = 1; general endpoints reduce to it by a Mobius change of
// variable and are not handled here.

// Phase S_eta(t) = -i ln( t(1-t) / (1 - t/eta) ) and its t-derivatives.
// Principal branches; valid for t in the disc B(1/2,1/2) and large |eta|,
// which keeps the argument of the logarithm off its cuts.
cplx s_phase(cplx t, cplx eta);
cplx s_phase_d1(cplx t, cplx eta);
cplx s_phase_d2(cplx t, cplx eta);

// Saddle points of S_eta: roots of t^2 - 2 eta t + eta, with the square
// root sqrt(eta^2 - eta) cut along eta in [0,1].
struct SaddleData {
    cplx eta;
    cplx t_minus, t_plus;      // t_minus -> 1/2, t_plus -> 2 eta as eta grows
    cplx s_at_saddle;          // S(t_minus) = -2i ln(t_minus)
    cplx s_second;             // S''(t_minus) = 2i / (t_minus (1 - t_minus))
};
SaddleData saddle_data(cplx eta);

// eta as a function of z; the annulus |z| ~ 1/(4M)..1/(2M) maps onto
// M <= |eta| <= 2M.
cplx eta_of_z(cplx z);

// The regions on which the saddle-point estimates are uniform.  M is kept
// configurable; the saddle angle condition |arg t_minus| < pi/8 is checked
// by check() over a sweep of the closed region.
struct AnnulusConfig {
    double m = 20.0;

    bool in_omega(cplx eta) const;        // M <= |eta| <= 2M
    bool in_omega_plus(cplx eta) const;   // additionally 0 <= arg eta <= pi
    bool in_omega_tilde(cplx z) const;    // eta_of_z(z) in Omega
    bool check(int samples = 64) const;   // saddle angle condition on Omega_+
};

// The g-function of this section is g_of_z from spectral_param.hpp.

// Leading saddle-point term of int_0^1 F(t) e^{-Im[a] S_eta(t)} dt:
//   e^{-Im[a] S(t-)} F(t-) sqrt(2 pi / (Im[a] S''(t-)))
// with the reported relative error scale M^2/|Im a|.  The caller is
// responsible for analyticity of F in B(1/2,1/2); a vanishing F(t-) is
// rejected since the leading term would be spurious.
struct SaddleEstimate {
    cplx value;
    double rel_error_scale;
};
SaddleEstimate steepest_descent_eval(const std::function<cplx(cplx)>& f,
                                     cplx eta, cplx lambda, double m = 20.0);

// Direct quadrature of int_0^1 (t(1-t)/(1-t/eta))^a dt on a doubly graded
// mesh; the endpoint exponents Re a > -1/2 are integrable.  Oracle for
// steepest_descent_eval.
cplx saddle_integral_direct(cplx a, cplx eta, int levels = 40, int pts = 16);

// Closed-form small-lambda leading terms of the hypergeometric pair at
// eta = (z+1)/(2z), for z in the annulus with Im eta >= 0 (Im z <= 0, where
// the saddle estimate holds; the opposite half plane is refused).  The
// upper/lower sign branch follows sign(Im lambda), with lambda_+ on the
// real axis meaning the limit from above.
enum class HypWhich { h, h_prime, s, s_prime };
cplx hyp_asymptotic(CPoint z, CPoint lambda, HypWhich which);

// Principal branches of sqrt(1 - z^2) and (1 - z^2)^{1/4}, the ones that
// match the exact pair in the factored forms; exposed for cross-checks.
cplx sqrt_1mz2(CPoint z);
cplx quarter_1mz2(CPoint z);

// Model Riemann-Hilbert family: Psi(z) = (1 + A/z) ((z^2-1)/z^2)^{sigma1/4}
// with A = [[x,-x],[y,-y]]; jumps -i sigma1 on (-1,0) and i sigma1 on (0,1).
Matrix2 model_psi(CPoint z, cplx x, cplx y);

// The distinguished solutions: Phi = model_psi with x = y = i/2, and the
// kappa-dependent selection Psi0 = Phi for Im kappa <= 0, sigma1 Phi sigma1
// for Im kappa >= 0.
Matrix2 model_phi(CPoint z);
Matrix2 psi0(CPoint z, cplx kappa);

// Local coordinates at z = -1 and z = +1:
//   xi_{-1} = kappa^2 (2g-1)^2 / 16,   xi_{+1} = kappa^2 (2g+1)^2 / 16,
// so that -4 sqrt(xi_{-1}) = kappa(2g-1) and 4 sqrt(xi_{+1}) = kappa(2g+1).
cplx local_coordinate(CPoint z, double kappa, int endpoint);

// Large-zeta normalization of the Bessel parametrix; used as the stand-in
// on the endpoint disc boundaries.
Matrix2 bessel_f(cplx zeta);

// Leading small-lambda form of Gamma(z; lambda) with region dispatch:
// plain Psi0 e^{-kappa g sigma3} off [-1,1], shore-corrected triangular
// factors on the cut, and sector-corrected factors inside the annulus
// within angle theta of the real axis.
Matrix2 gamma_asymptotic(CPoint z, CPoint lambda, double theta = PI / 6.0);

// The steepest-descent chain Gamma -> Y -> Z evaluated from the exact
// solution: Y = Gamma e^{kappa g sigma3}, then the lens factors.  The lens
// membership near the origin is taken as |arg(+-z)| < theta off the cut.
Matrix2 z_matrix(CPoint z, double kappa, double theta = PI / 6.0);

// Jump-deviation diagnostics for the error matrix on the contour Sigma:
// disc boundaries measure |Z Psi0^{-1} - 1| (the parametrix mismatch), the
// lens arcs measure the norm of the exponentially small triangular jump.
enum class SigmaArc { disc, lens_left, lens_right };
double error_jump_deviation(CPoint z, double kappa, SigmaArc arc);

// Steepest-descent path through t_minus traced by descent on Re S; returns
// samples from near t=0 to near t=1.  Used to certify Re[S - S(t-)] <= 0.
std::vector<cplx> trace_descent_path(cplx eta, double step = 1e-3,
                                     double endpoint_tol = 1e-6);

// Angles in (0,pi) and (-pi,0) where Re[S - S(t-)] changes sign on the
// circle |t - 1/2| = 1/2, located by scanning; returns the zero counts.
std::pair<int, int> level_set_crossings(cplx eta, int samples = 720);

}  // namespace fht
