#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fht/quadrature.hpp"
#include "fht/spectral_param.hpp"
#include "fht/types.hpp"

namespace fht {

// d_L, d_R at (z, lambda) for lambda in (-1/2, 0), together with the
// coefficients alpha, beta they are built from.  d_R is analytic off
// z in [bl,0], d_L off [0,br]; both are single valued for this lambda range.
struct SingularPair {
    cplx dL, dR;
    cplx alpha, beta;
};

SingularPair d_pair(CPoint z, double lambda, const Geometry& geom);

// The z -> infinity limit (eta -> M1(inf)), evaluated directly.
SingularPair d_pair_infinity(double lambda, const Geometry& geom);

// D_L, D_R: the d pair at spectral parameter -|lambda|/2, single valued for
// lambda in (-1,1) \ {0}.
SingularPair d_cap_pair(CPoint z, double lambda, const Geometry& geom);
SingularPair d_cap_infinity(double lambda, const Geometry& geom);

// Worst relative residual of the singular-function system
//   H_R[d_R(y;l)/y](x) = 2 l d_L(x;l)/x,   H_L[d_L(x;l)/x](y) = -2 l d_R(y;l)/y
// over interior grids of both subintervals.  The opposite signs are forced:
// H_L is minus the adjoint of H_R, so the composition H_R^* H_R acting on
// d_R/y must return +4 l^2 d_R/y.  The transforms are applied by graded
// quadrature (integrands vanish like t^{1/2} at the junction).
double svd_residual(double lambda, const Geometry& geom, int grid_n = 15,
                    int levels = 60, int pts = 16);

enum class Side { left, right };

// phi_L(y, l^2) = -D_L(y;l) / (pi y |l| D_R(inf;l)),
// phi_R(x, l^2) =  D_R(x;l) / (pi x |l| D_L(inf;l)); both real valued and
// normalized so that the transform of the subinterval indicator is +1.
double phi_kernel(double x, double lambda_sq, Side side, const Geometry& geom);

// Spectral densities d sigma / d lambda^2; real and non-negative on (0,1).
double sigma_prime(double lambda_sq, Side side, const Geometry& geom);

// Quadrature on the spectral axis lambda^2 in [lo_margin, 1-hi_margin],
// dyadically graded toward both endpoints where the densities and kernels
// are singular.  The low margin carries most of the grading: the density
// behaves like 1/(2 sqrt(t)) at 0 and smooth functions that do not vanish
// at the junction point keep O(m^{1/3}) spectral mass below margin m, so the
// low end must be taken very deep.  The defaults sit close to the limit of
// double precision: below ~1e-20 the singular-pair evaluation loses the
// digits needed to keep the kernels usable.
QuadRule spectral_rule(int n, double lo_margin = 1e-18,
                       double hi_margin = 1e-9);

// Space-side rule on one subinterval, dyadically graded toward the junction
// point deep enough to resolve the x^{-1/2}-type kernel oscillation down to
// the scale of the spectral rule's low margin.
QuadRule side_rule(Side side, const Geometry& geom, int levels = 65,
                   int pts = 4);

// Precomputed U transform between one subinterval and the spectral axis:
//   forward  U[f](l^2)  = int phi(x, l^2) f(x) dx
//   inverse  U*[g](x)   = int phi(x, l^2) g(l^2) sigma'(l^2) d l^2
// with phi sampled once on space x spectral nodes.
struct UTransform {
    Side side;
    Geometry geom;
    QuadRule space;          // nodes on the subinterval
    QuadRule spec;           // nodes on the spectral axis (lambda^2)
    Eigen::MatrixXd phi;     // phi(space_j, spec_i), row per spectral node
    Eigen::VectorXd sigma_p; // sigma'(spec_i)

    Eigen::VectorXcd forward(const Eigen::VectorXcd& f) const;
    Eigen::VectorXcd inverse(const Eigen::VectorXcd& g) const;

    // E_{lambda^2 <= upper}[f] = U* applied to the truncated U f
    Eigen::VectorXcd resolution_of_identity(const Eigen::VectorXcd& f,
                                            double upper) const;

    // <E_{upper} f, f> = int_{(0,upper)} |U f|^2 sigma' d l^2
    double spectral_mass(const Eigen::VectorXcd& f, double upper) const;

    double space_norm(const Eigen::VectorXcd& f) const;
    // L2(sigma) norm of a spectral-axis function restricted to (lo, hi)
    double spec_norm(const Eigen::VectorXcd& g, double lo = 0.0,
                     double hi = 1.0) const;
};

UTransform make_u_transform(Side side, const Geometry& geom,
                            const QuadRule& space, const QuadRule& spec);

}  // namespace fht
