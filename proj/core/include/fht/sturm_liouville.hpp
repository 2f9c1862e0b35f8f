#pragma once

#include <Eigen/Dense>
#include <functional>

#include "fht/diagonalization.hpp"
#include "fht/quadrature.hpp"
#include "fht/types.hpp"

namespace fht {

// Coefficient of the commuting differential operator
//   L f = (P f')' + 2 (x - (br+bl)/4)^2 f,   P(x) = x^2 (x-bl)(x-br).
double p_poly(double x, const Geometry& geom);
double p_poly_prime(double x, const Geometry& geom);

// L applied to a black-box sampler by centered differences on f (the P
// factors are differentiated analytically).  h is the difference step.
cplx l_apply(const std::function<cplx(double)>& f, double x,
             const Geometry& geom, double h = 1e-4);

// Eigenbasis of L f = omega f on one subinterval.  phi is bounded at the
// outer endpoint (value 1 there); theta carries a log singularity at it.
// Both are real for real x, omega.  Their Wronskian satisfies
// +-P(x) W(theta, phi) = 1 (plus sign on the right subinterval).
struct SLBasis {
    cplx f, f_prime;        // f_R or f_L and its x-derivative
    double phi, phi_prime;  // phi_2 (right) or phi_1 (left)
    double theta, theta_prime;
    cplx k, l;              // connection constants k and l_2 (or l_1)
    double mu;
};

// side right: x in (0, br); side left: x in (bl, 0).  Evaluation is refused
// within 1e-4*(br-bl) of the outer endpoint, where theta diverges and the
// hypergeometric argument degenerates; boundary statements (phi -> 1,
// Wronskian limits) are reached by extrapolation from outside that band.
SLBasis sl_basis(double x, double omega, Side side, const Geometry& geom);

// Weyl functions m_j = -l_j / k (j=1 left, j=2 right) and the exact
// spectral densities rho_j'(omega) = tanh(mu pi) / (b_j^2 (br - bl)).
struct WeylData {
    cplx m1, m2;
    double rho1_prime, rho2_prime;
    double mu;
};
WeylData weyl_data(double omega, const Geometry& geom);

// m_j continued to complex omega (Im omega > 0); its boundary imaginary
// part recovers the density: Im m_j(omega + i0) = pi rho_j'(omega).
cplx weyl_m(cplx omega, Side side, const Geometry& geom);

// Transforms U_1 (left) and U_2 (right) against the phi_j kernels with
// measure rho_j, parameterized by lambda^2 = sech^2(mu pi) in (0,1) so the
// spectral rules of the diagonalization module are reused.  rho_w holds
// |d rho_j / d lambda^2| at the nodes; mult holds sech(mu pi).
struct SLTransform {
    Side side;
    Geometry geom;
    QuadRule space;
    QuadRule spec;           // lambda^2 nodes
    Eigen::MatrixXd phi;     // phi_j(space_k, omega(spec_i)), row per spec node
    Eigen::VectorXd rho_w;
    Eigen::VectorXd mult;

    Eigen::VectorXcd forward(const Eigen::VectorXcd& f) const;
    Eigen::VectorXcd inverse(const Eigen::VectorXcd& g) const;
    double space_norm(const Eigen::VectorXcd& f) const;
    double spec_norm(const Eigen::VectorXcd& g) const;
};

SLTransform make_sl_transform(Side side, const Geometry& geom,
                              const QuadRule& space, const QuadRule& spec);

}  // namespace fht
