#pragma once

#include <Eigen/Dense>

#include "fht/quadrature.hpp"
#include "fht/rhp_gamma.hpp"
#include "fht/types.hpp"

namespace fht {

// Kernel of the coupling operator: (chiL(x)chiR(z) + chiR(x)chiL(z)) / (2 pi i (x-z)).
cplx k_kernel(double z, double x, const Geometry& geom);

// Resolvent kernel R(z,x;lambda) through Gamma.  x, z interior to the
// subintervals; the same-interval z = x limit is removable and is taken in
// closed form through gamma_derivative.  Toward the junction point the
// diagonal behaves like c/x (numerically c ~ 6.6e-3 at lambda=2), which is
// what makes raw collocation residuals plateau near the corner.
cplx resolvent_kernel(double z, double x, const GammaContext& ctx);
cplx resolvent_kernel(double z, double x, CPoint lambda, const Geometry& geom);

// Jump of the resolvent kernel across the spectral cut, bilinear closed form
// valid for all interior x, z; for x,z in the same subinterval it reduces to
// the rank-1 d (x) d expressions.
cplx resolvent_jump(double z, double x, double lambda, const Geometry& geom);

// Composite Gauss-Legendre discretization per subinterval, on panels
// dyadically graded toward the junction point 0 and never straddling it.
// The grading resolves the weak power singularities the resolvent kernel
// carries at 0; without it the quadrature error stalls around 1e-4.
struct NystromOperator {
    std::vector<double> nodes;    // left nodes then right nodes
    std::vector<double> weights;
    int n_left = 0;

    Eigen::MatrixXcd khat;      // K-hat, acting on node values
    Eigen::MatrixXd hl;         // H_L: left values -> right nodes
    Eigen::MatrixXd hr;         // H_R: right values -> left nodes
    Eigen::MatrixXd hstarh_r;   // H_R^* H_R = -H_L H_R on the right nodes
    Eigen::MatrixXd hstarh_l;   // H_L^* H_L = -H_R H_L on the left nodes

    // K-hat conjugated by sqrt(weights); Hermitian up to roundoff
    Eigen::MatrixXcd khat_symmetrized() const;

    // H_R^* H_R conjugated by sqrt(weights) on the right nodes; similar to
    // hstarh_r, and exactly symmetric positive semidefinite by construction
    // (it factors as the Gram matrix of the symmetrized H_R block).
    Eigen::MatrixXd hstarh_r_symmetrized() const;

    // (I - H_R^* H_R / lambda^2)^{-1} by direct solve
    Eigen::MatrixXcd rr_resolvent(cplx lambda) const;
};

// n is the approximate total node count; it is split into dyadic panels per
// subinterval with a fixed point count per panel.
NystromOperator build_nystrom(const Geometry& geom, int n);

// Assemble the same operator on caller-supplied per-subinterval rules; used
// when the discretization must match another object built on those rules
// (e.g. a spectral transform sharing the space nodes).
NystromOperator build_nystrom(const Geometry& geom, const QuadRule& left,
                              const QuadRule& right);

// R-hat on the Nystrom grid with Gamma evaluated once per node.
Eigen::MatrixXcd resolvent_matrix(const NystromOperator& op, CPoint lambda,
                                  const Geometry& geom);

// Operator norm of a defect matrix measured on L2: the defect is compressed
// (Galerkin) onto per-subinterval Legendre polynomials up to `degree`, with
// inner products taken in the quadrature measure.  Collocation rows next to
// the junction point carry their true L2 weight here; the raw entrywise
// residual of resolvent identities has an O(1)-relative floor at those rows
// because the kernel diagonal has a simple pole at 0, while the compressed
// norm converges to zero for identities that hold in operator sense.
double galerkin_defect_norm(const std::vector<double>& nodes,
                            const std::vector<double>& weights,
                            const Eigen::MatrixXcd& defect, int degree,
                            const Geometry& geom, bool use_left, bool use_right);
double galerkin_defect_norm(const NystromOperator& op,
                            const Eigen::MatrixXcd& defect, int degree,
                            const Geometry& geom);

}  // namespace fht
