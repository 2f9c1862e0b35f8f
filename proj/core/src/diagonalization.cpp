#include "fht/diagonalization.hpp"

#include <cmath>
#include <stdexcept>

#include "fht/complexfn.hpp"
#include "fht/rhp_gamma.hpp"

namespace fht {

namespace {

SingularPair d_from_eta(CPoint eta, double lambda) {
    if (!(lambda > -0.5 && lambda < 0.0))
        throw std::invalid_argument("d_pair: lambda must lie in (-1/2, 0)");
    cplx a = a_of_lambda(CPoint(lambda, Shore::minus));
    cplx eapi = std::exp(a * PI * I);
    SingularPair d;
    d.alpha = std::tan(a * PI) * cgamma(a) /
              (eapi * std::exp((a + 1.0) * std::log(4.0)) * cgamma(a + 1.5));
    d.beta = std::exp(a * std::log(4.0)) * eapi * cgamma(a + 0.5) / cgamma(a + 2.0);
    // h', s' are taken on the same branch of gamma_hat that Gamma uses
    Matrix2 g = gamma_hat_branched(make_gamma_hat_branch(a), eta);
    d.dR = d.alpha * g.a21 + d.beta * g.a22;
    d.dL = -eapi * d.alpha * g.a21 + d.beta * g.a22 / eapi;
    return d;
}

}  // namespace

SingularPair d_pair(CPoint z, double lambda, const Geometry& geom) {
    CPoint eta;
    if (z.v.imag() == 0.0) {
        double x = z.v.real();
        if (x == 0.0 || x == geom.bl || x == geom.br)
            throw std::invalid_argument("d_pair: z at a singular endpoint");
        eta = CPoint(geom.br * (x - geom.bl) / (x * geom.width()), flip(z.shore));
    } else {
        eta = CPoint(geom.br * (z.v - geom.bl) / (z.v * geom.width()));
    }
    return d_from_eta(eta, lambda);
}

SingularPair d_pair_infinity(double lambda, const Geometry& geom) {
    // eta0 lies on (0,1) where the individual pair is cut but both d
    // combinations are continuous; either shore gives the same values
    return d_from_eta(CPoint(geom.br / geom.width(), Shore::plus), lambda);
}

SingularPair d_cap_pair(CPoint z, double lambda, const Geometry& geom) {
    if (lambda == 0.0 || std::abs(lambda) >= 1.0)
        throw std::invalid_argument("d_cap_pair: lambda must lie in (-1,1)\\{0}");
    return d_pair(z, -std::abs(lambda) / 2.0, geom);
}

SingularPair d_cap_infinity(double lambda, const Geometry& geom) {
    if (lambda == 0.0 || std::abs(lambda) >= 1.0)
        throw std::invalid_argument("d_cap_infinity: lambda must lie in (-1,1)\\{0}");
    return d_pair_infinity(-std::abs(lambda) / 2.0, geom);
}

double svd_residual(double lambda, const Geometry& geom, int grid_n, int levels,
                    int pts) {
    // d_R(y)/y on (0,br) and d_L(x)/x on (bl,0); both ~ t^{-1/2} at 0
    auto dr_over = [&](double y) {
        return d_pair(CPoint(y, Shore::plus), lambda, geom).dR / y;
    };
    auto dl_over = [&](double x) {
        return d_pair(CPoint(x, Shore::plus), lambda, geom).dL / x;
    };
    QuadRule right_rule = composite_rule(graded_breaks(0.0, geom.br, levels, true), pts);
    QuadRule left_rule = composite_rule(graded_breaks(geom.bl, 0.0, levels, false), pts);
    GridFunction fr = GridFunction::sample(right_rule, 0.0, geom.br, dr_over);
    GridFunction fl = GridFunction::sample(left_rule, geom.bl, 0.0, dl_over);

    double worst = 0.0;
    for (int k = 1; k <= grid_n; ++k) {
        // interior probe points, denser toward the junction
        double t = static_cast<double>(k) / (grid_n + 1);
        double x = geom.bl * t * t, y = geom.br * t * t;
        cplx lhs_r = fht_apply(fr, x, FhtSide::right_to_left);
        cplx rhs_r = 2.0 * lambda * dl_over(x);
        worst = std::max(worst, std::abs(lhs_r - rhs_r) / std::abs(rhs_r));
        // the mirrored identity carries the opposite sign: H_L = -H_R^* in
        // L2, so the singular pair satisfies H_L[d_L/x](y) = -2 lam d_R(y)/y
        cplx lhs_l = fht_apply(fl, y, FhtSide::left_to_right);
        cplx rhs_l = -2.0 * lambda * dr_over(y);
        worst = std::max(worst, std::abs(lhs_l - rhs_l) / std::abs(rhs_l));
    }
    return worst;
}

double phi_kernel(double x, double lambda_sq, Side side, const Geometry& geom) {
    if (!(lambda_sq > 0.0 && lambda_sq < 1.0))
        throw std::invalid_argument("phi_kernel: lambda_sq must lie in (0,1)");
    double al = std::sqrt(lambda_sq);
    SingularPair d = d_cap_pair(CPoint(x, Shore::plus), al, geom);
    SingularPair dinf = d_cap_infinity(al, geom);
    // signs chosen so U[indicator of the subinterval] is identically +1,
    // via the moment identities of the singular pair
    cplx val = side == Side::right ? d.dR / (PI * x * al * dinf.dL)
                                   : -d.dL / (PI * x * al * dinf.dR);
    return val.real();
}

double sigma_prime(double lambda_sq, Side side, const Geometry& geom) {
    if (!(lambda_sq > 0.0 && lambda_sq < 1.0))
        throw std::invalid_argument("sigma_prime: lambda_sq must lie in (0,1)");
    double al = std::sqrt(lambda_sq);
    cplx a = a_of_lambda(CPoint(-al / 2.0, Shore::minus));
    SingularPair dinf = d_cap_infinity(al, geom);
    cplx dd = side == Side::right ? dinf.dL : dinf.dR;
    cplx val = std::abs(geom.bl) * geom.br * (a + 0.5) * dd * dd /
               (I * geom.width());
    return val.real();
}

QuadRule spectral_rule(int n, double lo_margin, double hi_margin) {
    int pts = 4;
    int total = std::max(6, n / pts);
    // the low endpoint needs roughly twice the grading of the high one
    int lo_levels = 2 * total / 3;
    auto breaks = graded_breaks(lo_margin, 0.5, lo_levels, true);
    auto hi = graded_breaks(0.5, 1.0 - hi_margin, total - lo_levels, false);
    breaks.insert(breaks.end(), hi.begin() + 1, hi.end());
    return composite_rule(breaks, pts);
}

QuadRule side_rule(Side side, const Geometry& geom, int levels, int pts) {
    if (side == Side::right)
        return composite_rule(graded_breaks(0.0, geom.br, levels, true), pts);
    return composite_rule(graded_breaks(geom.bl, 0.0, levels, false), pts);
}

UTransform make_u_transform(Side side, const Geometry& geom,
                            const QuadRule& space, const QuadRule& spec) {
    UTransform u;
    u.side = side;
    u.geom = geom;
    u.space = space;
    u.spec = spec;
    int ns = static_cast<int>(space.nodes.size());
    int nl = static_cast<int>(spec.nodes.size());
    u.phi.resize(nl, ns);
    u.sigma_p.resize(nl);
    for (int i = 0; i < nl; ++i) {
        double ls = spec.nodes[i];
        u.sigma_p(i) = sigma_prime(ls, side, geom);
        for (int j = 0; j < ns; ++j)
            u.phi(i, j) = phi_kernel(space.nodes[j], ls, side, geom);
    }
    return u;
}

Eigen::VectorXcd UTransform::forward(const Eigen::VectorXcd& f) const {
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        space.weights.data(), static_cast<Eigen::Index>(space.weights.size()));
    return phi * w.asDiagonal() * f;
}

Eigen::VectorXcd UTransform::inverse(const Eigen::VectorXcd& g) const {
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        spec.weights.data(), static_cast<Eigen::Index>(spec.weights.size()));
    return phi.transpose() * (w.cwiseProduct(sigma_p)).asDiagonal() * g;
}

Eigen::VectorXcd UTransform::resolution_of_identity(const Eigen::VectorXcd& f,
                                                    double upper) const {
    Eigen::VectorXcd g = forward(f);
    for (Eigen::Index i = 0; i < g.size(); ++i)
        if (spec.nodes[i] > upper) g(i) = 0.0;
    return inverse(g);
}

double UTransform::spectral_mass(const Eigen::VectorXcd& f, double upper) const {
    Eigen::VectorXcd g = forward(f);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        if (spec.nodes[i] <= upper)
            acc += std::norm(g(i)) * sigma_p(i) * spec.weights[i];
    return acc;
}

double UTransform::space_norm(const Eigen::VectorXcd& f) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        acc += std::norm(f(i)) * space.weights[i];
    return std::sqrt(acc);
}

double UTransform::spec_norm(const Eigen::VectorXcd& g, double lo, double hi) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        if (spec.nodes[i] > lo && spec.nodes[i] <= hi)
            acc += std::norm(g(i)) * sigma_p(i) * spec.weights[i];
    return std::sqrt(acc);
}

}  // namespace fht
