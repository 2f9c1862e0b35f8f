#include "fht/rhp_gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "fht/complexfn.hpp"
#include "fht/diagonalization.hpp"

namespace fht {

Matrix2 gamma_hat(cplx a, CPoint eta) {
    HypPairValue v = hyp_pair_at_infinity(a, eta);
    return {v.h, v.s, v.h_prime, v.s_prime};
}

QMatrix q_matrix(cplx a) {
    cplx eapi = std::exp(a * PI * I);
    cplx d1 = -std::tan(a * PI);
    cplx d2 = std::exp((2.0 * a + 1.0) * std::log(4.0)) * eapi *
              cgamma(a + 1.5) * cgamma(a + 0.5) / (cgamma(a) * cgamma(a + 2.0));
    QMatrix q;
    q.D = Matrix2::diag(d1, d2);
    q.value = q.D * Matrix2{1.0, eapi, -eapi, 1.0};
    return q;
}

GammaHatBranch make_gamma_hat_branch(cplx a) {
    GammaHatBranch br;
    br.a = a;
    // Constant along (0,1); evaluate where both shore values come out at
    // machine precision.
    const double eta_g = 0.2;
    Matrix2 p_plus = gamma_hat(a, CPoint(eta_g, Shore::plus));
    Matrix2 p_minus = gamma_hat(a, CPoint(eta_g, Shore::minus));
    br.glue = p_minus.inverse() * p_plus;
    return br;
}

Matrix2 gamma_hat_branched(const GammaHatBranch& br, CPoint eta) {
    bool upper;
    if (eta.v.imag() > 0.0) {
        upper = true;
    } else if (eta.v.imag() < 0.0) {
        upper = false;
    } else if (eta.shore != Shore::none) {
        upper = (eta.shore == Shore::plus);
    } else if (eta.v.real() > 0.0 && eta.v.real() < 1.0) {
        upper = true;  // both branches agree here by construction
        eta.shore = Shore::plus;
    } else {
        throw std::invalid_argument("gamma_hat_branched: real eta outside (0,1) needs a shore");
    }
    Matrix2 p = gamma_hat(br.a, eta);
    return upper ? p : p * br.glue;
}

GammaContext make_gamma_context(CPoint lambda, const Geometry& geom) {
    GammaContext ctx;
    ctx.geom = geom;
    ctx.lambda = lambda;
    ctx.a = a_of_lambda(lambda);
    QMatrix q = q_matrix(ctx.a);
    ctx.Q = q.value;
    ctx.Qinv = q.value.inverse();
    ctx.branch = make_gamma_hat_branch(ctx.a);
    double eta0 = geom.br / geom.width();
    ctx.ghat_inf = gamma_hat_branched(ctx.branch, CPoint(eta0));
    ctx.prefix = SIGMA2 * ctx.Qinv * ctx.ghat_inf.inverse();
    return ctx;
}

Matrix2 gamma_solve(CPoint z, const GammaContext& ctx) {
    const Geometry& g = ctx.geom;
    CPoint eta;
    if (z.v.imag() == 0.0) {
        double x = z.v.real();
        if (x == 0.0 || x == g.bl || x == g.br)
            throw std::invalid_argument("gamma_solve: z at a singular endpoint");
        // M1 is orientation reversing on the real axis, so a z shore maps to
        // the opposite eta shore.
        eta = CPoint(g.br * (x - g.bl) / (x * g.width()), flip(z.shore));
    } else {
        eta = CPoint(g.br * (z.v - g.bl) / (z.v * g.width()));
    }
    cplx t12 = g.bl * g.br / (z.v * g.width() * (ctx.a + 1.0));
    Matrix2 T{1.0, t12, 0.0, 1.0};
    Matrix2 G = gamma_hat_branched(ctx.branch, eta);
    return ctx.prefix * T * G * ctx.Q * SIGMA2;
}

Matrix2 gamma_solve(CPoint z, CPoint lambda, const Geometry& geom) {
    GammaContext ctx = make_gamma_context(lambda, geom);
    return gamma_solve(z, ctx);
}

Matrix2 gamma_derivative(CPoint z, const GammaContext& ctx) {
    const Geometry& g = ctx.geom;
    CPoint eta;
    if (z.v.imag() == 0.0) {
        double x = z.v.real();
        if (x == 0.0 || x == g.bl || x == g.br)
            throw std::invalid_argument("gamma_derivative: z at a singular endpoint");
        eta = CPoint(g.br * (x - g.bl) / (x * g.width()), flip(z.shore));
    } else {
        eta = CPoint(g.br * (z.v - g.bl) / (z.v * g.width()));
    }
    cplx t12 = g.bl * g.br / (z.v * g.width() * (ctx.a + 1.0));
    Matrix2 T{1.0, t12, 0.0, 1.0};
    Matrix2 Tp{0.0, -t12 / z.v, 0.0, 0.0};
    cplx etap = g.br * g.bl / (g.width() * z.v * z.v);
    Matrix2 G = gamma_hat_branched(ctx.branch, eta);
    cplx q = ctx.a * (ctx.a + 1.0) / (eta.v * (1.0 - eta.v));
    Matrix2 Gp{G.a21, G.a22, -q * G.a11, -q * G.a12};
    return ctx.prefix * (Tp * G + etap * (T * Gp)) * ctx.Q * SIGMA2;
}

Matrix2 z_jump_matrix(double x, cplx lambda, const Geometry& geom) {
    if (x > geom.bl && x < 0.0) return {1.0, -I / lambda, 0.0, 1.0};
    if (x > 0.0 && x < geom.br) return {1.0, 0.0, I / lambda, 1.0};
    return Matrix2::identity();
}

namespace {

// boundary value at x from half-plane `up`, Richardson in eps
Matrix2 boundary_value(double x, const GammaContext& ctx, bool up, double eps) {
    cplx off = up ? cplx(0.0, eps) : cplx(0.0, -eps);
    Matrix2 g1 = gamma_solve(CPoint(cplx(x, 0.0) + off), ctx);
    Matrix2 g2 = gamma_solve(CPoint(cplx(x, 0.0) + 0.5 * off), ctx);
    return 2.0 * g2 - g1;
}

}  // namespace

double verify_z_jump(double x, CPoint lambda, const Geometry& geom) {
    GammaContext ctx = make_gamma_context(lambda, geom);
    const double eps = 1e-8;
    Matrix2 gp = boundary_value(x, ctx, true, eps);
    Matrix2 gm = boundary_value(x, ctx, false, eps);
    Matrix2 J = z_jump_matrix(x, lambda.v, geom);
    return (gp - gm * J).norm() / gm.norm();
}

double verify_lambda_jump(cplx z, double lambda, const Geometry& geom) {
    CPoint zp(z);
    if (std::abs(lambda) > 0.5) {
        // off the cut: two-sided continuity in lambda
        const double eps = 1e-8;
        auto bv = [&](double s) {
            Matrix2 g1 = gamma_solve(zp, CPoint(cplx(lambda, s * eps)), geom);
            Matrix2 g2 = gamma_solve(zp, CPoint(cplx(lambda, s * eps / 2.0)), geom);
            return 2.0 * g2 - g1;
        };
        Matrix2 gp = bv(1.0), gm = bv(-1.0);
        return (gp - gm).norm() / gm.norm();
    }
    if (lambda == 0.0) throw std::invalid_argument("verify_lambda_jump: lambda = 0");

    Matrix2 gp = gamma_solve(zp, CPoint(lambda, Shore::plus), geom);
    Matrix2 gm = gamma_solve(zp, CPoint(lambda, Shore::minus), geom);

    double al = std::abs(lambda);
    double sgn = lambda > 0.0 ? 1.0 : -1.0;
    SingularPair d = d_pair(zp, -al, geom);
    cplx am = a_of_lambda(CPoint(-al, Shore::minus));
    cplx pref = -2.0 * geom.br * geom.bl * al * (2.0 * am + 1.0) / geom.width();
    Vector2 f2{pref * d.dR, pref * sgn * d.dL};
    Vector2 g2{-sgn * d.dL, d.dR};
    Matrix2 J = Matrix2::identity() - (1.0 / z) * outer(f2, g2);
    return (gp - gm * J).norm() / gm.norm();
}

}  // namespace fht
