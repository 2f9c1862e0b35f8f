#include "fht/sturm_liouville.hpp"

#include <cmath>
#include <stdexcept>

#include "fht/complexfn.hpp"
#include "fht/spectral_param.hpp"

namespace fht {

namespace {

const double EULER_GAMMA = 0.57721566490153286061;

double threshold(const Geometry& g) {
    return (g.bl * g.bl + g.br * g.br) / 8.0;
}

cplx mu_of_omega(cplx omega, const Geometry& g) {
    return std::sqrt((omega - (g.bl + g.br) * (g.bl + g.br) / 8.0) /
                         (-g.bl * g.br) -
                     0.25);
}

cplx k_const(cplx mu) {
    return cgamma(-I * mu) /
           (cgamma(0.25 - 0.5 * I * mu) * cgamma(0.75 - 0.5 * I * mu));
}

// l_j = k / (b_j^2 w) [2 gamma + 2 Psi(1/2 - i mu) + ln(-b_other/(b_j w))]
cplx l_const(cplx mu, Side side, const Geometry& g) {
    double w = g.width();
    double bj = side == Side::right ? g.br : g.bl;
    double other = side == Side::right ? g.bl : g.br;
    cplx bracket = 2.0 * EULER_GAMMA + 2.0 * digamma(0.5 - I * mu) +
                   std::log(-other / (bj * w));
    return k_const(mu) / (bj * bj * w) * bracket;
}

}  // namespace

double p_poly(double x, const Geometry& g) {
    return x * x * (x - g.bl) * (x - g.br);
}

double p_poly_prime(double x, const Geometry& g) {
    double s = g.bl + g.br, p = g.bl * g.br;
    return 4.0 * x * x * x - 3.0 * s * x * x + 2.0 * p * x;
}

cplx l_apply(const std::function<cplx(double)>& f, double x,
             const Geometry& g, double h) {
    if (x <= g.bl || x >= g.br || x == 0.0)
        throw std::invalid_argument("l_apply: x must be interior, away from 0");
    cplx fp = f(x + h), fm = f(x - h), f0 = f(x);
    cplx d1 = (fp - fm) / (2.0 * h);
    cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
    double c = x - (g.bl + g.br) / 4.0;
    return p_poly(x, g) * d2 + p_poly_prime(x, g) * d1 + 2.0 * c * c * f0;
}

SLBasis sl_basis(double x, double omega, Side side, const Geometry& g) {
    if (omega <= threshold(g))
        throw std::domain_error("sl_basis: omega at or below the spectrum edge");
    bool right = side == Side::right;
    if (right ? !(x > 0.0 && x <= g.br) : !(x >= g.bl && x < 0.0))
        throw std::invalid_argument("sl_basis: x outside the subinterval");
    double outer = right ? g.br : g.bl;
    if (std::abs(x - outer) < 1e-4 * g.width())
        // theta is log-singular at the outer endpoint and the hypergeometric
        // argument degenerates to 1; callers wanting boundary values must
        // extrapolate from outside this guard band
        throw std::domain_error("sl_basis: x too close to the outer endpoint");

    double w = g.width(), s = g.bl + g.br, p = g.bl * g.br;
    double denom = x * s - 2.0 * p;
    double m4 = x * w / denom;
    double base = right ? m4 : -m4;  // positive on the respective side
    if (base <= 0.0 || base >= 1.0)
        throw std::invalid_argument("sl_basis: x maps outside the basis domain");

    cplx mu = mu_of_omega(omega, g);
    cplx e = -0.5 + I * mu;
    HypParams hp{0.25 + 0.5 * I * mu, 0.75 + 0.5 * I * mu, 1.0 + I * mu};
    double z = m4 * m4;
    cplx F = gauss_2f1(hp, CPoint(z));
    cplx Fp = hp.a * hp.b / hp.c *
              gauss_2f1({hp.a + 1.0, hp.b + 1.0, hp.c + 1.0}, CPoint(z));

    double pref0 = (right ? g.br : -g.bl) * w;
    double pref = pref0 / denom;
    double pref_d = -pref0 * s / (denom * denom);
    double m4_d = -2.0 * p * w / (denom * denom);
    double base_d = right ? m4_d : -m4_d;

    cplx pw = std::exp(e * std::log(base));
    SLBasis out;
    out.mu = mu.real();
    out.f = pref * pw * F;
    out.f_prime = pref_d * pw * F +
                  pref * (e * pw / base * base_d * F +
                          pw * Fp * 2.0 * m4 * m4_d);
    out.k = k_const(mu);
    out.l = l_const(mu, side, g);
    out.phi = 2.0 * (out.k * out.f).real();
    out.phi_prime = 2.0 * (out.k * out.f_prime).real();
    out.theta = 2.0 * (out.l * out.f).real();
    out.theta_prime = 2.0 * (out.l * out.f_prime).real();
    return out;
}

WeylData weyl_data(double omega, const Geometry& g) {
    if (omega <= threshold(g))
        throw std::domain_error("weyl_data: omega at or below the spectrum edge");
    cplx mu = mu_of_omega(omega, g);
    WeylData out;
    out.mu = mu.real();
    out.m1 = -l_const(mu, Side::left, g) / k_const(mu);
    out.m2 = -l_const(mu, Side::right, g) / k_const(mu);
    double t = std::tanh(out.mu * PI);
    out.rho1_prime = t / (g.bl * g.bl * g.width());
    out.rho2_prime = t / (g.br * g.br * g.width());
    return out;
}

cplx weyl_m(cplx omega, Side side, const Geometry& g) {
    cplx mu = mu_of_omega(omega, g);
    return -l_const(mu, side, g) / k_const(mu);
}

SLTransform make_sl_transform(Side side, const Geometry& g,
                              const QuadRule& space, const QuadRule& spec) {
    SLTransform u;
    u.side = side;
    u.geom = g;
    u.space = space;
    u.spec = spec;
    int ns = static_cast<int>(space.nodes.size());
    int nl = static_cast<int>(spec.nodes.size());
    u.phi.resize(nl, ns);
    u.rho_w.resize(nl);
    u.mult.resize(nl);
    double w = g.width();
    for (int i = 0; i < nl; ++i) {
        double t = spec.nodes[i];
        double al = std::sqrt(t);
        SpectralPoint sp = spectral_point(SpectralFrom::lambda, al, g);
        double mu = sp.mu.real();
        double omega = sp.omega.real();
        u.mult(i) = al;  // sech(mu pi) = |lambda| exactly
        // |d rho_j / d lambda^2| under lambda^2 = sech^2(mu pi)
        double bj = side == Side::right ? g.br : -g.bl;
        double bo = side == Side::right ? -g.bl : g.br;
        u.rho_w(i) = bo * mu / (PI * t * bj * w);
        for (int j = 0; j < ns; ++j)
            u.phi(i, j) = sl_basis(space.nodes[j], omega, side, g).phi;
    }
    return u;
}

Eigen::VectorXcd SLTransform::forward(const Eigen::VectorXcd& f) const {
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        space.weights.data(), static_cast<Eigen::Index>(space.weights.size()));
    return phi * w.asDiagonal() * f;
}

Eigen::VectorXcd SLTransform::inverse(const Eigen::VectorXcd& g) const {
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        spec.weights.data(), static_cast<Eigen::Index>(spec.weights.size()));
    return phi.transpose() * (w.cwiseProduct(rho_w)).asDiagonal() * g;
}

double SLTransform::space_norm(const Eigen::VectorXcd& f) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        acc += std::norm(f(i)) * space.weights[i];
    return std::sqrt(acc);
}

double SLTransform::spec_norm(const Eigen::VectorXcd& g) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        acc += std::norm(g(i)) * rho_w(i) * spec.weights[i];
    return std::sqrt(acc);
}

}  // namespace fht
