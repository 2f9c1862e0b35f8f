#include "fht/spectral_param.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fht/complexfn.hpp"

namespace fht {

cplx a_of_lambda(CPoint lambda) {
    cplx l = lambda.v;
    if (l == cplx(0.0)) throw std::domain_error("a_of_lambda: lambda = 0");

    bool on_cut = (l.imag() == 0.0 && std::abs(l.real()) <= 0.5);
    if (on_cut) {
        if (lambda.shore == Shore::none)
            throw std::domain_error("a_of_lambda: on-cut lambda needs a shore");
        // exact shore values: Re a = sgn(lambda)/2, imaginary part from the
        // principal log of |w| = (1+sqrt(1-4l^2))/(2|l|)
        double x = l.real();
        double Lmod = std::log((1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * x * x))) /
                               (2.0 * std::abs(x)));
        double sgn = (lambda.shore == Shore::plus) ? 1.0 : -1.0;
        return cplx((x > 0.0 ? 0.5 : -0.5), -sgn * Lmod / PI);
    }
    // off the cut: sqrt(4l^2-1) = 2l sqrt(1 - 1/(4l^2)), principal inner root
    cplx s = 2.0 * l * std::sqrt(1.0 - 1.0 / (4.0 * l * l));
    cplx w = (I + s) / (2.0 * l);
    return std::log(w) / (I * PI);
}

cplx g_of_z(CPoint z) {
    // g(z) = a(-z/2); multiplying by -1/2 swaps the half-planes, so a shore
    // tag on z flips
    return a_of_lambda(CPoint(-0.5 * z.v, flip(z.shore)));
}

cplx mobius(Mobius which, cplx x, const Geometry& geom) {
    const double bl = geom.bl, br = geom.br;
    cplx num, den;
    switch (which) {
        case Mobius::M1:
            num = br * (x - bl);
            den = x * (br - bl);
            break;
        case Mobius::M2:
            num = br * bl * x;
            den = x * (br + bl) - br * bl;
            break;
        case Mobius::M3:
            num = -bl * (x - br);
            den = x * (br - bl);
            break;
        case Mobius::M4:
            num = x * (br - bl);
            den = x * (br + bl) - 2.0 * br * bl;
            break;
    }
    if (std::abs(den) == 0.0)
        return cplx(std::numeric_limits<double>::infinity(), 0.0);
    return num / den;
}

SpectralPoint spectral_point(SpectralFrom from, cplx value, const Geometry& geom,
                             Shore shore) {
    const double bl = geom.bl, br = geom.br;

    if (from == SpectralFrom::omega) {
        cplx om = value;
        double threshold = (bl * bl + br * br) / 8.0;
        if (om.imag() == 0.0 && om.real() < threshold - 1e-12)
            throw std::domain_error("spectral_point: omega below threshold");
        cplx mu = std::sqrt((om - (bl + br) * (bl + br) / 8.0) / (-bl * br) - 0.25);
        return spectral_point(SpectralFrom::mu, mu, geom, shore);
    }
    if (from == SpectralFrom::mu) {
        cplx mu = value;
        cplx lam = 1.0 / std::cosh(mu * PI);  // |lambda| = sech(mu pi)
        SpectralPoint p = spectral_point(SpectralFrom::lambda, lam, geom, shore);
        return p;
    }

    SpectralPoint p;
    cplx l = value;
    if (l == cplx(0.0)) throw std::domain_error("spectral_point: lambda = 0");
    p.lambda = CPoint(l, shore);
    p.lambda_sq = l * l;
    p.kappa = -log_shore(CPoint(l, shore));
    if (l.imag() == 0.0 && std::abs(l.real()) <= 1.0) {
        // spectral branch used by the diagonalization formulas
        p.a = a_of_lambda(CPoint(-0.5 * std::abs(l.real()), Shore::minus));
    } else {
        p.a = a_of_lambda(p.lambda);
    }
    p.mu = -I * (p.a + 0.5);
    p.omega = (bl + br) * (bl + br) / 8.0 + bl * br * p.a * (p.a + 1.0);
    return p;
}

}  // namespace fht
