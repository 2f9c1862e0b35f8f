#include "fht/complexfn.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fht {

namespace {

const double LN_SQRT_2PI = 0.91893853320467274178;

// Lanczos, g=7, 9 terms; ~1e-14 relative for Re z >= 0.5
const double LANCZOS[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_int(cplx z, double tol = 1e-12) {
    double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

cplx ln_gamma_core(cplx z) {
    // Re z >= 0.5 assumed
    cplx x = LANCZOS[0];
    for (int k = 1; k < 9; ++k) x += LANCZOS[k] / (z - 1.0 + cplx(k));
    cplx t = z + 6.5;
    return LN_SQRT_2PI + (z - 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx ln_gamma(cplx z) {
    if (is_nonpositive_int(z))
        throw std::domain_error("ln_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return ln_gamma_core(z);
    // push into the Lanczos half-plane by the recurrence; continuous off
    // the cut (-inf,0] since every shifted log stays principal
    int n = static_cast<int>(std::ceil(0.5 - z.real()));
    cplx shift = 0.0;
    for (int k = 0; k < n; ++k) shift += std::log(z + cplx(k));
    return ln_gamma_core(z + cplx(n)) - shift;
}

cplx cgamma(cplx z) { return std::exp(ln_gamma(z)); }

cplx digamma(cplx z) {
    if (is_nonpositive_int(z))
        throw std::domain_error("digamma: pole at non-positive integer");
    cplx shift = 0.0;
    while (z.real() < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series with Bernoulli numbers
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = std::log(z) - 0.5 * inv;
    static const double bern[7] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                                   -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
                                   1.0 / 12.0};
    cplx p = inv2;
    for (int k = 0; k < 7; ++k) {
        s -= bern[k] * p;
        p *= inv2;
    }
    return s + shift;
}

cplx log_shore(CPoint z) {
    if (z.shore != Shore::none && z.v.imag() == 0.0 && z.v.real() < 0.0) {
        double sgn = (z.shore == Shore::plus) ? 1.0 : -1.0;
        return cplx(std::log(-z.v.real()), sgn * PI);
    }
    return std::log(z.v);
}

cplx pow_shore(CPoint z, cplx p) { return std::exp(p * log_shore(z)); }

cplx log1m(CPoint z) {
    // log(1-z); shore matters when z on (1,inf): z from above => arg(1-z)=-pi
    if (z.shore != Shore::none && z.v.imag() == 0.0 && z.v.real() > 1.0) {
        double sgn = (z.shore == Shore::plus) ? -1.0 : 1.0;
        return cplx(std::log(z.v.real() - 1.0), sgn * PI);
    }
    return std::log(1.0 - z.v);
}

cplx log_neg(CPoint z) {
    // log(-z); shore matters when z on (0,inf): z from above => arg(-z)=-pi
    if (z.shore != Shore::none && z.v.imag() == 0.0 && z.v.real() > 0.0) {
        double sgn = (z.shore == Shore::plus) ? -1.0 : 1.0;
        return cplx(std::log(z.v.real()), sgn * PI);
    }
    return std::log(-z.v);
}

cplx hyp_series(cplx a, cplx b, cplx c, cplx z) {
    if (is_nonpositive_int(c))
        throw std::domain_error("hyp_series: c at a non-positive integer");
    cplx sum = 1.0, term = 1.0;
    int consecutive_small = 0;
    for (int n = 0; n < 20000; ++n) {
        term *= (a + cplx(n)) * (b + cplx(n)) / ((c + cplx(n)) * cplx(n + 1)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++consecutive_small >= 3) return sum;
        } else {
            consecutive_small = 0;
        }
    }
    throw std::runtime_error("hyp_series: no convergence within term cap");
}

namespace {

bool near_integer(cplx x, double tol = 1e-6) {
    return std::abs(x.imag()) < tol &&
           std::abs(x.real() - std::round(x.real())) < tol;
}

cplx eval_2f1(cplx a, cplx b, cplx c, CPoint z, int depth);

// Taylor continuation along a ray for arguments where every Kummer image has
// modulus near 1 (neighborhood of exp(+-i pi/3)).
cplx taylor_continue(cplx a, cplx b, cplx c, cplx z) {
    cplx z0 = 0.6 * z / std::abs(z);
    cplx f = hyp_series(a, b, c, z0);
    cplx fp = a * b / c * hyp_series(a + 1.0, b + 1.0, c + 1.0, z0);
    cplx dir = z - z0;
    double total = std::abs(dir);
    dir /= total;
    double done = 0.0;
    while (done < total) {
        double r = std::min(std::abs(z0), std::abs(z0 - 1.0));
        double h_abs = std::min(0.35 * r, total - done);
        cplx h = h_abs * dir;
        // Taylor coefficients from the ODE recurrence
        cplx t0 = f, t1 = fp;
        cplx fn = t0 + t1 * h, fpn = t1;
        cplx hp = h;
        cplx A = z0 * (1.0 - z0);
        for (int k = 0; k + 2 < 200; ++k) {
            cplx t2 = ((cplx(k) + a) * (cplx(k) + b) * t0 -
                       ((1.0 - 2.0 * z0) * cplx(k) + c - (a + b + 1.0) * z0) *
                           cplx(k + 1) * t1) /
                      (A * cplx(k + 2) * cplx(k + 1));
            fpn += cplx(k + 2) * t2 * hp;
            hp *= h;
            fn += t2 * hp;
            t0 = t1;
            t1 = t2;
            if (std::abs(t2 * hp) < 1e-17 * std::abs(fn) && k > 6) break;
        }
        f = fn;
        fp = fpn;
        z0 += h;
        done += h_abs;
    }
    return f;
}

cplx gratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
    cplx s = 0.0;
    for (cplx v : num) s += ln_gamma(v);
    for (cplx v : den) s -= ln_gamma(v);
    return std::exp(s);
}

cplx eval_one_minus(cplx a, cplx b, cplx c, CPoint z, int depth) {
    cplx omz = 1.0 - z.v;
    cplx t1 = gratio({c, c - a - b}, {c - a, c - b}) *
              eval_2f1(a, b, a + b - c + 1.0, CPoint(omz), depth + 1);
    cplx t2 = std::exp((c - a - b) * log1m(z)) *
              gratio({c, a + b - c}, {a, b}) *
              eval_2f1(c - a, c - b, c - a - b + 1.0, CPoint(omz), depth + 1);
    return t1 + t2;
}

cplx eval_inv(cplx a, cplx b, cplx c, CPoint z, int depth) {
    CPoint iz(1.0 / z.v);
    cplx t1 = gratio({c, b - a}, {b, c - a}) * std::exp(-a * log_neg(z)) *
              eval_2f1(a, a - c + 1.0, a - b + 1.0, iz, depth + 1);
    cplx t2 = gratio({c, a - b}, {a, c - b}) * std::exp(-b * log_neg(z)) *
              eval_2f1(b, b - c + 1.0, b - a + 1.0, iz, depth + 1);
    return t1 + t2;
}

enum Kind { kSeries, kPfaff, kOneMinus, kInv, kTaylor };

cplx eval_2f1(cplx a, cplx b, cplx c, CPoint z, int depth) {
    if (is_nonpositive_int(c))
        throw std::domain_error("gauss_2f1: c at a non-positive integer");
    if (depth > 6) throw std::runtime_error("gauss_2f1: dispatch recursion");

    double m_direct = std::abs(z.v);
    if (m_direct <= 0.8 && z.shore == Shore::none) return hyp_series(a, b, c, z.v);
    if (z.v == cplx(1.0)) {
        // Gauss summation point
        if ((c - a - b).real() <= 0.0)
            throw std::domain_error("gauss_2f1: divergent at z=1");
        return gratio({c, c - a - b}, {c - a, c - b});
    }

    bool on_shore = z.shore != Shore::none;
    double m_pfaff = on_shore ? 1e30 : std::abs(z.v / (z.v - 1.0));
    double m_one = std::abs(1.0 - z.v);
    double m_inv = 1.0 / std::max(m_direct, 1e-300);

    Kind best = kSeries;
    double mbest = on_shore ? 1e30 : m_direct;
    if (m_pfaff < mbest) { mbest = m_pfaff; best = kPfaff; }
    if (m_one < mbest) { mbest = m_one; best = kOneMinus; }
    if (m_inv < mbest) { mbest = m_inv; best = kInv; }

    if (mbest > 0.95) {
        if (on_shore)
            throw std::runtime_error("gauss_2f1: shore argument outside regions");
        return taylor_continue(a, b, c, z.v);
    }

    switch (best) {
        case kSeries:
            return hyp_series(a, b, c, z.v);
        case kPfaff:
            return std::exp(-a * log1m(z)) *
                   eval_2f1(a, c - b, c, CPoint(z.v / (z.v - 1.0)), depth + 1);
        case kOneMinus: {
            if (!near_integer(c - a - b)) return eval_one_minus(a, b, c, z, depth);
            const double eps = 1e-6;
            return 0.5 * (eval_one_minus(a + eps, b, c, z, depth) +
                          eval_one_minus(a - eps, b, c, z, depth));
        }
        case kInv: {
            if (!near_integer(a - b)) return eval_inv(a, b, c, z, depth);
            const double eps = 1e-6;
            return 0.5 * (eval_inv(a + eps, b, c, z, depth) +
                          eval_inv(a - eps, b, c, z, depth));
        }
        default:
            throw std::logic_error("gauss_2f1: unreachable");
    }
}

// 2F1(A,B;2B;w) via the quadratic substitution u=(w/(2-w))^2, which moves
// every argument this library meets into a fast-converging region.
cplx eval_c_equals_2b(cplx A, cplx B, CPoint w) {
    double mw = std::abs(w.v);
    if (mw <= 0.8 && w.shore == Shore::none)
        return hyp_series(A, B, 2.0 * B, w.v);
    if (std::abs(2.0 - w.v) < 0.2 * std::max(1.0, mw)) {
        // companion quadratic form; its argument sits near 1 where the
        // connection exponent is 1/2, so nothing degenerates
        cplx u = w.v * w.v / (4.0 * (w.v - 1.0));
        Shore us = Shore::none;
        if (w.shore != Shore::none && w.v.imag() == 0.0) {
            // u - 1 = (w-2)^2/(4(w-1)); the square flips the side left of 2
            us = (w.v.real() > 2.0) ? w.shore : flip(w.shore);
            u = cplx(u.real(), 0.0);
        }
        cplx pref = std::exp(-0.5 * A * log1m(w));
        return pref * eval_2f1(0.5 * A, B - 0.5 * A, B + 0.5, CPoint(u, us), 0);
    }

    cplx t = w.v / (2.0 - w.v);
    cplx u = t * t;
    Shore us = Shore::none;
    if (w.shore != Shore::none && w.v.imag() == 0.0) {
        // w on a shore of (1,inf); Im t has the sign of Im w, and u=t^2
        // lands on the side given by sign(t)
        us = (w.v.real() < 2.0) ? w.shore : flip(w.shore);
        u = cplx(u.real(), 0.0);
    }
    cplx pref = std::exp(-A * (log1m(CPoint(0.5 * w.v, w.shore)) ));
    return pref * eval_2f1(0.5 * A, 0.5 * A + 0.5, B + 0.5, CPoint(u, us), 0);
}

}  // namespace

cplx gauss_2f1(const HypParams& p, CPoint z) {
    if (z.shore == Shore::none && z.v.imag() == 0.0 && z.v.real() > 1.0)
        throw std::domain_error("gauss_2f1: argument on [1,inf) needs a shore");
    return eval_2f1(p.a, p.b, p.c, z, 0);
}

HypPairValue hyp_pair_at_infinity(cplx a, CPoint eta) {
    if (is_nonpositive_int(2.0 * a + 2.0))
        throw std::domain_error("hyp_pair_at_infinity: degenerate 2a+2");
    if (eta.shore == Shore::none && eta.v.imag() == 0.0 &&
        eta.v.real() >= 0.0 && eta.v.real() <= 1.0)
        throw std::domain_error("hyp_pair_at_infinity: eta on [0,1] needs a shore");

    cplx w = 1.0 / eta.v;
    Shore ws = Shore::none;
    if (eta.shore != Shore::none && eta.v.imag() == 0.0) {
        double x = eta.v.real();
        if (x > 0.0 && x < 1.0) ws = flip(eta.shore);  // w = 1/x on (1,inf)
    }
    CPoint wp(w, ws);
    if (ws == Shore::none && w.imag() == 0.0 && w.real() > 1.0)
        wp = CPoint(w, Shore::plus);  // unreachable defensive default

    cplx F_h = eval_c_equals_2b(a, a + 1.0, wp);
    cplx F_hp = eval_c_equals_2b(a + 1.0, a + 1.0, wp);
    cplx F_s = eval_c_equals_2b(-a - 1.0, -a, wp);
    cplx F_sp = eval_c_equals_2b(-a, -a, wp);

    cplx eip = std::exp(cplx(0.0, PI) * a);
    HypPairValue v;
    v.h = eip * pow_shore(eta, -a) * F_h;
    v.h_prime = -a * eip * pow_shore(eta, -a - 1.0) * F_hp;
    v.s = -pow_shore(eta, a + 1.0) / eip * F_s;
    v.s_prime = -(a + 1.0) * pow_shore(eta, a) / eip * F_sp;
    return v;
}

}  // namespace fht
