#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fht/operator_kernels.hpp"
#include "fht/quadrature.hpp"

using namespace fht;

namespace {
const Geometry SYM(-1.0, 1.0);
}

TEST_CASE("k_kernel structure") {
    CHECK(k_kernel(0.3, 0.6, SYM) == cplx(0.0));
    CHECK(k_kernel(-0.3, -0.6, SYM) == cplx(0.0));
    cplx k1 = k_kernel(-0.3, 0.4, SYM);
    cplx k2 = k_kernel(0.4, -0.3, SYM);
    CHECK(std::abs(k1 - std::conj(k2)) < 1e-15);
    // 2i K on the left block reproduces the H_L kernel
    double y = 0.4, x = -0.3;
    CHECK(std::abs(2.0 * I * k_kernel(y, x, SYM) - 1.0 / (PI * (x - y))) < 1e-15);
}

TEST_CASE("Nystrom K-hat is Hermitian after symmetrization") {
    NystromOperator op = build_nystrom(SYM, 60);
    Eigen::MatrixXcd s = op.khat_symmetrized();
    double r = (s - s.adjoint()).norm() / s.norm();
    CHECK(r < 1e-10);
}

TEST_CASE("resolvent identity on the Nystrom grid") {
    // the L2 defect norm of (I+R)(I-K/lambda) - I, measured by Galerkin
    // compression onto polynomials; raw entrywise residuals plateau at the
    // corner rows where the resolvent diagonal has its 1/x pole
    NystromOperator op = build_nystrom(SYM, 200);
    cplx lam(2.0, 0.0);
    Eigen::MatrixXcd r = resolvent_matrix(op, CPoint(lam), SYM);
    Eigen::Index m = r.rows();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
    Eigen::MatrixXcd res = (id + r) * (id - op.khat / lam) - id;
    CHECK(galerkin_defect_norm(op, res, 12, SYM) < 1e-6);
}

TEST_CASE("resolvent identity pointwise against adaptive composition") {
    // discretization-free version: R(z,x) = -K/lambda - (1/lambda) int R(z,y) K(y,x) dy
    // with a deeply graded rule for the composition integral
    cplx lam(2.0, 0.0);
    GammaContext ctx = make_gamma_context(CPoint(lam), SYM);
    auto comp = [&](double z, double x) {
        cplx acc = 0.0;
        for (int side = 0; side < 2; ++side) {
            double a = side == 0 ? SYM.bl : 0.0, b = side == 0 ? 0.0 : SYM.br;
            auto brks = graded_breaks(a, b, 40, side != 0);
            QuadRule rule = composite_rule(brks, 20);
            std::vector<cplx> terms(rule.nodes.size());
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                double y = rule.nodes[i];
                terms[i] = resolvent_kernel(z, y, ctx) * k_kernel(y, x, SYM) *
                           rule.weights[i];
            }
            acc += pairwise_sum(terms);
        }
        return acc;
    };
    for (auto [z, x] : {std::pair{0.4, 0.4}, {0.4, -0.3}, {-0.6, 0.25}, {1e-3, 1e-3}}) {
        cplx lhs = resolvent_kernel(z, x, ctx);
        cplx rhs = -k_kernel(z, x, SYM) / lam - comp(z, x) / lam;
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("resolvent approaches K/lambda for large lambda") {
    NystromOperator op = build_nystrom(SYM, 80);
    auto defect = [&](double lam) {
        Eigen::MatrixXcd r = resolvent_matrix(op, CPoint(cplx(lam, 0.0)), SYM);
        return (r - op.khat / lam).operatorNorm();
    };
    double d2 = defect(1e2), d3 = defect(1e3);
    double ratio = d2 / d3;  // should be ~ (1e3/1e2)^2 = 100
    CHECK(ratio > 30.0);
    CHECK(ratio < 300.0);
}

TEST_CASE("resolvent kernel is single valued off the spectral cut") {
    cplx rp = resolvent_kernel(0.4, -0.3, CPoint(0.8, Shore::plus), SYM);
    cplx rm = resolvent_kernel(0.4, -0.3, CPoint(0.8, Shore::minus), SYM);
    CHECK(std::abs(rp - rm) < 1e-12 * std::abs(rm));
}

TEST_CASE("resolvent jump closed forms match two-sided differences") {
    auto numeric_jump = [&](double z, double x, double lam) {
        GammaContext cp = make_gamma_context(CPoint(lam, Shore::plus), SYM);
        GammaContext cm = make_gamma_context(CPoint(lam, Shore::minus), SYM);
        return resolvent_kernel(z, x, cp) - resolvent_kernel(z, x, cm);
    };
    {
        double x = 0.4, lam = -0.2;
        cplx num = numeric_jump(x, x, lam);
        cplx closed = resolvent_jump(x, x, lam, SYM);
        CHECK(std::abs(num - closed) < 1e-7 * std::max(1.0, std::abs(closed)));
    }
    {
        double x = -0.4, lam = -0.2;
        cplx num = numeric_jump(x, x, lam);
        cplx closed = resolvent_jump(x, x, lam, SYM);
        CHECK(std::abs(num - closed) < 1e-7 * std::max(1.0, std::abs(closed)));
    }
    {
        // mixed-interval pair
        double z = 0.35, x = -0.45, lam = -0.3;
        cplx num = numeric_jump(z, x, lam);
        cplx closed = resolvent_jump(z, x, lam, SYM);
        CHECK(std::abs(num - closed) < 1e-7 * std::max(1.0, std::abs(closed)));
    }
    {
        // sgn(lambda) relation on the same-interval form
        double x = 0.4;
        cplx jp = resolvent_jump(x, x, 0.35, SYM);
        cplx jm = resolvent_jump(x, x, -0.35, SYM);
        CHECK(std::abs(jp + jm) < 1e-10 * std::abs(jp));
    }
}

TEST_CASE("resolvent of H_R^* H_R block identity") {
    NystromOperator op = build_nystrom(SYM, 300);
    cplx lam(3.0, 0.0);
    Eigen::MatrixXcd r = resolvent_matrix(op, CPoint(0.5 * lam), SYM);
    int nl = op.n_left, nr = static_cast<int>(op.nodes.size()) - nl;
    Eigen::MatrixXcd rr_block = r.block(nl, nl, nr, nr);
    Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Identity(nr, nr) + rr_block;
    Eigen::MatrixXcd rhs = op.rr_resolvent(lam);
    std::vector<double> rn(op.nodes.begin() + nl, op.nodes.end());
    std::vector<double> rw(op.weights.begin() + nl, op.weights.end());
    double d = galerkin_defect_norm(rn, rw, lhs - rhs, 12, SYM, false, true);
    CHECK(d < 1e-5);
}

TEST_CASE("spectrum of H_R^* H_R sits in [0,1] and fills it out") {
    auto range = [&](int n) {
        NystromOperator op = build_nystrom(SYM, n);
        // the weight-symmetrized similar matrix is exactly symmetric PSD,
        // so eigenvalues are computed stably and are real by construction
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.hstarh_r_symmetrized());
        const auto& ev = es.eigenvalues();
        double lo = 1e30, hi = -1e30;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            double v = ev(i);
            CHECK(v > -1e-8);
            CHECK(v < 1.0 + 1e-8);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::make_pair(lo, hi);
    };
    auto [lo1, hi1] = range(100);
    auto [lo2, hi2] = range(400);
    CHECK(lo2 < 0.05);
    CHECK(hi2 > hi1);  // upper end fills in as n grows
    CHECK(hi2 > 0.6);
}

TEST_CASE("even powers of K-hat are block diagonal, odd block off-diagonal") {
    NystromOperator op = build_nystrom(SYM, 60);
    int nl = op.n_left, nr = static_cast<int>(op.nodes.size()) - nl;
    Eigen::MatrixXcd k2 = op.khat * op.khat;
    CHECK(k2.block(0, nl, nl, nr).norm() < 1e-14 * k2.norm());
    CHECK(k2.block(nl, 0, nr, nl).norm() < 1e-14 * k2.norm());
    CHECK(op.khat.block(0, 0, nl, nl).norm() == 0.0);
    CHECK(op.khat.block(nl, nl, nr, nr).norm() == 0.0);
    Eigen::MatrixXcd k3 = k2 * op.khat;
    CHECK(k3.block(0, 0, nl, nl).norm() < 1e-14 * k3.norm());
    CHECK(k3.block(nl, nl, nr, nr).norm() < 1e-14 * k3.norm());
}

TEST_CASE("H_R^* H_R resolvent kernel is bounded along the real sweep") {
    double x = 0.4, z = 0.7;
    for (double lam2 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double lam = std::sqrt(lam2);
        GammaContext ctx = make_gamma_context(CPoint(0.5 * lam, Shore::plus), SYM);
        Matrix2 m = gamma_solve(CPoint(x, Shore::plus), ctx).inverse() *
                    gamma_solve(CPoint(z, Shore::plus), ctx);
        cplx kern = m.a12 / (PI * lam * (x - z));
        CHECK(std::isfinite(std::abs(kern)));
        CHECK(std::abs(kern) < 1e3);
    }
}
