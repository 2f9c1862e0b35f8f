#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fht/types.hpp"

namespace fht {

// Gauss-Legendre rule on [-1,1]; cached per n.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const QuadRule& gauss_legendre(int n);

// Rule mapped to [a,b].
QuadRule gauss_legendre(int n, double a, double b);

// Composite mesh: a list of panel breakpoints covering [a,b].
// grade_towards dyadically refines toward one endpoint: panel widths shrink
// geometrically (factor 2) over `levels` levels.
std::vector<double> uniform_breaks(double a, double b, int panels);
std::vector<double> graded_breaks(double a, double b, int levels, bool toward_left);
// grading toward both endpoints (for spectral-axis integrals singular at 0 and 1)
std::vector<double> double_graded_breaks(double a, double b, int levels);

// Composite Gauss rule over the given breakpoints, pts per panel.
QuadRule composite_rule(const std::vector<double>& breaks, int pts_per_panel);

// Deterministic pairwise summation.
double pairwise_sum(const std::vector<double>& v);
cplx pairwise_sum(const std::vector<cplx>& v);

// Function sampled on quadrature nodes of an interval.
struct GridFunction {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<cplx> values;
    double a = 0.0, b = 0.0;

    GridFunction() = default;
    GridFunction(const QuadRule& rule, double a_, double b_)
        : nodes(rule.nodes), weights(rule.weights),
          values(rule.nodes.size(), cplx(0.0)), a(a_), b(b_) {}

    static GridFunction sample(const QuadRule& rule, double a, double b,
                               const std::function<cplx(double)>& f);

    cplx integral() const;
    // L2 inner product <f,g> = ∫ f conj(g)
    cplx inner(const GridFunction& g) const;
    double norm2() const;  // L2 norm
};

// ∫ f(x) g(x_i) ... building block: integral of f(x)*w(x) for caller-supplied
// weight evaluated at the nodes.
cplx integrate_against(const GridFunction& f, const std::function<cplx(double)>& w);

// Finite Hilbert transforms between the two adjacent intervals.
//   left-to-right: (1/pi) \int_{bl}^{0} f(x)/(x - y) dx,  y in (0,br)
//   right-to-left: (1/pi) \int_{0}^{br} g(y)/(y - x) dy,  x in (bl,0)
enum class FhtSide { left_to_right, right_to_left };

cplx fht_apply(const GridFunction& f, double y, FhtSide side);

// Principal value (plain PV integral, no 1/pi): PV ∫_a^b f(t)/(t-y) dt for y
// interior, by singularity subtraction. fval must supply f pointwise.
cplx cauchy_pv(double a, double b, const std::function<cplx(double)>& f,
               double y, int levels = 8, int pts = 32);

// Default graded mesh for a subinterval of the two-interval geometry:
// refinement toward the common endpoint 0.
QuadRule subinterval_rule(double a, double b, int levels = 8, int pts = 32);

}  // namespace fht
