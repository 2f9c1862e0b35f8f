#include "fht/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fht {

namespace {

// Newton iteration on Legendre P_n; standard Golub-Welsch alternative that
// needs no linear algebra.  Nodes accurate to ~1e-15.
QuadRule compute_gauss_legendre(int n) {
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess
        double x = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // recurrence for P_n(x) and P'_n(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = -p1 / pp;
            x += dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

std::map<int, QuadRule> g_cache;
std::mutex g_cache_mutex;

}  // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(n);
    if (it == g_cache.end())
        it = g_cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

QuadRule gauss_legendre(int n, double a, double b) {
    const QuadRule& base = gauss_legendre(n);
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * base.nodes[i];
        r.weights[i] = half * base.weights[i];
    }
    return r;
}

std::vector<double> uniform_breaks(double a, double b, int panels) {
    std::vector<double> br(panels + 1);
    for (int i = 0; i <= panels; ++i) br[i] = a + (b - a) * i / panels;
    return br;
}

std::vector<double> graded_breaks(double a, double b, int levels, bool toward_left) {
    // widths halve toward the graded endpoint: [a, a+h/2^L, a+h/2^{L-1}, ... , b]
    std::vector<double> br;
    br.push_back(a);
    if (toward_left) {
        for (int k = levels; k >= 1; --k) br.push_back(a + (b - a) / std::pow(2.0, k));
    } else {
        for (int k = 1; k <= levels; ++k)
            br.push_back(b - (b - a) / std::pow(2.0, k));
        std::sort(br.begin(), br.end());
    }
    br.push_back(b);
    br.erase(std::unique(br.begin(), br.end()), br.end());
    return br;
}

std::vector<double> double_graded_breaks(double a, double b, int levels) {
    double mid = 0.5 * (a + b);
    auto left = graded_breaks(a, mid, levels, true);
    auto right = graded_breaks(mid, b, levels, false);
    left.insert(left.end(), right.begin() + 1, right.end());
    return left;
}

QuadRule composite_rule(const std::vector<double>& breaks, int pts) {
    QuadRule out;
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        QuadRule panel = gauss_legendre(pts, breaks[p], breaks[p + 1]);
        out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        out.weights.insert(out.weights.end(), panel.weights.begin(),
                           panel.weights.end());
    }
    return out;
}

namespace {
template <typename T>
T pairwise_sum_impl(const T* v, size_t n) {
    if (n <= 8) {
        T s{};
        for (size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    size_t h = n / 2;
    return pairwise_sum_impl(v, h) + pairwise_sum_impl(v + h, n - h);
}
}  // namespace

double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum_impl(v.data(), v.size());
}
cplx pairwise_sum(const std::vector<cplx>& v) {
    return pairwise_sum_impl(v.data(), v.size());
}

GridFunction GridFunction::sample(const QuadRule& rule, double a, double b,
                                  const std::function<cplx(double)>& f) {
    GridFunction g(rule, a, b);
    for (size_t i = 0; i < g.nodes.size(); ++i) g.values[i] = f(g.nodes[i]);
    return g;
}

cplx GridFunction::integral() const {
    std::vector<cplx> terms(values.size());
    for (size_t i = 0; i < values.size(); ++i) terms[i] = values[i] * weights[i];
    return pairwise_sum(terms);
}

cplx GridFunction::inner(const GridFunction& g) const {
    std::vector<cplx> terms(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        terms[i] = values[i] * std::conj(g.values[i]) * weights[i];
    return pairwise_sum(terms);
}

double GridFunction::norm2() const { return std::sqrt(std::abs(inner(*this))); }

cplx integrate_against(const GridFunction& f, const std::function<cplx(double)>& w) {
    std::vector<cplx> terms(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i)
        terms[i] = f.values[i] * w(f.nodes[i]) * f.weights[i];
    return pairwise_sum(terms);
}

cplx fht_apply(const GridFunction& f, double y, FhtSide side) {
    // integrand has no interior singularity: the transforms couple the two
    // disjoint open subintervals, touching only at 0.  Both directions reduce
    // to the same weighted sum (1/pi)∫ f(t)/(t-y) dt over the support of f.
    (void)side;
    std::vector<cplx> terms(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i)
        terms[i] = f.values[i] / (f.nodes[i] - y) * f.weights[i];
    return pairwise_sum(terms) / PI;
}

cplx cauchy_pv(double a, double b, const std::function<cplx(double)>& f,
               double y, int levels, int pts) {
    if (!(a < y && y < b))
        throw std::invalid_argument("cauchy_pv: y must be interior to (a,b)");
    cplx fy = f(y);
    // PV ∫ f/(t-y) = ∫ (f(t)-f(y))/(t-y) dt + f(y)·ln((b-y)/(y-a))
    // refine toward y from both sides so the difference quotient is resolved
    auto left = graded_breaks(a, y, levels, false);
    auto right = graded_breaks(y, b, levels, true);
    left.insert(left.end(), right.begin() + 1, right.end());
    QuadRule rule = composite_rule(left, pts);
    std::vector<cplx> terms(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i];
        terms[i] = (f(t) - fy) / (t - y) * rule.weights[i];
    }
    return pairwise_sum(terms) + fy * std::log((b - y) / (y - a));
}

QuadRule subinterval_rule(double a, double b, int levels, int pts) {
    // refine toward the common endpoint 0 of the two-interval geometry
    bool zero_is_right = (std::abs(b) < std::abs(a));
    auto breaks = graded_breaks(a, b, levels, !zero_is_right);
    return composite_rule(breaks, pts);
}

}  // namespace fht
