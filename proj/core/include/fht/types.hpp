#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fht {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846;
inline const cplx I{0.0, 1.0};

// Side from which a point on a real branch cut is approached.
enum class Shore { none, plus, minus };

inline Shore flip(Shore s) {
    if (s == Shore::plus) return Shore::minus;
    if (s == Shore::minus) return Shore::plus;
    return Shore::none;
}

// Point in a cut plane.  For points on a cut the shore tag selects the
// boundary value; elsewhere it is ignored.
struct CPoint {
    cplx v;
    Shore shore = Shore::none;

    CPoint() = default;
    CPoint(cplx value, Shore s = Shore::none) : v(value), shore(s) {}
    CPoint(double value, Shore s = Shore::none) : v(value), shore(s) {}
};

// 2x2 complex matrix, the working size of everything here.
struct Matrix2 {
    cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

    cplx det() const { return a11 * a22 - a12 * a21; }

    Matrix2 inverse() const {
        cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    Matrix2 transpose() const { return {a11, a21, a12, a22}; }

    Matrix2 operator*(const Matrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Matrix2 operator+(const Matrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Matrix2 operator*(cplx s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    // max-entry norm; adequate for residual reporting
    double norm() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

inline Matrix2 operator*(cplx s, const Matrix2& m) { return m * s; }

inline const Matrix2 SIGMA1{0.0, 1.0, 1.0, 0.0};
inline const Matrix2 SIGMA2{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
inline const Matrix2 SIGMA3{1.0, 0.0, 0.0, -1.0};

struct Vector2 {
    cplx x1{0.0}, x2{0.0};
};

inline Vector2 operator*(const Matrix2& m, const Vector2& v) {
    return {m.a11 * v.x1 + m.a12 * v.x2, m.a21 * v.x1 + m.a22 * v.x2};
}

// outer product u v^T
inline Matrix2 outer(const Vector2& u, const Vector2& v) {
    return {u.x1 * v.x1, u.x1 * v.x2, u.x2 * v.x1, u.x2 * v.x2};
}

inline cplx dot(const Vector2& u, const Vector2& v) {
    return u.x1 * v.x1 + u.x2 * v.x2;
}

// Two adjacent intervals [bl, 0] and [0, br], bl < 0 < br.
struct Geometry {
    double bl = -1.0;
    double br = 1.0;

    Geometry() = default;
    Geometry(double bl_, double br_) : bl(bl_), br(br_) {
        if (!(bl < 0.0 && 0.0 < br))
            throw std::invalid_argument("Geometry: need bl < 0 < br");
    }
    double width() const { return br - bl; }
    bool symmetric() const { return std::abs(br + bl) < 1e-14 * width(); }
};

}  // namespace fht
