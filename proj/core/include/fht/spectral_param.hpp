#pragma once

#include "fht/types.hpp"

namespace fht {

// a(lambda) = (1/(i pi)) ln((i + sqrt(4 lambda^2 - 1))/(2 lambda)) with the
// square-root branch fixed by sqrt(4l^2-1) = 2l + O(1) at infinity and the
// principal log.  Cut on [-1/2,1/2]; on-cut values need a shore tag and are
// computed from the exact shore formulas (Re a_+- = +-1/2 by sign of lambda).
cplx a_of_lambda(CPoint lambda);

// g(z) = a(-z/2), cut on [-1,1]; the symmetric-geometry g-function.
cplx g_of_z(CPoint z);

enum class Mobius { M1, M2, M3, M4 };

// The four fractional-linear maps tied to the geometry:
//   M1(x) = br (x - bl) / (x (br - bl))          maps bl,0,br -> 0,inf,1
//   M2(x) = br bl x / (x (br + bl) - br bl)      swaps the subintervals
//   M3(x) = -bl (x - br) / (x (br - bl)) = M1(M2(x))
//   M4(x) = x (br - bl) / (x (br + bl) - 2 br bl) maps bl,0,br -> -1,0,1
cplx mobius(Mobius which, cplx x, const Geometry& geom);

// Consistent bundle of the spectral variables.  For spectral (real) lambda in
// (-1,1)\{0}, `a` is the lower-shore value a_-(-|lambda|/2) used throughout
// the diagonalization formulas; mu and omega are tied to it by
// i mu = a + 1/2 and omega = (br+bl)^2/8 + bl br a(a+1).
struct SpectralPoint {
    CPoint lambda;
    cplx lambda_sq;
    cplx a;
    cplx kappa;  // -ln(lambda), principal, shore-inherited
    cplx omega;
    cplx mu;
};

enum class SpectralFrom { lambda, omega, mu };

SpectralPoint spectral_point(SpectralFrom from, cplx value, const Geometry& geom,
                             Shore shore = Shore::none);

}  // namespace fht
