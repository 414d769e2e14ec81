#pragma once

#include <complex>

namespace diskflow {

using cplx = std::complex<double>;

// Cayley transform conjugating disk dynamics at tau=1 to half-plane dynamics
// at infinity: C maps the open unit disk onto {Re w > 0}, C(0)=1, C(1)=inf.
inline cplx cayley(cplx z) { return (1.0 + z) / (1.0 - z); }
inline cplx cayley_inv(cplx w) { return (w - 1.0) / (w + 1.0); }

// 1 - C^{-1}(w) without cancellation near the Denjoy-Wolff point.
inline cplx one_minus_cayley_inv(cplx w) { return 2.0 / (w + 1.0); }

inline double cross2(cplx u, cplx v) { return std::imag(std::conj(u) * v); }

}  // namespace diskflow
