#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "diskflow/cayley.hpp"
#include "diskflow/errors.hpp"

namespace diskflow {

// Adaptive Gauss(7)-Kronrod(15) quadrature of a complex integrand along the
// straight segment [z0, z1].  The integrand must be analytic on the segment;
// the error estimate per panel is |K15 - G7|.

namespace detail {

// QUADPACK dqk15 abscissae/weights on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

// One G7/K15 panel over the parameter range [a, b] of the segment z0 + s*dz.
template <class F>
void gk15_segment(const F& f, cplx z0, cplx dz, double a, double b, cplx& k15_out,
                  double& err_out) {
    using namespace detail;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx g7{}, k15{};
    for (int i = 0; i < 7; ++i) {
        const double x = kGK15Nodes[i];
        const cplx sum = f(z0 + dz * (mid + half * x)) + f(z0 + dz * (mid - half * x));
        k15 += kGK15WeightsK[i] * sum;
        if (i % 2 == 1) g7 += kGK15WeightsG[i / 2] * sum;
    }
    const cplx fmid = f(z0 + dz * mid);
    k15 += kGK15WeightsK[7] * fmid;
    g7 += kGK15WeightsG[3] * fmid;
    k15 *= half;
    g7 *= half;
    k15_out = k15 * dz;
    err_out = std::abs(k15 - g7) * std::abs(dz);
}

// Integrates f along [z0, z1] to absolute tolerance `tol` (plus a relative
// floor).  Throws QuadratureFailure when the panel budget is exhausted.
template <class F>
cplx integrate_segment(const F& f, cplx z0, cplx z1, double tol,
                       int max_panels = 4000) {
    const cplx dz = z1 - z0;
    if (dz == cplx{}) return {};

    struct Piece {
        double a, b, err;
        cplx value;
    };
    std::vector<Piece> pieces;
    Piece whole;
    whole.a = 0.0;
    whole.b = 1.0;
    gk15_segment(f, z0, dz, 0.0, 1.0, whole.value, whole.err);
    pieces.push_back(whole);

    auto total_err = [&] {
        double e = 0.0;
        for (const auto& p : pieces) e += p.err;
        return e;
    };
    auto total_val = [&] {
        cplx v{};
        for (const auto& p : pieces) v += p.value;
        return v;
    };

    while (int(pieces.size()) < max_panels) {
        double err = total_err();
        double goal = std::max(tol, 1e-15 * std::abs(total_val()));
        if (err <= goal) return total_val();
        // split the worst panel
        size_t worst = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].err > pieces[worst].err) worst = i;
        Piece p = pieces[worst];
        double m = 0.5 * (p.a + p.b);
        if (m <= p.a || m >= p.b)
            throw QuadratureFailure("integrate_segment: panel underflow");
        Piece left{p.a, m, 0.0, {}}, right{m, p.b, 0.0, {}};
        gk15_segment(f, z0, dz, left.a, left.b, left.value, left.err);
        gk15_segment(f, z0, dz, right.a, right.b, right.value, right.err);
        pieces[worst] = left;
        pieces.push_back(right);
    }
    throw QuadratureFailure("integrate_segment: tolerance unreachable within panel budget");
}

}  // namespace diskflow
