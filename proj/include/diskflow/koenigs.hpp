#pragma once

#include "diskflow/flow.hpp"
#include "diskflow/generator.hpp"

namespace diskflow {

// sigma(w) = int_1^w d omega / phi(omega) along the straight segment; the
// normalization sigma(1) = 0 matches h(0) = 0 through sigma = h o C^{-1}.
cplx sigma_halfplane(const HalfPlaneGenerator& hgen, cplx w, double quad_tol = 1e-10);

// Koenigs linearization engine for one validated generator.  h solves
// h' = -1/f, h(0) = 0 (so h(F_t(z)) = h(z) + t); sigma is the half-plane
// twin.  For hyperbolic generators the boundary imaginary limit
// lim_{x->inf} Im sigma(x) is computed eagerly at construction, so all
// methods are pure and safe to call concurrently afterwards.
class KoenigsEngine {
  public:
    explicit KoenigsEngine(GeneratorSpec gen, double quad_tol = 1e-10,
                           FlowConfig flow_cfg = {});

    const GeneratorSpec& gen() const { return gen_; }
    const HalfPlaneGenerator& hgen() const { return hgen_; }
    double quad_tol() const { return qtol_; }
    const FlowConfig& flow_cfg() const { return fcfg_; }

    cplx h(cplx z) const;
    cplx sigma(cplx w) const;

    // |h(F_t(z)) - h(z) - t|
    double abel_residual(cplx z, double t) const;

    // lim_{r->1^-} Im h(r) = lim_{x->inf} Im sigma(x); hyperbolic only.
    double boundary_imag_limit() const;
    double boundary_imag_limit_error() const;

    // Valiron function g(w) = exp(alpha (sigma(w) - i * boundary limit)),
    // the solution of g(Phi_s(w)) = e^{s alpha} g(w); hyperbolic only.
    cplx valiron_g(cplx w) const;
    double schroeder_residual(cplx w, double s) const;

  private:
    GeneratorSpec gen_;
    HalfPlaneGenerator hgen_;
    double qtol_;
    FlowConfig fcfg_;
    double blimit_ = 0.0;
    double blimit_err_ = 0.0;
    bool blimit_valid_ = false;
};

}  // namespace diskflow
