#include "diskflow/koenigs.hpp"

#include <cmath>

#include "diskflow/extrapolation.hpp"
#include "diskflow/quadrature.hpp"

namespace diskflow {

cplx sigma_halfplane(const HalfPlaneGenerator& hgen, cplx w, double quad_tol) {
    if (!(w.real() > 0.0)) throw DomainError("sigma: Re w must be > 0");
    return integrate_segment([&](cplx omega) { return 1.0 / hgen.eval_phi(omega); },
                             cplx(1.0, 0.0), w, quad_tol);
}

KoenigsEngine::KoenigsEngine(GeneratorSpec gen, double quad_tol, FlowConfig flow_cfg)
    : gen_(std::move(gen)), hgen_(to_halfplane(gen_)), qtol_(quad_tol), fcfg_(flow_cfg) {
    if (!(qtol_ > 0.0 && qtol_ < 1e-3))
        throw DomainError("KoenigsEngine: quadrature tolerance out of range");
    fcfg_.validate();
    if (gen_.type() != SemigroupClass::hyperbolic) return;

    // Im sigma(x) on x_k = 2^k, computed incrementally along the real axis,
    // then accelerated.  The contraction ratio is measured, not assumed.
    auto integrand = [&](cplx omega) { return 1.0 / hgen_.eval_phi(omega); };
    cplx sigma_x = sigma_halfplane(hgen_, 16.0, qtol_);
    std::vector<double> imvals{sigma_x.imag()};
    double x = 16.0;
    LimitEstimate<double> est;
    for (int k = 5; k <= 46; ++k) {
        sigma_x += integrate_segment(integrand, cplx(x, 0.0), cplx(2.0 * x, 0.0), qtol_);
        x *= 2.0;
        imvals.push_back(sigma_x.imag());
        if (imvals.size() >= 6) {
            est = geometric_sequence_limit(imvals);
            if (est.converged && est.err < 0.1 * qtol_) break;
        }
    }
    est = geometric_sequence_limit(imvals);
    if (!est.converged)
        throw NonConvergence("KoenigsEngine: Im sigma(x) failed to contract on x = 2^k");
    blimit_ = est.value;
    blimit_err_ = est.err;
    blimit_valid_ = true;
}

cplx KoenigsEngine::h(cplx z) const {
    if (std::abs(z) >= 1.0) throw DomainError("h: |z| >= 1");
    if (z == cplx{}) return {};
    return integrate_segment([&](cplx zeta) { return -1.0 / gen_.eval_f(zeta); }, cplx{}, z,
                             qtol_);
}

cplx KoenigsEngine::sigma(cplx w) const { return sigma_halfplane(hgen_, w, qtol_); }

double KoenigsEngine::abel_residual(cplx z, double t) const {
    if (t < 0.0) throw DomainError("abel_residual: t must be >= 0");
    cplx ft = evolve_disk(gen_, z, t, fcfg_);
    return std::abs(h(ft) - h(z) - t);
}

double KoenigsEngine::boundary_imag_limit() const {
    if (!blimit_valid_)
        throw ClassError("boundary_imag_limit: defined for hyperbolic generators only");
    return blimit_;
}

double KoenigsEngine::boundary_imag_limit_error() const {
    if (!blimit_valid_)
        throw ClassError("boundary_imag_limit: defined for hyperbolic generators only");
    return blimit_err_;
}

cplx KoenigsEngine::valiron_g(cplx w) const {
    double theta_over_alpha = boundary_imag_limit();
    return std::exp(hgen_.alpha() * (sigma(w) - cplx(0.0, theta_over_alpha)));
}

double KoenigsEngine::schroeder_residual(cplx w, double s) const {
    if (s < 0.0) throw DomainError("schroeder_residual: s must be >= 0");
    cplx ws = evolve(hgen_, w, s, fcfg_);
    return std::abs(valiron_g(ws) - std::exp(s * hgen_.alpha()) * valiron_g(w));
}

}  // namespace diskflow
