#include "diskflow/flow.hpp"

#include <cstdio>
#include <ostream>

namespace diskflow {

void FlowConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1e-3) || !(abs_tol > 0.0 && abs_tol < 1e-3))
        throw DomainError("FlowConfig: tolerances must lie in (0, 1e-3)");
    if (max_step < 0.0 || !(t_max > 0.0))
        throw DomainError("FlowConfig: bad max_step or t_max");
}

Schedule Schedule::linear(double t_max, int n) {
    if (!(t_max > 0.0) || n < 1) throw DomainError("Schedule::linear: need t_max > 0, n >= 1");
    Schedule s;
    s.times.reserve(n + 1);
    for (int k = 0; k <= n; ++k) s.times.push_back(t_max * double(k) / double(n));
    return s;
}

Schedule Schedule::geometric(double t0, double ratio, int n) {
    if (!(t0 > 0.0) || !(ratio > 1.0) || n < 1)
        throw DomainError("Schedule::geometric: need t0 > 0, ratio > 1, n >= 1");
    Schedule s;
    s.times.reserve(n);
    double t = t0;
    for (int k = 0; k < n; ++k, t *= ratio) s.times.push_back(t);
    return s;
}

namespace {

struct PhiRhs {
    const HalfPlaneGenerator* hgen;
    cplx operator()(double, cplx w) const { return hgen->eval_phi(w); }
};

}  // namespace

cplx evolve(const HalfPlaneGenerator& hgen, cplx w0, double t, const FlowConfig& cfg) {
    cfg.validate();
    if (!(w0.real() > 0.0)) throw DomainError("evolve: Re w0 must be > 0");
    if (t < 0.0) throw DomainError("evolve: t must be >= 0");
    if (t > cfg.t_max) throw DomainError("evolve: t exceeds configured t_max");
    if (t == 0.0) return w0;
    detail::Dopri5<PhiRhs> stepper(PhiRhs{&hgen}, 0.0, w0, cfg);
    stepper.advance_to(t);
    return stepper.y();
}

cplx evolve_disk(const GeneratorSpec& gen, cplx z0, double t, const FlowConfig& cfg) {
    if (std::abs(z0) >= 1.0) throw DomainError("evolve_disk: |z0| >= 1");
    return cayley_inv(evolve(to_halfplane(gen), cayley(z0), t, cfg));
}

Trajectory sample_trajectory(const HalfPlaneGenerator& hgen, cplx w0, const Schedule& sched,
                             const FlowConfig& cfg) {
    cfg.validate();
    if (!(w0.real() > 0.0)) throw DomainError("sample_trajectory: Re w0 must be > 0");
    for (size_t i = 1; i < sched.times.size(); ++i)
        if (!(sched.times[i] > sched.times[i - 1]))
            throw DomainError("sample_trajectory: schedule times must increase strictly");
    if (!sched.times.empty() && sched.times.front() < 0.0)
        throw DomainError("sample_trajectory: negative time");

    Trajectory traj;
    traj.origin_w = w0;
    traj.gen_id = hgen.id();
    traj.times = sched.times;
    traj.points_w.reserve(sched.times.size());

    detail::Dopri5<PhiRhs> stepper(PhiRhs{&hgen}, 0.0, w0, cfg);
    double re_floor = w0.real();
    for (double t : sched.times) {
        if (t > 0.0) stepper.advance_to(t);
        cplx w = (t == 0.0) ? w0 : stepper.y();
        if (w.real() <= 0.0)
            throw StepFailure("sample_trajectory: orbit left the right half-plane");
        if (w.real() < re_floor - 10.0 * cfg.abs_tol)
            throw StepFailure("sample_trajectory: Re Phi_t decreased beyond tolerance");
        re_floor = std::max(re_floor, w.real());
        traj.points_w.push_back(w);
    }
    return traj;
}

double semigroup_residual(const HalfPlaneGenerator& hgen, cplx w0, double t, double s,
                          const FlowConfig& cfg) {
    if (t < 0.0 || s < 0.0) throw DomainError("semigroup_residual: t, s must be >= 0");
    cplx direct = evolve(hgen, w0, t + s, cfg);
    cplx composed = evolve(hgen, evolve(hgen, w0, s, cfg), t, cfg);
    return std::abs(direct - composed);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,re_w,im_w,re_z,im_z\n";
    char buf[192];
    for (size_t k = 0; k < traj.times.size(); ++k) {
        const cplx w = traj.points_w[k];
        const cplx z = cayley_inv(w);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.times[k],
                      w.real(), w.imag(), z.real(), z.imag());
        os << buf;
    }
}

namespace {

cplx checked_gamma_over_beta(const HalfPlaneGenerator& hgen, cplx w0) {
    if (hgen.type() != SemigroupClass::parabolic)
        throw ClassError("ParabolicDrift: generator must be parabolic");
    if (hgen.beta() == cplx{})
        throw ClassError("ParabolicDrift: beta = 0 is outside the asymptotic expansions");
    if (!(w0.real() > 0.0)) throw DomainError("ParabolicDrift: Re w0 must be > 0");
    return hgen.gamma() / hgen.beta();
}

}  // namespace

ParabolicDrift::ParabolicDrift(const HalfPlaneGenerator& hgen, cplx w0, const FlowConfig& cfg)
    : hgen_(hgen),
      gamma_over_beta_(checked_gamma_over_beta(hgen, w0)),
      stepper_(
          [this](double t, cplx v) {
              const cplx w = drift(t) + v;
              return hgen_.eval_phi(w) - hgen_.beta() - gamma_over_beta_ / (1.0 + t);
          },
          0.0, w0, cfg) {
    cfg.validate();
}

cplx ParabolicDrift::drift(double t) const {
    return hgen_.beta() * t + gamma_over_beta_ * std::log1p(t);
}

cplx ParabolicDrift::v_at(double t) {
    if (t < stepper_.t())
        throw DomainError("ParabolicDrift: sample times must be nondecreasing");
    if (t > stepper_.t()) stepper_.advance_to(t);
    return stepper_.y();
}

cplx ParabolicDrift::w_at(double t) { return drift(t) + v_at(t); }

}  // namespace diskflow
