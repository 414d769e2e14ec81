#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "diskflow/generator.hpp"

namespace diskflow {

struct FlowConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;  // 0 = no explicit cap
    double t_max = 2e6;
    void validate() const;
};

// Sampled flow orbit in half-plane coordinates.
struct Trajectory {
    std::vector<double> times;
    std::vector<cplx> points_w;
    cplx origin_w{};
    std::string gen_id;

    cplx point_z(size_t k) const { return cayley_inv(points_w[k]); }
};

struct Schedule {
    std::vector<double> times;

    static Schedule linear(double t_max, int n);
    static Schedule geometric(double t0, double ratio, int n);
};

namespace detail {

// Dormand-Prince 5(4), FSAL, complex scalar state.  The right-hand side is
// any callable cplx(double t, cplx y).  Error per step is measured against
// abs_tol + rel_tol * max(|y|, |y_new|); the step floor triggers StepFailure.
template <class Rhs>
class Dopri5 {
  public:
    Dopri5(Rhs rhs, double t0, cplx y0, const FlowConfig& cfg)
        : rhs_(std::move(rhs)), t_(t0), y_(y0), cfg_(cfg) {
        k1_ = rhs_(t_, y_);
        h_ = initial_step();
    }

    double t() const { return t_; }
    cplx y() const { return y_; }

    void advance_to(double t_end) {
        while (t_ < t_end) {
            double h = std::min(h_, t_end - t_);
            if (cfg_.max_step > 0.0) h = std::min(h, cfg_.max_step);
            step(h, t_end);
        }
    }

  private:
    double initial_step() const {
        double scale = (1.0 + std::abs(y_)) / (1.0 + std::abs(k1_));
        double h = 0.01 * scale;
        if (cfg_.max_step > 0.0) h = std::min(h, cfg_.max_step);
        return std::max(h, 1e-12);
    }

    void step(double h, double t_end) {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        for (;;) {
            if (h < 1e-14 * std::max(1.0, std::abs(t_)))
                throw StepFailure("flow: step size underflow at t = " + std::to_string(t_));

            const cplx k2 = rhs_(t_ + a21 * h, y_ + h * (a21 * k1_));
            const cplx k3 = rhs_(t_ + 0.3 * h, y_ + h * (a31 * k1_ + a32 * k2));
            const cplx k4 = rhs_(t_ + 0.8 * h, y_ + h * (a41 * k1_ + a42 * k2 + a43 * k3));
            const cplx k5 =
                rhs_(t_ + 8.0 / 9.0 * h, y_ + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4));
            const cplx k6 =
                rhs_(t_ + h, y_ + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            const cplx y_new = y_ + h * (b1 * k1_ + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const cplx k7 = rhs_(t_ + h, y_new);

            const cplx err_vec =
                h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double scale =
                cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(y_), std::abs(y_new));
            const double err = std::abs(err_vec) / scale;

            if (err <= 1.0) {
                t_ += h;
                y_ = y_new;
                k1_ = k7;  // FSAL
                double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
                h_ = h * std::clamp(fac, 0.2, 5.0);
                if (cfg_.max_step > 0.0) h_ = std::min(h_, cfg_.max_step);
                return;
            }
            double fac = 0.9 * std::pow(err, -0.2);
            h *= std::clamp(fac, 0.1, 0.9);
            h = std::min(h, t_end - t_);
        }
    }

    Rhs rhs_;
    double t_;
    cplx y_;
    cplx k1_;
    double h_ = 0.0;
    FlowConfig cfg_;
};

}  // namespace detail

// Solution of dw/dt = phi(w), w(0) = w0, at time t (Julia monotone shift:
// Re of the result never drops below Re w0 beyond integrator slack).
cplx evolve(const HalfPlaneGenerator& hgen, cplx w0, double t, const FlowConfig& cfg = {});

// Disk flow via the Cayley conjugation.
cplx evolve_disk(const GeneratorSpec& gen, cplx z0, double t, const FlowConfig& cfg = {});

// Dense output at the schedule times from one continuous integration.
Trajectory sample_trajectory(const HalfPlaneGenerator& hgen, cplx w0, const Schedule& sched,
                             const FlowConfig& cfg = {});

// |Phi_{t+s}(w0) - Phi_t(Phi_s(w0))|
double semigroup_residual(const HalfPlaneGenerator& hgen, cplx w0, double t, double s,
                          const FlowConfig& cfg = {});

// CSV export: header t,re_w,im_w,re_z,im_z at 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Long-horizon propagator for parabolic generators (beta != 0).  Integrates
// the deviation v(t) = Phi_t(w0) - beta*t - (gamma/beta)*log(1+t), which
// stays O(1), so the error control is effectively absolute even when
// |Phi_t| ~ 1e6.  Advance times must be nondecreasing.
class ParabolicDrift {
  public:
    ParabolicDrift(const HalfPlaneGenerator& hgen, cplx w0, const FlowConfig& cfg = {});

    cplx v_at(double t);  // deviation at time t
    cplx w_at(double t);  // Phi_t(w0) reassembled from the exact drift + deviation
    cplx drift(double t) const;

    const HalfPlaneGenerator& hgen() const { return hgen_; }

  private:
    HalfPlaneGenerator hgen_;
    cplx gamma_over_beta_;
    detail::Dopri5<std::function<cplx(double, cplx)>> stepper_;
};

}  // namespace diskflow
