#pragma once

#include <string>
#include <vector>

#include "diskflow/cayley.hpp"
#include "diskflow/errors.hpp"

namespace diskflow {

enum class SemigroupClass { hyperbolic, parabolic };

// Taylor head of the generator at the Denjoy-Wolff point tau = 1:
//   f(z) = a(z-1) + b(z-1)^2 + c(z-1)^3 + tail(z).
// a is the angular derivative f'(1) (a real number >= 0); epsilon is the
// declared smoothness exponent of the remainder beyond the cubic term.
struct TaylorData {
    double a = 0.0;
    cplx b{};
    cplx c{};
    double epsilon = 0.5;
};

// A validated Berkson-Porta generator with tau = 1. The tail holds the
// coefficients of (z-1)^4, (z-1)^5, ... so f is polynomial in (z-1).
// Construction goes through make_generator which runs the Herglotz grid
// check on p(z) = -f(z)/(1-z)^2; instances are immutable afterwards.
class GeneratorSpec {
  public:
    const TaylorData& taylor() const { return taylor_; }
    const std::vector<cplx>& tail() const { return tail_; }

    cplx eval_f(cplx z) const;        // throws DomainError outside the disk
    cplx eval_f_prime(cplx z) const;  // coefficient-wise derivative
    cplx herglotz_p(cplx z) const;    // -f(z)/(1-z)^2, evaluated cancellation-free

    // Same quantities as series in zeta = 1 - z; stable arbitrarily close to 1.
    cplx f_from_zeta(cplx zeta) const;
    cplx f_prime_from_zeta(cplx zeta) const;
    cplx p_from_zeta(cplx zeta) const;

    SemigroupClass type() const {
        return taylor_.a > 0.0 ? SemigroupClass::hyperbolic : SemigroupClass::parabolic;
    }

    double min_re_p() const { return min_re_p_; }
    int grid_points() const { return grid_points_; }
    std::string id() const;

  private:
    friend GeneratorSpec make_generator(const TaylorData&, std::vector<cplx>, int);
    GeneratorSpec() = default;

    TaylorData taylor_{};
    std::vector<cplx> tail_;
    double min_re_p_ = 0.0;
    int grid_points_ = 0;
};

// Validates and constructs a generator. Throws DegenerateError for f == 0,
// AdmissibilityError when min Re p over the validation grid < -1e-12, and
// DomainError for malformed input (a < 0, non-finite coefficients).
GeneratorSpec make_generator(const TaylorData& taylor, std::vector<cplx> tail = {},
                             int grid_points = 4216);

inline SemigroupClass classify(const GeneratorSpec& gen) { return gen.type(); }

// The Cayley-transported generator phi(w) = 2 p(C^{-1}(w)) on the right
// half-plane, in closed form:
//   phi(w) = alpha (w+1) - 2b + gamma/(w+1) + remainder(1/(w+1)),
// with alpha = a, beta = a - 2b (the affine part is alpha*w + beta) and
// gamma = 4c. The remainder is the transported polynomial tail.
class HalfPlaneGenerator {
  public:
    double alpha() const { return alpha_; }
    cplx beta() const { return beta_; }
    cplx gamma() const { return gamma_; }
    const TaylorData& taylor() const { return taylor_; }

    cplx eval_phi(cplx w) const;        // exact transport, machine precision
    cplx remainder(cplx w) const;       // phi minus affine and gamma/(w+1) parts
    SemigroupClass type() const {
        return alpha_ > 0.0 ? SemigroupClass::hyperbolic : SemigroupClass::parabolic;
    }
    std::string id() const { return id_; }

  private:
    friend HalfPlaneGenerator to_halfplane(const GeneratorSpec&);
    HalfPlaneGenerator() = default;

    double alpha_ = 0.0;
    cplx beta_{};
    cplx gamma_{};
    std::vector<cplx> ucoef_;  // coefficients of u^j, j >= 2, u = 1/(w+1)
    TaylorData taylor_{};
    std::string id_;
};

HalfPlaneGenerator to_halfplane(const GeneratorSpec& gen);

// Deterministic quasi-uniform validation grid: rings of angles with radii
// clustered toward the boundary (up to 1 - 1e-4), at least `n` points.
std::vector<cplx> validation_grid(int n);

}  // namespace diskflow
