#include "diskflow/generator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace diskflow {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::string fmt_cplx(cplx v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

}  // namespace

// f, f', p as polynomials in zeta = 1 - z.  With (z-1) = -zeta:
//   f      = -a zeta + zeta^2 * s(zeta),   s(zeta) = b - c zeta + t4 zeta^2 - ...
//   f'     =  a - 2b zeta + 3c zeta^2 - 4 t4 zeta^3 + ...
//   p      = -f/zeta^2 = a/zeta - b + c zeta - t4 zeta^2 + ...
cplx GeneratorSpec::f_from_zeta(cplx zeta) const {
    cplx s{};
    for (size_t k = tail_.size(); k-- > 0;) {
        double sign = ((k + 4) % 2 == 0) ? 1.0 : -1.0;  // (-1)^(k+4)
        s = s * zeta + sign * tail_[k];
    }
    s = s * zeta - taylor_.c;
    s = s * zeta + taylor_.b;
    return -taylor_.a * zeta + zeta * zeta * s;
}

cplx GeneratorSpec::f_prime_from_zeta(cplx zeta) const {
    cplx s{};
    for (size_t k = tail_.size(); k-- > 0;) {
        double deg = double(k + 4);
        double sign = ((k + 4) % 2 == 0) ? -1.0 : 1.0;  // k(-1)^(k-1) on zeta^(k-1)
        s = s * zeta + sign * deg * tail_[k];
    }
    s = s * zeta + 3.0 * taylor_.c;
    s = s * zeta - 2.0 * taylor_.b;
    return taylor_.a + zeta * s;
}

cplx GeneratorSpec::p_from_zeta(cplx zeta) const {
    cplx s{};
    for (size_t k = tail_.size(); k-- > 0;) {
        double sign = ((k + 4) % 2 == 0) ? -1.0 : 1.0;  // -(-1)^k on zeta^(k-2)
        s = s * zeta + sign * tail_[k];
    }
    s = s * zeta + taylor_.c;
    s = s * zeta - taylor_.b;
    return taylor_.a / zeta + s;
}

cplx GeneratorSpec::eval_f(cplx z) const {
    if (std::abs(z) >= 1.0) throw DomainError("eval_f: |z| >= 1");
    return f_from_zeta(1.0 - z);
}

cplx GeneratorSpec::eval_f_prime(cplx z) const {
    if (std::abs(z) >= 1.0) throw DomainError("eval_f_prime: |z| >= 1");
    return f_prime_from_zeta(1.0 - z);
}

cplx GeneratorSpec::herglotz_p(cplx z) const {
    if (std::abs(z) >= 1.0) throw DomainError("herglotz_p: |z| >= 1");
    return p_from_zeta(1.0 - z);
}

std::string GeneratorSpec::id() const {
    std::string s = "a=";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", taylor_.a);
    s += buf;
    s += ";b=" + fmt_cplx(taylor_.b) + ";c=" + fmt_cplx(taylor_.c);
    for (const cplx& t : tail_) s += ";" + fmt_cplx(t);
    return s;
}

std::vector<cplx> validation_grid(int n) {
    if (n < 4096) n = 4096;
    // 28 uniform radii plus 3 boundary-clustered ones, golden-angle stagger.
    const int rings = 31;
    const int per_ring = (n + rings - 1) / rings;
    std::vector<double> radii;
    radii.reserve(rings);
    for (int j = 0; j < 28; ++j) radii.push_back((j + 0.5) / 28.0);
    radii.push_back(0.99);
    radii.push_back(0.999);
    radii.push_back(0.9999);

    std::vector<cplx> pts;
    pts.reserve(size_t(rings) * per_ring);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < rings; ++i) {
        for (int j = 0; j < per_ring; ++j) {
            double theta = two_pi * (j + 0.3819660112501051 * i) / per_ring;
            pts.push_back(radii[i] * cplx(std::cos(theta), std::sin(theta)));
        }
    }
    return pts;
}

GeneratorSpec make_generator(const TaylorData& taylor, std::vector<cplx> tail,
                             int grid_points) {
    if (!std::isfinite(taylor.a) || taylor.a < 0.0)
        throw DomainError("make_generator: angular derivative a must be a finite real >= 0");
    if (!finite(taylor.b) || !finite(taylor.c))
        throw DomainError("make_generator: non-finite Taylor coefficient");
    if (!std::isfinite(taylor.epsilon) || taylor.epsilon <= 0.0)
        throw DomainError("make_generator: epsilon must be > 0");
    for (const cplx& t : tail)
        if (!finite(t)) throw DomainError("make_generator: non-finite tail coefficient");
    while (!tail.empty() && tail.back() == cplx{}) tail.pop_back();

    bool all_zero = taylor.a == 0.0 && taylor.b == cplx{} && taylor.c == cplx{} && tail.empty();
    if (all_zero) throw DegenerateError("make_generator: f == 0 generates the identity semigroup");

    GeneratorSpec gen;
    gen.taylor_ = taylor;
    gen.tail_ = std::move(tail);

    const std::vector<cplx> grid = validation_grid(grid_points);
    gen.grid_points_ = int(grid.size());
    double min_re = std::numeric_limits<double>::infinity();
    cplx argmin{};
    for (const cplx& z : grid) {
        cplx zeta = 1.0 - z;
        double re = gen.p_from_zeta(zeta).real();
        if (re < min_re) {
            min_re = re;
            argmin = z;
        }
        if (gen.f_from_zeta(zeta) == cplx{})
            throw AdmissibilityError("make_generator: f vanishes at grid point " + fmt_cplx(z));
    }
    gen.min_re_p_ = min_re;
    if (min_re < -1e-12) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "make_generator: min Re p = %.3e < -1e-12 at z = %s",
                      min_re, fmt_cplx(argmin).c_str());
        throw AdmissibilityError(buf);
    }
    return gen;
}

cplx HalfPlaneGenerator::remainder(cplx w) const {
    cplx u = 1.0 / (w + 1.0);
    cplx s{};
    for (size_t j = ucoef_.size(); j-- > 0;) s = s * u + ucoef_[j];
    return s * u * u;
}

cplx HalfPlaneGenerator::eval_phi(cplx w) const {
    return alpha_ * (w + 1.0) - 2.0 * taylor_.b + gamma_ / (w + 1.0) + remainder(w);
}

HalfPlaneGenerator to_halfplane(const GeneratorSpec& gen) {
    HalfPlaneGenerator h;
    h.taylor_ = gen.taylor();
    h.alpha_ = gen.taylor().a;
    h.beta_ = gen.taylor().a - 2.0 * gen.taylor().b;
    h.gamma_ = 4.0 * gen.taylor().c;
    // phi = 2p(C^{-1}(w)) with zeta = 2u: tail term -(-1)^k t_k zeta^(k-2)
    // doubles into q_j u^j, q_j = (-1)^(j+1) 2^(j+1) t_(j+2), j = k-2 >= 2.
    const auto& tail = gen.tail();
    h.ucoef_.resize(tail.size());
    double pow2 = 8.0;  // 2^(j+1) at j = 2
    double sign = -1.0;
    for (size_t i = 0; i < tail.size(); ++i) {
        h.ucoef_[i] = sign * pow2 * tail[i];
        pow2 *= 2.0;
        sign = -sign;
    }
    h.id_ = gen.id();
    return h;
}

}  // namespace diskflow
