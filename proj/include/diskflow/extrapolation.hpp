#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace diskflow {

// Limit estimation for sequences sampled at geometrically spaced abscissae,
// where successive differences contract by a roughly constant ratio.  One
// Aitken delta-squared sweep plus a contraction check; the error estimate
// comes from the spread of the last accelerated values, so no convergence
// rate is assumed a priori.

template <class T>
struct LimitEstimate {
    T value{};
    double err = 0.0;
    bool converged = false;
};

template <class T>
LimitEstimate<T> geometric_sequence_limit(std::span<const T> v) {
    LimitEstimate<T> out;
    const size_t n = v.size();
    if (n == 0) return out;
    out.value = v[n - 1];
    if (n == 1) {
        out.err = std::abs(v[0]);
        return out;
    }

    const double scale = 1.0 + std::abs(v[n - 1]);
    const double d_last = std::abs(v[n - 1] - v[n - 2]);
    if (d_last <= 1e-15 * scale) {
        out.err = d_last + 1e-15 * scale;
        out.converged = true;
        return out;
    }
    if (n == 2) {
        out.err = d_last;
        return out;
    }

    // contraction ratios of the raw differences
    bool contracting = true;
    int checked = 0;
    for (size_t i = n - 1; i >= 2 && checked < 3; --i, ++checked) {
        double d1 = std::abs(v[i] - v[i - 1]);
        double d0 = std::abs(v[i - 1] - v[i - 2]);
        if (d0 <= 1e-15 * scale) break;  // already flat earlier on
        if (d1 > 0.97 * d0) {
            contracting = false;
            break;
        }
    }
    if (!contracting) {
        out.err = 10.0 * d_last;
        return out;
    }

    // Aitken sweep
    std::vector<T> acc;
    acc.reserve(n - 2);
    for (size_t i = 0; i + 2 < n; ++i) {
        T d1 = v[i + 1] - v[i];
        T d2 = v[i + 2] - v[i + 1];
        T den = d2 - d1;
        if (std::abs(den) <= 1e-300) {
            acc.push_back(v[i + 2]);
        } else {
            acc.push_back(v[i + 2] - d2 * d2 / den);
        }
    }
    out.value = acc.back();
    double spread = acc.size() >= 2 ? std::abs(acc[acc.size() - 1] - acc[acc.size() - 2])
                                    : d_last;
    out.err = spread + 0.05 * d_last;
    out.converged = true;
    return out;
}

template <class T>
LimitEstimate<T> geometric_sequence_limit(const std::vector<T>& v) {
    return geometric_sequence_limit(std::span<const T>(v.data(), v.size()));
}

// Least-squares fit of y ~ k0 + k1 * x with standard errors.
struct LogFit {
    double k0 = 0.0, k1 = 0.0;
    double se0 = 0.0, se1 = 0.0;
};

inline LogFit fit_affine(std::span<const double> x, std::span<const double> y) {
    LogFit f;
    const size_t n = x.size();
    if (n < 2) return f;
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    f.k1 = sxy / sxx;
    f.k0 = my - f.k1 * mx;
    if (n > 2) {
        double ssr = 0;
        for (size_t i = 0; i < n; ++i) {
            double r = y[i] - f.k0 - f.k1 * x[i];
            ssr += r * r;
        }
        double s2 = ssr / double(n - 2);
        f.se1 = std::sqrt(s2 / sxx);
        f.se0 = std::sqrt(s2 * (1.0 / double(n) + mx * mx / sxx));
    }
    return f;
}

}  // namespace diskflow
