#include "agg/spectral_ops.hpp"

#include <cmath>
#include <cstdlib>

#include "agg/errors.hpp"
#include "agg/fft.hpp"

namespace agg {
namespace {

// Derivative wavenumber: the Nyquist mode n/2 has no conjugate partner in
// the retained set, so odd multipliers on it would break reality.
inline int deriv_wavenumber(int a, int n) {
    if (a == n / 2) return 0;
    return a <= n / 2 ? a : a - n;
}

inline double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

SpectralVectorField gradient(const SpectralField& f) {
    const int n = f.n();
    SpectralVectorField g(f.grid());
    for (int a = 0; a < n; ++a) {
        const double kx = deriv_wavenumber(a, n);
        for (int b = 0; b < n; ++b) {
            const double ky = deriv_wavenumber(b, n);
            const Complex ik_f = Complex(0.0, 1.0) * f.coeff(a, b);
            g.x.coeff(a, b) = kx * ik_f;
            g.y.coeff(a, b) = ky * ik_f;
        }
    }
    return g;
}

SpectralField divergence(const SpectralVectorField& v) {
    const int n = v.grid().n;
    SpectralField d(v.grid());
    for (int a = 0; a < n; ++a) {
        const double kx = deriv_wavenumber(a, n);
        for (int b = 0; b < n; ++b) {
            const double ky = deriv_wavenumber(b, n);
            d.coeff(a, b) = Complex(0.0, 1.0) * (kx * v.x.coeff(a, b) + ky * v.y.coeff(a, b));
        }
    }
    return d;
}

SpectralField laplacian(const SpectralField& f) {
    const int n = f.n();
    SpectralField g(f.grid());
    for (int a = 0; a < n; ++a) {
        const double kx = deriv_wavenumber(a, n);
        for (int b = 0; b < n; ++b) {
            const double ky = deriv_wavenumber(b, n);
            g.coeff(a, b) = -(kx * kx + ky * ky) * f.coeff(a, b);
        }
    }
    return g;
}

SpectralField bilaplacian(const SpectralField& f) {
    const int n = f.n();
    SpectralField g(f.grid());
    for (int a = 0; a < n; ++a) {
        const double kx = deriv_wavenumber(a, n);
        for (int b = 0; b < n; ++b) {
            const double ky = deriv_wavenumber(b, n);
            const double k2 = kx * kx + ky * ky;
            g.coeff(a, b) = k2 * k2 * f.coeff(a, b);
        }
    }
    return g;
}

SymmetricGradient symmetric_gradient(const SpectralVectorField& v) {
    const int n = v.grid().n;
    SymmetricGradient d;
    d.xx = SpectralField(v.grid());
    d.xy = SpectralField(v.grid());
    d.yy = SpectralField(v.grid());
    for (int a = 0; a < n; ++a) {
        const double kx = deriv_wavenumber(a, n);
        for (int b = 0; b < n; ++b) {
            const double ky = deriv_wavenumber(b, n);
            const Complex ux = v.x.coeff(a, b);
            const Complex uy = v.y.coeff(a, b);
            const Complex i(0.0, 1.0);
            d.xx.coeff(a, b) = i * kx * ux;
            d.yy.coeff(a, b) = i * ky * uy;
            d.xy.coeff(a, b) = 0.5 * i * (ky * ux + kx * uy);
        }
    }
    return d;
}

void dealias_inplace(SpectralField& f) {
    const int n = f.n();
    for (int a = 0; a < n; ++a) {
        const int kx = std::abs(f.grid().wavenumber(a));
        for (int b = 0; b < n; ++b) {
            const int ky = std::abs(f.grid().wavenumber(b));
            if (3 * std::max(kx, ky) > n) f.coeff(a, b) = Complex(0.0, 0.0);
        }
    }
}

SpectralField dealias(SpectralField f) {
    dealias_inplace(f);
    return f;
}

void dealias_inplace(SpectralVectorField& v) {
    dealias_inplace(v.x);
    dealias_inplace(v.y);
}

double sobolev_norm(const SpectralField& f, int s) {
    if (s < 0) throw ConfigError("sobolev_norm: s must be >= 0");
    const int n = f.n();
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
        const double kx = f.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double ky = f.grid().wavenumber(b);
            const double k2 = kx * kx + ky * ky;
            const double w = 1.0 + ipow(k2, s); // |k|^{2s} = (|k|^2)^s, 0^0 = 1
            acc += w * std::norm(f.coeff(a, b));
        }
    }
    return std::sqrt(0.5 * kTwoPi * kTwoPi * acc);
}

double sobolev_norm(const SpectralVectorField& v, int s) {
    const double nx = sobolev_norm(v.x, s);
    const double ny = sobolev_norm(v.y, s);
    return std::sqrt(nx * nx + ny * ny);
}

double inner_l2(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid()) throw ConfigError("inner_l2: grid mismatch");
    const auto& cf = f.data();
    const auto& cg = g.data();
    double acc = 0.0;
    for (std::size_t i = 0; i < cf.size(); ++i)
        acc += cf[i].real() * cg[i].real() + cf[i].imag() * cg[i].imag();
    return kTwoPi * kTwoPi * acc;
}

double inner_l2(const SpectralVectorField& v, const SpectralVectorField& w) {
    return inner_l2(v.x, w.x) + inner_l2(v.y, w.y);
}

double mean(const SpectralField& f) { return f.coeff(0, 0).real(); }

SpectralVectorField leray_project(SpectralVectorField v) {
    const int n = v.grid().n;
    for (int a = 0; a < n; ++a) {
        const double kx = v.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double ky = v.grid().wavenumber(b);
            const double k2 = kx * kx + ky * ky;
            if (k2 == 0.0) continue;
            const Complex kdotv = kx * v.x.coeff(a, b) + ky * v.y.coeff(a, b);
            v.x.coeff(a, b) -= kdotv * kx / k2;
            v.y.coeff(a, b) -= kdotv * ky / k2;
        }
    }
    return v;
}

double max_abs_samples(const SpectralField& f) {
    RealSamples s = backward_transform(f);
    double m = 0.0;
    for (double x : s) m = std::max(m, std::abs(x));
    return m;
}

} // namespace agg
