// FFTW-backed transforms between grid samples and Fourier coefficients.
//
// Conventions:
//   forward:  f_hat_k = n^-2 sum_j f(x_j) exp(-i k.x_j)   (FFTW_FORWARD / n^2)
//   backward: f(x_j)  = sum_k f_hat_k exp(+i k.x_j)       (FFTW_BACKWARD)
// Plans are created once per grid size with FFTW_ESTIMATE (deterministic
// planning) and executed on per-call fftw_malloc'd buffers via the
// new-array interface.  Plan creation is serialized; execution is not.

#include "agg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "agg/errors.hpp"

namespace agg {
namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~PlanPair() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

const PlanPair& plans_for(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PlanPair>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto pp = std::make_unique<PlanPair>();
        fftw_complex* proto = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
        pp->fwd = fftw_plan_dft_2d(n, n, proto, proto, FFTW_FORWARD, FFTW_ESTIMATE);
        pp->bwd = fftw_plan_dft_2d(n, n, proto, proto, FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_free(proto);
        it = cache.emplace(n, std::move(pp)).first;
    }
    return *it->second;
}

struct FftwBuffer {
    fftw_complex* p;
    explicit FftwBuffer(std::size_t count) : p(fftw_alloc_complex(count)) {}
    ~FftwBuffer() { fftw_free(p); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

} // namespace

SpectralField forward_transform(const RealSamples& samples, const Grid& grid) {
    const std::size_t sz = grid.size();
    if (samples.size() != sz)
        throw ConfigError("forward_transform: sample count does not match grid");

    FftwBuffer buf(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        buf.p[i][0] = samples[i];
        buf.p[i][1] = 0.0;
    }
    fftw_execute_dft(plans_for(grid.n).fwd, buf.p, buf.p);

    SpectralField f(grid);
    const double scale = 1.0 / static_cast<double>(sz);
    auto& c = f.data();
    for (std::size_t i = 0; i < sz; ++i)
        c[i] = Complex(buf.p[i][0] * scale, buf.p[i][1] * scale);

    // Hermitian symmetrization: average coeff(k) against conj(coeff(-k)).
    const int n = grid.n;
    for (int a = 0; a < n; ++a) {
        const int am = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            const int bm = (n - b) % n;
            if (a * n + b > am * n + bm) continue; // handle each pair once
            Complex z = f.coeff(a, b);
            Complex w = f.coeff(am, bm);
            Complex avg = 0.5 * (z + std::conj(w));
            f.coeff(a, b) = avg;
            f.coeff(am, bm) = std::conj(avg);
        }
    }
    return f;
}

RealSamples backward_transform(const SpectralField& f, RealSamples&& reuse) {
    const std::size_t sz = f.grid().size();
    FftwBuffer buf(sz);
    const auto& c = f.data();
    for (std::size_t i = 0; i < sz; ++i) {
        buf.p[i][0] = c[i].real();
        buf.p[i][1] = c[i].imag();
    }
    fftw_execute_dft(plans_for(f.n()).bwd, buf.p, buf.p);

    RealSamples out = std::move(reuse);
    out.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) out[i] = buf.p[i][0];
    return out;
}

RealSamples backward_transform(const SpectralField& f) {
    return backward_transform(f, RealSamples{});
}

} // namespace agg
