#pragma once

#include <complex>
#include <vector>

#include "agg/grid.hpp"

namespace agg {

using Complex = std::complex<double>;
using RealSamples = std::vector<double>;

/// Fourier coefficients of a real scalar field on the torus.
///
/// coeff(a, b) stores f_hat at wavenumber (wavenumber(a), wavenumber(b)) with
/// the convention f_hat_k = n^-2 sum_j f(x_j) exp(-i k.x_j), so coeff(0, 0)
/// is the mean of the field.  Reality means coeff at -k equals the conjugate
/// of coeff at k for every retained k.
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(Grid grid) : grid_(grid), c_(grid.size(), Complex(0.0, 0.0)) {}

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n; }

    Complex& coeff(int a, int b) { return c_[static_cast<std::size_t>(a) * grid_.n + b]; }
    const Complex& coeff(int a, int b) const { return c_[static_cast<std::size_t>(a) * grid_.n + b]; }

    std::vector<Complex>& data() { return c_; }
    const std::vector<Complex>& data() const { return c_; }

    SpectralField& operator+=(const SpectralField& g) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += g.c_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& g) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= g.c_[i];
        return *this;
    }
    SpectralField& operator*=(double s) {
        for (auto& z : c_) z *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField f, const SpectralField& g) { return f += g; }
    friend SpectralField operator-(SpectralField f, const SpectralField& g) { return f -= g; }
    friend SpectralField operator*(double s, SpectralField f) { return f *= s; }

  private:
    Grid grid_;
    std::vector<Complex> c_;
};

/// Two scalar components on a shared grid.
struct SpectralVectorField {
    SpectralField x;
    SpectralField y;

    SpectralVectorField() = default;
    explicit SpectralVectorField(Grid grid) : x(grid), y(grid) {}

    const Grid& grid() const { return x.grid(); }

    SpectralVectorField& operator+=(const SpectralVectorField& v) {
        x += v.x;
        y += v.y;
        return *this;
    }
    SpectralVectorField& operator-=(const SpectralVectorField& v) {
        x -= v.x;
        y -= v.y;
        return *this;
    }
    SpectralVectorField& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }
    friend SpectralVectorField operator+(SpectralVectorField f, const SpectralVectorField& g) { return f += g; }
    friend SpectralVectorField operator-(SpectralVectorField f, const SpectralVectorField& g) { return f -= g; }
    friend SpectralVectorField operator*(double s, SpectralVectorField f) { return f *= s; }
};

/// Symmetric gradient D = (grad u + grad u^T)/2, stored as its three
/// independent entries.
struct SymmetricGradient {
    SpectralField xx;
    SpectralField xy;
    SpectralField yy;
};

} // namespace agg
