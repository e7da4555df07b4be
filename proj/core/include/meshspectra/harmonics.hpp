#pragma once

#include <span>
#include <vector>

#include "meshspectra/spherical_grid.hpp"

namespace meshspectra {

/// Real spherical-harmonic coefficients f_{k,m}, 0 <= k <= band_limit,
/// -k <= m <= k, under the 4*pi-normalized (geodesy) convention without the
/// Condon-Shortley phase: ||Y_{k,m}||_2 = 1 in the (1/4pi) * integral norm.
class SHCoefficients {
  public:
    explicit SHCoefficients(int band_limit);

    int band_limit() const { return band_limit_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator()(int degree, int order) const {
        return coeffs_[index(degree, order)];
    }
    double& operator()(int degree, int order) { return coeffs_[index(degree, order)]; }

    std::span<const double> raw() const { return coeffs_; }

    static std::size_t index(int degree, int order) {
        return static_cast<std::size_t>(degree) * degree + degree + order;
    }

  private:
    int band_limit_;
    std::vector<double> coeffs_;
};

/// Fully normalized associated Legendre values Pbar_{k,m}(x) for all
/// 0 <= m <= k <= band_limit, packed as out[k*(k+1)/2 + m]. Normalization is
/// chosen so Y_{k,0} = Pbar_{k,0} and Y_{k,+-m} = sqrt(2)*Pbar_{k,m}*cos/sin(m*phi);
/// no Condon-Shortley phase. Stable three-term recursion in x = cos(theta).
void legendre_normalized(int band_limit, double x, std::span<double> out);
std::size_t legendre_table_size(int band_limit);

/// Point evaluation of the real harmonic Y_{k,m}.
double real_spherical_harmonic(int degree, int order, const Direction& dir);

/// Projects samples on a quadrature grid onto harmonics up to `band_limit`:
/// f_{k,m} = sum over nodes of weight * value * Y_{k,m}(node). Exact for
/// inputs band-limited to the grid's supported degree. Throws BandLimitError
/// when band_limit > 2n-1 for a grid built with parameter n, GridMismatchError
/// when the samples are not on a quadrature grid or sizes disagree.
SHCoefficients analyze(const SphericalSamples& samples, int band_limit);
SHCoefficients analyze(std::span<const double> values, const QuadratureGrid& grid,
                       int band_limit);

/// Pointwise synthesis sum f(u) = sum f_{k,m} Y_{k,m}(u).
std::vector<double> synthesize(const SHCoefficients& coeffs,
                               std::span<const Direction> directions);

/// ||f_k||_2 = sqrt(sum over m of f_{k,m}^2). DegreeOutOfRangeError if k > L.
double degree_energy(const SHCoefficients& coeffs, int degree);

/// <f_k, g_k> = sum over m of f_{k,m} * g_{k,m}. Satisfies Cauchy-Schwarz.
double degree_cross(const SHCoefficients& a, const SHCoefficients& b, int degree);

}  // namespace meshspectra
