#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "meshspectra/errors.hpp"
#include "meshspectra/vec3.hpp"

namespace meshspectra {

/// Unit vector on S^2. Construction normalizes; a zero vector throws.
class Direction {
  public:
    explicit Direction(const Vec3& v);

    /// From spherical angles: theta polar (from +z), phi azimuthal.
    static Direction from_angles(double theta, double phi);

    const Vec3& vec() const { return u_; }
    double x() const { return u_.x; }
    double y() const { return u_.y; }
    double z() const { return u_.z; }

    Direction operator-() const;

  private:
    struct unchecked_t {};
    Direction(const Vec3& v, unchecked_t) : u_(v) {}
    Vec3 u_;

    friend Direction direction_unchecked(const Vec3& v);
};

/// Internal fast path for vectors already known to be unit.
Direction direction_unchecked(const Vec3& v);

inline double dot(const Direction& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Direction& a, const Direction& b) { return dot(a.vec(), b.vec()); }

enum class GridKind : std::uint8_t { raw, quadrature };

/// Identifies the grid a sample vector lives on without storing the grid.
struct GridTag {
    GridKind kind = GridKind::raw;
    int n = 0;
    bool operator==(const GridTag&) const = default;
};

/// Scalar samples of a spherical function, one value per grid node.
struct SphericalSamples {
    GridTag grid;
    std::vector<double> values;
};

/// Product quadrature grid: 2n Gauss-Legendre latitudes in cos(theta) times
/// 4n uniform longitudes phi_b = 2*pi*b/(4n). Node order is latitude-major.
/// Weights represent the normalized measure dOmega/(4*pi) and sum to 1; the
/// rule integrates exactly every spherical harmonic product Y_k * Y_k' with
/// k, k' <= 2n-1.
class QuadratureGrid {
  public:
    explicit QuadratureGrid(int n);

    int n() const { return n_; }
    int n_lat() const { return 2 * n_; }
    int n_lon() const { return 4 * n_; }
    std::size_t node_count() const { return directions_.size(); }

    std::span<const Direction> directions() const { return directions_; }
    std::span<const double> weights() const { return weights_; }

    /// cos(theta) of latitude row a, descending from pole to pole.
    double mu(int a) const { return mu_[static_cast<std::size_t>(a)]; }
    /// Latitude weights, normalized so they sum to 1 over rows.
    double latitude_weight(int a) const { return lat_weight_[static_cast<std::size_t>(a)]; }
    double phi(int b) const;

    GridTag tag() const { return {GridKind::quadrature, n_}; }

  private:
    int n_;
    std::vector<Direction> directions_;
    std::vector<double> weights_;
    std::vector<double> mu_;
    std::vector<double> lat_weight_;
};

QuadratureGrid build_quadrature_grid(int n);

/// Equiangular n x n grid: theta_i = pi*(2i+1)/(2n), phi_j = 2*pi*j/n,
/// row-major with theta outer. Carries no quadrature weights.
struct RawGrid {
    int n = 0;
    std::vector<Direction> directions;
    GridTag tag() const { return {GridKind::raw, n}; }
};

RawGrid build_raw_grid(int n);

/// Gauss-Legendre nodes/weights on [-1, 1]; weights sum to 2.
void gauss_legendre(int point_count, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace meshspectra
