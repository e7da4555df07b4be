#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meshspectra/harmonics.hpp"
#include "meshspectra/mesh.hpp"
#include "meshspectra/projection.hpp"

namespace meshspectra {

/// The six feature-vector kinds plus the two Q-variants. Raw kinds live on
/// the n x n equiangular grid; spectrum kinds on the 2n x 4n quadrature grid.
enum class DescriptorKind : std::uint8_t {
    areas = 0,
    breadths = 1,
    areas_breadths = 2,
    area_spectrum = 3,
    breadth_spectrum = 4,
    shape_invariant = 5,
    q_breadth_spectrum = 6,
    q_shape_invariant = 7,
};

bool is_spectrum_kind(DescriptorKind kind);
bool is_q_kind(DescriptorKind kind);

/// Canonical CLI/file-format spelling ("areas", "breadth-spectrum", ...).
std::string to_string(DescriptorKind kind);
DescriptorKind descriptor_kind_from_string(const std::string& name);

struct DescriptorParams {
    int n = 8;
    double lambda = 75.0;  // Q kinds only

    bool operator==(const DescriptorParams&) const = default;
};

/// Expected value count for a kind: n^2, 2n^2, n or 3n.
std::size_t descriptor_length(DescriptorKind kind, const DescriptorParams& params);

struct DescriptorVector {
    DescriptorKind kind = DescriptorKind::breadths;
    DescriptorParams params;
    std::vector<double> values;
};

/// Per-degree invariants of one mesh: alpha_k = ||A_2k||, beta_k = ||b_2k||,
/// gamma_k = <A_2k, b_2k> for k = 0..n-1, plus the total norms ||A||, ||b||
/// accumulated over every analyzed degree (Parseval over 0..2n-1).
struct EuclideanSpectra {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma;
    double norm_area = 0.0;
    double norm_breadth = 0.0;
};

struct NormalizedSpectra {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma;
};

/// Which breadth function feeds the spectra: the standard max-min breadth or
/// the lambda-percentile variant.
struct BreadthVariant {
    bool percentile = false;
    double lambda = 100.0;

    static BreadthVariant standard() { return {}; }
    static BreadthVariant q(double lambda) { return {true, lambda}; }
};

/// n x 3 matrix of log-stabilized shape invariants, rows (alpha^s_k, beta^s_k,
/// gamma^s_k) for k = 0..n-1.
struct ShapeInvariantMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major n x 3

    double alpha_s(int k) const { return entries[static_cast<std::size_t>(3 * k)]; }
    double beta_s(int k) const { return entries[static_cast<std::size_t>(3 * k + 1)]; }
    double gamma_s(int k) const { return entries[static_cast<std::size_t>(3 * k + 2)]; }

    /// Row-major flattening (length 3n).
    std::vector<double> flattened() const { return entries; }
};

/// Samples on build_raw_grid(n); areas_breadths concatenates areas first.
DescriptorVector raw_vector(const TriMesh& mesh, DescriptorKind kind, int n);

/// Samples area and the chosen breadth on build_quadrature_grid(n), analyzes
/// to band limit 2n-1 and reads off the even-degree energies/cross terms.
EuclideanSpectra euclidean_spectra(const TriMesh& mesh, int n,
                                   const BreadthVariant& variant = BreadthVariant::standard());

/// alpha'_k = alpha_k/||A||, beta'_k = beta_k/||b||,
/// gamma'_k = sqrt(alpha'^2 + beta'^2 + 2*gamma_k/(||A||*||b||)).
/// Throws DegenerateNormError when either total norm vanishes.
NormalizedSpectra normalize_spectra(const EuclideanSpectra& spectra);
NormalizedSpectra normalize_spectra(std::span<const double> alpha, std::span<const double> beta,
                                    std::span<const double> gamma, double norm_area,
                                    double norm_breadth);

/// x = 0 -> 0; otherwise x is clamped to [1e-300, 1 - 1e-9] and mapped to
/// -1/ln(x). Monotone increasing on [0, 1). Negative input throws.
double log_stabilize(double x);

ShapeInvariantMatrix shape_invariant(const TriMesh& mesh, int n,
                                     const BreadthVariant& variant = BreadthVariant::standard());

/// Single-column spectra (area_spectrum, breadth_spectrum, q_breadth_spectrum).
DescriptorVector spectrum_vector(const TriMesh& mesh, int n, DescriptorKind which,
                                 double lambda = 75.0);

/// One-stop extraction for any kind.
DescriptorVector extract_descriptor(const TriMesh& mesh, DescriptorKind kind,
                                    const DescriptorParams& params);

/// Builds a descriptor from already-sampled spherical functions; the motion
/// pipeline filters samples over time and then calls this. Raw kinds expect
/// raw-grid samples, spectrum kinds quadrature-grid samples; the breadth slot
/// holds percentile-breadth samples for Q kinds.
DescriptorVector descriptor_from_samples(DescriptorKind kind, const DescriptorParams& params,
                                         const SphericalSamples* area_samples,
                                         const SphericalSamples* breadth_samples);

}  // namespace meshspectra
