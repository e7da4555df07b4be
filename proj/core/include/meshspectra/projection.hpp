#pragma once

#include <span>
#include <vector>

#include "meshspectra/mesh.hpp"
#include "meshspectra/spherical_grid.hpp"

namespace meshspectra {

/// One atom of the extended Gaussian image: a face's area placed at its unit
/// normal. Zero-area faces never produce atoms.
struct EgiAtom {
    Direction normal;
    double weight = 0.0;
};

struct Egi {
    std::vector<EgiAtom> atoms;
    double total_weight() const;
};

/// h(M;u) = max over vertices of u.x. Triangles are convex, so the vertex
/// set suffices.
double support(const TriMesh& mesh, const Direction& u);

/// b(M;u) = h(M;u) + h(M;-u) = max u.x - min u.x. Even and >= 0.
double breadth(const TriMesh& mesh, const Direction& u);

/// Percentile breadth b_lambda: replaces max/min by the lambda-th percentile
/// of the projections on u and -u. Percentiles interpolate linearly between
/// order statistics at rank lambda*(N-1)/100, so lambda = 100 reproduces
/// breadth exactly. lambda in (0, 100], else BadLambdaError.
double percentile_breadth(const TriMesh& mesh, const Direction& u, double lambda);

/// A(M;u) = sum over faces of |u.n_i| * area_i. Even and >= 0. Computed
/// straight from the face list; use egi() when the atom set itself is wanted.
double weighted_area(const TriMesh& mesh, const Direction& u);

Egi egi(const TriMesh& mesh);

/// Collapses atoms whose normals agree within `tolerance` (test utility; the
/// weighted area function is insensitive to merging).
Egi merge_egi_atoms(const Egi& egi, double tolerance = 1e-9);

/// Which spherical function of the mesh to sample.
struct SphericalFunction {
    enum class Kind { breadth, weighted_area, percentile_breadth };
    Kind kind = Kind::breadth;
    double lambda = 100.0;  // percentile_breadth only

    static SphericalFunction breadth_fn() { return {Kind::breadth, 100.0}; }
    static SphericalFunction area_fn() { return {Kind::weighted_area, 100.0}; }
    static SphericalFunction q_breadth_fn(double lambda) {
        return {Kind::percentile_breadth, lambda};
    }
};

/// Values of the chosen function at each direction, order-aligned with input.
std::vector<double> sample_function(const TriMesh& mesh,
                                    std::span<const Direction> directions,
                                    const SphericalFunction& fn);

SphericalSamples sample_on_grid(const TriMesh& mesh, const QuadratureGrid& grid,
                                const SphericalFunction& fn);
SphericalSamples sample_on_grid(const TriMesh& mesh, const RawGrid& grid,
                                const SphericalFunction& fn);

}  // namespace meshspectra
