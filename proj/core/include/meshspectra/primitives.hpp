#pragma once

#include "meshspectra/mesh.hpp"

namespace meshspectra {

/// Axis-aligned box as 12 triangles, outward CCW. `subdivisions` splits every
/// face into an s x s quad grid (2*s*s triangles per face).
TriMesh make_box(const Vec3& min_corner, const Vec3& max_corner, int subdivisions = 1);

/// Icosahedron subdivided `subdivisions` times, vertices projected to radius.
TriMesh make_icosphere(int subdivisions, double radius = 1.0);

/// Latitude/longitude sphere with n_lat bands and n_lon segments.
TriMesh make_uv_sphere(int n_lat, int n_lon, double radius = 1.0);

}  // namespace meshspectra
