#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "meshspectra/vec3.hpp"

namespace meshspectra {

/// Indexed triangle soup. Faces are (i, j, k) with counter-clockwise = outward
/// orientation. Degenerate (zero-area) faces are allowed and contribute zero
/// to every area sum. Immutable by convention once built: all operations in
/// this library take it by const reference and never mutate it.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::uint32_t, 3>> faces;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

/// Per-face unit normal and area. For a zero-area face the normal is the zero
/// vector; downstream consumers skip those faces.
struct FaceGeometry {
    Vec3 unit_normal;
    double area = 0.0;
};

/// Throws IndexError if any face references a missing vertex, EmptyMeshError
/// for a mesh without vertices.
void validate(const TriMesh& mesh);

/// Normal/area pairs in face order. area = |(b-a) x (c-a)| / 2.
std::vector<FaceGeometry> face_geometry(const TriMesh& mesh);

/// Sum of face areas. Throws EmptyMeshError when the mesh has no faces.
double total_area(const TriMesh& mesh);

TriMesh translated(const TriMesh& mesh, const Vec3& offset);
TriMesh rotated(const TriMesh& mesh, const Mat3& rotation);
TriMesh scaled(const TriMesh& mesh, double factor);

/// Appends another mesh's triangles (index-shifted) to `dst`.
void append_mesh(TriMesh& dst, const TriMesh& src);

}  // namespace meshspectra
