#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "meshspectra/mesh.hpp"

namespace meshspectra {

enum class MeshFormat { obj, off, ply_ascii };

/// Guesses the format from the file extension (.obj/.off/.ply).
std::optional<MeshFormat> mesh_format_from_extension(const std::filesystem::path& path);

/// Loads a triangle mesh. Polygons with more than three sides are
/// fan-triangulated from their first vertex. Vertex and face order are
/// preserved. Throws ParseError (with line number) or IndexError.
TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format);

/// Convenience overload: format deduced from the extension.
TriMesh load_mesh(const std::filesystem::path& path);

/// Writers used by the tests and the synthetic-data tooling.
void save_obj(const std::filesystem::path& path, const TriMesh& mesh);
void save_off(const std::filesystem::path& path, const TriMesh& mesh);

TriMesh read_obj(std::istream& in, const std::string& display_name);
TriMesh read_off(std::istream& in, const std::string& display_name);
TriMesh read_ply_ascii(std::istream& in, const std::string& display_name);

}  // namespace meshspectra
