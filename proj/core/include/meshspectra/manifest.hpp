#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "meshspectra/motion.hpp"

namespace meshspectra {

/// One timestamped mesh file of a sequence entry.
struct ManifestFrame {
    std::filesystem::path path;
    double timestamp = 0.0;
};

/// A dataset entry: either a single mesh (pose) or an ordered frame list
/// (sequence). Globs from the manifest are already expanded here.
struct ManifestEntry {
    std::string id;
    std::string label;
    std::variant<std::filesystem::path, std::vector<ManifestFrame>> source;

    bool is_sequence() const {
        return std::holds_alternative<std::vector<ManifestFrame>>(source);
    }
    const std::filesystem::path& mesh_path() const {
        return std::get<std::filesystem::path>(source);
    }
    const std::vector<ManifestFrame>& frames() const {
        return std::get<std::vector<ManifestFrame>>(source);
    }
};

/// JSON manifest:
///   {"entries": [
///      {"id": "...", "class": "...", "path": "mesh.obj"},
///      {"id": "...", "class": "...", "frame_glob": "seq/*.obj", "fps": 25},
///      {"id": "...", "class": "...", "frames": [{"path": "...", "t": 0.0}, ...]}
///   ]}
/// Relative paths resolve against the manifest's directory; globs expand in
/// lexicographic order; fps (default 25) turns frame indices into timestamps.
/// Ids must be unique and every referenced file must exist.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;

    static DatasetManifest load(const std::filesystem::path& path);

    const ManifestEntry* find(const std::string& id) const;
};

/// Loads all frames of a sequence entry as a MeshSequence.
MeshSequence load_sequence(const ManifestEntry& entry);

}  // namespace meshspectra
