#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "meshspectra/descriptors.hpp"
#include "meshspectra/motion.hpp"
#include "meshspectra/retrieval.hpp"

namespace meshspectra {

/// Descriptor JSON record: {"id", "kind", "params": {"n", "lambda"?}, "values": [...]}.
void save_descriptor_json(const std::filesystem::path& path, const std::string& id,
                          const DescriptorVector& descriptor);
std::pair<std::string, DescriptorVector> load_descriptor_json(const std::filesystem::path& path);

/// Binary cache: 16-byte header (magic "MSPC", version u16, kind u8, n u8,
/// lambda f32, value count u32, all little-endian) followed by the values as
/// little-endian f64. The id is the file stem.
void save_descriptor_binary(const std::filesystem::path& path,
                            const DescriptorVector& descriptor);
DescriptorVector load_descriptor_binary(const std::filesystem::path& path);

/// Curve JSON record: {"id", "kind", "params", "points": [{"t", "values"}...]}.
void save_curve_json(const std::filesystem::path& path, const std::string& id,
                     const MotionCurve& curve);
std::pair<std::string, MotionCurve> load_curve_json(const std::filesystem::path& path);

/// Retrieval report: {"metric", "per_query": [{"id", "nn_hit", "ft", "st"}...],
/// "means": {"NN", "FT", "ST"}}.
void save_report_json(const std::filesystem::path& path, Metric metric,
                      const RetrievalScores& scores, const std::vector<std::string>& ids);

/// Plain-text NN/FT/ST table, one row per representation.
std::string format_scores_table(const std::string& representation,
                                const RetrievalScores& scores);

/// Writes via a sibling temp file + rename so concurrent runs never observe a
/// partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace meshspectra
