#pragma once

#include <optional>
#include <vector>

#include "meshspectra/descriptors.hpp"
#include "meshspectra/mesh.hpp"

namespace meshspectra {

/// Timestamped mesh frames; timestamps strictly increasing.
struct MeshSequence {
    struct Frame {
        TriMesh mesh;
        double timestamp = 0.0;
    };
    std::vector<Frame> frames;

    /// Frame-index / 25 Hz timestamps, the datasets' default sampling.
    static constexpr double default_fps = 25.0;
};

struct TimedSamples {
    double timestamp = 0.0;
    SphericalSamples samples;
};

/// Windowed mean of spherical-function samples across frames:
/// out_i = mean of in_{i-K}..in_{i+K} for i = K..p-K, keeping timestamp t_i.
/// Requires 2K < frame count (WindowTooLargeError) and a common grid
/// (GridMismatchError).
std::vector<TimedSamples> temporal_filter(const std::vector<TimedSamples>& sequence,
                                          int window_radius);

/// Polygonal curve in descriptor space: strictly increasing timestamps, one
/// descriptor vertex per (filtered) frame.
struct MotionCurve {
    struct Point {
        double timestamp = 0.0;
        std::vector<double> values;
    };
    DescriptorKind kind = DescriptorKind::breadths;
    DescriptorParams params;
    std::vector<Point> points;

    std::size_t dimension() const { return points.empty() ? 0 : points.front().values.size(); }
};

/// Full sequence pipeline: sample the spherical functions per frame, filter
/// each function's sample stream with `window_radius`, then build one
/// descriptor per filtered frame. Filtering happens on the sampled functions,
/// not on the finished descriptors; the two orders differ for spectrum kinds.
MotionCurve motion_curve(const MeshSequence& sequence, DescriptorKind kind,
                         const DescriptorParams& params, int window_radius = 0);

/// Piecewise-linear evaluation at time t within [t_0, t_p]; exact at knots.
std::vector<double> evaluate_curve(const MotionCurve& curve, double t);

struct DtwOptions {
    /// Sakoe-Chiba band half-width; unconstrained when absent.
    std::optional<int> window;
    /// Divide the accumulated cost by the optimal path length.
    bool normalize_by_path_length = false;
};

/// Classic dynamic time warping with Euclidean local cost and steps
/// {(-1,0),(0,-1),(-1,-1)}; returns the accumulated (unnormalized) cost.
/// Curves must share kind and dimension.
double dtw_distance(const MotionCurve& a, const MotionCurve& b, const DtwOptions& options = {});

}  // namespace meshspectra
