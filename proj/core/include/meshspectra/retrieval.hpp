#pragma once

#include <string>
#include <variant>
#include <vector>

#include "meshspectra/descriptors.hpp"
#include "meshspectra/motion.hpp"

namespace meshspectra {

enum class Metric { euclidean, dtw };

std::string to_string(Metric metric);
Metric metric_from_string(const std::string& name);

struct CorpusItem {
    std::string id;
    std::string label;
    std::variant<DescriptorVector, MotionCurve> features;
};

/// Labeled feature corpus; ids unique, at least two items.
struct LabeledCorpus {
    std::vector<CorpusItem> items;

    std::vector<std::string> labels() const;
    std::vector<std::string> ids() const;
};

/// Symmetric, nonnegative, zero-diagonal.
class DistanceMatrix {
  public:
    explicit DistanceMatrix(std::size_t size);

    std::size_t size() const { return size_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }
    void set(std::size_t i, std::size_t j, double value);

  private:
    std::size_t size_;
    std::vector<double> data_;
};

/// Pairwise distances. Euclidean requires DescriptorVector items, dtw requires
/// MotionCurve items; anything mixed throws MixedTypesError. Rows are computed
/// in parallel.
DistanceMatrix distance_matrix(const LabeledCorpus& corpus, Metric metric);

struct QueryScore {
    std::size_t index = 0;
    bool nn_hit = false;
    double first_tier = 0.0;
    double second_tier = 0.0;
};

/// Mean NN/FT/ST over the evaluable queries, as percentages in [0, 100].
struct RetrievalScores {
    double nn = 0.0;
    double first_tier = 0.0;
    double second_tier = 0.0;
    std::vector<QueryScore> per_query;  // singleton-class queries excluded
};

/// NN / first-tier / second-tier protocol. Each item is a query; the query is
/// excluded from its own ranking; ties break by ascending item index. For a
/// class of size |C|: FT counts same-class items in the top |C|-1, ST in the
/// top 2(|C|-1), both divided by |C|-1. Queries whose class is a singleton are
/// excluded from all three means; if every class is a singleton this throws
/// SingletonClassesError.
RetrievalScores evaluate(const DistanceMatrix& matrix, const std::vector<std::string>& labels);

/// Indices of the query's nearest items, ascending by distance (ties by
/// index), query excluded, truncated to top_k.
std::vector<std::size_t> rank_query(const DistanceMatrix& matrix, std::size_t query,
                                    std::size_t top_k);

}  // namespace meshspectra
