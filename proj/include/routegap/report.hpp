#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "routegap/bounds.hpp"
#include "routegap/graph.hpp"
#include "routegap/routing.hpp"

namespace routegap {

/// tv_bound_check output flattened to plain vectors for serialization.
struct TvSeries {
  int start = 0;
  std::vector<double> tv;
  std::vector<double> bound;
  bool holds = false;

  friend bool operator==(const TvSeries&, const TvSeries&) = default;
};

/// Everything one analysis run produces. The graph and routing are embedded
/// in their own text formats so every numeric field can be recomputed from
/// the report alone, and serialization round-trips exactly.
struct AnalysisReport {
  int vertex_count = 0;
  std::int64_t edge_count = 0;
  int max_degree = 0;
  int diameter = 0;
  std::string edge_list;

  std::string routing_source;
  std::string routing_text;
  std::int64_t forwarding_index = 0;

  BoundsReport bounds;
  Theorem1Result theorem1;
  Lemma1Result lemma1;
  std::optional<Lemma2Result> lemma2;      // present iff the graph is a tree
  std::optional<Theorem2Result> theorem2;  // present iff routed along a tree

  std::vector<double> eigenvalues;
  std::vector<double> stationary;
  double beta1 = 0.0;
  double beta_star = 0.0;

  std::optional<TvSeries> tv;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Serializes to a JSON document with stable key order; rationals appear as
/// {"rational": "p/q", "value": <decimal>} so exact comparisons survive the
/// trip. parse_report inverts serialize_report exactly.
std::string serialize_report(const AnalysisReport& report);
AnalysisReport parse_report(const std::string& text);

}  // namespace routegap
