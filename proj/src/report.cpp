#include "routegap/report.hpp"

#include <json.hpp>

#include "routegap/errors.hpp"

namespace routegap {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"rational", q.str()}, {"value", q.value()}};
}

Rational rational_from(const ordered_json& j) {
  return Rational::parse(j.at("rational").get<std::string>());
}

Winner winner_from(const std::string& name) {
  if (name == "poincare") return Winner::poincare;
  if (name == "cheeger") return Winner::cheeger;
  if (name == "tie") return Winner::tie;
  throw ParseError("report: unknown winner '" + name + "'");
}

ordered_json bounds_json(const BoundsReport& b) {
  return ordered_json{
      {"gamma_star", b.gamma_star},
      {"bottleneck", b.b},
      {"gamma_bar", rational_json(b.gamma_bar)},
      {"total_length", b.total_length},
      {"poincare", b.poincare},
      {"cheeger", b.cheeger},
      {"comparison",
       {{"lhs_4d2b", b.comparison_lhs},
        {"rhs_gamma_star_edges", b.comparison_rhs},
        {"winner", to_string(b.winner)}}},
  };
}

BoundsReport bounds_from(const ordered_json& j) {
  BoundsReport b;
  b.gamma_star = j.at("gamma_star").get<std::int64_t>();
  b.b = j.at("bottleneck").get<std::int64_t>();
  b.gamma_bar = rational_from(j.at("gamma_bar"));
  b.total_length = j.at("total_length").get<std::int64_t>();
  b.poincare = j.at("poincare").get<double>();
  b.cheeger = j.at("cheeger").get<double>();
  const ordered_json& cmp = j.at("comparison");
  b.comparison_lhs = cmp.at("lhs_4d2b").get<std::int64_t>();
  b.comparison_rhs = cmp.at("rhs_gamma_star_edges").get<std::int64_t>();
  b.winner = winner_from(cmp.at("winner").get<std::string>());
  return b;
}

ordered_json lemma1_json(const Lemma1Result& l) {
  return ordered_json{
      {"subordinate_longest", l.subordinate_longest},
      {"length_premise", l.length_premise},
      {"gamma_star", l.gamma_star},
      {"bottleneck", l.b},
      {"d2b", l.d2b},
      {"gamma_star_edges", l.gamma_star_edges},
      {"central_edge_floor", l.central_edge_floor},
      {"central_floor_holds", l.central_floor_holds()},
  };
}

Lemma1Result lemma1_from(const ordered_json& j) {
  Lemma1Result l;
  l.subordinate_longest = j.at("subordinate_longest").get<bool>();
  l.length_premise = j.at("length_premise").get<bool>();
  l.gamma_star = j.at("gamma_star").get<std::int64_t>();
  l.b = j.at("bottleneck").get<std::int64_t>();
  l.d2b = j.at("d2b").get<std::int64_t>();
  l.gamma_star_edges = j.at("gamma_star_edges").get<std::int64_t>();
  l.central_edge_floor = j.at("central_edge_floor").get<std::int64_t>();
  return l;
}

ordered_json lemma2_json(const Lemma2Result& l) {
  return ordered_json{
      {"b_t", l.b_t},
      {"d_t", l.d_t},
      {"lhs", l.lhs},
      {"rhs", l.rhs},
      {"witness_edge", {l.witness_edge.first, l.witness_edge.second}},
      {"witness_small_side", l.witness_small_side},
      {"holds", l.holds()},
  };
}

Lemma2Result lemma2_from(const ordered_json& j) {
  Lemma2Result l;
  l.b_t = j.at("b_t").get<std::int64_t>();
  l.d_t = j.at("d_t").get<int>();
  l.lhs = j.at("lhs").get<std::int64_t>();
  l.rhs = j.at("rhs").get<std::int64_t>();
  l.witness_edge = {j.at("witness_edge").at(0).get<int>(),
                    j.at("witness_edge").at(1).get<int>()};
  l.witness_small_side = j.at("witness_small_side").get<int>();
  return l;
}

}  // namespace

std::string serialize_report(const AnalysisReport& r) {
  ordered_json j;
  j["graph"] = {
      {"vertices", r.vertex_count}, {"edges", r.edge_count},
      {"max_degree", r.max_degree}, {"diameter", r.diameter},
      {"edge_list", r.edge_list},
  };
  j["routing"] = {
      {"source", r.routing_source},
      {"text", r.routing_text},
      {"forwarding_index", r.forwarding_index},
  };
  j["bounds"] = bounds_json(r.bounds);
  j["theorem1"] = {
      {"premise", r.theorem1.premise},
      {"conclusion", r.theorem1.conclusion},
      {"holds", r.theorem1.implication_holds()},
  };
  j["lemma1"] = lemma1_json(r.lemma1);
  if (r.lemma2) j["lemma2"] = lemma2_json(*r.lemma2);
  if (r.theorem2) {
    j["theorem2"] = {
        {"d2b", r.theorem2->d2b},
        {"gamma_star_edges", r.theorem2->gamma_star_edges},
        {"vertices", r.theorem2->vertex_count},
        {"holds", r.theorem2->holds()},
        {"strict", r.theorem2->strict()},
    };
  }
  j["spectral"] = {
      {"eigenvalues", r.eigenvalues},
      {"stationary", r.stationary},
      {"beta1", r.beta1},
      {"beta_star", r.beta_star},
  };
  if (r.tv) {
    j["tv"] = {
        {"start", r.tv->start},
        {"tv", r.tv->tv},
        {"bound", r.tv->bound},
        {"holds", r.tv->holds},
    };
  }
  return j.dump(2) + "\n";
}

AnalysisReport parse_report(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    AnalysisReport r;
    const ordered_json& g = j.at("graph");
    r.vertex_count = g.at("vertices").get<int>();
    r.edge_count = g.at("edges").get<std::int64_t>();
    r.max_degree = g.at("max_degree").get<int>();
    r.diameter = g.at("diameter").get<int>();
    r.edge_list = g.at("edge_list").get<std::string>();

    const ordered_json& rt = j.at("routing");
    r.routing_source = rt.at("source").get<std::string>();
    r.routing_text = rt.at("text").get<std::string>();
    r.forwarding_index = rt.at("forwarding_index").get<std::int64_t>();

    r.bounds = bounds_from(j.at("bounds"));
    r.theorem1.premise = j.at("theorem1").at("premise").get<bool>();
    r.theorem1.conclusion = j.at("theorem1").at("conclusion").get<bool>();
    r.lemma1 = lemma1_from(j.at("lemma1"));
    if (j.contains("lemma2")) r.lemma2 = lemma2_from(j.at("lemma2"));
    if (j.contains("theorem2")) {
      Theorem2Result t;
      t.d2b = j.at("theorem2").at("d2b").get<std::int64_t>();
      t.gamma_star_edges = j.at("theorem2").at("gamma_star_edges").get<std::int64_t>();
      t.vertex_count = j.at("theorem2").at("vertices").get<int>();
      r.theorem2 = t;
    }

    const ordered_json& sp = j.at("spectral");
    r.eigenvalues = sp.at("eigenvalues").get<std::vector<double>>();
    r.stationary = sp.at("stationary").get<std::vector<double>>();
    r.beta1 = sp.at("beta1").get<double>();
    r.beta_star = sp.at("beta_star").get<double>();

    if (j.contains("tv")) {
      TvSeries tv;
      tv.start = j.at("tv").at("start").get<int>();
      tv.tv = j.at("tv").at("tv").get<std::vector<double>>();
      tv.bound = j.at("tv").at("bound").get<std::vector<double>>();
      tv.holds = j.at("tv").at("holds").get<bool>();
      r.tv = tv;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace routegap
