#pragma once

#include <gengraph/genstats.hpp>
#include <gengraph/graph.hpp>
#include <gengraph/group.hpp>
#include <gengraph/group_spec.hpp>
#include <gengraph/planarity.hpp>

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gengraph {

inline constexpr std::string_view version = "0.1.0";

struct PlanarTarget {
  std::string label;
  FiniteGroup group;
};

/// The eleven 2-generated groups whose generating graph is planar.
inline const std::vector<PlanarTarget>& planar_targets() {
  static const std::vector<PlanarTarget> targets = [] {
    const std::pair<std::string_view, std::string_view> list[] = {
        {"C2", "C:2"}, {"C3", "C:3"}, {"C4", "C:4"}, {"C5", "C:5"}, {"C6", "C:6"}, {"C2xC2", "C:2 x C:2"},
        {"D4", "D:4"}, {"Q8", "Dic:2"}, {"C4xC2", "C:4 x C:2"}, {"D3", "D:3"}, {"D6", "D:6"},
    };
    std::vector<PlanarTarget> out;
    for (auto [label, spec] : list) out.push_back({std::string(label), build_group(spec)});
    return out;
  }();
  return targets;
}

inline std::optional<std::string> match_planar_target(const FiniteGroup& g) {
  for (const auto& t : planar_targets())
    if (t.group.order() == g.order() && are_isomorphic(g, t.group)) return t.label;
  return std::nullopt;
}

enum class RecordStatus { in_scope, not_two_generated, vacuous, failed };

constexpr std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::in_scope: return "in-scope";
    case RecordStatus::not_two_generated: return "edgeless-trivially-planar, outside classification scope";
    case RecordStatus::vacuous: return "vacuous";
    case RecordStatus::failed: return "failed";
  }
  return "unknown";
}

struct GroupRecord {
  std::string name;
  std::size_t order = 0;
  bool two_generated = false;
  RecordStatus status = RecordStatus::in_scope;
  std::size_t gamma_vertices = 0;
  std::size_t gamma_edges = 0;
  std::size_t delta_vertices = 0;
  std::size_t delta_edges = 0;
  std::size_t ordered_pairs = 0;
  std::optional<ExactRatio> p2;                // P_G(2)
  std::optional<ExactRatio> order_times_p2;    // |G| P_G(2)
  std::vector<AlphaRecord> alphas;
  bool euler_ok = true;
  std::optional<PlanarityVerdict> verdict;
  std::vector<std::string> vertex_labels;      // Γ vertex -> element name
  std::optional<std::string> target_label;
  std::string error;

  bool planar() const { return verdict ? verdict->planar : true; }
};

struct VerificationSummary {
  std::vector<std::string> found;
  std::vector<std::string> expected;
  bool match = false;
};

struct VerificationReport {
  std::vector<GroupRecord> records;
  VerificationSummary summary;
};

enum class Expectation {
  all_eleven,         // the corpus must produce every target
  present_in_corpus,  // only targets isomorphic to some input group are expected
};

inline GroupRecord analyse_group(const FiniteGroup& g) {
  GroupRecord rec;
  rec.name = g.name();
  rec.order = g.order();
  try {
    rec.two_generated = is_two_generated(g);
    if (g.order() == 1) {
      rec.status = RecordStatus::vacuous;
      return rec;
    }
    const auto gamma = generating_graph(g);
    rec.vertex_labels = gamma.labels();
    rec.gamma_vertices = gamma.vertex_count();
    rec.gamma_edges = gamma.edge_count();
    const auto delta = pruned_graph(gamma);
    rec.delta_vertices = delta.graph.vertex_count();
    rec.delta_edges = delta.graph.edge_count();
    rec.euler_ok = euler_bound(rec.delta_vertices, rec.delta_edges);
    rec.verdict = is_planar(gamma);
    if (!rec.two_generated) {
      rec.status = RecordStatus::not_two_generated;
      return rec;
    }
    rec.ordered_pairs = ordered_generating_pairs(g);
    rec.p2 = generation_probability(g);
    rec.order_times_p2 = static_cast<std::int64_t>(g.order()) * *rec.p2;
    rec.alphas = alpha_profile(g);
    rec.target_label = match_planar_target(g);
    rec.status = RecordStatus::in_scope;
  } catch (const std::exception& e) {
    rec.status = RecordStatus::failed;
    rec.error = e.what();
  }
  return rec;
}

/// Runs the full pipeline on every group and compares the planar
/// 2-generated ones against the eleven targets up to isomorphism.
inline VerificationReport verify_theorem(const std::vector<FiniteGroup>& groups,
                                         Expectation expectation = Expectation::present_in_corpus) {
  VerificationReport report;
  for (const auto& g : groups) report.records.push_back(analyse_group(g));
  std::stable_sort(report.records.begin(), report.records.end(), [](const GroupRecord& a, const GroupRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });

  bool clean = true;
  for (const auto& rec : report.records) {
    if (rec.status == RecordStatus::failed) clean = false;
    if (rec.status == RecordStatus::in_scope && rec.planar())
      report.summary.found.push_back(rec.target_label.value_or(rec.name + " (unlisted)"));
  }
  for (const auto& t : planar_targets()) {
    const bool present =
        expectation == Expectation::all_eleven ||
        std::any_of(groups.begin(), groups.end(), [&](const FiniteGroup& g) {
          return g.order() == t.group.order() && are_isomorphic(g, t.group);
        });
    if (present) report.summary.expected.push_back(t.label);
  }
  auto found = report.summary.found;
  auto expected = report.summary.expected;
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  report.summary.match = clean && found == expected;
  return report;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json ratio_json(const ExactRatio& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json to_json(const AlphaRecord& r) {
  return {
      {"level", r.level},
      {"factor_order", r.factor_order},
      {"fiber_count", r.fiber_count},
      {"alpha", ratio_json(r.alpha)},
      {"abelian", r.is_abelian_factor},
      {"p", optional_json(r.p)},
      {"a", optional_json(r.a)},
      {"complements", optional_json(r.complement_count)},
      {"lemma3_case", std::string(to_string(r.lemma3_case))},
  };
}

inline nlohmann::json to_json(const KuratowskiWitness& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : w.edges) edges.push_back({u, v});
  return {{"kind", std::string(to_string(w.kind))}, {"branch_vertices", w.branch_vertices}, {"edges", edges}};
}

inline nlohmann::json to_json(const RotationEmbedding& e) { return {{"rotation", e.rotation}}; }

inline nlohmann::json to_json(const PlanarityVerdict& v) {
  return {
      {"planar", v.planar},
      {"embedding", v.embedding ? to_json(*v.embedding) : nlohmann::json(nullptr)},
      {"witness", v.witness ? to_json(*v.witness) : nlohmann::json(nullptr)},
  };
}

inline nlohmann::json to_json(const GroupRecord& r) {
  nlohmann::json alphas = nlohmann::json::array();
  for (const auto& a : r.alphas) alphas.push_back(to_json(a));
  return {
      {"name", r.name},
      {"order", r.order},
      {"two_generated", r.two_generated},
      {"status", std::string(to_string(r.status))},
      {"gamma", {{"vertices", r.gamma_vertices}, {"edges", r.gamma_edges}}},
      {"delta", {{"vertices", r.delta_vertices}, {"edges", r.delta_edges}}},
      {"euler_bound", r.euler_ok},
      {"ordered_generating_pairs", r.ordered_pairs},
      {"p2", r.p2 ? ratio_json(*r.p2) : nlohmann::json(nullptr)},
      {"order_times_p2", r.order_times_p2 ? ratio_json(*r.order_times_p2) : nlohmann::json(nullptr)},
      {"alpha_profile", alphas},
      {"alpha_product", r.alphas.empty() ? nlohmann::json(nullptr) : ratio_json(alpha_product(r.alphas))},
      {"verdict", r.verdict ? to_json(*r.verdict) : nlohmann::json(nullptr)},
      {"vertex_labels", r.vertex_labels},
      {"target_label", optional_json(r.target_label)},
      {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)},
  };
}

inline nlohmann::json to_json(const VerificationReport& report, const std::string& version, const std::string& corpus) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return {
      {"version", version},
      {"corpus", corpus},
      {"records", records},
      {"summary",
       {{"found", report.summary.found}, {"expected", report.summary.expected}, {"match", report.summary.match}}},
  };
}

}  // namespace gengraph
