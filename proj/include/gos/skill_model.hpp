#pragma once
// Shared domain types for the skill graph and the retrieval configuration.
// Everything here is an immutable value type once constructed; instances are
// safe to share read-only across concurrent retrieval requests.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gos/errors.hpp"

namespace gos {

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

enum class RelationType : std::uint8_t { dep = 0, wf = 1, sem = 2, alt = 3 };

inline constexpr std::size_t kRelationCount = 4;
inline constexpr std::array<RelationType, kRelationCount> kAllRelations = {
    RelationType::dep, RelationType::wf, RelationType::sem, RelationType::alt};

std::string to_string(RelationType r);
// Throws InvalidEdge for labels outside the closed {dep, wf, sem, alt} set.
RelationType relation_from_string(const std::string& s);

// Per-relation scalar table (λ_r and γ_r live in this shape).
using RelationWeights = std::array<double, kRelationCount>;

inline double weight_for(const RelationWeights& w, RelationType r) {
    return w[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------
// Records and edges
// ---------------------------------------------------------------------------

struct SkillRecord {
    std::string id;  // slugify(name); unique within a library
    std::string name;
    std::string description;
    std::string one_line_capability;
    std::vector<std::string> inputs;   // free-text I/O descriptors
    std::vector<std::string> outputs;  // tokenized on demand via text::tokenize
    std::vector<std::string> domain_tags;
    std::vector<std::string> tooling;
    std::vector<std::string> example_tasks;
    std::vector<std::string> script_entrypoints;  // sorted relative paths
    std::vector<std::string> compatibility;
    std::vector<std::string> allowed_tools;
    std::string source_path;  // the package's primary document
    std::string rendered_snippet;
    std::string raw_body;

    bool operator==(const SkillRecord&) const = default;
};

std::string capability_line(const SkillRecord& r);  // capability or first description sentence

struct TypedEdge {
    std::string source;
    std::string target;
    RelationType relation = RelationType::dep;
    double weight = 1.0;

    bool operator==(const TypedEdge&) const = default;
};

// Deterministic (source, relation, target) ordering used everywhere edges
// are stored or printed.
bool edge_less(const TypedEdge& a, const TypedEdge& b);

// Immutable typed directed graph over skill records. Construction validates
// that every edge endpoint exists, weights are positive, self-loops are
// absent, and (source, target, relation) triples are unique.
class SkillGraph {
public:
    SkillGraph() = default;
    SkillGraph(std::map<std::string, SkillRecord> nodes, std::vector<TypedEdge> edges,
               std::uint64_t build_fingerprint);

    const std::map<std::string, SkillRecord>& nodes() const { return nodes_; }
    const std::vector<TypedEdge>& edges() const { return edges_; }
    std::uint64_t build_fingerprint() const { return fingerprint_; }

    bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
    const SkillRecord* find(const std::string& id) const;

    std::array<std::size_t, kRelationCount> edge_counts() const;

private:
    std::map<std::string, SkillRecord> nodes_;
    std::vector<TypedEdge> edges_;  // sorted by edge_less
    std::uint64_t fingerprint_ = 0;
};

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

struct QuerySchema {
    std::string goal;
    std::vector<std::string> operations;
    std::vector<std::string> artifacts;
    std::vector<std::string> constraints;
    std::vector<std::string> keywords;  // lowercase tokens, deduped, sorted
    std::string raw;

    bool operator==(const QuerySchema&) const = default;
};

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct RetrievalConfig {
    double eta = 0.0;    // semantic–lexical seed mix, in [0,1]
    double alpha = 0.0;  // restart weight, in (0,1)
    RelationWeights lambda{};  // relation-type mix, sums to 1
    RelationWeights gamma{};   // reverse-traversal strength per type
    double mu = 0.0;           // rerank grounding weight
    double beta = 0.0;         // dependency-closure bonus in the bundle objective
    int k_seed = 0;            // per-retriever seed candidates
    int k_pool = 0;            // relation-validation candidate pool size
    double theta_dep = 0.0;    // dependency induction threshold, in (0,1]
    double tol = 0.0;          // diffusion convergence tolerance (L1)
    int max_iter = 0;
    int per_skill_budget = 0;  // characters
    int global_budget = 0;     // characters
    double hit_threshold = 0.0;
    bool raw_seed_merge = false;  // ablation: merge raw scores instead of min-max normalized

    // Throws ConfigError describing the first violated range constraint.
    void validate() const;

    bool operator==(const RetrievalConfig&) const = default;
};

RetrievalConfig default_config();

// Flat `key = value` configuration file, relation maps as `gamma.dep = 1.0`
// style keys. Serialization is canonical (fixed key order); parsing rejects
// unknown keys and validates ranges.
std::string serialize_config(const RetrievalConfig& cfg);
RetrievalConfig parse_config(const std::string& content);
RetrievalConfig load_config_file(const std::string& path);

// ---------------------------------------------------------------------------
// Retrieval output
// ---------------------------------------------------------------------------

struct ScoredSkill {
    std::string id;
    double diffusion_score = 0.0;  // converged diffusion mass
    double match_score = 0.0;      // max-normalized field match
    double final_score = 0.0;      // diffusion_score + mu * match_score
};

enum class RetrievalStatus { SkillHit, NoSkillHit };

inline std::string to_string(RetrievalStatus s) {
    return s == RetrievalStatus::SkillHit ? "SKILL_HIT" : "NO_SKILL_HIT";
}

struct BundleEntry {
    std::string id;
    double final_score = 0.0;
    std::string source_path;
    std::string capability;
    std::string execution_notes;  // compatibility and allowed-tool lines, possibly empty
    std::string snippet;
    std::size_t cost = 0;  // characters of the hydrated payload
};

// The agent-consumable payload this entry contributes to the bundle;
// entry.cost == payload_text(entry).size().
std::string payload_text(const BundleEntry& e);

std::string evidence_line(const TypedEdge& e);

struct RetrievalResult {
    RetrievalStatus status = RetrievalStatus::NoSkillHit;
    std::vector<BundleEntry> bundle;         // final_score descending, ties by id
    std::vector<TypedEdge> evidence_edges;   // graph edges among bundle members
    std::size_t total_cost = 0;              // characters, ≤ global_budget
};

// Canonical JSON form (also the `query --json` output).
std::string result_to_json(const RetrievalResult& r);

// ---------------------------------------------------------------------------
// Fingerprinting
// ---------------------------------------------------------------------------

std::string record_to_json(const SkillRecord& r);
SkillRecord record_from_json(const std::string& json_text);

std::uint64_t compute_fingerprint(const RetrievalConfig& cfg,
                                  const std::map<std::string, SkillRecord>& nodes);

}  // namespace gos
