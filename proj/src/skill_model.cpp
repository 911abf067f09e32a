#include "gos/skill_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gos/text.hpp"
#include "json.hpp"

namespace gos {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

std::string to_string(RelationType r) {
    switch (r) {
        case RelationType::dep: return "dep";
        case RelationType::wf: return "wf";
        case RelationType::sem: return "sem";
        case RelationType::alt: return "alt";
    }
    return "dep";
}

RelationType relation_from_string(const std::string& s) {
    if (s == "dep") return RelationType::dep;
    if (s == "wf") return RelationType::wf;
    if (s == "sem") return RelationType::sem;
    if (s == "alt") return RelationType::alt;
    throw InvalidEdge("unknown relation label '" + s + "'");
}

// ---------------------------------------------------------------------------
// Records, edges, graph
// ---------------------------------------------------------------------------

std::string capability_line(const SkillRecord& r) {
    if (!r.one_line_capability.empty()) return r.one_line_capability;
    return text::first_sentence(r.description);
}

bool edge_less(const TypedEdge& a, const TypedEdge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.relation != b.relation) return a.relation < b.relation;
    return a.target < b.target;
}

SkillGraph::SkillGraph(std::map<std::string, SkillRecord> nodes, std::vector<TypedEdge> edges,
                       std::uint64_t build_fingerprint)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), fingerprint_(build_fingerprint) {
    for (const auto& e : edges_) {
        if (e.weight <= 0.0) {
            throw InvalidEdge("non-positive weight on " + e.source + " -> " + e.target);
        }
        if (e.source == e.target) {
            throw InvalidEdge("self-loop on " + e.source);
        }
        if (!nodes_.count(e.source)) throw InvalidEdge("dangling source " + e.source);
        if (!nodes_.count(e.target)) throw InvalidEdge("dangling target " + e.target);
    }
    std::sort(edges_.begin(), edges_.end(), edge_less);
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        const auto& a = edges_[i - 1];
        const auto& b = edges_[i];
        if (a.source == b.source && a.target == b.target && a.relation == b.relation) {
            throw InvalidEdge("duplicate " + to_string(a.relation) + " edge " + a.source +
                              " -> " + a.target);
        }
    }
}

const SkillRecord* SkillGraph::find(const std::string& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
}

std::array<std::size_t, kRelationCount> SkillGraph::edge_counts() const {
    std::array<std::size_t, kRelationCount> counts{};
    for (const auto& e : edges_) counts[static_cast<std::size_t>(e.relation)]++;
    return counts;
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

RetrievalConfig default_config() {
    RetrievalConfig cfg;
    cfg.eta = 0.6;
    cfg.alpha = 0.15;
    cfg.lambda = {0.50, 0.25, 0.15, 0.10};
    cfg.gamma = {1.0, 0.5, 0.2, 0.1};
    cfg.mu = 0.5;
    cfg.beta = 0.5;
    cfg.k_seed = 20;
    cfg.k_pool = 20;
    cfg.theta_dep = 0.5;
    cfg.tol = 1e-8;
    cfg.max_iter = 100;
    cfg.per_skill_budget = 2000;
    cfg.global_budget = 16000;
    cfg.hit_threshold = 1e-6;
    cfg.raw_seed_merge = false;
    return cfg;
}

void RetrievalConfig::validate() const {
    if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError("eta must be in [0,1]");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
    double lambda_sum = 0.0;
    for (auto r : kAllRelations) {
        const double l = weight_for(lambda, r);
        if (l < 0.0) throw ConfigError("lambda." + to_string(r) + " must be >= 0");
        lambda_sum += l;
        if (weight_for(gamma, r) < 0.0) throw ConfigError("gamma." + to_string(r) + " must be >= 0");
    }
    if (std::abs(lambda_sum - 1.0) > 1e-9) throw ConfigError("lambda entries must sum to 1");
    if (mu < 0.0) throw ConfigError("mu must be >= 0");
    if (beta < 0.0) throw ConfigError("beta must be >= 0");
    if (k_seed < 1) throw ConfigError("k_seed must be >= 1");
    if (k_pool < 1) throw ConfigError("k_pool must be >= 1");
    if (!(theta_dep > 0.0 && theta_dep <= 1.0)) throw ConfigError("theta_dep must be in (0,1]");
    if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
    if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (per_skill_budget < 1) throw ConfigError("per_skill_budget must be >= 1");
    if (global_budget < per_skill_budget) {
        throw ConfigError("global_budget must be >= per_skill_budget");
    }
    if (hit_threshold < 0.0) throw ConfigError("hit_threshold must be >= 0");
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string serialize_config(const RetrievalConfig& cfg) {
    std::ostringstream os;
    os << "eta = " << fmt(cfg.eta) << "\n";
    os << "alpha = " << fmt(cfg.alpha) << "\n";
    for (auto r : kAllRelations) {
        os << "lambda." << to_string(r) << " = " << fmt(weight_for(cfg.lambda, r)) << "\n";
    }
    for (auto r : kAllRelations) {
        os << "gamma." << to_string(r) << " = " << fmt(weight_for(cfg.gamma, r)) << "\n";
    }
    os << "mu = " << fmt(cfg.mu) << "\n";
    os << "beta = " << fmt(cfg.beta) << "\n";
    os << "k_seed = " << cfg.k_seed << "\n";
    os << "k_pool = " << cfg.k_pool << "\n";
    os << "theta_dep = " << fmt(cfg.theta_dep) << "\n";
    os << "tol = " << fmt(cfg.tol) << "\n";
    os << "max_iter = " << cfg.max_iter << "\n";
    os << "per_skill_budget = " << cfg.per_skill_budget << "\n";
    os << "global_budget = " << cfg.global_budget << "\n";
    os << "hit_threshold = " << fmt(cfg.hit_threshold) << "\n";
    os << "raw_seed_merge = " << (cfg.raw_seed_merge ? "true" : "false") << "\n";
    return os.str();
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing garbage");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + " has non-numeric value '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing garbage");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + " has non-integer value '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(key + " must be true or false");
}

}  // namespace

RetrievalConfig parse_config(const std::string& content) {
    RetrievalConfig cfg = default_config();
    std::istringstream is(content);
    std::string line;
    while (std::getline(is, line)) {
        std::string t = text::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value', got '" + t + "'");
        std::string key = text::trim(t.substr(0, eq));
        std::string value = text::trim(t.substr(eq + 1));
        if (key == "eta") cfg.eta = parse_double(key, value);
        else if (key == "alpha") cfg.alpha = parse_double(key, value);
        else if (key == "mu") cfg.mu = parse_double(key, value);
        else if (key == "beta") cfg.beta = parse_double(key, value);
        else if (key == "k_seed") cfg.k_seed = parse_int(key, value);
        else if (key == "k_pool") cfg.k_pool = parse_int(key, value);
        else if (key == "theta_dep") cfg.theta_dep = parse_double(key, value);
        else if (key == "tol") cfg.tol = parse_double(key, value);
        else if (key == "max_iter") cfg.max_iter = parse_int(key, value);
        else if (key == "per_skill_budget") cfg.per_skill_budget = parse_int(key, value);
        else if (key == "global_budget") cfg.global_budget = parse_int(key, value);
        else if (key == "hit_threshold") cfg.hit_threshold = parse_double(key, value);
        else if (key == "raw_seed_merge") cfg.raw_seed_merge = parse_bool(key, value);
        else if (key.rfind("lambda.", 0) == 0) {
            auto r = relation_from_string(key.substr(7));
            cfg.lambda[static_cast<std::size_t>(r)] = parse_double(key, value);
        } else if (key.rfind("gamma.", 0) == 0) {
            auto r = relation_from_string(key.substr(6));
            cfg.gamma[static_cast<std::size_t>(r)] = parse_double(key, value);
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RetrievalConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

// ---------------------------------------------------------------------------
// Retrieval output
// ---------------------------------------------------------------------------

std::string payload_text(const BundleEntry& e) {
    std::string out = "Source: " + e.source_path;
    if (!e.capability.empty()) out += "\n" + e.capability;
    if (!e.execution_notes.empty()) out += "\n" + e.execution_notes;
    if (!e.snippet.empty()) out += "\n" + e.snippet;
    return out;
}

std::string evidence_line(const TypedEdge& e) {
    return e.source + " -" + to_string(e.relation) + "-> " + e.target;
}

std::string result_to_json(const RetrievalResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["bundle"] = json::array();
    for (const auto& e : r.bundle) {
        j["bundle"].push_back({{"id", e.id},
                               {"final_score", e.final_score},
                               {"source_path", e.source_path},
                               {"capability", e.capability},
                               {"execution_notes", e.execution_notes},
                               {"snippet", e.snippet},
                               {"cost", e.cost}});
    }
    j["evidence"] = json::array();
    for (const auto& e : r.evidence_edges) {
        j["evidence"].push_back({{"source", e.source},
                                 {"relation", to_string(e.relation)},
                                 {"target", e.target},
                                 {"weight", e.weight}});
    }
    j["total_cost"] = r.total_cost;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Record serialization and fingerprinting
// ---------------------------------------------------------------------------

std::string record_to_json(const SkillRecord& r) {
    json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["description"] = r.description;
    j["one_line_capability"] = r.one_line_capability;
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    j["domain_tags"] = r.domain_tags;
    j["tooling"] = r.tooling;
    j["example_tasks"] = r.example_tasks;
    j["script_entrypoints"] = r.script_entrypoints;
    j["compatibility"] = r.compatibility;
    j["allowed_tools"] = r.allowed_tools;
    j["source_path"] = r.source_path;
    j["rendered_snippet"] = r.rendered_snippet;
    j["raw_body"] = r.raw_body;
    return j.dump();
}

SkillRecord record_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    SkillRecord r;
    r.id = j.at("id").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.one_line_capability = j.at("one_line_capability").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.outputs = j.at("outputs").get<std::vector<std::string>>();
    r.domain_tags = j.at("domain_tags").get<std::vector<std::string>>();
    r.tooling = j.at("tooling").get<std::vector<std::string>>();
    r.example_tasks = j.at("example_tasks").get<std::vector<std::string>>();
    r.script_entrypoints = j.at("script_entrypoints").get<std::vector<std::string>>();
    r.compatibility = j.at("compatibility").get<std::vector<std::string>>();
    r.allowed_tools = j.at("allowed_tools").get<std::vector<std::string>>();
    r.source_path = j.at("source_path").get<std::string>();
    r.rendered_snippet = j.at("rendered_snippet").get<std::string>();
    r.raw_body = j.at("raw_body").get<std::string>();
    return r;
}

std::uint64_t compute_fingerprint(const RetrievalConfig& cfg,
                                  const std::map<std::string, SkillRecord>& nodes) {
    std::uint64_t h = text::fnv1a64(serialize_config(cfg));
    for (const auto& [id, record] : nodes) {
        h = text::fnv1a64(record_to_json(record), h);
    }
    return h;
}

}  // namespace gos
