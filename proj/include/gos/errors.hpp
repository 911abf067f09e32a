#pragma once
// Error types raised across the indexing and retrieval pipeline.

#include <stdexcept>
#include <string>

namespace gos {

struct GosError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- parser ---
struct MissingFrontmatterName : GosError {
    explicit MissingFrontmatterName(const std::string& doc)
        : GosError("frontmatter has no 'name' key: " + doc) {}
};
struct MalformedFrontmatter : GosError {
    explicit MalformedFrontmatter(const std::string& what) : GosError("malformed frontmatter: " + what) {}
};
struct UnreadableDocument : GosError {
    explicit UnreadableDocument(const std::string& path) : GosError("cannot read document: " + path) {}
};
struct BudgetTooSmall : GosError {
    explicit BudgetTooSmall(std::size_t budget)
        : GosError("snippet budget too small: " + std::to_string(budget) + " < 64") {}
};

// --- model / graph ---
struct ConfigError : GosError {
    explicit ConfigError(const std::string& what) : GosError("invalid config: " + what) {}
};
struct InvalidEdge : GosError {
    explicit InvalidEdge(const std::string& what) : GosError("invalid edge: " + what) {}
};
struct DuplicateSkillId : GosError {
    explicit DuplicateSkillId(const std::string& id) : GosError("duplicate skill id: " + id) {}
};

// --- queries ---
struct EmptyQuery : GosError {
    EmptyQuery() : GosError("query text is blank") {}
};

// --- index / workspace ---
struct EmptyIndex : GosError {
    EmptyIndex() : GosError("vector index is empty") {}
};
struct VersionMismatch : GosError {
    explicit VersionMismatch(const std::string& found)
        : GosError("workspace format version mismatch: found '" + found + "'") {}
};
struct CorruptManifest : GosError {
    explicit CorruptManifest(const std::string& what) : GosError("corrupt workspace manifest: " + what) {}
};
struct WorkspaceIoError : GosError {
    explicit WorkspaceIoError(const std::string& what) : GosError("workspace i/o: " + what) {}
};

// --- engine ---
struct NonConvergence : GosError {
    explicit NonConvergence(double residual)
        : GosError("diffusion did not converge, residual " + std::to_string(residual)) {}
};
struct UnknownId : GosError {
    explicit UnknownId(const std::string& id) : GosError("unknown skill id: " + id) {}
};

// --- eval harness ---
struct SpecInvalid : GosError {
    explicit SpecInvalid(const std::string& what) : GosError("invalid eval spec: " + what) {}
};
struct UnknownStrategy : GosError {
    explicit UnknownStrategy(const std::string& name) : GosError("unknown strategy: " + name) {}
};

}  // namespace gos
