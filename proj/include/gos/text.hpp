#pragma once
// Text normalization shared by the parser, the indexes, and the engine.
// All matching in the system goes through these tokenizers, so their
// behavior is part of the retrieval contract.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gos::text {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool is_blank(std::string_view s);

// Lowercase tokens split on non-alphanumerics, tokens shorter than 2 chars
// dropped. Keeps duplicates and document order (used for embedding counts).
std::vector<std::string> tokenize_raw(std::string_view s);

// tokenize_raw + dedup + ascending sort. The canonical token-set form.
std::vector<std::string> tokenize(std::string_view s);

// Token set over a list of phrases.
std::vector<std::string> tokenize_all(const std::vector<std::string>& phrases);

// |a ∩ b| / |a ∪ b| over sorted unique token vectors; 0 when both empty.
double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

std::size_t intersection_size(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Stable id from a display name: lowercase, non-alphanumeric runs collapsed
// to single hyphens, trimmed of hyphens.
std::string slugify(std::string_view name);

// Text through the first '.', '!' or '?'; the whole string when none.
std::string first_sentence(std::string_view s);

// Longest prefix of at most `budget` chars that ends at a whitespace
// boundary (hard cut when the prefix has no whitespace). Trailing
// whitespace stripped.
std::string truncate_at_whitespace(std::string_view s, std::size_t budget);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace gos::text
