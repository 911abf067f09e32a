#include "gos/text.hpp"

#include <algorithm>
#include <cctype>

namespace gos::text {

namespace {
bool is_alnum(unsigned char c) {
    return std::isalnum(c) != 0;
}
}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::vector<std::string> tokenize_raw(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (is_alnum(static_cast<unsigned char>(ch))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else if (!cur.empty()) {
            if (cur.size() >= 2) out.push_back(cur);
            cur.clear();
        }
    }
    if (cur.size() >= 2) out.push_back(cur);
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    auto toks = tokenize_raw(s);
    std::sort(toks.begin(), toks.end());
    toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
    return toks;
}

std::vector<std::string> tokenize_all(const std::vector<std::string>& phrases) {
    std::vector<std::string> out;
    for (const auto& p : phrases) {
        auto toks = tokenize_raw(p);
        out.insert(out.end(), toks.begin(), toks.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t intersection_size(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::size_t n = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++n;
            ++ia;
            ++ib;
        }
    }
    return n;
}

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    const std::size_t inter = intersection_size(a, b);
    const std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::string slugify(std::string_view name) {
    std::string out;
    bool pending_sep = false;
    for (char ch : name) {
        if (is_alnum(static_cast<unsigned char>(ch))) {
            if (pending_sep && !out.empty()) out.push_back('-');
            pending_sep = false;
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else {
            pending_sep = true;
        }
    }
    return out;
}

std::string first_sentence(std::string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '.' || s[i] == '!' || s[i] == '?') {
            return trim(s.substr(0, i + 1));
        }
    }
    return trim(s);
}

std::string truncate_at_whitespace(std::string_view s, std::size_t budget) {
    if (s.size() <= budget) return std::string(s);
    std::string_view prefix = s.substr(0, budget);
    std::size_t cut = prefix.find_last_of(" \t\n\r");
    if (cut == std::string_view::npos) cut = budget;  // no boundary available
    std::string out(s.substr(0, cut));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace gos::text
