#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace admerge {

// Shell-style glob against a module path: '*' matches any run of characters,
// '?' matches one. Everything else (including '^' and '.') is literal.
inline bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

inline bool matches_any(const std::vector<std::string>& patterns, std::string_view text) {
    for (const auto& pat : patterns) {
        if (glob_match(pat, text)) return true;
    }
    return false;
}

}  // namespace admerge
