#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pundit {

/// Error type thrown by loaders, parsers and other fallible operations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Coarse part-of-speech inventory used throughout the pipeline.
enum class PosTag {
    noun,
    verb,
    adjective,
    adverb,
    pronoun,
    preposition,
    determiner,
    conjunction,
    punctuation,
    other,
};

inline const char* to_string(PosTag t) {
    switch (t) {
        case PosTag::noun: return "noun";
        case PosTag::verb: return "verb";
        case PosTag::adjective: return "adjective";
        case PosTag::adverb: return "adverb";
        case PosTag::pronoun: return "pronoun";
        case PosTag::preposition: return "preposition";
        case PosTag::determiner: return "determiner";
        case PosTag::conjunction: return "conjunction";
        case PosTag::punctuation: return "punctuation";
        case PosTag::other: return "other";
    }
    return "other";
}

inline PosTag pos_tag_from_string(std::string_view s) {
    if (s == "noun") return PosTag::noun;
    if (s == "verb") return PosTag::verb;
    if (s == "adjective") return PosTag::adjective;
    if (s == "adverb") return PosTag::adverb;
    if (s == "pronoun") return PosTag::pronoun;
    if (s == "preposition") return PosTag::preposition;
    if (s == "determiner") return PosTag::determiner;
    if (s == "conjunction") return PosTag::conjunction;
    if (s == "punctuation") return PosTag::punctuation;
    return PosTag::other;
}

inline bool is_open_class(PosTag t) {
    return t == PosTag::noun || t == PosTag::verb || t == PosTag::adjective ||
           t == PosTag::adverb;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

/// Whitespace tokenizer collapsing runs of blanks.
inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// FNV-1a 64-bit checksum, used for provenance stamps on compiled resources.
inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return "fnv1a64:" + out;
}

}  // namespace pundit
