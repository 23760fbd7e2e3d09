#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pundit/core.hpp"
#include "pundit/edit_distance.hpp"
#include "pundit/sections.hpp"

namespace pundit {

/// Lemma/collocation index over thesaurus sections.
///
/// Immutable after ingestion; with_lemma() returns an augmented copy, so a
/// loaded index can be shared across threads freely.
class ThesaurusIndex {
public:
    struct Provenance {
        std::string source_checksum;
        std::string section_map_checksum;
        std::string distance_variant = "optimal_string_alignment";
    };

    ThesaurusIndex() = default;

    const std::set<int>& sections_of(const std::string& key) const {
        static const std::set<int> empty;
        auto it = entries_.find(key);
        return it == entries_.end() ? empty : it->second;
    }

    bool contains(const std::string& key) const { return entries_.count(key) > 0; }

    /// Augmented copy; existing sections are kept (set union).
    ThesaurusIndex with_lemma(const std::string& lemma, const std::set<int>& sections) const {
        if (lemma.empty()) throw Error("with_lemma: empty lemma");
        if (sections.empty()) throw Error("with_lemma: empty section set");
        for (int s : sections)
            if (s < 0 || s >= kSectionCount)
                throw Error("with_lemma: section id out of range: " + std::to_string(s));
        ThesaurusIndex out = *this;
        out.entries_[lemma].insert(sections.begin(), sections.end());
        return out;
    }

    /// Nearest lemma to `target` whose section set intersects `allowed`,
    /// ordered by (edit distance, lemma); the target itself never matches.
    std::optional<std::pair<std::string, int>>
    nearest_in_sections(const std::string& target, const std::set<int>& allowed) const {
        if (allowed.empty()) throw Error("nearest_in_sections: empty section set");
        std::optional<std::pair<std::string, int>> best;
        for (const auto& [lemma, sections] : entries_) {
            if (lemma == target) continue;
            bool hit = false;
            for (int s : sections)
                if (allowed.count(s)) { hit = true; break; }
            if (!hit) continue;
            int d = damerau_levenshtein(target, lemma);
            if (!best || d < best->second || (d == best->second && lemma < best->first))
                best = {lemma, d};
        }
        return best;
    }

    /// All entry keys in lexicographic order (stable across runs).
    std::vector<std::string> lemma_list() const {
        std::vector<std::string> keys;
        keys.reserve(entries_.size());
        for (const auto& [k, _] : entries_) keys.push_back(k);
        return keys;
    }

    size_t size() const { return entries_.size(); }
    const std::map<std::string, std::set<int>>& entries() const { return entries_; }
    const std::vector<std::string>& section_names() const { return section_names_; }
    const Provenance& provenance() const { return provenance_; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["format_version"] = 1;
        j["kind"] = "thesaurus_index";
        j["section_names"] = section_names_;
        j["lemma_list"] = lemma_list();
        nlohmann::json entries = nlohmann::json::object();
        for (const auto& [k, v] : entries_) entries[k] = std::vector<int>(v.begin(), v.end());
        j["entries"] = std::move(entries);
        j["provenance"] = {{"source_checksum", provenance_.source_checksum},
                           {"section_map_checksum", provenance_.section_map_checksum},
                           {"distance_variant", provenance_.distance_variant}};
        return j;
    }

    static ThesaurusIndex from_json(const nlohmann::json& j) {
        if (!j.is_object() || j.value("kind", "") != "thesaurus_index")
            throw Error("thesaurus index file: unrecognized content");
        if (j.value("format_version", 0) != 1)
            throw Error("thesaurus index file: unsupported format version");
        ThesaurusIndex idx;
        idx.section_names_ = j.at("section_names").get<std::vector<std::string>>();
        for (const auto& [k, v] : j.at("entries").items()) {
            auto ids = v.get<std::vector<int>>();
            if (k.empty() || ids.empty()) throw Error("thesaurus index file: empty entry");
            idx.entries_[k] = std::set<int>(ids.begin(), ids.end());
        }
        if (j.contains("lemma_list") &&
            j.at("lemma_list").get<std::vector<std::string>>() != idx.lemma_list())
            throw Error("thesaurus index file: lemma_list does not match entries");
        const auto& p = j.at("provenance");
        idx.provenance_.source_checksum = p.value("source_checksum", "");
        idx.provenance_.section_map_checksum = p.value("section_map_checksum", "");
        idx.provenance_.distance_variant = p.value("distance_variant", "");
        return idx;
    }

    void save(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw Error("cannot write thesaurus index: " + path);
        f << to_json().dump(2) << "\n";
    }

    static ThesaurusIndex load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open thesaurus index: " + path);
        nlohmann::json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            throw Error("thesaurus index file " + path + ": " + e.what());
        }
        return from_json(j);
    }

private:
    friend ThesaurusIndex parse_roget(std::string_view, const SectionMap&);

    std::map<std::string, std::set<int>> entries_;
    std::vector<std::string> section_names_;
    Provenance provenance_;
};

namespace detail {

inline bool is_pos_marker(const std::string& t) {
    static const std::set<std::string> markers = {"n",   "v",   "adj", "adv", "int",
                                                  "phr", "pron", "prep", "&c", "etc"};
    return markers.count(t) > 0;
}

/// Cleans one head body: drops bracketed/parenthesized/quoted spans, then
/// splits on [,;.] into candidate entries.
inline void collect_entries(const std::string& body, int section,
                            std::map<std::string, std::set<int>>& entries) {
    std::string stripped;
    stripped.reserve(body.size());
    int depth = 0;
    bool in_quote = false;
    for (char c : body) {
        if (c == '[' || c == '(' || c == '{') { ++depth; continue; }
        if (c == ']' || c == ')' || c == '}') { if (depth > 0) --depth; continue; }
        if (c == '"') { in_quote = !in_quote; continue; }
        if (depth == 0 && !in_quote) stripped.push_back(c);
    }
    size_t start = 0;
    for (size_t i = 0; i <= stripped.size(); ++i) {
        if (i < stripped.size() && stripped[i] != ',' && stripped[i] != ';' && stripped[i] != '.')
            continue;
        std::string raw = trim(std::string_view(stripped).substr(start, i - start));
        start = i + 1;
        if (raw.empty()) continue;
        std::string clean;
        bool has_digit = false;
        for (char c : to_lower(raw)) {
            if (std::isdigit(static_cast<unsigned char>(c))) { has_digit = true; break; }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '\'' || c == '-')
                clean.push_back(c);
            else if (c == ' ' && !clean.empty() && clean.back() != ' ')
                clean.push_back(' ');
            // anything else (asterisks, section marks, ...) is dropped
        }
        if (has_digit) continue;  // cross-reference fragment
        clean = trim(clean);
        if (clean.size() < 2 || is_pos_marker(clean)) continue;
        entries[clean].insert(section);
    }
}

/// Head detector: "#334. Gas.-- ..." or "334a. ...". Returns the head number
/// and the offset just past the head-number dot, or nullopt.
inline std::optional<std::pair<int, size_t>> match_head(const std::string& line) {
    size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size() && line[i] == '#') ++i;
    size_t digits_begin = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits_begin || i - digits_begin > 4) return std::nullopt;
    int head = std::stoi(line.substr(digits_begin, i - digits_begin));
    if (i < line.size() && std::isalpha(static_cast<unsigned char>(line[i]))) ++i;  // 234a
    if (i >= line.size() || line[i] != '.') return std::nullopt;
    return std::make_pair(head, i + 1);
}

}  // namespace detail

/// Parses head-numbered thesaurus text into a section index.
///
/// Every head's word list is registered under the section that owns the head
/// number; the head title (between the number and "--") is bookkeeping, not
/// an entry. Multiword entries are kept as collocations with single spaces.
inline ThesaurusIndex parse_roget(std::string_view source_text, const SectionMap& map) {
    ThesaurusIndex idx;
    idx.section_names_ = map.names();

    std::istringstream in{std::string(source_text)};
    std::string line;
    int current_section = -1;
    std::set<int> unmapped_heads;
    while (std::getline(in, line)) {
        if (auto head = detail::match_head(line)) {
            auto section = map.section_of_head(head->first);
            if (!section) {
                unmapped_heads.insert(head->first);
                current_section = -1;
                continue;
            }
            current_section = *section;
            // The body starts after "--" when present; the head title is skipped.
            std::string rest = line.substr(head->second);
            size_t dash = rest.find("--");
            if (dash != std::string::npos)
                detail::collect_entries(rest.substr(dash + 2), current_section, idx.entries_);
            continue;
        }
        if (current_section >= 0 && !trim(line).empty())
            detail::collect_entries(line, current_section, idx.entries_);
    }
    if (!unmapped_heads.empty()) {
        std::string heads;
        for (int h : unmapped_heads) heads += (heads.empty() ? "" : ", ") + std::to_string(h);
        throw Error("thesaurus ingestion: no section mapping for heads: " + heads);
    }
    if (idx.entries_.empty())
        throw Error("thesaurus ingestion: no entries found (empty or unrecognized source)");

    idx.provenance_.source_checksum = fnv1a64_hex(source_text);
    idx.provenance_.section_map_checksum = fnv1a64_hex(map.source_text());
    return idx;
}

inline ThesaurusIndex ingest_thesaurus_file(const std::string& source_path,
                                            const std::string& section_map_path) {
    std::ifstream f(source_path);
    if (!f) throw Error("cannot open thesaurus source: " + source_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    SectionMap map = SectionMap::load(section_map_path);
    return parse_roget(ss.str(), map);
}

}  // namespace pundit
