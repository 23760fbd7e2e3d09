#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pundit/core.hpp"

namespace pundit {

/// Number of thesaurus sections; section ids run from 0 to kSectionCount-1.
inline constexpr int kSectionCount = 34;

struct SectionRange {
    int head_start = 0;
    int head_end = 0;  // inclusive
    int section_id = 0;
};

/// Maps head numbers of a head-numbered thesaurus layout onto section ids.
///
/// A section may own several head ranges (merged subdivisions), but the
/// ranges of the whole map must be non-overlapping and contiguous, and every
/// id in [0, kSectionCount) must be named exactly once.
class SectionMap {
public:
    static SectionMap parse(std::string_view text) {
        SectionMap map;
        std::map<int, std::string> names;
        int line_no = 0;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            auto cols = split(t, '\t');
            if (cols.size() != 4)
                throw Error("section map line " + std::to_string(line_no) +
                            ": expected 4 tab-separated columns");
            SectionRange r;
            try {
                r.head_start = std::stoi(cols[0]);
                r.head_end = std::stoi(cols[1]);
                r.section_id = std::stoi(cols[2]);
            } catch (const std::exception&) {
                throw Error("section map line " + std::to_string(line_no) +
                            ": malformed number");
            }
            std::string name = trim(cols[3]);
            if (r.head_start < 1 || r.head_end < r.head_start)
                throw Error("section map line " + std::to_string(line_no) +
                            ": bad head range " + cols[0] + ".." + cols[1]);
            if (r.section_id < 0 || r.section_id >= kSectionCount)
                throw Error("section map line " + std::to_string(line_no) +
                            ": section id out of range: " + cols[2]);
            auto it = names.find(r.section_id);
            if (it != names.end() && it->second != name)
                throw Error("section map: conflicting names for id " + cols[2]);
            names[r.section_id] = name;
            map.ranges_.push_back(r);
        }
        map.validate(names);
        map.source_text_ = std::string(text);
        return map;
    }

    static SectionMap load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open section map: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse(ss.str());
    }

    /// Section id owning a head number, or nullopt when the head is unmapped
    /// (possible when the head lies past the last range).
    std::optional<int> section_of_head(int head) const {
        for (const auto& r : ranges_)
            if (head >= r.head_start && head <= r.head_end) return r.section_id;
        return std::nullopt;
    }

    const std::string& name_of(int section_id) const { return names_.at(static_cast<size_t>(section_id)); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<SectionRange>& ranges() const { return ranges_; }
    const std::string& source_text() const { return source_text_; }

private:
    void validate(const std::map<int, std::string>& names) {
        if (ranges_.empty()) throw Error("section map: no ranges");
        auto sorted = ranges_;
        std::sort(sorted.begin(), sorted.end(),
                  [](const SectionRange& a, const SectionRange& b) {
                      return a.head_start < b.head_start;
                  });
        for (size_t i = 1; i < sorted.size(); ++i) {
            const auto& prev = sorted[i - 1];
            const auto& cur = sorted[i];
            if (cur.head_start <= prev.head_end)
                throw Error("section map: overlapping head ranges " +
                            std::to_string(prev.head_start) + ".." +
                            std::to_string(prev.head_end) + " and " +
                            std::to_string(cur.head_start) + ".." +
                            std::to_string(cur.head_end));
            if (cur.head_start != prev.head_end + 1)
                throw Error("section map: gap between head ranges " +
                            std::to_string(prev.head_end) + " and " +
                            std::to_string(cur.head_start));
        }
        if (static_cast<int>(names.size()) != kSectionCount)
            throw Error("section map: expected " + std::to_string(kSectionCount) +
                        " distinct section ids, found " + std::to_string(names.size()));
        names_.resize(kSectionCount);
        for (const auto& [id, name] : names) names_[static_cast<size_t>(id)] = name;
    }

    std::vector<SectionRange> ranges_;
    std::vector<std::string> names_;
    std::string source_text_;
};

}  // namespace pundit
