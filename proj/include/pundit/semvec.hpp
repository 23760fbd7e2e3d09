#pragma once

#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pundit/core.hpp"
#include "pundit/sections.hpp"
#include "pundit/textprep.hpp"
#include "pundit/thesaurus.hpp"
#include "pundit/wordnet.hpp"

namespace pundit {

struct FieldAssignment {
    std::map<std::string, std::set<int>> unit_fields;
    std::set<std::string> fallback_applied;
};

struct SemanticVector {
    std::array<int, kSectionCount> counts{};

    int sum() const {
        int s = 0;
        for (int c : counts) s += c;
        return s;
    }

    std::string to_csv() const {
        std::string out;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(counts[i]);
        }
        return out;
    }

    static SemanticVector from_csv(std::string_view csv) {
        auto parts = split(csv, ',');
        if (parts.size() != kSectionCount)
            throw Error("semantic vector: expected " + std::to_string(kSectionCount) +
                        " components, got " + std::to_string(parts.size()));
        SemanticVector v;
        for (size_t i = 0; i < parts.size(); ++i) {
            try {
                v.counts[i] = std::stoi(trim(parts[i]));
            } catch (const std::exception&) {
                throw Error("semantic vector: malformed component '" + parts[i] + "'");
            }
            if (v.counts[i] < 0) throw Error("semantic vector: negative component");
        }
        return v;
    }

    friend bool operator==(const SemanticVector& a, const SemanticVector& b) {
        return a.counts == b.counts;
    }
};

namespace semvec_detail {

/// Sections of the first thesaurus-attested lemma on the unit's hypernym
/// chain: breadth-first from the most frequent sense, depth capped so the
/// walk cannot drift to the taxonomy root.
inline std::set<int> hypernym_fallback(const std::string& key, PosTag pos,
                                       const ThesaurusIndex& index, const WordnetDb& db,
                                       int max_depth = 3) {
    auto wn = wn_pos_from_tag(pos);
    if (!wn) return {};
    std::deque<std::pair<SynsetId, int>> frontier;
    std::set<SynsetId> seen;
    for (const auto& sense : db.synsets_of(key, *wn)) {
        if (seen.insert(sense.synset).second) frontier.emplace_back(sense.synset, 0);
    }
    while (!frontier.empty()) {
        auto [id, depth] = frontier.front();
        frontier.pop_front();
        if (depth > 0) {
            const Synset* s = db.find(id);
            if (s) {
                for (const auto& lemma : s->lemmas) {
                    const auto& sections = index.sections_of(lemma);
                    if (!sections.empty()) return sections;
                }
            }
        }
        if (depth == max_depth) continue;
        for (const auto& h : db.hypernyms(id))
            if (seen.insert(h).second) frontier.emplace_back(h, depth + 1);
    }
    return {};
}

}  // namespace semvec_detail

/// Looks up every unit's thesaurus sections; units missing from the
/// thesaurus fall back to their WordNet hypernyms. Units that still resolve
/// to nothing are recorded with an empty set.
inline FieldAssignment assign_fields(const std::vector<ContentUnit>& units,
                                     const ThesaurusIndex& index, const WordnetDb& db) {
    FieldAssignment out;
    for (const auto& u : units) {
        std::set<int> sections = index.sections_of(u.key);
        if (sections.empty()) {
            sections = semvec_detail::hypernym_fallback(u.key, u.pos, index, db);
            if (!sections.empty()) out.fallback_applied.insert(u.key);
        }
        out.unit_fields[u.key] = std::move(sections);
    }
    return out;
}

/// counts[k] = number of distinct unit keys whose section set contains k.
inline SemanticVector vectorize(const FieldAssignment& fields) {
    SemanticVector v;
    for (const auto& [_, sections] : fields.unit_fields)
        for (int s : sections) ++v.counts[static_cast<size_t>(s)];
    return v;
}

}  // namespace pundit
