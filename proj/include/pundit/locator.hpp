#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pundit/core.hpp"
#include "pundit/semvec.hpp"
#include "pundit/textprep.hpp"

namespace pundit {

enum class PunType { homographic, heterographic };

inline const char* to_string(PunType t) {
    return t == PunType::homographic ? "homographic" : "heterographic";
}

inline PunType pun_type_from_string(std::string_view s) {
    if (s == "homographic" || s == "homo") return PunType::homographic;
    if (s == "heterographic" || s == "hetero") return PunType::heterographic;
    throw Error("unknown pun type: '" + std::string(s) + "'");
}

struct GroupAssignment {
    int a_section = -1;
    int s_a = 0;
    std::vector<int> b_sections;  // ascending ids
    int s_b = 0;
    std::vector<std::string> w_a;
    std::vector<std::string> w_b;                      // merged, duplicates removed
    std::vector<std::vector<std::string>> w_b_groups;  // per B section, unmerged
};

struct CandidateScore {
    std::string word;
    int v_alpha = 1;
    std::optional<int> v_beta;  // homographic only
    double v_gamma = 0.0;
    double v_delta = 0.0;
    double score = 0.0;
};

/// Part-of-speech rate of a target-word candidate.
inline double pos_rate(PosTag tag) {
    switch (tag) {
        case PosTag::noun: return 0.502;
        case PosTag::verb: return 0.338;
        case PosTag::adjective: return 0.131;
        case PosTag::adverb: return 0.016;
        default: return 0.013;
    }
}

namespace locator_detail {

inline std::map<int, int> section_counts(const FieldAssignment& fields) {
    std::map<int, int> counts;
    for (const auto& [_, sections] : fields.unit_fields)
        for (int s : sections) ++counts[s];
    return counts;
}

inline std::vector<std::string> words_of_section(const FieldAssignment& fields, int section) {
    std::vector<std::string> out;
    for (const auto& [key, sections] : fields.unit_fields)
        if (sections.count(section)) out.push_back(key);
    return out;
}

inline void merge_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& w : from)
        if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
}

/// A section and the runner-up count; nullopt when fewer than two sections
/// are populated (no pun structure to exploit).
inline std::optional<std::pair<int, int>> a_and_second(const std::map<int, int>& counts) {
    if (counts.size() < 2) return std::nullopt;
    int a = -1, best = 0;
    for (const auto& [section, count] : counts)
        if (count > best) { best = count; a = section; }
    int second = 0;
    for (const auto& [section, count] : counts)
        if (section != a && count > second) second = count;
    if (second < 1) return std::nullopt;
    return std::make_pair(a, second);
}

}  // namespace locator_detail

/// A-group takes the most populated section (ties to the lowest id); the
/// B-group merges every section holding the runner-up count.
inline std::optional<GroupAssignment> find_groups_homographic(const FieldAssignment& fields) {
    using namespace locator_detail;
    auto counts = section_counts(fields);
    auto top = a_and_second(counts);
    if (!top) return std::nullopt;
    GroupAssignment g;
    g.a_section = top->first;
    g.s_a = counts[g.a_section];
    g.s_b = top->second;
    g.w_a = words_of_section(fields, g.a_section);
    for (const auto& [section, count] : counts) {
        if (section == g.a_section || count != g.s_b) continue;
        g.b_sections.push_back(section);
        g.w_b_groups.push_back(words_of_section(fields, section));
        merge_unique(g.w_b, g.w_b_groups.back());
    }
    return g;
}

/// Heterographic B-group: among the runner-up sections, keep those whose
/// word group forms the longest union with W_A (duplicates removed); all
/// maximizers are kept.
inline std::optional<GroupAssignment> find_groups_heterographic(const FieldAssignment& fields) {
    using namespace locator_detail;
    auto counts = section_counts(fields);
    auto top = a_and_second(counts);
    if (!top) return std::nullopt;
    GroupAssignment g;
    g.a_section = top->first;
    g.s_a = counts[g.a_section];
    g.s_b = top->second;
    g.w_a = words_of_section(fields, g.a_section);

    std::set<std::string> a_set(g.w_a.begin(), g.w_a.end());
    size_t best_union = 0;
    std::vector<std::pair<int, std::vector<std::string>>> candidates;
    for (const auto& [section, count] : counts) {
        if (section == g.a_section || count != g.s_b) continue;
        auto words = words_of_section(fields, section);
        size_t union_size = a_set.size();
        for (const auto& w : words)
            if (!a_set.count(w)) ++union_size;
        candidates.emplace_back(section, std::move(words));
        best_union = std::max(best_union, union_size);
    }
    for (auto& [section, words] : candidates) {
        size_t union_size = a_set.size();
        for (const auto& w : words)
            if (!a_set.count(w)) ++union_size;
        if (union_size != best_union) continue;
        g.b_sections.push_back(section);
        g.w_b_groups.push_back(std::move(words));
        merge_unique(g.w_b, g.w_b_groups.back());
    }
    return g;
}

namespace locator_detail {

inline const ContentUnit* unit_of(const std::vector<ContentUnit>& units, const std::string& key) {
    for (const auto& u : units)
        if (u.key == key) return &u;
    return nullptr;
}

inline double mean_position(const ContentUnit& u) {
    double sum = 0.0;
    for (int p : u.positions) sum += p;
    return u.positions.empty() ? 0.0 : sum / static_cast<double>(u.positions.size());
}

inline void rank(std::vector<CandidateScore>& scores) {
    std::sort(scores.begin(), scores.end(), [](const CandidateScore& a, const CandidateScore& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.v_gamma != b.v_gamma) return a.v_gamma > b.v_gamma;
        return a.word < b.word;
    });
}

}  // namespace locator_detail

/// Homographic ranking over W_B: v_alpha (membership in both groups),
/// v_beta (frequency across the unmerged B lists), v_gamma (mean sentence
/// position), v_delta (part-of-speech rate), combined multiplicatively.
inline std::vector<CandidateScore> score_homographic(const GroupAssignment& groups,
                                                     const std::vector<ContentUnit>& units) {
    using namespace locator_detail;
    if (groups.w_b.empty()) throw Error("score: empty candidate set");
    std::set<std::string> a_set(groups.w_a.begin(), groups.w_a.end());
    std::vector<CandidateScore> out;
    for (const auto& word : groups.w_b) {
        const ContentUnit* u = unit_of(units, word);
        if (!u) throw Error("score: candidate '" + word + "' missing from units");
        CandidateScore s;
        s.word = word;
        s.v_alpha = a_set.count(word) ? 2 : 1;
        int beta = 0;
        for (const auto& group : groups.w_b_groups)
            for (const auto& w : group)
                if (w == word) ++beta;
        s.v_beta = beta;
        s.v_gamma = mean_position(*u);
        s.v_delta = pos_rate(u->pos);
        s.score = s.v_alpha * beta * s.v_gamma * s.v_delta;
        out.push_back(std::move(s));
    }
    rank(out);
    return out;
}

/// Heterographic ranking over W_A ∪ W_B: v_alpha rewards membership in
/// exactly one group (frequencies carry no weight here).
inline std::vector<CandidateScore> score_heterographic(const GroupAssignment& groups,
                                                       const std::vector<ContentUnit>& units) {
    using namespace locator_detail;
    std::vector<std::string> pool = groups.w_a;
    merge_unique(pool, groups.w_b);
    if (pool.empty()) throw Error("score: empty candidate set");
    std::set<std::string> a_set(groups.w_a.begin(), groups.w_a.end());
    std::set<std::string> b_set(groups.w_b.begin(), groups.w_b.end());
    std::vector<CandidateScore> out;
    for (const auto& word : pool) {
        const ContentUnit* u = unit_of(units, word);
        if (!u) throw Error("score: candidate '" + word + "' missing from units");
        CandidateScore s;
        s.word = word;
        s.v_alpha = (a_set.count(word) > 0) != (b_set.count(word) > 0) ? 2 : 1;
        s.v_gamma = mean_position(*u);
        s.v_delta = pos_rate(u->pos);
        s.score = s.v_alpha * s.v_gamma * s.v_delta;
        out.push_back(std::move(s));
    }
    rank(out);
    return out;
}

/// Full target-word run for one document, kept with every intermediate
/// artifact for audit output.
struct LocateResult {
    std::vector<Token> tokens;
    std::vector<ContentUnit> units;
    FieldAssignment fields;
    SemanticVector vector;
    std::optional<GroupAssignment> groups;
    std::vector<CandidateScore> scores;
    std::optional<std::string> target;
    std::vector<int> target_positions;
    std::optional<std::string> failure;
};

inline LocateResult locate(const std::string& text, PunType type, const ThesaurusIndex& index,
                           const WordnetDb& db, const ClosedClassLexicon& lexicon) {
    LocateResult r;
    r.tokens = pos_tag(tokenize(text), db, lexicon);
    r.units = extract_units(r.tokens, index, db);
    r.fields = assign_fields(r.units, index, db);
    r.vector = vectorize(r.fields);
    r.groups = type == PunType::homographic ? find_groups_homographic(r.fields)
                                            : find_groups_heterographic(r.fields);
    if (!r.groups) {
        r.failure = "no target found: fewer than two populated semantic fields";
        return r;
    }
    r.scores = type == PunType::homographic ? score_homographic(*r.groups, r.units)
                                            : score_heterographic(*r.groups, r.units);
    r.target = r.scores.front().word;
    if (const ContentUnit* u = locator_detail::unit_of(r.units, *r.target))
        r.target_positions = u->positions;
    return r;
}

}  // namespace pundit
