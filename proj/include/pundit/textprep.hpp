#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pundit/core.hpp"
#include "pundit/thesaurus.hpp"
#include "pundit/wordnet.hpp"

namespace pundit {

struct Token {
    std::string surface;  // lowercased
    int position = 0;     // 1-based among word tokens; 0 for punctuation
    PosTag tag = PosTag::other;
    std::string lemma;    // filled by extract_units (surface until then)
};

struct ContentUnit {
    std::string key;             // lemma, or space-joined collocation
    std::vector<int> positions;  // 1-based token positions (head word for collocations)
    PosTag pos = PosTag::noun;
    bool is_collocation = false;
};

/// Function-word lexicon consulted before any open-class tagging.
class ClosedClassLexicon {
public:
    static ClosedClassLexicon parse(std::string_view text) {
        ClosedClassLexicon lex;
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            auto cols = split(t, '\t');
            if (cols.size() != 2)
                throw Error("closed-class lexicon line " + std::to_string(line_no) +
                            ": expected 2 columns");
            PosTag tag = pos_tag_from_string(trim(cols[1]));
            lex.words_[to_lower(trim(cols[0]))] = tag;
        }
        return lex;
    }

    static ClosedClassLexicon load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open closed-class lexicon: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse(ss.str());
    }

    std::optional<PosTag> lookup(const std::string& word) const {
        auto it = words_.find(word);
        if (it == words_.end()) return std::nullopt;
        return it->second;
    }

    size_t size() const { return words_.size(); }

private:
    std::map<std::string, PosTag> words_;
};

namespace textprep_detail {

inline bool is_clause_punct(char c) {
    switch (c) {
        case '.': case ',': case '!': case '?': case ';': case ':':
        case '"': case '(': case ')': case '[': case ']': case '{': case '}':
            return true;
        default:
            return false;
    }
}

inline bool all_punct(const std::string& s) {
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) return false;
    return !s.empty();
}

}  // namespace textprep_detail

/// Lowercases, splits on whitespace and peels clause punctuation into
/// separate tokens. Word tokens are numbered 1..n in order; punctuation
/// tokens carry position 0 and do not advance the numbering.
inline std::vector<Token> tokenize(std::string_view text) {
    using namespace textprep_detail;
    std::vector<Token> out;
    int next_pos = 1;
    auto push_word = [&](std::string w) {
        if (w.empty()) return;
        Token t;
        if (all_punct(w)) {
            t.tag = PosTag::punctuation;
            t.position = 0;
        } else {
            t.position = next_pos++;
        }
        t.surface = std::move(w);
        t.lemma = t.surface;
        out.push_back(std::move(t));
    };
    auto push_punct = [&](std::string p) {
        if (p.empty()) return;
        Token t;
        t.surface = std::move(p);
        t.lemma = t.surface;
        t.position = 0;
        t.tag = PosTag::punctuation;
        out.push_back(std::move(t));
    };
    for (const auto& raw : split_ws(to_lower(text))) {
        size_t begin = 0, end = raw.size();
        std::string lead, tail;
        while (begin < end && is_clause_punct(raw[begin])) lead.push_back(raw[begin++]);
        while (end > begin && is_clause_punct(raw[end - 1])) tail.insert(tail.begin(), raw[--end]);
        // leading apostrophes stay with the word ('cause, 'em)
        push_punct(lead);
        push_word(raw.substr(begin, end - begin));
        push_punct(tail);
    }
    return out;
}

/// Deterministic coarse tagger: closed-class lexicon, then a WordNet
/// membership vote (the part of speech whose attested lemmas carry the most
/// tag-count mass), then suffix rules, then noun.
inline std::vector<Token> pos_tag(std::vector<Token> tokens, const WordnetDb& db,
                                  const ClosedClassLexicon& lexicon) {
    static const std::array<WnPos, 4> kVoteOrder = {WnPos::noun, WnPos::verb, WnPos::adj,
                                                    WnPos::adv};
    for (auto& t : tokens) {
        if (t.tag == PosTag::punctuation) continue;
        if (auto cc = lexicon.lookup(t.surface)) {
            t.tag = *cc;
            continue;
        }
        // WordNet vote
        int best_total = -1;
        std::optional<WnPos> best;
        for (WnPos pos : kVoteOrder) {
            auto candidates = db.morphy(t.surface, pos);
            if (candidates.empty()) continue;
            int total = 0;
            for (const auto& c : candidates) total += db.tag_count_total(c, pos);
            if (total > best_total) {
                best_total = total;
                best = pos;
            }
        }
        if (best) {
            t.tag = to_pos_tag(*best);
            continue;
        }
        // suffix fallback
        const std::string& w = t.surface;
        auto ends_with = [&](std::string_view s) {
            return w.size() > s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
        };
        if (ends_with("ly")) t.tag = PosTag::adverb;
        else if (ends_with("ing") || ends_with("ed")) t.tag = PosTag::verb;
        else if (ends_with("ous") || ends_with("ful") || ends_with("ive")) t.tag = PosTag::adjective;
        else t.tag = PosTag::noun;
    }
    return tokens;
}

namespace textprep_detail {

/// Best lemma candidate under (tag-count mass desc, length asc, lexicographic).
inline std::string lemmatize(const std::string& surface, PosTag tag, const WordnetDb& db) {
    auto pos = wn_pos_from_tag(tag);
    if (!pos) return surface;
    auto candidates = db.morphy(surface, *pos);
    if (candidates.empty()) return surface;
    std::string best = candidates.front();
    int best_tc = db.tag_count_total(best, *pos);
    for (size_t i = 1; i < candidates.size(); ++i) {
        int tc = db.tag_count_total(candidates[i], *pos);
        if (tc > best_tc ||
            (tc == best_tc && (candidates[i].size() < best.size() ||
                               (candidates[i].size() == best.size() && candidates[i] < best)))) {
            best = candidates[i];
            best_tc = tc;
        }
    }
    return best;
}

struct NgramPattern {
    std::vector<PosTag> tags;
    bool head_is_noun;  // head = trailing noun; otherwise the verb in front
};

inline const std::vector<NgramPattern>& collocation_patterns() {
    static const std::vector<NgramPattern> patterns = {
        {{PosTag::adjective, PosTag::noun}, true},
        {{PosTag::noun, PosTag::noun}, true},
        {{PosTag::verb, PosTag::noun}, true},
        {{PosTag::verb, PosTag::preposition}, false},
        {{PosTag::verb, PosTag::preposition, PosTag::noun}, true},
        {{PosTag::verb, PosTag::adverb}, false},
    };
    return patterns;
}

}  // namespace textprep_detail

/// Builds the document's content units: lemmatized separate words (nouns,
/// verbs, adjectives only) plus thesaurus-attested collocations found by
/// part-of-speech n-gram patterns. Component words of a matched collocation
/// stay in the list as separate units.
inline std::vector<ContentUnit> extract_units(std::vector<Token> tokens,
                                              const ThesaurusIndex& index,
                                              const WordnetDb& db) {
    using namespace textprep_detail;
    for (auto& t : tokens) {
        if (t.tag == PosTag::punctuation) continue;
        t.lemma = lemmatize(t.surface, t.tag, db);
    }

    struct Partial {
        std::vector<int> positions;
        PosTag pos;
        bool is_collocation;
        int first_seen;
    };
    std::map<std::string, Partial> units;
    int order = 0;
    auto add = [&](const std::string& key, int position, PosTag pos, bool colloc) {
        auto [it, fresh] = units.try_emplace(key, Partial{{}, pos, colloc, order});
        if (fresh) ++order;
        it->second.positions.push_back(position);
    };

    // separate words
    for (const auto& t : tokens) {
        if (t.tag == PosTag::noun || t.tag == PosTag::verb || t.tag == PosTag::adjective)
            add(t.lemma, t.position, t.tag, false);
    }

    // collocations: contiguous n-grams (no punctuation in between) whose
    // POS pattern matches and whose joined lemmas are a thesaurus entry
    for (size_t i = 0; i < tokens.size(); ++i) {
        for (const auto& pattern : collocation_patterns()) {
            size_t n = pattern.tags.size();
            if (i + n > tokens.size()) continue;
            bool ok = true;
            for (size_t k = 0; k < n; ++k)
                if (tokens[i + k].tag != pattern.tags[k]) { ok = false; break; }
            if (!ok) continue;
            std::string joined;
            for (size_t k = 0; k < n; ++k) {
                if (k) joined += ' ';
                joined += tokens[i + k].lemma;
            }
            if (!index.contains(joined)) continue;
            const Token& head = pattern.head_is_noun ? tokens[i + n - 1] : tokens[i];
            add(joined, head.position, head.tag, true);
        }
    }

    std::vector<std::pair<std::string, Partial>> ordered(units.begin(), units.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int fa = *std::min_element(a.second.positions.begin(), a.second.positions.end());
        int fb = *std::min_element(b.second.positions.begin(), b.second.positions.end());
        if (fa != fb) return fa < fb;
        if (a.second.is_collocation != b.second.is_collocation) return !a.second.is_collocation;
        return a.first < b.first;
    });
    std::vector<ContentUnit> out;
    out.reserve(ordered.size());
    for (auto& [key, p] : ordered) {
        ContentUnit u;
        u.key = key;
        std::sort(p.positions.begin(), p.positions.end());
        p.positions.erase(std::unique(p.positions.begin(), p.positions.end()), p.positions.end());
        u.positions = std::move(p.positions);
        u.pos = p.pos;
        u.is_collocation = p.is_collocation;
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace pundit
