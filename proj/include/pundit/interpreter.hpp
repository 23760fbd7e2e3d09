#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pundit/core.hpp"
#include "pundit/edit_distance.hpp"
#include "pundit/locator.hpp"
#include "pundit/semvec.hpp"
#include "pundit/textprep.hpp"
#include "pundit/thesaurus.hpp"
#include "pundit/wordnet.hpp"

namespace pundit {

struct SectionProfile {
    SynsetId synset;
    std::vector<int> section_multiset;  // sorted; duplicates across gloss words kept

    int a_hits(int section) const {
        int n = 0;
        for (int s : section_multiset)
            if (s == section) ++n;
        return n;
    }
};

/// Runs a synset's gloss through the same content pipeline as pun text and
/// collects every gloss word's sections. Deduplication happens per word
/// only, so a section shared by two gloss words appears twice.
inline SectionProfile section_profile(const Synset& s, const ThesaurusIndex& index,
                                      const WordnetDb& db, const ClosedClassLexicon& lexicon) {
    SectionProfile out;
    out.synset = s.id;
    auto units = extract_units(pos_tag(tokenize(s.gloss), db, lexicon), index, db);
    auto fields = assign_fields(units, index, db);
    for (const auto& [_, sections] : fields.unit_fields)
        for (int section : sections) out.section_multiset.push_back(section);
    std::sort(out.section_multiset.begin(), out.section_multiset.end());
    return out;
}

struct SenseChoice {
    SenseEntry sense;
    bool degenerate_single_sense = false;
};

/// A-synset: the sense whose gloss contains the most words from the
/// A-Section; ties go to the more frequent sense.
inline SenseEntry select_a_synset(const std::string& target, int a_section, const WordnetDb& db,
                                  const ThesaurusIndex& index, const ClosedClassLexicon& lexicon,
                                  std::optional<WnPos> pos = std::nullopt) {
    auto senses = db.synsets_of(target, pos);
    if (senses.empty() && pos) senses = db.synsets_of(target);
    if (senses.empty()) throw Error("unmappable target: no synsets for '" + target + "'");
    const SenseEntry* best = nullptr;
    int best_hits = -1;
    for (const auto& sense : senses) {
        int hits = section_profile(db.at(sense.synset), index, db, lexicon).a_hits(a_section);
        if (hits > best_hits) {  // senses arrive frequency-ordered, so ties keep the first
            best_hits = hits;
            best = &sense;
        }
    }
    return *best;
}

/// B-synset by sense frequency: the most frequent sense, or the runner-up
/// when the most frequent one coincides with the A-synset.
inline SenseChoice select_b_synset_frequency(const std::string& target, const SynsetId& a_synset,
                                             const WordnetDb& db,
                                             std::optional<WnPos> pos = std::nullopt) {
    auto senses = db.synsets_of(target, pos);
    if (senses.empty() && pos) senses = db.synsets_of(target);
    if (senses.empty()) throw Error("unmappable target: no synsets for '" + target + "'");
    if (senses.size() == 1) return {senses[0], true};
    if (senses[0].synset == a_synset) return {senses[1], false};
    return {senses[0], false};
}

namespace interp_detail {

inline std::set<std::string> gloss_content_lemmas(const Synset& s, const ThesaurusIndex& index,
                                                  const WordnetDb& db,
                                                  const ClosedClassLexicon& lexicon) {
    std::set<std::string> out;
    for (const auto& u : extract_units(pos_tag(tokenize(s.gloss), db, lexicon), index, db))
        out.insert(u.key);
    return out;
}

inline int overlap(const std::set<std::string>& a, const std::set<std::string>& b) {
    int n = 0;
    for (const auto& w : a)
        if (b.count(w)) ++n;
    return n;
}

/// Best sense by simplified Lesk: gloss/context lemma overlap, ties by
/// sense frequency (the incoming order).
inline std::optional<SenseEntry> lesk_best(const std::vector<SenseEntry>& senses,
                                           const std::set<std::string>& context,
                                           const ThesaurusIndex& index, const WordnetDb& db,
                                           const ClosedClassLexicon& lexicon) {
    const SenseEntry* best = nullptr;
    int best_overlap = -1;
    for (const auto& sense : senses) {
        int ov = overlap(gloss_content_lemmas(db.at(sense.synset), index, db, lexicon), context);
        if (ov > best_overlap) {
            best_overlap = ov;
            best = &sense;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

}  // namespace interp_detail

/// B-synset by simplified Lesk against the pun's content words; when the
/// Lesk winner coincides with the A-synset, falls back to the frequency
/// rule.
inline SenseChoice select_b_synset_lesk(const std::string& target,
                                        const std::set<std::string>& context,
                                        const SynsetId& a_synset, const WordnetDb& db,
                                        const ThesaurusIndex& index,
                                        const ClosedClassLexicon& lexicon,
                                        std::optional<WnPos> pos = std::nullopt) {
    auto senses = db.synsets_of(target, pos);
    if (senses.empty() && pos) senses = db.synsets_of(target);
    if (senses.empty()) throw Error("unmappable target: no synsets for '" + target + "'");
    if (senses.size() == 1) return {senses[0], true};
    auto winner = interp_detail::lesk_best(senses, context, index, db, lexicon);
    if (winner && !(winner->synset == a_synset)) return {*winner, false};
    return select_b_synset_frequency(target, a_synset, db, pos);
}

/// Second target word via the thesaurus: the edit-distance-nearest entry
/// whose sections intersect the B-group. WordNet lemmas missing from the
/// thesaurus join the scan with sections taken from their hypernyms.
inline std::optional<std::pair<std::string, int>>
recover_second_target_thesaurus(const std::string& target, const std::set<int>& b_sections,
                                const ThesaurusIndex& index, const WordnetDb& db) {
    if (b_sections.empty()) throw Error("second-target recovery: empty B-section set");
    auto best = index.nearest_in_sections(target, b_sections);

    // candidates outside the thesaurus, ordered the same way; stop as soon
    // as the in-thesaurus winner cannot be beaten
    std::vector<std::pair<int, const std::string*>> wn_candidates;
    for (const auto& [lemma, _] : db.senses_by_lemma()) {
        if (lemma == target || index.contains(lemma)) continue;
        wn_candidates.emplace_back(damerau_levenshtein(target, lemma), &lemma);
    }
    std::sort(wn_candidates.begin(), wn_candidates.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first < b.first : *a.second < *b.second;
              });
    for (const auto& [d, lemma] : wn_candidates) {
        if (best && (d > best->second || (d == best->second && !(*lemma < best->first)))) break;
        std::set<int> sections;
        for (WnPos pos : {WnPos::noun, WnPos::verb, WnPos::adj, WnPos::adv}) {
            sections = semvec_detail::hypernym_fallback(*lemma, to_pos_tag(pos), index, db);
            if (!sections.empty()) break;
        }
        bool hit = false;
        for (int s : sections)
            if (b_sections.count(s)) { hit = true; break; }
        if (hit) {
            best = {*lemma, d};
            break;
        }
    }
    return best;
}

/// Tokenized, tagged and lemmatized plain-text corpus indexed for context
/// lookups. Immutable once built.
class ContextCorpus {
public:
    static ContextCorpus build(std::string_view text, const WordnetDb& db,
                               const ClosedClassLexicon& lexicon) {
        ContextCorpus c;
        std::string sentence;
        auto flush = [&]() {
            if (trim(sentence).empty()) { sentence.clear(); return; }
            auto tokens = pos_tag(tokenize(sentence), db, lexicon);
            std::vector<Token> words;
            for (auto& t : tokens) {
                if (t.tag == PosTag::punctuation) continue;
                t.lemma = textprep_detail::lemmatize(t.surface, t.tag, db);
                words.push_back(std::move(t));
            }
            if (!words.empty()) c.sentences_.push_back(std::move(words));
            sentence.clear();
        };
        for (char ch : text) {
            sentence.push_back(ch);
            if (ch == '.' || ch == '!' || ch == '?') flush();
        }
        flush();
        for (size_t s = 0; s < c.sentences_.size(); ++s)
            for (size_t i = 0; i < c.sentences_[s].size(); ++i)
                c.occurrences_[c.sentences_[s][i].lemma].emplace_back(s, i);
        return c;
    }

    static ContextCorpus load(const std::string& path, const WordnetDb& db,
                              const ClosedClassLexicon& lexicon) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open corpus: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return build(ss.str(), db, lexicon);
    }

    bool empty() const { return occurrences_.empty(); }
    const std::map<std::string, std::vector<std::pair<size_t, size_t>>>& occurrences() const {
        return occurrences_;
    }
    const std::vector<std::vector<Token>>& sentences() const { return sentences_; }

private:
    std::vector<std::vector<Token>> sentences_;
    std::map<std::string, std::vector<std::pair<size_t, size_t>>> occurrences_;
};

namespace interp_detail {

/// Context window bounds relative to a word position, by part of speech.
inline std::pair<int, int> window_of(PosTag tag) {
    switch (tag) {
        case PosTag::verb: return {0, 3};
        case PosTag::adjective: return {0, 2};
        default: return {-2, 2};
    }
}

inline void collect_window(const std::vector<Token>& words, size_t center,
                           std::pair<int, int> window, std::set<std::string>& into) {
    int lo = static_cast<int>(center) + window.first;
    int hi = static_cast<int>(center) + window.second;
    for (int i = std::max(0, lo); i <= hi && i < static_cast<int>(words.size()); ++i)
        if (i != static_cast<int>(center)) into.insert(words[static_cast<size_t>(i)].lemma);
}

}  // namespace interp_detail

/// Second target word from a context corpus: spelling neighbours of the
/// target (edit distance 1..2) that occur somewhere in the corpus with at
/// least one context lemma shared with the pun's window around the target.
/// Ranked by match count, then distance, then corpus frequency.
inline std::optional<std::string>
recover_second_target_corpus(const std::string& target, const std::vector<Token>& pun_tokens,
                             const std::vector<int>& target_positions,
                             const ContextCorpus& corpus) {
    using namespace interp_detail;
    if (corpus.empty()) throw Error("second-target recovery: empty corpus");

    std::vector<Token> pun_words;
    PosTag target_tag = PosTag::noun;
    for (const auto& t : pun_tokens) {
        if (t.tag == PosTag::punctuation) continue;
        pun_words.push_back(t);
    }
    std::set<std::string> pun_context;
    for (int p : target_positions) {
        size_t idx = static_cast<size_t>(p - 1);
        if (idx >= pun_words.size()) continue;
        target_tag = pun_words[idx].tag;
        collect_window(pun_words, idx, window_of(pun_words[idx].tag), pun_context);
    }
    pun_context.erase(target);

    struct Ranked {
        int matches;
        int distance;
        int frequency;
        std::string lemma;
    };
    std::vector<Ranked> ranked;
    for (const auto& [lemma, occurrences] : corpus.occurrences()) {
        int d = damerau_levenshtein(target, lemma);
        if (d < 1 || d > 2) continue;
        int best_matches = 0;
        for (const auto& [s, i] : occurrences) {
            const auto& words = corpus.sentences()[s];
            std::set<std::string> ctx;
            collect_window(words, i, window_of(words[i].tag), ctx);
            int m = overlap(ctx, pun_context);
            best_matches = std::max(best_matches, m);
        }
        if (best_matches >= 1)
            ranked.push_back({best_matches, d, static_cast<int>(occurrences.size()), lemma});
    }
    if (ranked.empty()) return std::nullopt;
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.matches != b.matches) return a.matches > b.matches;
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.lemma < b.lemma;
    });
    (void)target_tag;
    return ranked.front().lemma;
}

enum class InterpretRun { run1 = 1, run2 = 2 };

struct Interpretation {
    std::string target;
    std::optional<std::string> second_target;
    std::optional<std::string> sense_a_key, sense_b_key;
    std::string run;  // frequency | lesk | thesaurus_dl | corpus_context
    bool degenerate_single_sense = false;
    std::optional<std::string> failure;
    LocateResult location;
};

/// Shared resource bundle for the interpretation pipeline.
struct Resources {
    const ThesaurusIndex* thesaurus = nullptr;
    const WordnetDb* wordnet = nullptr;
    const ClosedClassLexicon* lexicon = nullptr;
    const ContextCorpus* corpus = nullptr;  // heterographic run 2 only
};

inline Interpretation interpret(const std::string& text, PunType type, InterpretRun run,
                                const Resources& res) {
    Interpretation out;
    out.run = type == PunType::homographic
                  ? (run == InterpretRun::run1 ? "frequency" : "lesk")
                  : (run == InterpretRun::run1 ? "thesaurus_dl" : "corpus_context");
    out.location = locate(text, type, *res.thesaurus, *res.wordnet, *res.lexicon);
    if (out.location.failure) {
        out.failure = out.location.failure;
        return out;
    }
    out.target = *out.location.target;
    const ContentUnit* target_unit = locator_detail::unit_of(out.location.units, out.target);
    std::optional<WnPos> target_pos =
        target_unit ? wn_pos_from_tag(target_unit->pos) : std::nullopt;

    std::set<std::string> context;
    for (const auto& u : out.location.units) context.insert(u.key);
    context.erase(out.target);

    try {
        if (type == PunType::homographic) {
            SenseEntry a = select_a_synset(out.target, out.location.groups->a_section,
                                           *res.wordnet, *res.thesaurus, *res.lexicon, target_pos);
            out.sense_a_key = a.sense_key;
            SenseChoice b = run == InterpretRun::run1
                                ? select_b_synset_frequency(out.target, a.synset, *res.wordnet,
                                                            target_pos)
                                : select_b_synset_lesk(out.target, context, a.synset,
                                                       *res.wordnet, *res.thesaurus, *res.lexicon,
                                                       target_pos);
            out.sense_b_key = b.sense.sense_key;
            out.degenerate_single_sense = b.degenerate_single_sense;
            return out;
        }

        // heterographic: recover the second target word first
        std::set<int> b_sections(out.location.groups->b_sections.begin(),
                                 out.location.groups->b_sections.end());
        if (run == InterpretRun::run1) {
            auto hit = recover_second_target_thesaurus(out.target, b_sections, *res.thesaurus,
                                                       *res.wordnet);
            if (hit) out.second_target = hit->first;
        } else {
            if (!res.corpus) throw Error("corpus_context run requires a corpus");
            out.second_target = recover_second_target_corpus(
                out.target, out.location.tokens, out.location.target_positions, *res.corpus);
        }
        if (!out.second_target) {
            out.failure = "no second target found";
            return out;
        }

        // senses for both words via Lesk against the pun's content words
        auto a_senses = res.wordnet->synsets_of(out.target, target_pos);
        if (a_senses.empty()) a_senses = res.wordnet->synsets_of(out.target);
        if (a_senses.empty()) throw Error("unmappable target: no synsets for '" + out.target + "'");
        auto a_best =
            interp_detail::lesk_best(a_senses, context, *res.thesaurus, *res.wordnet, *res.lexicon);
        out.sense_a_key = a_best->sense_key;

        auto b_senses = res.wordnet->synsets_of(*out.second_target);
        if (b_senses.empty()) {
            out.failure = "unmappable second target: no synsets for '" + *out.second_target + "'";
            return out;
        }
        std::set<std::string> b_context = context;
        b_context.insert(out.target);
        b_context.erase(*out.second_target);
        auto b_best = interp_detail::lesk_best(b_senses, b_context, *res.thesaurus, *res.wordnet,
                                               *res.lexicon);
        out.sense_b_key = b_best->sense_key;
    } catch (const Error& e) {
        out.failure = e.what();
    }
    return out;
}

}  // namespace pundit
