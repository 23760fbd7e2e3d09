#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pundit/core.hpp"

namespace pundit {

enum class WnPos { noun = 0, verb = 1, adj = 2, adv = 3 };

inline const char* to_string(WnPos p) {
    switch (p) {
        case WnPos::noun: return "n";
        case WnPos::verb: return "v";
        case WnPos::adj: return "a";
        case WnPos::adv: return "r";
    }
    return "n";
}

inline PosTag to_pos_tag(WnPos p) {
    switch (p) {
        case WnPos::noun: return PosTag::noun;
        case WnPos::verb: return PosTag::verb;
        case WnPos::adj: return PosTag::adjective;
        case WnPos::adv: return PosTag::adverb;
    }
    return PosTag::noun;
}

inline std::optional<WnPos> wn_pos_from_tag(PosTag t) {
    switch (t) {
        case PosTag::noun: return WnPos::noun;
        case PosTag::verb: return WnPos::verb;
        case PosTag::adjective: return WnPos::adj;
        case PosTag::adverb: return WnPos::adv;
        default: return std::nullopt;
    }
}

struct SynsetId {
    WnPos pos = WnPos::noun;
    int offset = 0;

    friend bool operator==(const SynsetId& a, const SynsetId& b) {
        return a.pos == b.pos && a.offset == b.offset;
    }
    friend bool operator<(const SynsetId& a, const SynsetId& b) {
        if (a.pos != b.pos) return static_cast<int>(a.pos) < static_cast<int>(b.pos);
        return a.offset < b.offset;
    }
};

struct Synset {
    SynsetId id;
    std::vector<std::string> lemmas;  // lowercase, spaces instead of underscores
    std::string gloss;                // definition only; quoted examples stripped
    std::vector<SynsetId> hypernyms;
};

struct SenseEntry {
    std::string lemma;
    SynsetId synset;
    int sense_rank = 1;  // 1-based within (lemma, pos)
    int tag_count = 0;
    std::string sense_key;
};

/// Parsed WordNet 3.x database: synsets, sense entries, hypernym edges and
/// the morphological machinery (detachment rules + exception lists).
/// Immutable after load.
class WordnetDb {
public:
    static WordnetDb load(const std::string& path) {
        if (std::filesystem::is_directory(path)) return load_dir(path);
        return load_cache(path);
    }

    static WordnetDb load_dir(const std::string& dir);
    static WordnetDb load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

    const Synset* find(const SynsetId& id) const {
        const auto& m = synsets_[static_cast<size_t>(id.pos)];
        auto it = m.find(id.offset);
        return it == m.end() ? nullptr : &it->second;
    }

    const Synset& at(const SynsetId& id) const {
        const Synset* s = find(id);
        if (!s)
            throw Error("unknown synset: " + std::string(to_string(id.pos)) + "/" +
                        std::to_string(id.offset));
        return *s;
    }

    /// Direct hypernyms only; empty for roots.
    std::vector<SynsetId> hypernyms(const SynsetId& id) const { return at(id).hypernyms; }

    bool lemma_known(const std::string& lemma, WnPos pos) const {
        auto it = senses_.find(lemma);
        if (it == senses_.end()) return false;
        for (const auto& e : it->second)
            if (e.synset.pos == pos) return true;
        return false;
    }

    /// Senses of a lemma ordered by tag_count desc, then sense_rank asc.
    std::vector<SenseEntry> synsets_of(const std::string& lemma,
                                       std::optional<WnPos> pos = std::nullopt) const {
        std::vector<SenseEntry> out;
        auto it = senses_.find(lemma);
        if (it == senses_.end()) return out;
        for (const auto& e : it->second)
            if (!pos || e.synset.pos == *pos) out.push_back(e);
        std::sort(out.begin(), out.end(), [](const SenseEntry& a, const SenseEntry& b) {
            if (a.tag_count != b.tag_count) return a.tag_count > b.tag_count;
            if (a.sense_rank != b.sense_rank) return a.sense_rank < b.sense_rank;
            return a.synset < b.synset;
        });
        return out;
    }

    int tag_count_total(const std::string& lemma, WnPos pos) const {
        int total = 0;
        auto it = senses_.find(lemma);
        if (it == senses_.end()) return 0;
        for (const auto& e : it->second)
            if (e.synset.pos == pos) total += e.tag_count;
        return total;
    }

    /// WordNet-style lemmatization: exception lists plus detachment rules,
    /// keeping only candidates attested for `pos`. The word itself comes
    /// first when it is already a lemma.
    std::vector<std::string> morphy(const std::string& word, WnPos pos) const {
        std::vector<std::string> out;
        auto push = [&](const std::string& w) {
            if (!lemma_known(w, pos)) return;
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        };
        push(word);
        const auto& exc = exceptions_[static_cast<size_t>(pos)];
        if (auto it = exc.find(word); it != exc.end())
            for (const auto& lemma : it->second) push(lemma);
        for (const auto& [suffix, replacement] : detachment_rules(pos)) {
            if (word.size() <= suffix.size()) continue;
            if (word.compare(word.size() - suffix.size(), suffix.size(), suffix) != 0) continue;
            push(word.substr(0, word.size() - suffix.size()) + replacement);
        }
        return out;
    }

    size_t synset_count() const {
        size_t n = 0;
        for (const auto& m : synsets_) n += m.size();
        return n;
    }
    size_t sense_count() const {
        size_t n = 0;
        for (const auto& [_, v] : senses_) n += v.size();
        return n;
    }
    const std::map<std::string, std::vector<SenseEntry>>& senses_by_lemma() const {
        return senses_;
    }
    const std::map<int, Synset>& synsets(WnPos pos) const {
        return synsets_[static_cast<size_t>(pos)];
    }
    const std::string& provenance() const { return provenance_; }

private:
    using RuleList = std::vector<std::pair<std::string, std::string>>;

    static const RuleList& detachment_rules(WnPos pos) {
        static const RuleList noun_rules = {{"s", ""},     {"ses", "s"},   {"xes", "x"},
                                            {"zes", "z"},  {"ches", "ch"}, {"shes", "sh"},
                                            {"men", "man"}, {"ies", "y"}};
        static const RuleList verb_rules = {{"s", ""},   {"ies", "y"}, {"es", "e"}, {"es", ""},
                                            {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
        static const RuleList adj_rules = {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};
        static const RuleList adv_rules = {};
        switch (pos) {
            case WnPos::noun: return noun_rules;
            case WnPos::verb: return verb_rules;
            case WnPos::adj: return adj_rules;
            case WnPos::adv: return adv_rules;
        }
        return noun_rules;
    }

    void check_acyclic() const;

    std::array<std::map<int, Synset>, 4> synsets_;  // keyed by offset, satellites under adj
    std::map<std::string, std::vector<SenseEntry>> senses_;
    std::array<std::map<std::string, std::vector<std::string>>, 4> exceptions_;
    std::string provenance_;
};

namespace wndb_detail {

inline bool is_header_line(const std::string& line) {
    return line.empty() || line[0] == ' ';
}

inline std::optional<WnPos> pos_from_char(char c) {
    switch (c) {
        case 'n': return WnPos::noun;
        case 'v': return WnPos::verb;
        case 'a': case 's': return WnPos::adj;
        case 'r': return WnPos::adv;
        default: return std::nullopt;
    }
}

inline std::string normalize_lemma(std::string w) {
    for (char& c : w)
        if (c == '_') c = ' ';
    // adjective position markers: "able(p)" and friends
    if (auto p = w.find('('); p != std::string::npos && w.back() == ')') w.erase(p);
    return to_lower(w);
}

/// Keeps the definition parts of a gloss, dropping quoted example sentences.
inline std::string strip_examples(const std::string& gloss) {
    std::string out;
    for (const auto& part : split(gloss, ';')) {
        std::string t = trim(part);
        if (t.empty() || t.front() == '"') continue;
        if (!out.empty()) out += "; ";
        out += t;
    }
    return out;
}

struct DataLine {
    Synset synset;
};

inline DataLine parse_data_line(const std::string& line, WnPos file_pos,
                                const std::string& file, int line_no) {
    auto fail = [&](const std::string& why) -> DataLine {
        throw Error(file + ":" + std::to_string(line_no) + ": " + why);
    };
    size_t bar = line.find('|');
    std::string head = bar == std::string::npos ? line : line.substr(0, bar);
    auto tok = split_ws(head);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= tok.size()) throw Error(file + ":" + std::to_string(line_no) + ": truncated line");
        return tok[i++];
    };
    DataLine out;
    try {
        out.synset.id.offset = std::stoi(next());
        next();  // lex_filenum
        auto pos = pos_from_char(next()[0]);
        if (!pos || *pos != file_pos) return fail("synset type does not match database file");
        out.synset.id.pos = file_pos;
        int w_cnt = std::stoi(next(), nullptr, 16);
        if (w_cnt < 1) return fail("synset without words");
        for (int w = 0; w < w_cnt; ++w) {
            out.synset.lemmas.push_back(normalize_lemma(next()));
            next();  // lex_id
        }
        int p_cnt = std::stoi(next());
        for (int p = 0; p < p_cnt; ++p) {
            const std::string& symbol = next();
            int target_offset = std::stoi(next());
            auto target_pos = pos_from_char(next()[0]);
            next();  // source/target field
            if (!target_pos) return fail("pointer with unknown part of speech");
            if (symbol == "@" || symbol == "@i")
                out.synset.hypernyms.push_back({*target_pos, target_offset});
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        return fail("malformed data line");
    }
    if (bar == std::string::npos) return fail("missing gloss");
    out.synset.gloss = strip_examples(trim(line.substr(bar + 1)));
    if (out.synset.gloss.empty()) return fail("empty gloss");
    return out;
}

}  // namespace wndb_detail

inline WordnetDb WordnetDb::load_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    static const std::array<std::pair<WnPos, const char*>, 4> kParts = {{
        {WnPos::noun, "noun"}, {WnPos::verb, "verb"}, {WnPos::adj, "adj"}, {WnPos::adv, "adv"}}};

    std::vector<std::string> missing;
    auto need = [&](const std::string& name) {
        std::string p = (fs::path(dir) / name).string();
        if (!fs::exists(p)) missing.push_back(name);
        return p;
    };
    std::array<std::string, 4> data_paths, index_paths;
    for (size_t k = 0; k < 4; ++k) {
        data_paths[k] = need(std::string("data.") + kParts[k].second);
        index_paths[k] = need(std::string("index.") + kParts[k].second);
    }
    std::string sense_path = need("index.sense");
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw Error("wordnet load: missing database files in " + dir + ": " + list);
    }

    WordnetDb db;

    // data.*: synsets, glosses, hypernym pointers
    for (size_t k = 0; k < 4; ++k) {
        std::ifstream f(data_paths[k]);
        if (!f) throw Error("cannot open " + data_paths[k]);
        std::string line;
        int line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            if (wndb_detail::is_header_line(line)) continue;
            auto parsed = wndb_detail::parse_data_line(line, kParts[k].first,
                                                       data_paths[k], line_no);
            db.synsets_[k][parsed.synset.id.offset] = std::move(parsed.synset);
        }
        if (db.synsets_[k].empty())
            throw Error("wordnet load: " + data_paths[k] + " contains no synsets");
    }

    // index.*: lemma -> synsets in sense-rank order
    std::map<std::string, std::array<std::vector<int>, 4>> ranked;
    for (size_t k = 0; k < 4; ++k) {
        std::ifstream f(index_paths[k]);
        if (!f) throw Error("cannot open " + index_paths[k]);
        std::string line;
        int line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            if (wndb_detail::is_header_line(line)) continue;
            auto tok = split_ws(line);
            auto fail = [&](const std::string& why) {
                throw Error(index_paths[k] + ":" + std::to_string(line_no) + ": " + why);
            };
            if (tok.size() < 7) fail("truncated index line");
            try {
                std::string lemma = wndb_detail::normalize_lemma(tok[0]);
                int synset_cnt = std::stoi(tok[2]);
                int p_cnt = std::stoi(tok[3]);
                size_t base = 4 + static_cast<size_t>(p_cnt) + 2;  // skip ptr symbols + 2 counts
                if (tok.size() < base + static_cast<size_t>(synset_cnt)) fail("truncated index line");
                for (int s = 0; s < synset_cnt; ++s) {
                    int off = std::stoi(tok[base + static_cast<size_t>(s)]);
                    if (!db.synsets_[k].count(off))
                        fail("index references unknown synset " + std::to_string(off));
                    ranked[lemma][k].push_back(off);
                }
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                fail("malformed index line");
            }
        }
    }

    // index.sense: sense keys, ranks and tag counts
    {
        std::ifstream f(sense_path);
        if (!f) throw Error("cannot open " + sense_path);
        std::string line, sense_blob;
        int line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            if (wndb_detail::is_header_line(line)) continue;
            sense_blob += line;
            sense_blob += '\n';
            auto tok = split_ws(line);
            auto fail = [&](const std::string& why) {
                throw Error(sense_path + ":" + std::to_string(line_no) + ": " + why);
            };
            if (tok.size() < 4) fail("truncated sense line");
            size_t pct = tok[0].find('%');
            if (pct == std::string::npos || pct + 1 >= tok[0].size()) fail("malformed sense key");
            SenseEntry e;
            e.sense_key = tok[0];
            e.lemma = wndb_detail::normalize_lemma(tok[0].substr(0, pct));
            char ss = tok[0][pct + 1];
            WnPos pos;
            switch (ss) {
                case '1': pos = WnPos::noun; break;
                case '2': pos = WnPos::verb; break;
                case '3': case '5': pos = WnPos::adj; break;
                case '4': pos = WnPos::adv; break;
                default: fail("unknown synset type in sense key"); return db;
            }
            try {
                e.synset = {pos, std::stoi(tok[1])};
                e.sense_rank = std::stoi(tok[2]);
                e.tag_count = std::stoi(tok[3]);
            } catch (const std::exception&) {
                fail("malformed sense line");
            }
            if (!db.synsets_[static_cast<size_t>(pos)].count(e.synset.offset))
                fail("sense references unknown synset " + tok[1]);
            db.senses_[e.lemma].push_back(std::move(e));
        }
        db.provenance_ = "wndb:" + fnv1a64_hex(sense_blob);
    }

    // exception lists are optional
    static const std::array<const char*, 4> kExc = {"noun.exc", "verb.exc", "adj.exc", "adv.exc"};
    for (size_t k = 0; k < 4; ++k) {
        std::ifstream f((fs::path(dir) / kExc[k]).string());
        if (!f) continue;
        std::string line;
        while (std::getline(f, line)) {
            auto tok = split_ws(line);
            if (tok.size() < 2) continue;
            auto& slot = db.exceptions_[k][wndb_detail::normalize_lemma(tok[0])];
            for (size_t t = 1; t < tok.size(); ++t)
                slot.push_back(wndb_detail::normalize_lemma(tok[t]));
        }
    }

    // cross checks: ranked index entries must be covered by index.sense, and
    // hypernym pointers must resolve
    for (const auto& [lemma, per_pos] : ranked) {
        for (size_t k = 0; k < 4; ++k) {
            for (int off : per_pos[k]) {
                bool found = false;
                auto it = db.senses_.find(lemma);
                if (it != db.senses_.end())
                    for (const auto& e : it->second)
                        if (e.synset.offset == off && e.synset.pos == kParts[k].first) found = true;
                if (!found)
                    throw Error("wordnet load: lemma '" + lemma + "' (" + kParts[k].second +
                                ") has no index.sense entry for synset " + std::to_string(off));
            }
        }
    }
    for (const auto& m : db.synsets_)
        for (const auto& [off, syn] : m)
            for (const auto& h : syn.hypernyms)
                if (!db.find(h))
                    throw Error("wordnet load: dangling hypernym pointer from synset " +
                                std::to_string(off));

    db.check_acyclic();
    return db;
}

inline void WordnetDb::check_acyclic() const {
    // iterative three-color DFS over the noun and verb hypernym graphs
    for (WnPos pos : {WnPos::noun, WnPos::verb}) {
        const auto& m = synsets_[static_cast<size_t>(pos)];
        std::map<int, int> color;  // 0 white, 1 grey, 2 black
        for (const auto& [start, _] : m) {
            if (color[start]) continue;
            std::vector<std::pair<int, size_t>> stack{{start, 0}};
            color[start] = 1;
            while (!stack.empty()) {
                auto& [off, next_child] = stack.back();
                const auto& hs = m.at(off).hypernyms;
                if (next_child >= hs.size()) {
                    color[off] = 2;
                    stack.pop_back();
                    continue;
                }
                const SynsetId& h = hs[next_child++];
                if (h.pos != pos) continue;  // cross-pos pointers cannot cycle here
                int c = color[h.offset];
                if (c == 1)
                    throw Error("wordnet load: hypernym cycle through synset " +
                                std::to_string(h.offset));
                if (c == 0) {
                    color[h.offset] = 1;
                    stack.emplace_back(h.offset, 0);
                }
            }
        }
    }
}

inline void WordnetDb::save_cache(const std::string& path) const {
    nlohmann::json j;
    j["format_version"] = 1;
    j["kind"] = "wordnet_cache";
    j["provenance"] = provenance_;
    auto pos_name = [](size_t k) { return std::array{"n", "v", "a", "r"}[k]; };
    nlohmann::json syns = nlohmann::json::array();
    for (size_t k = 0; k < 4; ++k) {
        for (const auto& [off, s] : synsets_[k]) {
            nlohmann::json hs = nlohmann::json::array();
            for (const auto& h : s.hypernyms)
                hs.push_back({{"pos", to_string(h.pos)}, {"offset", h.offset}});
            syns.push_back({{"pos", pos_name(k)},
                            {"offset", off},
                            {"lemmas", s.lemmas},
                            {"gloss", s.gloss},
                            {"hypernyms", std::move(hs)}});
        }
    }
    j["synsets"] = std::move(syns);
    nlohmann::json senses = nlohmann::json::array();
    for (const auto& [lemma, entries] : senses_) {
        for (const auto& e : entries)
            senses.push_back({{"lemma", lemma},
                              {"pos", to_string(e.synset.pos)},
                              {"offset", e.synset.offset},
                              {"rank", e.sense_rank},
                              {"tag_count", e.tag_count},
                              {"key", e.sense_key}});
    }
    j["senses"] = std::move(senses);
    nlohmann::json exc = nlohmann::json::object();
    for (size_t k = 0; k < 4; ++k) {
        nlohmann::json per = nlohmann::json::object();
        for (const auto& [infl, lemmas] : exceptions_[k]) per[infl] = lemmas;
        exc[pos_name(k)] = std::move(per);
    }
    j["exceptions"] = std::move(exc);
    std::ofstream f(path);
    if (!f) throw Error("cannot write wordnet cache: " + path);
    f << j.dump() << "\n";
}

inline WordnetDb WordnetDb::load_cache(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open wordnet cache: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw Error("wordnet cache " + path + ": " + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != "wordnet_cache")
        throw Error("wordnet cache file: unrecognized content");
    if (j.value("format_version", 0) != 1)
        throw Error("wordnet cache file: unsupported format version");
    auto pos_of = [](const std::string& s) {
        auto p = wndb_detail::pos_from_char(s.empty() ? '?' : s[0]);
        if (!p) throw Error("wordnet cache: bad pos tag");
        return *p;
    };
    WordnetDb db;
    db.provenance_ = j.value("provenance", "");
    for (const auto& s : j.at("synsets")) {
        Synset syn;
        syn.id = {pos_of(s.at("pos")), s.at("offset").get<int>()};
        syn.lemmas = s.at("lemmas").get<std::vector<std::string>>();
        syn.gloss = s.at("gloss").get<std::string>();
        for (const auto& h : s.at("hypernyms"))
            syn.hypernyms.push_back({pos_of(h.at("pos")), h.at("offset").get<int>()});
        db.synsets_[static_cast<size_t>(syn.id.pos)][syn.id.offset] = std::move(syn);
    }
    for (const auto& e : j.at("senses")) {
        SenseEntry entry;
        entry.lemma = e.at("lemma").get<std::string>();
        entry.synset = {pos_of(e.at("pos")), e.at("offset").get<int>()};
        entry.sense_rank = e.at("rank").get<int>();
        entry.tag_count = e.at("tag_count").get<int>();
        entry.sense_key = e.at("key").get<std::string>();
        db.senses_[entry.lemma].push_back(std::move(entry));
    }
    for (const auto& [pos, per] : j.at("exceptions").items()) {
        size_t k = static_cast<size_t>(pos_of(pos));
        for (const auto& [infl, lemmas] : per.items())
            db.exceptions_[k][infl] = lemmas.get<std::vector<std::string>>();
    }
    db.check_acyclic();
    return db;
}

}  // namespace pundit
