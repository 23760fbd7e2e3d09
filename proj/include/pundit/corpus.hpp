#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pundit/classifier.hpp"
#include "pundit/core.hpp"
#include "pundit/locator.hpp"

namespace pundit {

struct PunDocument {
    std::string id;
    std::string text;
    std::optional<Label> label;
    std::optional<PunType> pun_type;
    std::optional<int> gold_target_pos;
    std::optional<std::pair<std::string, std::string>> gold_senses;
};

enum class DatasetFormat { jsonl, tsv };

namespace corpus_detail {

inline PunDocument document_from_json(const nlohmann::json& j, int line_no) {
    auto fail = [&](const std::string& why) -> PunDocument {
        throw Error("dataset line " + std::to_string(line_no) + ": " + why);
    };
    if (!j.is_object()) return fail("expected a JSON object");
    PunDocument d;
    if (!j.contains("id") || !j.at("id").is_string() || j.at("id").get<std::string>().empty())
        return fail("missing or empty 'id'");
    if (!j.contains("text") || !j.at("text").is_string())
        return fail("missing 'text'");
    d.id = j.at("id").get<std::string>();
    d.text = j.at("text").get<std::string>();
    if (j.contains("label")) d.label = label_from_string(j.at("label").get<std::string>());
    if (j.contains("pun_type"))
        d.pun_type = pun_type_from_string(j.at("pun_type").get<std::string>());
    if (j.contains("gold_target_pos")) {
        d.gold_target_pos = j.at("gold_target_pos").get<int>();
        if (*d.gold_target_pos < 1) return fail("gold_target_pos must be >= 1");
    }
    if (j.contains("gold_senses")) {
        auto v = j.at("gold_senses").get<std::vector<std::string>>();
        if (v.size() != 2) return fail("gold_senses must hold exactly two sense keys");
        d.gold_senses = {v[0], v[1]};
    }
    return d;
}

}  // namespace corpus_detail

inline std::vector<PunDocument> parse_dataset_jsonl(std::string_view text) {
    std::vector<PunDocument> out;
    std::set<std::string> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            throw Error("dataset line " + std::to_string(line_no) + ": " + e.what());
        }
        PunDocument d = corpus_detail::document_from_json(j, line_no);
        if (!ids.insert(d.id).second)
            throw Error("dataset line " + std::to_string(line_no) + ": duplicate id '" + d.id +
                        "'");
        out.push_back(std::move(d));
    }
    return out;
}

/// TSV columns: id, text, label, pun_type, gold_target_pos, gold_senses
/// (two sense keys joined by a comma); trailing columns may be empty.
inline std::vector<PunDocument> parse_dataset_tsv(std::string_view text) {
    std::vector<PunDocument> out;
    std::set<std::string> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line[0] == '#') continue;
        auto cols = split(line, '\t');
        auto fail = [&](const std::string& why) {
            throw Error("dataset line " + std::to_string(line_no) + ": " + why);
        };
        if (cols.size() < 2) fail("expected at least id and text columns");
        PunDocument d;
        d.id = trim(cols[0]);
        d.text = cols[1];
        if (d.id.empty()) fail("missing or empty 'id'");
        if (d.text.empty()) fail("missing 'text'");
        if (cols.size() > 2 && !trim(cols[2]).empty()) d.label = label_from_string(trim(cols[2]));
        if (cols.size() > 3 && !trim(cols[3]).empty())
            d.pun_type = pun_type_from_string(trim(cols[3]));
        if (cols.size() > 4 && !trim(cols[4]).empty()) {
            try {
                d.gold_target_pos = std::stoi(trim(cols[4]));
            } catch (const std::exception&) {
                fail("malformed gold_target_pos");
            }
            if (*d.gold_target_pos < 1) fail("gold_target_pos must be >= 1");
        }
        if (cols.size() > 5 && !trim(cols[5]).empty()) {
            auto keys = split(trim(cols[5]), ',');
            if (keys.size() != 2) fail("gold_senses must hold exactly two sense keys");
            d.gold_senses = {trim(keys[0]), trim(keys[1])};
        }
        if (!ids.insert(d.id).second) fail("duplicate id '" + d.id + "'");
        out.push_back(std::move(d));
    }
    return out;
}

inline std::vector<PunDocument> load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open dataset: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return format == DatasetFormat::jsonl ? parse_dataset_jsonl(ss.str())
                                          : parse_dataset_tsv(ss.str());
}

inline DatasetFormat dataset_format_for(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0)
        return DatasetFormat::tsv;
    return DatasetFormat::jsonl;
}

enum class Task { detection = 1, location = 2, interpretation = 3 };

struct Prediction {
    std::string id;
    std::optional<Label> label;                                  // task 1
    std::vector<int> target_positions;                           // task 2
    std::optional<std::pair<std::string, std::string>> senses;   // task 3
    bool abstained = false;
};

struct TaskReport {
    Task task = Task::detection;
    int total = 0;     // gold items carrying the task's annotation
    int answered = 0;  // non-abstentions among those
    int correct = 0;
    double coverage = 0.0, precision = 0.0, recall = 0.0, accuracy = 0.0, f1 = 0.0;

    nlohmann::json to_json() const {
        return nlohmann::json{{"task", static_cast<int>(task)}, {"total", total},
                              {"answered", answered},           {"correct", correct},
                              {"coverage", coverage},           {"precision", precision},
                              {"recall", recall},               {"accuracy", accuracy},
                              {"f1", f1}};
    }
};

/// Scores id-aligned predictions against gold annotations. Structured
/// failures (abstentions) count against coverage and recall but not
/// precision.
inline TaskReport score_task(const std::vector<Prediction>& predictions,
                             const std::vector<PunDocument>& gold, Task task) {
    std::map<std::string, const Prediction*> by_id;
    for (const auto& p : predictions) {
        if (!by_id.emplace(p.id, &p).second)
            throw Error("score: duplicate prediction id '" + p.id + "'");
    }
    std::set<std::string> gold_ids;
    std::string missing;
    for (const auto& g : gold) {
        gold_ids.insert(g.id);
        if (!by_id.count(g.id)) missing += (missing.empty() ? "" : ", ") + g.id;
    }
    if (!missing.empty()) throw Error("score: no prediction for gold ids: " + missing);
    std::string unknown;
    for (const auto& p : predictions)
        if (!gold_ids.count(p.id)) unknown += (unknown.empty() ? "" : ", ") + p.id;
    if (!unknown.empty()) throw Error("score: predictions for unknown ids: " + unknown);

    TaskReport r;
    r.task = task;
    int tp = 0, fp = 0, fn = 0, tn = 0;
    for (const auto& g : gold) {
        const Prediction& p = *by_id.at(g.id);
        switch (task) {
            case Task::detection: {
                if (!g.label) continue;
                ++r.total;
                if (p.abstained || !p.label) continue;
                ++r.answered;
                bool gold_pun = *g.label == Label::pun;
                bool pred_pun = *p.label == Label::pun;
                if (pred_pun && gold_pun) ++tp;
                else if (pred_pun && !gold_pun) ++fp;
                else if (!pred_pun && gold_pun) ++fn;
                else ++tn;
                if (gold_pun == pred_pun) ++r.correct;
                break;
            }
            case Task::location: {
                if (!g.gold_target_pos) continue;
                ++r.total;
                if (p.abstained || p.target_positions.empty()) continue;
                ++r.answered;
                for (int pos : p.target_positions)
                    if (pos == *g.gold_target_pos) { ++r.correct; break; }
                break;
            }
            case Task::interpretation: {
                if (!g.gold_senses) continue;
                ++r.total;
                if (p.abstained || !p.senses) continue;
                ++r.answered;
                bool straight = p.senses->first == g.gold_senses->first &&
                                p.senses->second == g.gold_senses->second;
                bool swapped = p.senses->first == g.gold_senses->second &&
                               p.senses->second == g.gold_senses->first;
                if (straight || swapped) ++r.correct;
                break;
            }
        }
    }
    auto ratio = [](int num, int den) { return den > 0 ? static_cast<double>(num) / den : 0.0; };
    r.coverage = ratio(r.answered, r.total);
    if (task == Task::detection) {
        // binary metrics, pun as the positive class; recall over all gold
        int gold_positive = tp + fn;
        for (const auto& g : gold) {
            if (!g.label || *g.label != Label::pun) continue;
            const Prediction& p = *by_id.at(g.id);
            if (p.abstained || !p.label) ++gold_positive;  // abstained positives count as missed
        }
        r.precision = ratio(tp, tp + fp);
        r.recall = ratio(tp, gold_positive);
        r.accuracy = ratio(r.correct, r.total);
    } else {
        r.precision = ratio(r.correct, r.answered);
        r.recall = ratio(r.correct, r.total);
        r.accuracy = ratio(r.correct, r.total);
    }
    r.f1 = r.precision + r.recall > 0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                                      : 0.0;
    return r;
}

}  // namespace pundit
