#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pundit/classifier.hpp"
#include "pundit/corpus.hpp"
#include "pundit/interpreter.hpp"
#include "pundit/locator.hpp"

namespace pundit {

struct PipelineConfig {
    const ThesaurusIndex* thesaurus = nullptr;
    const WordnetDb* wordnet = nullptr;
    const ClosedClassLexicon* lexicon = nullptr;
    const RbfSvmModel* model = nullptr;     // classification step
    const ContextCorpus* corpus = nullptr;  // heterographic run 2
    PunType default_type = PunType::homographic;
    InterpretRun run = InterpretRun::run1;
    int threads = 1;
};

namespace pipeline_detail {

inline nlohmann::json groups_json(const GroupAssignment& g) {
    return nlohmann::json{{"a_section", g.a_section}, {"s_a", g.s_a},
                          {"b_sections", g.b_sections}, {"s_b", g.s_b},
                          {"w_a", g.w_a},              {"w_b", g.w_b},
                          {"w_b_groups", g.w_b_groups}};
}

inline nlohmann::json scores_json(const std::vector<CandidateScore>& scores) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : scores) {
        nlohmann::json row{{"word", s.word},
                           {"v_alpha", s.v_alpha},
                           {"v_gamma", s.v_gamma},
                           {"v_delta", s.v_delta},
                           {"score", s.score}};
        if (s.v_beta) row["v_beta"] = *s.v_beta;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json units_json(const std::vector<ContentUnit>& units) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& u : units)
        rows.push_back(nlohmann::json{{"key", u.key},
                                      {"positions", u.positions},
                                      {"pos", to_string(u.pos)},
                                      {"collocation", u.is_collocation}});
    return rows;
}

inline nlohmann::json fields_json(const FieldAssignment& fields) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, sections] : fields.unit_fields)
        obj[key] = std::vector<int>(sections.begin(), sections.end());
    return obj;
}

}  // namespace pipeline_detail

/// One document through classify -> locate -> interpret, with every
/// intermediate artifact kept in the row for audit.
inline nlohmann::json pipeline_row(const PunDocument& doc, const PipelineConfig& cfg) {
    using namespace pipeline_detail;
    PunType type = doc.pun_type.value_or(cfg.default_type);
    Resources res{cfg.thesaurus, cfg.wordnet, cfg.lexicon, cfg.corpus};
    Interpretation interp = interpret(doc.text, type, cfg.run, res);
    const LocateResult& loc = interp.location;

    nlohmann::json row;
    row["id"] = doc.id;
    row["pun_type"] = to_string(type);
    row["semantic_vector"] = loc.vector.counts;
    row["units"] = units_json(loc.units);
    row["fields"] = fields_json(loc.fields);
    if (cfg.model) {
        auto [label, decision] = cfg.model->predict(loc.vector);
        row["prediction"] = {{"label", to_string(label)}, {"decision", decision}};
    }
    row["groups"] = loc.groups ? groups_json(*loc.groups) : nlohmann::json();
    row["scores"] = scores_json(loc.scores);
    if (loc.target) {
        row["target"] = *loc.target;
        row["target_positions"] = loc.target_positions;
    }
    nlohmann::json interp_json{{"run", interp.run}};
    if (interp.sense_a_key) interp_json["sense_a"] = *interp.sense_a_key;
    if (interp.sense_b_key) interp_json["sense_b"] = *interp.sense_b_key;
    if (interp.second_target) interp_json["second_target"] = *interp.second_target;
    if (interp.degenerate_single_sense) interp_json["degenerate_single_sense"] = true;
    if (interp.failure) interp_json["failure"] = *interp.failure;
    row["interpretation"] = std::move(interp_json);
    if (loc.failure) row["failure"] = *loc.failure;
    return row;
}

/// Processes documents concurrently; output lines always follow input order,
/// so results are byte-identical for any thread count.
inline std::vector<std::string> run_rows(size_t count, int threads,
                                         const std::function<std::string(size_t)>& row_of) {
    std::vector<std::string> lines(count);
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) lines[i] = row_of(i);
        return lines;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    lines[i] = row_of(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return lines;
}

inline std::vector<std::string> run_pipeline(const std::vector<PunDocument>& docs,
                                             const PipelineConfig& cfg) {
    return run_rows(docs.size(), cfg.threads,
                    [&](size_t i) { return pipeline_row(docs[i], cfg).dump(); });
}

}  // namespace pundit
