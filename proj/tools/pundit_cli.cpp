// pundit: batch front end for the pun analysis pipeline.
//
// Subcommands: ingest-thesaurus, ingest-wordnet, train, classify, locate,
// interpret, evaluate, pipeline. Every run is deterministic for a fixed
// config and seed; batch outputs keep input order regardless of --threads.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pundit/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve_resource(const std::string& path) {
    if (path.empty() || fs::exists(path)) return path;
    if (const char* root = std::getenv("PUNDIT_ROOT")) {
        fs::path alt = fs::path(root) / path;
        if (fs::exists(alt)) return alt.string();
    }
    return path;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream f(resolve_resource(path));
    if (!f) throw pundit::Error("cannot open config: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw pundit::Error("config " + path + ": " + e.what());
    }
    if (!j.is_object()) throw pundit::Error("config " + path + ": expected a JSON object");
    return j;
}

/// Config values fill any option the command line left untouched.
template <typename T>
void overlay(CLI::App* cmd, const json& cfg, const std::string& key, T& value) {
    const CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt && opt->count() > 0) return;
    if (!cfg.contains(key)) return;
    try {
        value = cfg.at(key).get<T>();
    } catch (const std::exception&) {
        throw pundit::Error("config key '" + key + "' has the wrong type");
    }
}

void require(const std::string& value, const std::string& flag) {
    if (value.empty()) throw pundit::Error("missing required option " + flag);
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw pundit::Error("cannot write output: " + path);
    for (const auto& line : lines) f << line << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw pundit::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct ResourcePaths {
    std::string thesaurus;
    std::string wordnet;
    std::string lexicon = "data/closed_class.tsv";
};

struct LoadedResources {
    pundit::ThesaurusIndex thesaurus;
    pundit::WordnetDb wordnet;
    pundit::ClosedClassLexicon lexicon;
};

void add_resource_options(CLI::App* cmd, ResourcePaths& paths) {
    cmd->add_option("--thesaurus", paths.thesaurus, "compiled thesaurus index (json)");
    cmd->add_option("--wordnet", paths.wordnet, "wordnet database directory or cache file");
    cmd->add_option("--lexicon", paths.lexicon, "closed-class lexicon tsv")
        ->capture_default_str();
}

LoadedResources load_resources(const ResourcePaths& paths) {
    require(paths.thesaurus, "--thesaurus");
    require(paths.wordnet, "--wordnet");
    LoadedResources r{pundit::ThesaurusIndex::load(resolve_resource(paths.thesaurus)),
                      pundit::WordnetDb::load(resolve_resource(paths.wordnet)),
                      pundit::ClosedClassLexicon::load(resolve_resource(paths.lexicon))};
    return r;
}

std::vector<pundit::PunDocument> load_docs(const std::string& path) {
    std::string resolved = resolve_resource(path);
    return pundit::load_dataset(resolved, pundit::dataset_format_for(resolved));
}

json locate_row(const pundit::PunDocument& doc, pundit::PunType type,
                const LoadedResources& res) {
    using namespace pundit;
    LocateResult r = locate(doc.text, type, res.thesaurus, res.wordnet, res.lexicon);
    json row;
    row["id"] = doc.id;
    row["pun_type"] = to_string(type);
    row["semantic_vector"] = r.vector.counts;
    row["groups"] = r.groups ? pipeline_detail::groups_json(*r.groups) : json();
    row["scores"] = pipeline_detail::scores_json(r.scores);
    if (r.target) {
        row["target"] = *r.target;
        row["target_positions"] = r.target_positions;
    }
    if (r.failure) row["failure"] = *r.failure;
    return row;
}

json interpret_row(const pundit::PunDocument& doc, pundit::PunType type,
                   pundit::InterpretRun run, const pundit::Resources& res) {
    using namespace pundit;
    Interpretation it = interpret(doc.text, type, run, res);
    json row;
    row["id"] = doc.id;
    row["run"] = it.run;
    if (!it.target.empty()) row["target"] = it.target;
    if (!it.location.target_positions.empty())
        row["target_positions"] = it.location.target_positions;
    if (it.second_target) row["second_target"] = *it.second_target;
    if (it.sense_a_key) row["sense_a"] = *it.sense_a_key;
    if (it.sense_b_key) row["sense_b"] = *it.sense_b_key;
    if (it.degenerate_single_sense) row["degenerate_single_sense"] = true;
    if (it.failure) row["failure"] = *it.failure;
    return row;
}

// ---- subcommand handlers ----

int cmd_ingest_thesaurus(const std::string& source, const std::string& section_map,
                         const std::string& out) {
    require(source, "--source");
    require(section_map, "--section-map");
    require(out, "--out");
    auto idx = pundit::ingest_thesaurus_file(resolve_resource(source),
                                             resolve_resource(section_map));
    idx.save(out);
    std::cerr << "ingested " << idx.size() << " entries into " << out << "\n";
    return 0;
}

int cmd_ingest_wordnet(const std::string& dir, const std::string& out) {
    require(dir, "--dir");
    require(out, "--out");
    auto db = pundit::WordnetDb::load_dir(resolve_resource(dir));
    db.save_cache(out);
    std::cerr << "ingested " << db.synset_count() << " synsets, " << db.sense_count()
              << " senses into " << out << "\n";
    return 0;
}

struct TrainOpts {
    std::string data, out;
    double c = 1.0;
    double gamma = 0.0;  // 0 = auto
    double tolerance = 1e-3;
    int max_passes = 200;
    unsigned seed = 42;
    bool grid_search = false;
    double holdout = 0.0;
};

int cmd_train(const TrainOpts& o) {
    using namespace pundit;
    require(o.data, "--data");
    require(o.out, "--out");
    TrainingSet all = TrainingSet::load_tsv(resolve_resource(o.data));
    SvmParams params;
    params.c = o.c;
    if (o.gamma > 0) params.gamma = o.gamma;
    params.tolerance = o.tolerance;
    params.max_passes = o.max_passes;
    params.seed = o.seed;

    TrainingSet train_set = all, held;
    if (o.holdout > 0) {
        if (o.holdout >= 1.0) throw Error("--holdout must be in (0,1)");
        // stratified, seeded split
        std::mt19937 rng(o.seed);
        std::array<std::vector<size_t>, 2> by_class;
        for (size_t i = 0; i < all.rows.size(); ++i) {
            if (!all.rows[i].label) throw Error("train: row '" + all.rows[i].id + "' has no label");
            by_class[*all.rows[i].label == Label::pun ? 1 : 0].push_back(i);
        }
        train_set.rows.clear();
        std::vector<char> is_held(all.rows.size(), 0);
        for (auto& members : by_class) {
            std::vector<int> idx(members.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
            svm_detail::shuffle_indices(idx, rng);
            size_t n_hold = static_cast<size_t>(o.holdout * static_cast<double>(members.size()));
            for (size_t i = 0; i < n_hold; ++i)
                is_held[members[static_cast<size_t>(idx[i])]] = 1;
        }
        for (size_t i = 0; i < all.rows.size(); ++i)
            (is_held[i] ? held : train_set).rows.push_back(all.rows[i]);
    }

    json summary;
    RbfSvmModel model;
    if (o.grid_search) {
        auto result = train_grid_search(train_set, params);
        model = std::move(result.model);
        summary["grid_search"] = {{"best_c", result.best_c},
                                  {"best_gamma", result.best_gamma},
                                  {"cv_macro_f1", result.cv_macro_f1}};
    } else {
        model = train(train_set, params);
    }
    model.save(o.out);
    summary["model"] = o.out;
    summary["support_vectors"] = model.support_vectors.size();
    summary["gamma"] = model.gamma;
    summary["c"] = model.c;
    summary["converged"] = model.converged;
    summary["sweeps"] = model.sweeps;
    summary["rows_trained"] = train_set.rows.size();
    if (!held.rows.empty()) {
        Metrics m = evaluate(model, held);
        summary["holdout"] = {{"rows", held.rows.size()},
                              {"accuracy", m.accuracy},
                              {"macro_f1", m.macro_f1},
                              {"pun_f1", m.pun.f1},
                              {"not_pun_f1", m.not_pun.f1}};
    }
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_classify(const std::string& model_path, const std::string& in, const std::string& out,
                 const std::string& vectors_out, const ResourcePaths& paths, int threads) {
    using namespace pundit;
    require(model_path, "--model");
    require(in, "--in");
    require(out, "--out");
    RbfSvmModel model = RbfSvmModel::load(resolve_resource(model_path));

    std::vector<std::string> ids;
    std::vector<SemanticVector> vectors;
    std::vector<std::optional<Label>> labels;
    std::string resolved = resolve_resource(in);
    if (dataset_format_for(resolved) == DatasetFormat::tsv) {
        TrainingSet set = TrainingSet::load_tsv(resolved);
        for (auto& r : set.rows) {
            ids.push_back(r.id);
            vectors.push_back(r.vector);
            labels.push_back(r.label);
        }
    } else {
        LoadedResources res = load_resources(paths);
        for (const auto& doc : load_docs(resolved)) {
            auto units = extract_units(pos_tag(tokenize(doc.text), res.wordnet, res.lexicon),
                                       res.thesaurus, res.wordnet);
            ids.push_back(doc.id);
            vectors.push_back(vectorize(assign_fields(units, res.thesaurus, res.wordnet)));
            labels.push_back(doc.label);
        }
    }
    auto lines = run_rows(ids.size(), threads, [&](size_t i) {
        auto [label, decision] = model.predict(vectors[i]);
        return json{{"id", ids[i]}, {"label", to_string(label)}, {"decision", decision}}.dump();
    });
    write_lines(out, lines);
    if (!vectors_out.empty()) {
        std::vector<std::string> rows;
        for (size_t i = 0; i < ids.size(); ++i) {
            std::string row = ids[i];
            if (labels[i]) row += std::string("\t") + to_string(*labels[i]);
            row += "\t" + vectors[i].to_csv();
            rows.push_back(std::move(row));
        }
        write_lines(vectors_out, rows);
    }
    std::cerr << "classified " << lines.size() << " rows into " << out << "\n";
    return 0;
}

int cmd_locate(const std::string& model_type, const std::string& in, const std::string& out,
               const ResourcePaths& paths, int threads) {
    using namespace pundit;
    require(in, "--in");
    require(out, "--out");
    PunType fallback = pun_type_from_string(model_type);
    LoadedResources res = load_resources(paths);
    auto docs = load_docs(in);
    auto lines = run_rows(docs.size(), threads, [&](size_t i) {
        return locate_row(docs[i], docs[i].pun_type.value_or(fallback), res).dump();
    });
    write_lines(out, lines);
    std::cerr << "located " << lines.size() << " rows into " << out << "\n";
    return 0;
}

int cmd_interpret(const std::string& mode, int run, const std::string& corpus_path,
                  const std::string& in, const std::string& out, const ResourcePaths& paths,
                  int threads) {
    using namespace pundit;
    require(in, "--in");
    require(out, "--out");
    if (run != 1 && run != 2) throw Error("--run must be 1 or 2");
    PunType fallback = pun_type_from_string(mode);
    LoadedResources res = load_resources(paths);
    std::optional<ContextCorpus> corpus;
    if (!corpus_path.empty())
        corpus = ContextCorpus::load(resolve_resource(corpus_path), res.wordnet, res.lexicon);
    Resources bundle{&res.thesaurus, &res.wordnet, &res.lexicon,
                     corpus ? &*corpus : nullptr};
    auto docs = load_docs(in);
    auto the_run = run == 1 ? InterpretRun::run1 : InterpretRun::run2;
    auto lines = run_rows(docs.size(), threads, [&](size_t i) {
        return interpret_row(docs[i], docs[i].pun_type.value_or(fallback), the_run, bundle).dump();
    });
    write_lines(out, lines);
    std::cerr << "interpreted " << lines.size() << " rows into " << out << "\n";
    return 0;
}

pundit::Prediction prediction_from_row(const json& row, pundit::Task task) {
    using namespace pundit;
    Prediction p;
    p.id = row.value("id", "");
    if (p.id.empty()) throw Error("prediction row without id: " + row.dump());
    bool failed = row.contains("failure");
    const json* interp = row.contains("interpretation") ? &row.at("interpretation") : nullptr;
    if (interp && interp->contains("failure")) failed = true;
    switch (task) {
        case Task::detection: {
            const json* src = row.contains("prediction") ? &row.at("prediction") : &row;
            if (src->contains("label"))
                p.label = label_from_string(src->at("label").get<std::string>());
            p.abstained = !p.label.has_value();
            break;
        }
        case Task::location: {
            if (!failed && row.contains("target_positions"))
                p.target_positions = row.at("target_positions").get<std::vector<int>>();
            p.abstained = p.target_positions.empty();
            break;
        }
        case Task::interpretation: {
            const json* src = interp ? interp : &row;
            if (!failed && src->contains("sense_a") && src->contains("sense_b"))
                p.senses = {src->at("sense_a").get<std::string>(),
                            src->at("sense_b").get<std::string>()};
            p.abstained = !p.senses.has_value();
            break;
        }
    }
    return p;
}

int cmd_evaluate(int task_no, const std::string& pred_path, const std::string& gold_path,
                 const std::string& out) {
    using namespace pundit;
    require(pred_path, "--pred");
    require(gold_path, "--gold");
    if (task_no < 1 || task_no > 3) throw Error("--task must be 1, 2 or 3");
    Task task = static_cast<Task>(task_no);
    auto gold = load_docs(gold_path);
    std::vector<Prediction> predictions;
    std::istringstream in{slurp(resolve_resource(pred_path))};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (pundit::trim(line).empty()) continue;
        json row;
        try {
            row = json::parse(line);
        } catch (const std::exception& e) {
            throw Error("prediction line " + std::to_string(line_no) + ": " + e.what());
        }
        predictions.push_back(prediction_from_row(row, task));
    }
    TaskReport r = score_task(predictions, gold, task);
    std::cerr << "task " << task_no << ": total=" << r.total << " answered=" << r.answered
              << " correct=" << r.correct << "\n"
              << "coverage=" << r.coverage << " precision=" << r.precision
              << " recall=" << r.recall << " accuracy=" << r.accuracy << " f1=" << r.f1 << "\n";
    std::string dumped = r.to_json().dump();
    std::cout << dumped << "\n";
    if (!out.empty()) write_lines(out, {dumped});
    return 0;
}

struct PipelineOpts {
    ResourcePaths paths;
    std::string model, corpus, in, out;
    std::string default_type = "homographic";
    int run = 1;
    int threads = 1;
};

int cmd_pipeline(const PipelineOpts& o) {
    using namespace pundit;
    require(o.model, "--model");
    require(o.in, "--in");
    require(o.out, "--out");
    if (o.run != 1 && o.run != 2) throw Error("--run must be 1 or 2");
    LoadedResources res = load_resources(o.paths);
    RbfSvmModel model = RbfSvmModel::load(resolve_resource(o.model));
    std::optional<ContextCorpus> corpus;
    if (!o.corpus.empty())
        corpus = ContextCorpus::load(resolve_resource(o.corpus), res.wordnet, res.lexicon);

    PipelineConfig cfg;
    cfg.thesaurus = &res.thesaurus;
    cfg.wordnet = &res.wordnet;
    cfg.lexicon = &res.lexicon;
    cfg.model = &model;
    cfg.corpus = corpus ? &*corpus : nullptr;
    cfg.default_type = pun_type_from_string(o.default_type);
    cfg.run = o.run == 1 ? InterpretRun::run1 : InterpretRun::run2;
    cfg.threads = o.threads;

    auto docs = load_docs(o.in);
    write_lines(o.out, run_pipeline(docs, cfg));
    std::cerr << "pipeline wrote " << docs.size() << " rows into " << o.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pun analysis toolkit"};
    app.require_subcommand(1);

    std::string config_path;

    // ingest-thesaurus
    auto* ingest_t = app.add_subcommand("ingest-thesaurus",
                                        "compile a thesaurus source into a section index");
    std::string it_source, it_map, it_out;
    ingest_t->add_option("--source", it_source, "thesaurus source text");
    ingest_t->add_option("--section-map", it_map, "head-range to section-id tsv");
    ingest_t->add_option("--out", it_out, "output index json");
    ingest_t->add_option("--config", config_path, "json config file");

    // ingest-wordnet
    auto* ingest_w = app.add_subcommand("ingest-wordnet",
                                        "parse wordnet database files into a cache");
    std::string iw_dir, iw_out;
    ingest_w->add_option("--dir", iw_dir, "wordnet database directory");
    ingest_w->add_option("--out", iw_out, "output cache json");
    ingest_w->add_option("--config", config_path, "json config file");

    // train
    auto* train_cmd = app.add_subcommand("train", "train the pun classifier");
    TrainOpts train_opts;
    train_cmd->add_option("--data", train_opts.data, "labeled vector tsv");
    train_cmd->add_option("--out", train_opts.out, "output model json");
    train_cmd->add_option("--c", train_opts.c, "soft-margin penalty")->capture_default_str();
    train_cmd->add_option("--gamma", train_opts.gamma, "rbf width (0 = auto)")
        ->capture_default_str();
    train_cmd->add_option("--tolerance", train_opts.tolerance, "kkt tolerance")
        ->capture_default_str();
    train_cmd->add_option("--max-passes", train_opts.max_passes, "sweep bound")
        ->capture_default_str();
    train_cmd->add_option("--seed", train_opts.seed, "rng seed")->capture_default_str();
    train_cmd->add_flag("--grid-search", train_opts.grid_search, "5-fold cv grid search");
    train_cmd->add_option("--holdout", train_opts.holdout,
                          "stratified holdout fraction for reporting")
        ->capture_default_str();
    train_cmd->add_option("--config", config_path, "json config file");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "label documents or vectors");
    std::string cl_model, cl_in, cl_out, cl_vectors_out;
    ResourcePaths cl_paths;
    int cl_threads = 1;
    classify_cmd->add_option("--model", cl_model, "model json");
    classify_cmd->add_option("--in", cl_in, "vector tsv or document jsonl");
    classify_cmd->add_option("--out", cl_out, "output jsonl");
    classify_cmd->add_option("--vectors-out", cl_vectors_out,
                             "also write the semantic vectors as tsv");
    add_resource_options(classify_cmd, cl_paths);
    classify_cmd->add_option("--threads", cl_threads, "worker threads")->capture_default_str();
    classify_cmd->add_option("--config", config_path, "json config file");

    // locate
    auto* locate_cmd = app.add_subcommand("locate", "find the target word");
    std::string lo_type = "homographic", lo_in, lo_out;
    ResourcePaths lo_paths;
    int lo_threads = 1;
    locate_cmd->add_option("--model-type", lo_type, "homo or hetero")->capture_default_str();
    locate_cmd->add_option("--in", lo_in, "document jsonl or tsv");
    locate_cmd->add_option("--out", lo_out, "output jsonl");
    add_resource_options(locate_cmd, lo_paths);
    locate_cmd->add_option("--threads", lo_threads, "worker threads")->capture_default_str();
    locate_cmd->add_option("--config", config_path, "json config file");

    // interpret
    auto* interp_cmd = app.add_subcommand("interpret", "select senses for the target word");
    std::string in_mode = "homographic", in_corpus, in_in, in_out;
    int in_run = 1, in_threads = 1;
    ResourcePaths in_paths;
    interp_cmd->add_option("--mode", in_mode, "homo or hetero")->capture_default_str();
    interp_cmd->add_option("--run", in_run, "1 or 2")->capture_default_str();
    interp_cmd->add_option("--corpus", in_corpus, "context corpus (hetero run 2)");
    interp_cmd->add_option("--in", in_in, "document jsonl or tsv");
    interp_cmd->add_option("--out", in_out, "output jsonl");
    add_resource_options(interp_cmd, in_paths);
    interp_cmd->add_option("--threads", in_threads, "worker threads")->capture_default_str();
    interp_cmd->add_option("--config", config_path, "json config file");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "score predictions against gold");
    int ev_task = 1;
    std::string ev_pred, ev_gold, ev_out;
    eval_cmd->add_option("--task", ev_task, "1 detection, 2 location, 3 interpretation")
        ->capture_default_str();
    eval_cmd->add_option("--pred", ev_pred, "prediction jsonl");
    eval_cmd->add_option("--gold", ev_gold, "gold document jsonl or tsv");
    eval_cmd->add_option("--out", ev_out, "optional report json");
    eval_cmd->add_option("--config", config_path, "json config file");

    // pipeline
    auto* pipe_cmd = app.add_subcommand("pipeline",
                                        "classify, locate and interpret a dataset");
    PipelineOpts pipe_opts;
    pipe_cmd->add_option("--model", pipe_opts.model, "model json");
    pipe_cmd->add_option("--corpus", pipe_opts.corpus, "context corpus (hetero run 2)");
    pipe_cmd->add_option("--in", pipe_opts.in, "document jsonl or tsv");
    pipe_cmd->add_option("--out", pipe_opts.out, "output jsonl");
    pipe_cmd->add_option("--default-type", pipe_opts.default_type,
                         "pun type for documents without one")
        ->capture_default_str();
    pipe_cmd->add_option("--run", pipe_opts.run, "interpretation run (1 or 2)")
        ->capture_default_str();
    add_resource_options(pipe_cmd, pipe_opts.paths);
    pipe_cmd->add_option("--threads", pipe_opts.threads, "worker threads")
        ->capture_default_str();
    pipe_cmd->add_option("--config", config_path, "json config file");

    CLI11_PARSE(app, argc, argv);

    try {
        json cfg = load_config(config_path);
        if (ingest_t->parsed()) {
            overlay(ingest_t, cfg, "source", it_source);
            overlay(ingest_t, cfg, "section-map", it_map);
            overlay(ingest_t, cfg, "out", it_out);
            return cmd_ingest_thesaurus(it_source, it_map, it_out);
        }
        if (ingest_w->parsed()) {
            overlay(ingest_w, cfg, "dir", iw_dir);
            overlay(ingest_w, cfg, "out", iw_out);
            return cmd_ingest_wordnet(iw_dir, iw_out);
        }
        if (train_cmd->parsed()) {
            overlay(train_cmd, cfg, "data", train_opts.data);
            overlay(train_cmd, cfg, "out", train_opts.out);
            overlay(train_cmd, cfg, "c", train_opts.c);
            overlay(train_cmd, cfg, "gamma", train_opts.gamma);
            overlay(train_cmd, cfg, "tolerance", train_opts.tolerance);
            overlay(train_cmd, cfg, "max-passes", train_opts.max_passes);
            overlay(train_cmd, cfg, "seed", train_opts.seed);
            overlay(train_cmd, cfg, "holdout", train_opts.holdout);
            return cmd_train(train_opts);
        }
        if (classify_cmd->parsed()) {
            overlay(classify_cmd, cfg, "model", cl_model);
            overlay(classify_cmd, cfg, "in", cl_in);
            overlay(classify_cmd, cfg, "out", cl_out);
            overlay(classify_cmd, cfg, "vectors-out", cl_vectors_out);
            overlay(classify_cmd, cfg, "thesaurus", cl_paths.thesaurus);
            overlay(classify_cmd, cfg, "wordnet", cl_paths.wordnet);
            overlay(classify_cmd, cfg, "lexicon", cl_paths.lexicon);
            overlay(classify_cmd, cfg, "threads", cl_threads);
            return cmd_classify(cl_model, cl_in, cl_out, cl_vectors_out, cl_paths, cl_threads);
        }
        if (locate_cmd->parsed()) {
            overlay(locate_cmd, cfg, "model-type", lo_type);
            overlay(locate_cmd, cfg, "in", lo_in);
            overlay(locate_cmd, cfg, "out", lo_out);
            overlay(locate_cmd, cfg, "thesaurus", lo_paths.thesaurus);
            overlay(locate_cmd, cfg, "wordnet", lo_paths.wordnet);
            overlay(locate_cmd, cfg, "lexicon", lo_paths.lexicon);
            overlay(locate_cmd, cfg, "threads", lo_threads);
            return cmd_locate(lo_type, lo_in, lo_out, lo_paths, lo_threads);
        }
        if (interp_cmd->parsed()) {
            overlay(interp_cmd, cfg, "mode", in_mode);
            overlay(interp_cmd, cfg, "run", in_run);
            overlay(interp_cmd, cfg, "corpus", in_corpus);
            overlay(interp_cmd, cfg, "in", in_in);
            overlay(interp_cmd, cfg, "out", in_out);
            overlay(interp_cmd, cfg, "thesaurus", in_paths.thesaurus);
            overlay(interp_cmd, cfg, "wordnet", in_paths.wordnet);
            overlay(interp_cmd, cfg, "lexicon", in_paths.lexicon);
            overlay(interp_cmd, cfg, "threads", in_threads);
            return cmd_interpret(in_mode, in_run, in_corpus, in_in, in_out, in_paths, in_threads);
        }
        if (eval_cmd->parsed()) {
            overlay(eval_cmd, cfg, "task", ev_task);
            overlay(eval_cmd, cfg, "pred", ev_pred);
            overlay(eval_cmd, cfg, "gold", ev_gold);
            overlay(eval_cmd, cfg, "out", ev_out);
            return cmd_evaluate(ev_task, ev_pred, ev_gold, ev_out);
        }
        if (pipe_cmd->parsed()) {
            overlay(pipe_cmd, cfg, "model", pipe_opts.model);
            overlay(pipe_cmd, cfg, "corpus", pipe_opts.corpus);
            overlay(pipe_cmd, cfg, "in", pipe_opts.in);
            overlay(pipe_cmd, cfg, "out", pipe_opts.out);
            overlay(pipe_cmd, cfg, "default-type", pipe_opts.default_type);
            overlay(pipe_cmd, cfg, "run", pipe_opts.run);
            overlay(pipe_cmd, cfg, "thesaurus", pipe_opts.paths.thesaurus);
            overlay(pipe_cmd, cfg, "wordnet", pipe_opts.paths.wordnet);
            overlay(pipe_cmd, cfg, "lexicon", pipe_opts.paths.lexicon);
            overlay(pipe_cmd, cfg, "threads", pipe_opts.threads);
            return cmd_pipeline(pipe_opts);
        }
    } catch (const pundit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
