#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pundit/core.hpp"
#include "pundit/semvec.hpp"

namespace pundit {

enum class Label { not_pun = 0, pun = 1 };

inline const char* to_string(Label l) { return l == Label::pun ? "pun" : "not_pun"; }

inline Label label_from_string(std::string_view s) {
    if (s == "pun") return Label::pun;
    if (s == "not_pun") return Label::not_pun;
    throw Error("unknown label: '" + std::string(s) + "' (expected pun or not_pun)");
}

struct TrainingRow {
    std::string id;
    SemanticVector vector;
    std::optional<Label> label;
};

struct TrainingSet {
    std::vector<TrainingRow> rows;

    /// TSV rows: `id<TAB>label<TAB>c0,...,c33` (label column optional).
    static TrainingSet parse_tsv(std::string_view text) {
        TrainingSet out;
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty() || line[0] == '#') continue;
            auto cols = split(line, '\t');
            TrainingRow row;
            try {
                if (cols.size() == 3) {
                    row.id = trim(cols[0]);
                    row.label = label_from_string(trim(cols[1]));
                    row.vector = SemanticVector::from_csv(cols[2]);
                } else if (cols.size() == 2) {
                    row.id = trim(cols[0]);
                    row.vector = SemanticVector::from_csv(cols[1]);
                } else {
                    throw Error("expected 2 or 3 tab-separated columns");
                }
            } catch (const Error& e) {
                throw Error("vector tsv line " + std::to_string(line_no) + ": " + e.what());
            }
            if (row.id.empty())
                throw Error("vector tsv line " + std::to_string(line_no) + ": empty id");
            out.rows.push_back(std::move(row));
        }
        return out;
    }

    static TrainingSet load_tsv(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open vector tsv: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse_tsv(ss.str());
    }
};

struct SvmParams {
    double c = 1.0;
    std::optional<double> gamma;  // default: 1 / (dims * variance of scaled features)
    double tolerance = 1e-3;
    int max_passes = 200;  // hard bound on full working-set sweeps
    std::uint32_t seed = 42;
    bool standardize = true;
};

struct ClassMetrics {
    double precision = 0.0, recall = 0.0, f1 = 0.0;
};

struct Metrics {
    ClassMetrics pun, not_pun;
    double accuracy = 0.0;
    double macro_precision = 0.0, macro_recall = 0.0, macro_f1 = 0.0;
    int tp = 0, fp = 0, fn = 0, tn = 0;
};

/// Confusion-matrix metrics with the pun class as positive. Degenerate
/// ratios (empty denominators) are defined as zero.
inline Metrics metrics_from_counts(int tp, int fp, int fn, int tn) {
    auto ratio = [](int num, int den) { return den > 0 ? static_cast<double>(num) / den : 0.0; };
    auto f1_of = [](double p, double r) { return p + r > 0 ? 2.0 * p * r / (p + r) : 0.0; };
    Metrics m;
    m.tp = tp; m.fp = fp; m.fn = fn; m.tn = tn;
    m.pun.precision = ratio(tp, tp + fp);
    m.pun.recall = ratio(tp, tp + fn);
    m.pun.f1 = f1_of(m.pun.precision, m.pun.recall);
    m.not_pun.precision = ratio(tn, tn + fn);
    m.not_pun.recall = ratio(tn, tn + fp);
    m.not_pun.f1 = f1_of(m.not_pun.precision, m.not_pun.recall);
    m.accuracy = ratio(tp + tn, tp + fp + fn + tn);
    m.macro_precision = (m.pun.precision + m.not_pun.precision) / 2.0;
    m.macro_recall = (m.pun.recall + m.not_pun.recall) / 2.0;
    m.macro_f1 = (m.pun.f1 + m.not_pun.f1) / 2.0;
    return m;
}

/// Soft-margin RBF SVM in dual form. Feature scaling happens inside the
/// model: support vectors are stored in scaled space and queries pass
/// through the same affine map.
class RbfSvmModel {
public:
    double gamma = 0.0;
    double c = 0.0;
    double bias = 0.0;
    double tolerance = 0.0;
    std::uint32_t seed = 0;
    bool converged = false;
    int sweeps = 0;
    std::vector<std::vector<double>> support_vectors;  // scaled
    std::vector<double> dual_coefs;                    // alpha_i * y_i
    std::vector<double> scale_mean, scale_stddev;      // per dimension

    size_t dims() const { return scale_mean.size(); }

    std::vector<double> scale(const SemanticVector& x) const {
        if (dims() != x.counts.size())
            throw Error("predict: model expects " + std::to_string(dims()) +
                        " dimensions, got " + std::to_string(x.counts.size()));
        std::vector<double> out(dims());
        for (size_t d = 0; d < out.size(); ++d) {
            double sd = scale_stddev[d];
            out[d] = (static_cast<double>(x.counts[d]) - scale_mean[d]) / (sd > 0 ? sd : 1.0);
        }
        return out;
    }

    double decision_scaled(const std::vector<double>& xs) const {
        if (xs.size() != dims()) throw Error("predict: dimension mismatch");
        double sum = bias;
        for (size_t i = 0; i < support_vectors.size(); ++i) {
            double sq = 0.0;
            const auto& sv = support_vectors[i];
            for (size_t d = 0; d < sv.size(); ++d) {
                double diff = sv[d] - xs[d];
                sq += diff * diff;
            }
            sum += dual_coefs[i] * std::exp(-gamma * sq);
        }
        return sum;
    }

    std::pair<Label, double> predict(const SemanticVector& x) const {
        double value = decision_scaled(scale(x));
        return {value >= 0.0 ? Label::pun : Label::not_pun, value};
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"format_version", 1},
                              {"kind", "rbf_svm"},
                              {"gamma", gamma},
                              {"c", c},
                              {"bias", bias},
                              {"tolerance", tolerance},
                              {"seed", seed},
                              {"converged", converged},
                              {"sweeps", sweeps},
                              {"support_vectors", support_vectors},
                              {"dual_coefs", dual_coefs},
                              {"scaling", {{"mean", scale_mean}, {"stddev", scale_stddev}}}};
    }

    static RbfSvmModel from_json(const nlohmann::json& j) {
        if (!j.is_object() || j.value("kind", "") != "rbf_svm")
            throw Error("model file: unrecognized content");
        if (j.value("format_version", 0) != 1)
            throw Error("model file: unsupported format version");
        RbfSvmModel m;
        m.gamma = j.at("gamma").get<double>();
        m.c = j.at("c").get<double>();
        m.bias = j.at("bias").get<double>();
        m.tolerance = j.at("tolerance").get<double>();
        m.seed = j.at("seed").get<std::uint32_t>();
        m.converged = j.at("converged").get<bool>();
        m.sweeps = j.at("sweeps").get<int>();
        m.support_vectors = j.at("support_vectors").get<std::vector<std::vector<double>>>();
        m.dual_coefs = j.at("dual_coefs").get<std::vector<double>>();
        m.scale_mean = j.at("scaling").at("mean").get<std::vector<double>>();
        m.scale_stddev = j.at("scaling").at("stddev").get<std::vector<double>>();
        if (m.support_vectors.size() != m.dual_coefs.size())
            throw Error("model file: support vector / coefficient mismatch");
        return m;
    }

    void save(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw Error("cannot write model: " + path);
        f << to_json().dump() << "\n";
    }

    static RbfSvmModel load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open model: " + path);
        nlohmann::json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            throw Error("model file " + path + ": " + e.what());
        }
        return from_json(j);
    }
};

namespace svm_detail {

/// Bounded uniform draw with explicit arithmetic so results do not depend on
/// the standard library's distribution implementation.
inline std::uint32_t draw(std::mt19937& rng, std::uint32_t n) {
    return static_cast<std::uint32_t>(rng() % n);
}

inline void shuffle_indices(std::vector<int>& idx, std::mt19937& rng) {
    for (size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[draw(rng, static_cast<std::uint32_t>(i))]);
}

}  // namespace svm_detail

/// Trains the dual soft-margin problem with sequential minimal optimization
/// (simplified working-pair selection, seeded shuffling). Converges when a
/// full sweep finds no Karush-Kuhn-Tucker violation beyond `tolerance`, or
/// stops at `max_passes` sweeps with converged=false.
inline RbfSvmModel train(const TrainingSet& data, const SvmParams& params = {}) {
    const size_t n = data.rows.size();
    if (n == 0) throw Error("train: empty training set");
    size_t n_pun = 0, n_not = 0;
    for (const auto& r : data.rows) {
        if (!r.label) throw Error("train: row '" + r.id + "' has no label");
        (*r.label == Label::pun ? n_pun : n_not) += 1;
    }
    if (n_pun < 2 || n_not < 2)
        throw Error("train: need at least two examples of each class (got " +
                    std::to_string(n_pun) + " pun, " + std::to_string(n_not) + " not_pun)");
    if (params.c <= 0) throw Error("train: c must be positive");
    if (params.gamma && *params.gamma <= 0) throw Error("train: gamma must be positive");

    const size_t dims = data.rows.front().vector.counts.size();
    RbfSvmModel model;
    model.c = params.c;
    model.tolerance = params.tolerance;
    model.seed = params.seed;
    model.scale_mean.assign(dims, 0.0);
    model.scale_stddev.assign(dims, 1.0);
    if (params.standardize) {
        for (size_t d = 0; d < dims; ++d) {
            double mean = 0.0;
            for (const auto& r : data.rows) mean += r.vector.counts[d];
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (const auto& r : data.rows) {
                double diff = r.vector.counts[d] - mean;
                var += diff * diff;
            }
            var /= static_cast<double>(n);
            model.scale_mean[d] = mean;
            model.scale_stddev[d] = std::sqrt(var);
        }
    }

    std::vector<std::vector<double>> x(n);
    std::vector<double> y(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = model.scale(data.rows[i].vector);
        for (double v : x[i])
            if (!std::isfinite(v)) throw Error("train: non-finite feature in row '" +
                                               data.rows[i].id + "'");
        y[i] = *data.rows[i].label == Label::pun ? 1.0 : -1.0;
    }

    if (params.gamma) {
        model.gamma = *params.gamma;
    } else {
        double mean = 0.0;
        for (const auto& row : x)
            for (double v : row) mean += v;
        mean /= static_cast<double>(n * dims);
        double var = 0.0;
        for (const auto& row : x)
            for (double v : row) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n * dims);
        model.gamma = var > 0 ? 1.0 / (static_cast<double>(dims) * var)
                              : 1.0 / static_cast<double>(dims);
    }

    // Gram matrix; problem sizes here stay small enough to precompute.
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            double sq = 0.0;
            for (size_t d = 0; d < dims; ++d) {
                double diff = x[i][d] - x[j][d];
                sq += diff * diff;
            }
            gram[i][j] = gram[j][i] = std::exp(-model.gamma * sq);
        }
    }

    std::vector<double> alpha(n, 0.0);
    double b = 0.0;
    auto f_of = [&](size_t i) {
        double sum = b;
        for (size_t j = 0; j < n; ++j)
            if (alpha[j] > 0.0) sum += alpha[j] * y[j] * gram[j][i];
        return sum;
    };

    std::mt19937 rng(params.seed);
    std::vector<int> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);

    const double C = params.c;
    const double tol = params.tolerance;

    // One analytic pair step; returns false when the pair cannot progress.
    auto optimize_pair = [&](size_t i, size_t j, double e_i) {
        const double e_j = f_of(j) - y[j];
        double lo, hi;
        if (y[i] != y[j]) {
            lo = std::max(0.0, alpha[j] - alpha[i]);
            hi = std::min(C, C + alpha[j] - alpha[i]);
        } else {
            lo = std::max(0.0, alpha[i] + alpha[j] - C);
            hi = std::min(C, alpha[i] + alpha[j]);
        }
        if (lo >= hi) return false;
        const double eta = 2.0 * gram[i][j] - gram[i][i] - gram[j][j];
        if (eta >= -1e-12) return false;
        double aj = alpha[j] - y[j] * (e_i - e_j) / eta;
        aj = std::min(hi, std::max(lo, aj));
        if (std::abs(aj - alpha[j]) < 1e-10) return false;
        double ai = alpha[i] + y[i] * y[j] * (alpha[j] - aj);
        // keep alphas exactly on their bounds despite roundoff
        if (ai < 1e-12) ai = 0.0;
        if (ai > C - 1e-12) ai = C;
        if (aj < 1e-12) aj = 0.0;
        if (aj > C - 1e-12) aj = C;
        const double b1 = b - e_i - y[i] * (ai - alpha[i]) * gram[i][i] -
                          y[j] * (aj - alpha[j]) * gram[i][j];
        const double b2 = b - e_j - y[i] * (ai - alpha[i]) * gram[i][j] -
                          y[j] * (aj - alpha[j]) * gram[j][j];
        alpha[i] = ai;
        alpha[j] = aj;
        if (ai > 0 && ai < C) b = b1;
        else if (aj > 0 && aj < C) b = b2;
        else b = (b1 + b2) / 2.0;
        return true;
    };

    // The incremental bias can drift inside its feasible bracket and make
    // satisfied points look violated, so each sweep starts from the bias
    // implied by the current alphas: the mean over free support vectors, or
    // the midpoint of the KKT bracket when every alpha sits at a bound.
    auto recompute_bias = [&]() {
        double free_sum = 0.0;
        int free_cnt = 0;
        double lo = -1e300, hi = 1e300;
        for (size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (size_t j = 0; j < n; ++j)
                if (alpha[j] > 0.0) s += alpha[j] * y[j] * gram[j][i];
            if (alpha[i] > 1e-9 && alpha[i] < C - 1e-9) {
                free_sum += y[i] - s;
                ++free_cnt;
            } else {
                bool at_zero = alpha[i] <= 1e-9;
                // alpha=0 wants y(s+b) >= 1; alpha=C wants y(s+b) <= 1
                if ((at_zero && y[i] > 0) || (!at_zero && y[i] < 0))
                    lo = std::max(lo, y[i] - s);
                else
                    hi = std::min(hi, y[i] - s);
            }
        }
        if (free_cnt > 0) return free_sum / free_cnt;
        if (lo <= hi) return (lo + hi) / 2.0;
        return (lo + hi) / 2.0;  // inconsistent bracket mid-optimization
    };

    model.converged = false;
    int sweep = 0;
    for (; sweep < params.max_passes; ++sweep) {
        b = recompute_bias();
        svm_detail::shuffle_indices(order, rng);
        int changed = 0, violations = 0;
        for (int ii : order) {
            const size_t i = static_cast<size_t>(ii);
            const double e_i = f_of(i) - y[i];
            const double r_i = y[i] * e_i;
            if (!((r_i < -tol && alpha[i] < C - 1e-9) || (r_i > tol && alpha[i] > 1e-9)))
                continue;
            ++violations;
            // random first choice, then every remaining partner in order
            const size_t start = svm_detail::draw(rng, static_cast<std::uint32_t>(n));
            for (size_t step = 0; step < n; ++step) {
                const size_t j = (start + step) % n;
                if (j == i) continue;
                if (optimize_pair(i, j, e_i)) {
                    ++changed;
                    break;
                }
            }
        }
        if (violations == 0) {
            model.converged = true;
            ++sweep;
            break;
        }
        if (changed == 0) break;  // violations remain but no pair can move
    }
    model.sweeps = sweep;
    model.bias = recompute_bias();
    for (size_t i = 0; i < n; ++i) {
        if (alpha[i] > 1e-9) {
            model.support_vectors.push_back(x[i]);
            model.dual_coefs.push_back(alpha[i] * y[i]);
        }
    }
    if (model.support_vectors.empty())
        throw Error("train: optimization produced no support vectors");
    return model;
}

inline Metrics evaluate(const RbfSvmModel& model, const TrainingSet& data) {
    if (data.rows.empty()) throw Error("evaluate: empty dataset");
    int tp = 0, fp = 0, fn = 0, tn = 0;
    for (const auto& r : data.rows) {
        if (!r.label) throw Error("evaluate: row '" + r.id + "' has no label");
        Label predicted = model.predict(r.vector).first;
        if (predicted == Label::pun)
            (*r.label == Label::pun ? tp : fp) += 1;
        else
            (*r.label == Label::pun ? fn : tn) += 1;
    }
    return metrics_from_counts(tp, fp, fn, tn);
}

struct GridSearchResult {
    RbfSvmModel model;
    double best_c = 0.0;
    double best_gamma = 0.0;
    double cv_macro_f1 = 0.0;
};

/// Stratified 5-fold cross-validated grid search over c and gamma,
/// maximizing macro-F1; ties prefer the smaller c, then the smaller gamma.
inline GridSearchResult train_grid_search(const TrainingSet& data, SvmParams params = {},
                                          const std::vector<double>& c_grid = {0.1, 1, 10, 100},
                                          const std::vector<double>& gamma_grid = {0.001, 0.01,
                                                                                   0.1, 1}) {
    constexpr int kFolds = 5;
    std::array<std::vector<size_t>, 2> by_class;
    for (size_t i = 0; i < data.rows.size(); ++i) {
        if (!data.rows[i].label) throw Error("train: row '" + data.rows[i].id + "' has no label");
        by_class[*data.rows[i].label == Label::pun ? 1 : 0].push_back(i);
    }
    std::mt19937 rng(params.seed);
    std::vector<int> fold_of(data.rows.size(), 0);
    for (auto& members : by_class) {
        std::vector<int> idx(members.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        svm_detail::shuffle_indices(idx, rng);
        for (size_t i = 0; i < idx.size(); ++i)
            fold_of[members[static_cast<size_t>(idx[i])]] = static_cast<int>(i) % kFolds;
    }

    GridSearchResult best;
    best.cv_macro_f1 = -1.0;
    for (double c : c_grid) {
        for (double gamma : gamma_grid) {
            double score_sum = 0.0;
            int scored_folds = 0;
            for (int fold = 0; fold < kFolds; ++fold) {
                TrainingSet tr, te;
                for (size_t i = 0; i < data.rows.size(); ++i)
                    (fold_of[i] == fold ? te : tr).rows.push_back(data.rows[i]);
                if (te.rows.empty()) continue;
                SvmParams p = params;
                p.c = c;
                p.gamma = gamma;
                try {
                    RbfSvmModel m = train(tr, p);
                    score_sum += evaluate(m, te).macro_f1;
                    ++scored_folds;
                } catch (const Error&) {
                    // fold without both classes; skip
                }
            }
            if (scored_folds == 0) continue;
            double score = score_sum / scored_folds;
            if (score > best.cv_macro_f1 + 1e-12) {
                best.cv_macro_f1 = score;
                best.best_c = c;
                best.best_gamma = gamma;
            }
        }
    }
    if (best.cv_macro_f1 < 0) throw Error("grid search: no viable parameter combination");
    SvmParams p = params;
    p.c = best.best_c;
    p.gamma = best.best_gamma;
    best.model = train(data, p);
    return best;
}

}  // namespace pundit
