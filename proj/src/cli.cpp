#include "sketchmatch/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "sketchmatch/error.hpp"
#include "sketchmatch/pgm.hpp"
#include "sketchmatch/pipeline.hpp"

namespace sketchmatch {
namespace {

struct ConfigFlags {
    int resize_w = 50;
    int resize_h = 65;
    int levels = 3;
    std::string centering = "per_image_scalar";
    double eigen_threshold = 1e-10;
    std::string classifier = "knn";
    double knn_epsilon = 1e-8;
    double svm_c = 1.0;
    int top_n = 5;
    std::string offset_space = "post_negative";
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags) {
    cmd.set_config("--config")->description("config file with key = value lines");
    cmd.add_option("--resize-w", flags.resize_w, "preprocessing width");
    cmd.add_option("--resize-h", flags.resize_h, "preprocessing height");
    cmd.add_option("--levels", flags.levels, "wavelet decomposition scale");
    cmd.add_option("--centering", flags.centering, "per_image_scalar | global_mean_vector")
        ->check(CLI::IsMember({"per_image_scalar", "global_mean_vector"}));
    cmd.add_option("--eigen-threshold", flags.eigen_threshold,
                   "retained-eigenvalue cutoff, relative to the largest");
    cmd.add_option("--classifier", flags.classifier, "knn | svm")
        ->check(CLI::IsMember({"knn", "svm"}));
    cmd.add_option("--knn-epsilon", flags.knn_epsilon,
                   "Mahalanobis ridge, relative to the largest eigenvalue");
    cmd.add_option("--svm-c", flags.svm_c, "SVM regularization C");
    cmd.add_option("--top-n", flags.top_n, "matches to report per query");
    cmd.add_option("--offset-space", flags.offset_space, "post_negative | pre_negative")
        ->check(CLI::IsMember({"post_negative", "pre_negative"}));
}

PipelineConfig build_config(const ConfigFlags& flags) {
    PipelineConfig cfg;
    cfg.resize_w = flags.resize_w;
    cfg.resize_h = flags.resize_h;
    cfg.wavelet_levels = flags.levels;
    cfg.centering = centering_from_string(flags.centering);
    cfg.eigen_threshold = flags.eigen_threshold;
    cfg.classifier = classifier_from_string(flags.classifier);
    cfg.knn_epsilon = flags.knn_epsilon;
    cfg.svm_c = flags.svm_c;
    cfg.top_n = flags.top_n;
    cfg.offset_space = offset_space_from_string(flags.offset_space);
    cfg.validate();
    return cfg;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write report file: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw DataError("report write failed: " + path.string());
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"face sketch to photo matcher: scale-3 Haar diagonal band, "
                 "negative/offset modality reduction, PCA features, "
                 "Mahalanobis K-NN or linear SVM ranking"};
    app.require_subcommand(1);

    ConfigFlags flags;
    std::string data_root, model_path, sketch_path, report_prefix;

    CLI::App* train = app.add_subcommand("train", "train a model from <root>/photos");
    train->add_option("--data", data_root, "dataset root directory")->required();
    train->add_option("--model", model_path, "output model file")->required();
    add_config_flags(*train, flags);

    CLI::App* query = app.add_subcommand("query", "rank gallery photos for a sketch");
    query->add_option("--model", model_path, "trained model file")->required();
    query->add_option("--sketch", sketch_path, "probe sketch (PGM)")->required();
    int query_top_n = -1;
    query->add_option("--top-n", query_top_n, "matches to print (default: model setting)");
    std::string query_classifier;
    query->add_option("--classifier", query_classifier, "override: knn | svm")
        ->check(CLI::IsMember({"knn", "svm"}));

    CLI::App* evaluate = app.add_subcommand("evaluate",
                                            "modality and match-score report over a dataset");
    evaluate->add_option("--model", model_path, "trained model file")->required();
    evaluate->add_option("--data", data_root, "dataset root directory")->required();
    evaluate->add_option("--report", report_prefix,
                         "report path prefix (writes <prefix>.txt and <prefix>.csv)");

    std::vector<const char*> argv;
    argv.push_back("sketchmatch");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, out);
        return code == 0 ? 0 : 1;
    }

    if (train->parsed()) {
        const PipelineConfig cfg = build_config(flags);
        const Model model = train_pipeline(cfg, ingest(data_root));
        save_model(model_path, model);
        out << "trained on " << model.eigen.gallery.size() << " photos; dim "
            << model.eigen.dim << ", " << model.eigen.k() << " components, offset I "
            << model.eigen.offset.value << "\n";
        for (const std::string& w : model.warnings)
            out << "warning: " << w << "\n";
        out << "model written to " << model_path << "\n";
        return 0;
    }

    if (query->parsed()) {
        Model model = load_model(model_path);
        if (!query_classifier.empty())
            model.config.classifier = classifier_from_string(query_classifier);
        const int top_n = query_top_n > 0 ? query_top_n : model.config.top_n;
        const RankedMatches matches = query_model(model, load_pgm(sketch_path));
        const size_t shown = std::min<size_t>(static_cast<size_t>(top_n),
                                              matches.entries.size());
        for (size_t i = 0; i < shown; ++i) {
            char line[256];
            std::snprintf(line, sizeof(line), "%zu %s %.6g\n", i + 1,
                          matches.entries[i].label.c_str(), matches.entries[i].score);
            out << line;
        }
        return 0;
    }

    // evaluate
    const Model model = load_model(model_path);
    const EvaluationReport report = evaluate_pipeline(model, ingest(data_root));
    out << report.to_text();
    if (!report_prefix.empty()) {
        write_text_file(report_prefix + ".txt", report.to_text());
        write_text_file(report_prefix + ".csv", report.to_csv());
        out << "report written to " << report_prefix << ".txt and " << report_prefix
            << ".csv\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sketchmatch
