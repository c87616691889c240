#include "sketchmatch/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sketchmatch/error.hpp"

namespace sketchmatch {
namespace {

constexpr const char* kMagic = "SKETCHMATCH-MODEL";
constexpr int kVersion = 1;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_vector(std::string& out, const char* key, const std::vector<double>& v) {
    out += key;
    out += ' ';
    out += std::to_string(v.size());
    for (double x : v) {
        out += ' ';
        out += g17(x);
    }
    out += '\n';
}

struct Reader {
    std::istringstream in;

    explicit Reader(const std::string& text) : in(text) {}

    std::string line() {
        std::string s;
        if (!std::getline(in, s))
            throw DataError("model file: unexpected end of file");
        return s;
    }

    // "key rest-of-line"; verifies the key.
    std::string field(const std::string& key) {
        const std::string s = line();
        if (s.rfind(key + " ", 0) != 0)
            throw DataError("model file: expected field \"" + key + "\", got \"" + s + "\"");
        return s.substr(key.size() + 1);
    }

    long integer(const std::string& key) {
        const std::string s = field(key);
        char* end = nullptr;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (end == s.c_str() || *end != '\0')
            throw DataError("model file: bad integer in field \"" + key + "\"");
        return v;
    }

    double real(const std::string& key) {
        const std::string s = field(key);
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw DataError("model file: bad number in field \"" + key + "\"");
        return v;
    }

    std::vector<double> reals(const std::string& key) {
        std::istringstream ls(field(key));
        size_t count = 0;
        if (!(ls >> count))
            throw DataError("model file: bad count in field \"" + key + "\"");
        std::vector<double> v(count);
        for (size_t i = 0; i < count; ++i)
            if (!(ls >> v[i]))
                throw DataError("model file: truncated values in field \"" + key + "\"");
        return v;
    }
};

} // namespace

std::string serialize_model(const Model& model) {
    const PipelineConfig& cfg = model.config;
    const EigenModel& eig = model.eigen;
    std::string out;
    out += kMagic;
    out += '\n';
    out += "version " + std::to_string(kVersion) + "\n";
    out += "resize_w " + std::to_string(cfg.resize_w) + "\n";
    out += "resize_h " + std::to_string(cfg.resize_h) + "\n";
    out += "wavelet_levels " + std::to_string(cfg.wavelet_levels) + "\n";
    out += "centering " + to_string(cfg.centering) + "\n";
    out += "eigen_threshold " + g17(cfg.eigen_threshold) + "\n";
    out += "classifier " + to_string(cfg.classifier) + "\n";
    out += "knn_epsilon " + g17(cfg.knn_epsilon) + "\n";
    out += "svm_c " + g17(cfg.svm_c) + "\n";
    out += "top_n " + std::to_string(cfg.top_n) + "\n";
    out += "offset_space " + to_string(cfg.offset_space) + "\n";
    out += "offset_i " + std::to_string(eig.offset.value) + "\n";
    out += "warnings " + std::to_string(model.warnings.size()) + "\n";
    for (const std::string& w : model.warnings)
        out += "warning " + w + "\n";
    out += "dim " + std::to_string(eig.dim) + "\n";
    write_vector(out, "global_mean", eig.global_mean);
    write_vector(out, "eigenvalues", eig.eigenvalues);
    out += "eigenvectors " + std::to_string(eig.eigenvectors.rows) + " " +
           std::to_string(eig.eigenvectors.cols) + "\n";
    for (int r = 0; r < eig.eigenvectors.rows; ++r) {
        for (int c = 0; c < eig.eigenvectors.cols; ++c) {
            if (c > 0)
                out += ' ';
            out += g17(eig.eigenvectors.at(r, c));
        }
        out += '\n';
    }
    out += "gallery " + std::to_string(eig.gallery.size()) + "\n";
    for (const auto& entry : eig.gallery) {
        out += "label " + entry.label + "\n";
        write_vector(out, "coords", entry.coords);
    }
    out += std::string("svm ") + (model.svm ? "1" : "0") + "\n";
    if (model.svm) {
        out += "svm_kkt " + g17(model.svm->max_kkt_violation) + "\n";
        out += std::string("svm_degenerate ") + (model.svm->degenerate ? "1" : "0") + "\n";
        out += "svm_classes " + std::to_string(model.svm->classes.size()) + "\n";
        for (const auto& cls : model.svm->classes) {
            out += "class_label " + cls.label + "\n";
            out += "class_bias " + g17(cls.bias) + "\n";
            write_vector(out, "class_weights", cls.weights);
        }
    }
    out += "end\n";
    return out;
}

Model deserialize_model(const std::string& text) {
    Reader r(text);
    if (r.line() != kMagic)
        throw DataError("model file: bad magic");
    const long version = r.integer("version");
    if (version != kVersion)
        throw DataError("model file: unsupported version " + std::to_string(version));

    Model model;
    PipelineConfig& cfg = model.config;
    cfg.resize_w = static_cast<int>(r.integer("resize_w"));
    cfg.resize_h = static_cast<int>(r.integer("resize_h"));
    cfg.wavelet_levels = static_cast<int>(r.integer("wavelet_levels"));
    cfg.centering = centering_from_string(r.field("centering"));
    cfg.eigen_threshold = r.real("eigen_threshold");
    cfg.classifier = classifier_from_string(r.field("classifier"));
    cfg.knn_epsilon = r.real("knn_epsilon");
    cfg.svm_c = r.real("svm_c");
    cfg.top_n = static_cast<int>(r.integer("top_n"));
    cfg.offset_space = offset_space_from_string(r.field("offset_space"));

    EigenModel& eig = model.eigen;
    eig.centering_mode = cfg.centering;
    eig.offset.value = static_cast<int>(r.integer("offset_i"));
    const long n_warnings = r.integer("warnings");
    for (long i = 0; i < n_warnings; ++i)
        model.warnings.push_back(r.field("warning"));
    eig.dim = static_cast<int>(r.integer("dim"));
    eig.global_mean = r.reals("global_mean");
    eig.eigenvalues = r.reals("eigenvalues");

    {
        std::istringstream ls(r.field("eigenvectors"));
        int rows = 0, cols = 0;
        if (!(ls >> rows >> cols) || rows < 0 || cols < 0)
            throw DataError("model file: bad eigenvector dimensions");
        eig.eigenvectors = Matrix(rows, cols);
        for (int row = 0; row < rows; ++row) {
            std::istringstream vs(r.line());
            for (int col = 0; col < cols; ++col)
                if (!(vs >> eig.eigenvectors.at(row, col)))
                    throw DataError("model file: truncated eigenvector row");
        }
    }

    const long n_gallery = r.integer("gallery");
    for (long i = 0; i < n_gallery; ++i) {
        EigenModel::GalleryEntry entry;
        entry.label = r.field("label");
        entry.coords = r.reals("coords");
        eig.gallery.push_back(std::move(entry));
    }

    if (r.integer("svm") != 0) {
        LinearSvmModel svm;
        svm.c = cfg.svm_c;
        svm.max_kkt_violation = r.real("svm_kkt");
        svm.degenerate = r.integer("svm_degenerate") != 0;
        const long n_classes = r.integer("svm_classes");
        for (long i = 0; i < n_classes; ++i) {
            LinearSvmModel::ClassModel cls;
            cls.label = r.field("class_label");
            cls.bias = r.real("class_bias");
            cls.weights = r.reals("class_weights");
            svm.classes.push_back(std::move(cls));
        }
        model.svm = std::move(svm);
    }
    if (r.line() != "end")
        throw DataError("model file: missing end marker");
    return model;
}

void save_model(const std::filesystem::path& path, const Model& model) {
    const std::string text = serialize_model(model);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write model file: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw DataError("model write failed: " + path.string());
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open model file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return deserialize_model(buf.str());
    } catch (const DataError& e) {
        throw DataError(std::string(e.what()) + " [" + path.string() + "]");
    }
}

} // namespace sketchmatch
