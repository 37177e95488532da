#include "normcomp/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace normcomp {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

std::vector<std::vector<double>> real_grid(const json& j, const char* key, std::size_t dim) {
    if (!j.contains(key)) throw IoError(std::string("matrix JSON: missing \"") + key + "\"");
    const json& g = j.at(key);
    if (!g.is_array() || g.size() != dim)
        throw IoError(std::string("matrix JSON: \"") + key + "\" must be a dim x dim grid");
    std::vector<std::vector<double>> rows;
    rows.reserve(dim);
    for (const json& row : g) {
        if (!row.is_array() || row.size() != dim)
            throw IoError(std::string("matrix JSON: ragged \"") + key + "\" row");
        std::vector<double> r;
        r.reserve(dim);
        for (const json& v : row) {
            if (!v.is_number()) throw IoError("matrix JSON: non-numeric entry");
            r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!need_comma_.empty()) {
        if (need_comma_.back()) out_ += ',';
        need_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separator();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_real(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    out_ += '"';
    for (char c : v) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += '"';
    return *this;
}

std::string to_json(const ComplexMatrix& m) {
    if (!m.is_square()) throw ValidationError("to_json: matrix interchange needs square input");
    JsonWriter w;
    w.begin_object().field("dim", m.rows());
    w.key("re").begin_array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        w.begin_array();
        for (std::size_t j = 0; j < m.cols(); ++j) w.value(m(i, j).real());
        w.end_array();
    }
    w.end_array();
    w.key("im").begin_array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        w.begin_array();
        for (std::size_t j = 0; j < m.cols(); ++j) w.value(m(i, j).imag());
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string to_json(const BlockMatrix& m) {
    JsonWriter w;
    w.begin_object();
    w.key("partition").begin_array();
    for (std::size_t s : m.partition().sizes()) w.value(s);
    w.end_array();
    w.key("matrix");
    return w.str() + to_json(m.matrix().matrix()) + "}";
}

std::string to_json(const CompressionMatrix& m) {
    // Plain real matrix (zero imaginary part).
    return to_json(m.as_complex());
}

std::string to_json(const InequalityReport& r) {
    JsonWriter w;
    w.begin_object()
        .field("name", r.name)
        .field("q", r.q)
        .field("lhs", r.lhs)
        .field("rhs", r.rhs)
        .field("slack", r.slack)
        .field("satisfied", r.satisfied)
        .field("tolerance", r.abs_tol);
    if (r.seed) w.field("seed", *r.seed);
    w.end_object();
    return w.str();
}

std::string to_json(const IterationTrace& t) {
    JsonWriter w;
    w.begin_object().field("converged", t.converged).field("steps", t.steps);
    w.key("distances").begin_array();
    for (double d : t.distances) w.value(d);
    w.end_array();
    w.key("ratios").begin_array();
    for (double r : t.ratios) w.value(r);
    w.end_array();
    w.field("beta_certified", t.beta_certified);
    w.end_object();
    return w.str();
}

std::string to_json(const HarnessSummary& s, bool include_runtime) {
    JsonWriter w;
    w.begin_object();
    w.key("cells").begin_array();
    for (const HarnessCell& c : s.cells) {
        w.begin_object()
            .field("inequality", c.inequality)
            .field("dim", c.dim);
        w.key("partition").begin_array();
        for (std::size_t p : c.partition) w.value(p);
        w.end_array();
        w.field("q", c.q)
            .field("trials", c.trials)
            .field("failures", c.failures)
            .field("worst_slack", c.worst_slack)
            .field("worst_seed", c.worst_seed)
            .field("search_mode", c.search_mode);
        w.end_object();
    }
    w.end_array();
    if (include_runtime) w.field("runtime_ms", static_cast<std::int64_t>(s.runtime_ms));
    w.end_object();
    return w.str();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_unsigned())
        throw IoError("matrix JSON: expected object with \"dim\"");
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0 || dim > 4096) throw IoError("matrix JSON: dim out of range");
    const auto re = real_grid(j, "re", dim);
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) m(i, k) = re[i][k];
    if (j.contains("im")) {
        const auto im = real_grid(j, "im", dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) m(i, k) += Complex(0.0, im[i][k]);
    }
    ensure_finite(m, "matrix JSON");
    return m;
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(read_file(path)); }

std::pair<ComplexMatrix, PartitionSpec> partitioned_matrix_from_json(
    const std::string& text, const std::vector<std::size_t>& overlay) {
    const json j = parse(text);
    std::vector<std::size_t> partition = overlay;
    std::string matrix_text = text;
    if (j.is_object() && j.contains("partition")) {
        if (partition.empty()) {
            for (const json& v : j.at("partition")) {
                if (!v.is_number_unsigned()) throw IoError("block JSON: bad partition entry");
                partition.push_back(v.get<std::size_t>());
            }
        }
        if (!j.contains("matrix")) throw IoError("block JSON: missing \"matrix\"");
        matrix_text = j.at("matrix").dump();
    }
    if (partition.empty())
        throw IoError("block JSON: no partition given (use a partition field or --partition)");
    return {matrix_from_json(matrix_text), PartitionSpec(partition)};
}

std::pair<ComplexMatrix, PartitionSpec> load_partitioned_matrix(
    const std::string& path, const std::vector<std::size_t>& overlay) {
    return partitioned_matrix_from_json(read_file(path), overlay);
}

BlockMatrix block_matrix_from_json(const std::string& text,
                                   const std::vector<std::size_t>& overlay) {
    auto [matrix, partition] = partitioned_matrix_from_json(text, overlay);
    return {PsdMatrix(HermitianMatrix(matrix)), std::move(partition)};
}

BlockMatrix load_block_matrix(const std::string& path, const std::vector<std::size_t>& overlay) {
    return block_matrix_from_json(read_file(path), overlay);
}

HarnessConfig harness_config_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object()) throw IoError("harness config: expected JSON object");
    HarnessConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "inequalities") {
            config.inequalities.clear();
            for (const json& v : value) config.inequalities.push_back(v.get<std::string>());
        } else if (key == "dims") {
            config.dims.clear();
            for (const json& v : value) config.dims.push_back(v.get<std::size_t>());
        } else if (key == "q_grid") {
            config.q_grid.clear();
            for (const json& v : value) config.q_grid.push_back(v.get<double>());
        } else if (key == "trials") {
            config.trials = value.get<std::size_t>();
        } else if (key == "base_seed") {
            config.base_seed = value.get<std::uint64_t>();
        } else if (key == "tol_scale") {
            config.tol_scale = value.get<double>();
        } else {
            throw IoError("harness config: unknown field \"" + key + "\"");
        }
    }
    config.validate();
    return config;
}

HarnessConfig load_harness_config(const std::string& path) {
    return harness_config_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << contents;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace normcomp
