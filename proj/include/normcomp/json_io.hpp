#pragma once

#include <string>

#include "normcomp/harness.hpp"
#include "normcomp/stationarity.hpp"

namespace normcomp {

/// Minimal deterministic JSON writer. All reals are emitted with 17
/// significant digits ("%.17g"), so equal inputs serialize byte-identically
/// and every double round-trips exactly.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    template <typename T>
    JsonWriter& field(const std::string& k, const T& v) {
        key(k);
        return value(v);
    }

    const std::string& str() const { return out_; }

  private:
    void separator();
    std::string out_;
    std::vector<bool> need_comma_;
    bool pending_key_ = false;
};

std::string format_real(double v);

// --- serializers ----------------------------------------------------------

std::string to_json(const ComplexMatrix& m);
std::string to_json(const BlockMatrix& m);
std::string to_json(const CompressionMatrix& m);
std::string to_json(const InequalityReport& r);
std::string to_json(const IterationTrace& t);
/// `include_runtime` is off for files that must be byte-stable across runs.
std::string to_json(const HarnessSummary& s, bool include_runtime = false);

// --- parsers ---------------------------------------------------------------

/// Matrix interchange object { "dim": n, "re": [[...]], "im": [[...]] };
/// "im" may be omitted for real matrices.
ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);

/// { "partition": [s1, ...], "matrix": {...} }. A plain matrix object is
/// accepted when `overlay` supplies the partition. The overlay wins over an
/// embedded partition when both are present.
std::pair<ComplexMatrix, PartitionSpec> partitioned_matrix_from_json(
    const std::string& text, const std::vector<std::size_t>& overlay = {});
std::pair<ComplexMatrix, PartitionSpec> load_partitioned_matrix(
    const std::string& path, const std::vector<std::size_t>& overlay = {});

BlockMatrix block_matrix_from_json(const std::string& text,
                                   const std::vector<std::size_t>& overlay = {});
BlockMatrix load_block_matrix(const std::string& path,
                              const std::vector<std::size_t>& overlay = {});

HarnessConfig harness_config_from_json(const std::string& text);
HarnessConfig load_harness_config(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace normcomp
