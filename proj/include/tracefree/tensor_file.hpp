#pragma once

// On-disk tensor format: a JSON object with integer "order" (3 or 4),
// integer "dim", a flat row-major "data" array (last index fastest),
// and an optional string-to-string "metadata" object.  Numbers are
// written with shortest round-trip precision, so save followed by load
// reproduces every component bit for bit.  Verification reports are
// written as JSON too.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tracefree/ansatz.hpp"
#include "tracefree/oracle.hpp"
#include "tracefree/tensor.hpp"

namespace tracefree {

// Thrown for unreadable, malformed, or structurally invalid files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TensorFile {
    int order = 3;
    int dim = 0;
    std::vector<double> data;
    std::map<std::string, std::string> metadata;
};

inline TensorFile load_tensor_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path.string() + ": top level must be an object");
    for (const char* key : {"order", "dim", "data"})
        if (!j.contains(key)) throw ParseError(path.string() + ": missing key \"" + key + "\"");
    if (!j["order"].is_number_integer() || !j["dim"].is_number_integer())
        throw ParseError(path.string() + ": \"order\" and \"dim\" must be integers");
    TensorFile file;
    file.order = j["order"].get<int>();
    file.dim = j["dim"].get<int>();
    if (file.order != 3 && file.order != 4)
        throw ParseError(path.string() + ": unsupported order " + std::to_string(file.order));
    if (!j["data"].is_array()) throw ParseError(path.string() + ": \"data\" must be an array");
    file.data.reserve(j["data"].size());
    for (const auto& v : j["data"]) {
        if (!v.is_number()) throw ParseError(path.string() + ": \"data\" entries must be numbers");
        file.data.push_back(v.get<double>());
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw ParseError(path.string() + ": \"metadata\" must be an object");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string())
                throw ParseError(path.string() + ": metadata values must be strings");
            file.metadata[key] = value.get<std::string>();
        }
    }
    return file;
}

inline void save_tensor_file(const std::filesystem::path& path, const TensorFile& file) {
    for (double v : file.data)
        if (!std::isfinite(v))
            throw NumericalFailure("save_tensor_file: non-finite component in " + path.string());
    nlohmann::json j;
    j["order"] = file.order;
    j["dim"] = file.dim;
    j["data"] = file.data;
    j["metadata"] = file.metadata;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(1) << "\n";
}

// Validates shape on the way in: a bad dimension or entry count surfaces
// as the same errors the tensor constructors raise.
inline std::variant<Tensor3, Tensor4> to_tensor(const TensorFile& file) {
    if (file.order == 3) return Tensor3(file.dim, file.data);
    return Tensor4(file.dim, file.data);
}

inline TensorFile to_file(const Tensor3& t, std::map<std::string, std::string> metadata = {}) {
    return TensorFile{3, t.dim(), t.values(), std::move(metadata)};
}

inline TensorFile to_file(const Tensor4& t, std::map<std::string, std::string> metadata = {}) {
    return TensorFile{4, t.dim(), t.values(), std::move(metadata)};
}

// Verification summary: the two coefficient vectors keyed by ansatz
// label, the projection disagreement, and the Gram diagnostics.
inline void save_report_file(const std::filesystem::path& path, const OracleReport& report,
                             double trace_residual) {
    const std::vector<std::string> labels =
        report.order == 3 ? ansatz_labels3() : ansatz_labels4();
    nlohmann::json j;
    j["order"] = report.order;
    j["dim"] = report.dim;
    j["proj_residual"] = report.proj_residual;
    j["trace_residual"] = trace_residual;
    j["gram_rank"] = report.gram_rank;
    j["gram_cond"] = report.gram_cond;
    j["norm_closed"] = report.norm_closed;
    j["norm_oracle"] = report.norm_oracle;
    double max_coeff_diff = 0.0;
    for (int a = 0; a < report.coeff_closed.size(); ++a)
        max_coeff_diff =
            std::max(max_coeff_diff, std::abs(report.coeff_closed[a] - report.coeff_oracle[a]));
    j["max_coeff_diff"] = max_coeff_diff;
    nlohmann::json closed = nlohmann::json::object();
    nlohmann::json oracle = nlohmann::json::object();
    for (int a = 0; a < report.coeff_closed.size(); ++a) {
        closed[labels[a]] = report.coeff_closed[a];
        oracle[labels[a]] = report.coeff_oracle[a];
    }
    j["coeff_closed"] = closed;
    j["coeff_oracle"] = oracle;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(1) << "\n";
}

}  // namespace tracefree
