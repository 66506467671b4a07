#include "biframe/errors.hpp"
#include "biframe/harness.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace biframe {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "biframe/1";

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json system_to_json(const GFusionSystem& sys) {
    json items = json::array();
    for (const GFusionItem& it : sys.items()) {
        items.push_back(json{{"subspace_basis", matrix_to_json(it.subspace.basis())},
                             {"operator", matrix_to_json(it.op)}});
    }
    return items;
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw SchemaValidationError(where + ": expected a number");
    }
    const double value = j.get<double>();
    if (!std::isfinite(value)) {
        throw SchemaValidationError(where + ": value must be finite");
    }
    return value;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw SchemaValidationError(where + ": expected a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    Matrix m;
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.empty()) {
            throw SchemaValidationError(where + ": row " + std::to_string(i) +
                                        " is not a nonempty array");
        }
        if (i == 0) {
            cols = row.size();
            m.resize(static_cast<Index>(rows), static_cast<Index>(cols));
        } else if (row.size() != cols) {
            throw SchemaValidationError(where + ": row " + std::to_string(i) +
                                        " has inconsistent length");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            const json& entry = row[k];
            const std::string entry_where =
                where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            if (!entry.is_array() || entry.size() != 2) {
                throw SchemaValidationError(entry_where + ": scalar must be a [re, im] pair");
            }
            m(static_cast<Index>(i), static_cast<Index>(k)) =
                Complex(number_at(entry[0], entry_where), number_at(entry[1], entry_where));
        }
    }
    return m;
}

GFusionSystem system_from_json(const json& items, const std::vector<double>& weights,
                               Index ambient_dim, const std::string& where) {
    if (!items.is_array() || items.empty()) {
        throw SchemaValidationError(where + ": expected a nonempty array of items");
    }
    if (items.size() != weights.size()) {
        throw SchemaValidationError(where + ": item count differs from weight count");
    }
    std::vector<GFusionItem> out;
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json& item = items[i];
        const std::string item_where = where + "[" + std::to_string(i) + "]";
        if (!item.is_object() || !item.contains("subspace_basis") || !item.contains("operator")) {
            throw SchemaValidationError(item_where +
                                        ": expected {\"subspace_basis\": ..., \"operator\": ...}");
        }
        Matrix basis = matrix_from_json(item["subspace_basis"], item_where + ".subspace_basis");
        Matrix op = matrix_from_json(item["operator"], item_where + ".operator");
        try {
            out.push_back({Subspace(std::move(basis)), std::move(op), weights[i]});
        } catch (const Error& e) {
            throw SchemaValidationError(item_where + ": " + e.what());
        }
    }
    try {
        return GFusionSystem(ambient_dim, std::move(out));
    } catch (const Error& e) {
        throw SchemaValidationError(where + ": " + e.what());
    }
}

}  // namespace

std::string to_json_string(const BiGFusionPair& pair) {
    json doc;
    doc["schema"] = kSchema;
    doc["ambient_dim"] = pair.ambient_dim();
    json weights = json::array();
    for (const GFusionItem& it : pair.lambda_sys().items()) {
        weights.push_back(it.weight);
    }
    doc["weights"] = std::move(weights);
    doc["lambda"] = system_to_json(pair.lambda_sys());
    doc["gamma"] = system_to_json(pair.gamma_sys());
    return doc.dump();
}

BiGFusionPair pair_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document root must be an object");
    }
    if (!doc.contains("schema") || !doc["schema"].is_string()) {
        throw ParseError("missing string field 'schema'");
    }
    if (doc["schema"].get<std::string>() != kSchema) {
        throw SchemaVersionMismatchError("schema '" + doc["schema"].get<std::string>() +
                                         "' is not '" + kSchema + "'");
    }
    for (const char* field : {"ambient_dim", "weights", "lambda", "gamma"}) {
        if (!doc.contains(field)) {
            throw SchemaValidationError(std::string("missing field '") + field + "'");
        }
    }
    if (!doc["ambient_dim"].is_number_integer() || doc["ambient_dim"].get<long long>() < 1) {
        throw SchemaValidationError("ambient_dim: expected a positive integer");
    }
    const Index ambient_dim = doc["ambient_dim"].get<Index>();

    if (!doc["weights"].is_array() || doc["weights"].empty()) {
        throw SchemaValidationError("weights: expected a nonempty array");
    }
    std::vector<double> weights;
    weights.reserve(doc["weights"].size());
    for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
        const double w = number_at(doc["weights"][i], "weights[" + std::to_string(i) + "]");
        if (!(w > 0.0)) {
            throw SchemaValidationError("weights[" + std::to_string(i) + "]: must be positive");
        }
        weights.push_back(w);
    }

    GFusionSystem lambda = system_from_json(doc["lambda"], weights, ambient_dim, "lambda");
    GFusionSystem gamma = system_from_json(doc["gamma"], weights, ambient_dim, "gamma");
    try {
        return BiGFusionPair(std::move(lambda), std::move(gamma));
    } catch (const Error& e) {
        throw SchemaValidationError(std::string("pair: ") + e.what());
    }
}

void save(const std::filesystem::path& path, const BiGFusionPair& pair) {
    std::ofstream out(path);
    if (!out) {
        throw Error("save: cannot open '" + path.string() + "' for writing");
    }
    out << to_json_string(pair) << '\n';
    if (!out) {
        throw Error("save: write to '" + path.string() + "' failed");
    }
}

BiGFusionPair load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("load: cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return pair_from_json(buffer.str());
}

bool identical(const BiGFusionPair& a, const BiGFusionPair& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.size() != b.size()) return false;
    auto same_matrix = [](const Matrix& x, const Matrix& y) {
        return x.rows() == y.rows() && x.cols() == y.cols() && (x - y).squaredNorm() == 0.0;
    };
    for (Index i = 0; i < a.size(); ++i) {
        const auto& systems = {std::pair{&a.lambda_sys(), &b.lambda_sys()},
                               std::pair{&a.gamma_sys(), &b.gamma_sys()}};
        for (const auto& [sa, sb] : systems) {
            const GFusionItem& ia = sa->item(i);
            const GFusionItem& ib = sb->item(i);
            if (ia.weight != ib.weight) return false;
            if (!same_matrix(ia.subspace.basis(), ib.subspace.basis())) return false;
            if (!same_matrix(ia.op, ib.op)) return false;
        }
    }
    return true;
}

}  // namespace biframe
