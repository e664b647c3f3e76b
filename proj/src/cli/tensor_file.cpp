#include "gvec/cli/tensor_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gvec/errors.hpp"

namespace gvec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

std::string position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

StorageOrder parse_order(const ordered_json& value) {
    if (!value.is_string()) throw FormatError("\"order\" must be a string");
    const auto& s = value.get_ref<const std::string&>();
    if (s == "row-major") return StorageOrder::LastIndexFastest;
    if (s == "column-major") return StorageOrder::FirstIndexFastest;
    throw FormatError("unknown order \"" + s + "\" (expected row-major or column-major)");
}

Shape parse_shape_field(const ordered_json& value) {
    if (!value.is_array()) throw FormatError("\"shape\" must be an array");
    std::vector<std::size_t> dims;
    for (const auto& d : value) {
        if (d.is_number_unsigned()) {
            dims.push_back(d.get<std::size_t>());
        } else if (d.is_number_integer()) {
            throw ShapeError("shape extents must be positive, got " + d.dump());
        } else {
            throw FormatError("shape extents must be integers, got " + d.dump());
        }
    }
    return Shape(std::move(dims));
}

}  // namespace

std::string_view order_name(StorageOrder order) noexcept {
    return order == StorageOrder::LastIndexFastest ? "row-major" : "column-major";
}

DenseTensor parse_tensor(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("tensor file parse error at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) +
                          ": " + e.what());
    }
    if (!doc.is_object()) throw FormatError("tensor file must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "shape" && key != "order" && key != "data")
            throw FormatError("unexpected key \"" + key + "\" in tensor file");
    }
    if (!doc.contains("shape")) throw FormatError("tensor file is missing \"shape\"");
    if (!doc.contains("data")) throw FormatError("tensor file is missing \"data\"");

    Shape shape = parse_shape_field(doc["shape"]);
    const StorageOrder order = doc.contains("order") ? parse_order(doc["order"]) : StorageOrder::LastIndexFastest;

    const auto& data_field = doc["data"];
    if (!data_field.is_array()) throw FormatError("\"data\" must be an array");
    std::vector<Scalar> data;
    data.reserve(data_field.size());
    for (const auto& v : data_field) {
        if (!v.is_number()) throw FormatError("data entries must be numbers, got " + v.dump());
        data.push_back(v.get<Scalar>());
    }
    return DenseTensor(std::move(shape), std::move(data), order);
}

std::string serialize_tensor(const DenseTensor& t, StorageOrder order) {
    ordered_json doc;
    doc["shape"] = std::vector<std::size_t>(t.shape().dims().begin(), t.shape().dims().end());
    doc["order"] = order_name(order);
    auto data = ordered_json::array();
    for (Scalar v : t.elements(order)) {
        if (!std::isfinite(v)) throw FormatError("non-finite values cannot be written to a tensor file");
        if (v == std::trunc(v) && std::abs(v) <= kExactIntegerLimit && !(v == 0 && std::signbit(v))) {
            data.push_back(static_cast<std::int64_t>(v));
        } else {
            data.push_back(v);
        }
    }
    doc["data"] = std::move(data);
    return doc.dump() + "\n";
}

DenseTensor read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    try {
        return parse_tensor(buffer.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_tensor(const DenseTensor& t, const std::filesystem::path& path, StorageOrder order) {
    const std::string text = serialize_tensor(t, order);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace gvec::cli
