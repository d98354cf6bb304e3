#include "qdet/document.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace qdet {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return std::to_string(line);
}

BlockPartition parse_partition(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw ParseError("field \"" + field + "\" must be a non-empty array of positive integers");
    std::vector<int> sizes;
    sizes.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw ParseError("field \"" + field + "\" must contain positive integers");
        sizes.push_back(static_cast<int>(v.get<std::int64_t>()));
    }
    return BlockPartition(std::move(sizes));
}

std::pair<int, int> parse_block_key(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= key.size())
        throw ParseError("block key \"" + key + "\" is not of the form \"j,k\"");
    const auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const std::string js = key.substr(0, comma);
    const std::string ks = key.substr(comma + 1);
    if (!digits(js) || !digits(ks))
        throw ParseError("block key \"" + key + "\" is not of the form \"j,k\"");
    const int j = std::stoi(js);
    const int k = std::stoi(ks);
    if (j < 1 || k < 1) throw ParseError("block key \"" + key + "\" must use 1-based indices");
    return {j, k};
}

Rational parse_exact_component(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_float())
        throw ParseError(where + ": float literal in a quaternion-rational document");
    throw ParseError(where + ": component must be an integer or a \"p/q\" string");
}

double parse_float_component(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string())
        throw ParseError(where + ": string literal in a quaternion-float document");
    throw ParseError(where + ": component must be a JSON number");
}

template <typename Q, typename ComponentParser>
Mat<Q> parse_block(const json& value, int rows, int cols, const std::string& key, ComponentParser comp) {
    const std::string where = "block \"" + key + "\"";
    if (!value.is_array())
        throw ShapeError(where + ": expected an array of quaternion literals");
    if (static_cast<int>(value.size()) != rows * cols)
        throw ShapeError(where + ": expected " + std::to_string(rows * cols) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " block, got " +
                         std::to_string(value.size()));
    std::vector<Q> entries;
    entries.reserve(value.size());
    for (const auto& lit : value) {
        if (!lit.is_array() || lit.size() != 4)
            throw ShapeError(where + ": quaternion literal must be a 4-element array");
        entries.push_back(Q(comp(lit[0], where), comp(lit[1], where), comp(lit[2], where), comp(lit[3], where)));
    }
    return Mat<Q>(rows, cols, std::move(entries));
}

template <typename Q, typename ComponentParser>
TypedDocument<Q> parse_typed(const json& root, ComponentParser comp) {
    BlockPartition rows = parse_partition(root.at("partition"), "partition");
    bool explicit_cols = root.contains("col_partition");
    BlockPartition cols = explicit_cols ? parse_partition(root.at("col_partition"), "col_partition") : rows;
    TypedDocument<Q> doc(std::move(rows), std::move(cols), explicit_cols);

    if (!root.contains("blocks") || !root.at("blocks").is_object())
        throw ParseError("field \"blocks\" must be an object");
    for (const auto& [key, value] : root.at("blocks").items()) {
        const auto [j, k] = parse_block_key(key);
        if (j > doc.rows.count() || k > doc.cols.count())
            throw ShapeError("block \"" + key + "\" lies outside the " + std::to_string(doc.rows.count()) +
                                 "x" + std::to_string(doc.cols.count()) + " block grid",
                             {j, k});
        doc.blocks.emplace(std::make_pair(j, k),
                           parse_block<Q>(value, doc.rows.size(j), doc.cols.size(k), key, comp));
    }
    return doc;
}

json exact_component_to_json(const Rational& r) { return json(r.to_string()); }

json float_component_to_json(double x) { return json(x); }

template <typename Q, typename ComponentWriter>
ordered_json block_to_json(const Mat<Q>& b, ComponentWriter comp) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            const Q& q = b.at(i, j);
            arr.push_back(ordered_json::array({comp(q.a()), comp(q.b()), comp(q.c()), comp(q.d())}));
        }
    return arr;
}

template <typename Q, typename ComponentWriter>
std::string serialize_typed(const TypedDocument<Q>& doc, RingTag tag, ComponentWriter comp) {
    ordered_json root;
    root["ring"] = to_string(tag);
    root["partition"] = doc.rows.sizes();
    if (doc.explicit_col_partition || doc.rows != doc.cols) root["col_partition"] = doc.cols.sizes();
    ordered_json blocks = ordered_json::object();
    for (const auto& [key, b] : doc.blocks)
        blocks[std::to_string(key.first) + "," + std::to_string(key.second)] = block_to_json(b, comp);
    root["blocks"] = std::move(blocks);
    return root.dump(2) + "\n";
}

}  // namespace

std::string to_string(RingTag tag) {
    return tag == RingTag::quaternion_rational ? "quaternion-rational" : "quaternion-float";
}

RingTag ring_tag(const Document& doc) {
    return std::holds_alternative<ExactDocument>(doc) ? RingTag::quaternion_rational
                                                      : RingTag::quaternion_float;
}

Document parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON at line " + line_of(text, e.byte) + ": " + e.what());
    }
    if (!root.is_object()) throw ParseError("document must be a JSON object");
    if (!root.contains("ring") || !root.at("ring").is_string())
        throw ParseError("field \"ring\" must be a string");
    if (!root.contains("partition")) throw ParseError("field \"partition\" is required");

    const std::string ring = root.at("ring").get<std::string>();
    try {
        if (ring == "quaternion-rational")
            return parse_typed<ExactQuaternion>(root, parse_exact_component);
        if (ring == "quaternion-float")
            return parse_typed<FloatQuaternion>(root, parse_float_component);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    throw ParseError("unknown ring tag \"" + ring + "\"");
}

std::string serialize_document(const ExactDocument& doc) {
    return serialize_typed(doc, RingTag::quaternion_rational,
                           [](const Rational& r) { return exact_component_to_json(r); });
}

std::string serialize_document(const FloatDocument& doc) {
    return serialize_typed(doc, RingTag::quaternion_float,
                           [](double x) { return float_component_to_json(x); });
}

std::string serialize_block(const Mat<ExactQuaternion>& block) {
    return block_to_json(block, [](const Rational& r) { return exact_component_to_json(r); }).dump();
}

std::string serialize_block(const Mat<FloatQuaternion>& block) {
    return block_to_json(block, [](double x) { return float_component_to_json(x); }).dump();
}

}  // namespace qdet
