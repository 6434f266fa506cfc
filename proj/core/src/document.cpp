#include "mediankit/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mediankit/homs.hpp"

namespace mediankit {

using nlohmann::json;

namespace {

const char* kind_string(AlgebraDocument::Kind k) {
    switch (k) {
        case AlgebraDocument::Kind::Table: return "table";
        case AlgebraDocument::Kind::Poset: return "poset";
        case AlgebraDocument::Kind::Chain: return "chain";
        case AlgebraDocument::Kind::Product: return "product";
        case AlgebraDocument::Kind::BooleanCube: return "boolean-cube";
    }
    return "?";
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

std::vector<int> require_int_array(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("missing or non-array field \"") + field + "\"");
    std::vector<int> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer())
            throw ParseError(std::string("non-integer entry in \"") + field + "\"");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

MedianAlgebra AlgebraDocument::to_algebra() const {
    switch (kind) {
        case Kind::Table:
            return MedianAlgebra::from_table(n, table);
        case Kind::Poset:
            return median_from_semilattice(
                MeetSemilattice::from_poset(FinitePoset::from_covers(n, covers)));
        case Kind::Chain:
            return chain_algebra(length);
        case Kind::Product:
            return ProductOfChains{lengths}.algebra();
        case Kind::BooleanCube:
            return ProductOfChains{std::vector<int>(exponent, 2)}.algebra();
    }
    throw ValidationError("unknown document kind");
}

FinitePoset AlgebraDocument::to_poset() const {
    if (kind == Kind::Poset)
        return FinitePoset::from_covers(n, covers);
    return order_from_point(to_algebra(), 0).poset;
}

std::string AlgebraDocument::serialize() const {
    json j;
    j["kind"] = kind_string(kind);
    switch (kind) {
        case Kind::Table:
            j["n"] = n;
            j["table"] = table;
            break;
        case Kind::Poset: {
            j["n"] = n;
            auto pairs = json::array();
            for (auto [lo, hi] : covers)
                pairs.push_back(json::array({lo, hi}));
            j["covers"] = pairs;
            break;
        }
        case Kind::Chain:
            j["length"] = length;
            break;
        case Kind::Product:
            j["lengths"] = lengths;
            break;
        case Kind::BooleanCube:
            j["exponent"] = exponent;
            break;
    }
    return j.dump();
}

AlgebraDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("document must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();

    AlgebraDocument doc;
    if (kind == "table") {
        doc.kind = AlgebraDocument::Kind::Table;
        doc.n = require_int(j, "n");
        doc.table = require_int_array(j, "table");
    } else if (kind == "poset") {
        doc.kind = AlgebraDocument::Kind::Poset;
        doc.n = require_int(j, "n");
        if (!j.contains("covers") || !j["covers"].is_array())
            throw ParseError("missing or non-array field \"covers\"");
        for (const auto& pair : j["covers"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw ParseError("covers must be [lo, hi] integer pairs");
            doc.covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    } else if (kind == "chain") {
        doc.kind = AlgebraDocument::Kind::Chain;
        doc.length = require_int(j, "length");
    } else if (kind == "product") {
        doc.kind = AlgebraDocument::Kind::Product;
        doc.lengths = require_int_array(j, "lengths");
    } else if (kind == "boolean-cube") {
        doc.kind = AlgebraDocument::Kind::BooleanCube;
        doc.exponent = require_int(j, "exponent");
    } else {
        throw ParseError("unknown document kind \"" + kind + "\"");
    }

    doc.to_algebra(); // semantic validation is eager
    return doc;
}

AlgebraDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

} // namespace mediankit
