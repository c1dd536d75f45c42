#include "reisner/json_io.hpp"

#include <fstream>
#include <sstream>

namespace reisner {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

DocKind sniff_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (doc.contains("kind")) {
        if (!doc["kind"].is_string())
            throw ParseError("\"kind\" must be a string");
        std::string kind = doc["kind"].get<std::string>();
        if (kind == "complex") return DocKind::complex;
        if (kind == "ideal") return DocKind::ideal;
        throw ParseError("unknown document kind \"" + kind + "\"");
    }
    if (doc.contains("facets")) return DocKind::complex;
    if (doc.contains("generators")) return DocKind::ideal;
    throw ParseError("document has neither \"facets\" nor \"generators\"");
}

namespace {

std::vector<std::vector<int>> int_lists(const Json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& inner : arr) {
        if (!inner.is_array())
            throw ParseError(std::string(what) + " entries must be arrays");
        std::vector<int> row;
        for (const auto& v : inner) {
            if (!v.is_number_integer())
                throw ParseError(std::string(what) + " entries must hold integers");
            row.push_back(v.get<int>());
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

SimplicialComplex complex_from_json(const Json& doc, VertexPolicy policy) {
    if (!doc.is_object() || !doc.contains("facets"))
        throw ParseError("complex document needs a \"facets\" array");
    std::optional<int> declared;
    if (doc.contains("num_vertices")) {
        if (!doc["num_vertices"].is_number_integer())
            throw ParseError("\"num_vertices\" must be an integer");
        declared = doc["num_vertices"].get<int>();
    }
    auto lists = int_lists(doc["facets"], "\"facets\"");
    try {
        return build_complex(lists, policy, declared);
    } catch (const ParameterError& e) {
        throw ParseError(e.what()); // bad ids inside a document are input errors
    }
}

Json to_json(const Face& f) {
    Json arr = Json::array();
    for (int v : f.vertices()) arr.push_back(v);
    return arr;
}

Json to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (const Face& f : c.facets()) facets.push_back(to_json(f));
    return Json{{"schema", 1}, {"kind", "complex"}, {"facets", facets}};
}

MonomialIdeal ideal_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("generators"))
        throw ParseError("ideal document needs a \"generators\" array");
    if (!doc.contains("num_vars") || !doc["num_vars"].is_number_integer())
        throw ParseError("ideal document needs an integer \"num_vars\"");
    int n = doc["num_vars"].get<int>();
    auto gens = int_lists(doc["generators"], "\"generators\"");
    try {
        return MonomialIdeal::from_generators(n, std::move(gens));
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g);
    return Json{{"schema", 1},
                {"kind", "ideal"},
                {"num_vars", ideal.num_vars()},
                {"generators", gens}};
}

Json to_json(const ReducedBettiVector& bv) {
    Json values = Json::array();
    for (int i = -1; i <= bv.max_index(); ++i) values.push_back(bv.at(i));
    return Json{{"min_index", -1}, {"values", values}};
}

Json to_json(const SerreReport& report) {
    Json witness;
    if (report.witness)
        witness = Json{{"face", to_json(report.witness->face)},
                       {"index", report.witness->index}};
    return Json{{"characteristic", report.characteristic},
                {"level", report.level},
                {"depth", report.depth},
                {"krull_dim", report.krull_dim},
                {"cohen_macaulay", report.cohen_macaulay},
                {"witness", witness}};
}

Json to_json(const BettiTable& table) {
    Json entries = Json::array();
    for (const auto& [key, val] : table.entries())
        entries.push_back(Json::array({key.first, key.second, val}));
    Json out{{"characteristic", table.characteristic},
             {"num_vars", table.num_vars},
             {"krull_dim", table.krull_dim},
             {"depth_shift", table.depth_shift},
             {"partial", table.partial},
             {"entries", entries}};
    if (table.partial) {
        out["degree_cap"] = table.degree_cap;
    } else {
        out["projective_dimension"] = table.projective_dimension();
        out["regularity"] = table.regularity();
        out["depth"] = table.depth();
    }
    return out;
}

Json to_json(const PolarizationResult& pol) {
    Json excluded = Json::array();
    for (int v : pol.excluded_vertices) excluded.push_back(v);
    return Json{{"source_vars", pol.source_vars},
                {"max_exponent", pol.max_exponent},
                {"depth_shift", pol.depth_shift},
                {"excluded_vertices", excluded},
                {"polarized", to_json(pol.polarized)},
                {"complex", to_json(pol.complex)}};
}

Json to_json(const LexSegmentIdeal& lex) {
    Json target = Json::array();
    for (auto v : lex.target) target.push_back(v);
    return Json{{"num_vars", lex.ideal.num_vars()},
                {"up_to", lex.up_to},
                {"target", target},
                {"ideal", to_json(lex.ideal)}};
}

} // namespace reisner
