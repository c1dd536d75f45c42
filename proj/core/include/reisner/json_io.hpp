#pragma once

#include <string>

#include "json.hpp"

#include "reisner/betti.hpp"
#include "reisner/complex.hpp"
#include "reisner/monomial.hpp"
#include "reisner/serre.hpp"

namespace reisner {

using Json = nlohmann::json;

/// Parse text into JSON, wrapping syntax errors in ParseError.
Json parse_json_text(const std::string& text);

/// Load a JSON document from a file path.  Throws ParseError when the file
/// cannot be read or parsed.
Json load_json_file(const std::string& path);

enum class DocKind { complex, ideal };

/// Decide what a document describes: an explicit "kind" field wins, otherwise
/// the presence of "facets" vs "generators".
DocKind sniff_document(const Json& doc);

/// {"schema":1,"kind":"complex","facets":[[...],...]}; an optional
/// "num_vertices" declares the intended vertex range for the strict policy.
SimplicialComplex complex_from_json(const Json& doc,
                                    VertexPolicy policy = VertexPolicy::lenient);
Json to_json(const SimplicialComplex& c);

/// {"schema":1,"kind":"ideal","num_vars":n,"generators":[[...],...]}.
MonomialIdeal ideal_from_json(const Json& doc);
Json to_json(const MonomialIdeal& ideal);

Json to_json(const Face& f);
Json to_json(const ReducedBettiVector& bv);
Json to_json(const SerreReport& report);
Json to_json(const BettiTable& table);
Json to_json(const PolarizationResult& pol);
Json to_json(const LexSegmentIdeal& lex);

} // namespace reisner
