#ifndef ECIRR_JSON_IO_HPP
#define ECIRR_JSON_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "ecirr/curve.hpp"
#include "ecirr/graph.hpp"
#include "ecirr/quadorder.hpp"
#include "ecirr/sequence.hpp"

namespace ecirr::json_io {

using nlohmann::json;

// Readers throw Error(kParse) on malformed documents and let domain errors
// from the constructors through unchanged.

/// Reads and parses a file (Io, Parse).
json load_file(const std::string& path);
/// Parses text (Parse).
json parse(const std::string& text);

/// {"p": 83, "n": 1, "modulus": [0, 1]}; n defaults to 1.
FieldCtx field_from_json(const json& j);
json to_json(const FieldCtx& k);

/// An integer (prime subfield) or an array of t-coefficients.
Elem elem_from_json(const FieldCtx& k, const json& j);
json to_json(const FieldCtx& k, Elem x);

/// Little-endian array of elements.
Poly poly_from_json(const FieldCtx& k, const json& j);
json to_json(const Poly& f);

/// {"a": [...], "b": [...], "l": 17, "s_num"?, "s_den"?, "field"?}
RationalMap map_from_json(const FieldCtx& k, const json& j);
json to_json(const RationalMap& m);
/// The "field" entry of a map or curve document, if any.
std::optional<FieldCtx> embedded_field(const json& j);

/// {"A": 56, "B": 34, "field": {...}}; `field` overrides the embedded one.
Curve curve_from_json(const json& j, const std::optional<FieldCtx>& field = std::nullopt);
json to_json(const Curve& c);

/// {"D": -19, "c0": 4, "c1": -1}; coordinates may be numbers or decimal strings.
QuadInt qint_from_json(const json& j);
json to_json(const QuadInt& x);
/// Integers that fit in 64 bits as numbers, larger ones as strings.
json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json to_json(const ProjPoint& pt, const FieldCtx& k);
json to_json(const CurvePoint& P, const FieldCtx& k);
json to_json(const Factorization& fac, const FieldCtx& k);
json to_json(const EndomorphismReport& rep);
json to_json(const CurveOrderData& data);
json to_json(const Valuation& v);
json to_json(const ValLemmaReport& rep);
json to_json(const TreeProfile& t, const FieldCtx& k);
json to_json(const DepthSummary& s);
/// Components and depth summaries; per-node data is left out.
json graph_summary(const FunctionalGraph& g, unsigned subfield_deg);

/// Polynomials with degree above full_cap are written as degree + digest.
json to_json(const SequenceRun& run, std::size_t full_cap);
json poly_digest(const Poly& f);

}  // namespace ecirr::json_io

#endif  // ECIRR_JSON_IO_HPP
