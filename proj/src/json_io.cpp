#include "ecirr/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ecirr/error.hpp"

namespace ecirr::json_io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object()) fail(ErrorCode::kParse, std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(ErrorCode::kParse, std::string("missing key '") + key + "'");
    return *it;
}

i64 as_int(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<i64>();
    if (j.is_number_unsigned()) {
        const auto v = j.get<u64>();
        if (v > static_cast<u64>(std::numeric_limits<i64>::max())) fail(ErrorCode::kParse, std::string(what) + " too large");
        return static_cast<i64>(v);
    }
    fail(ErrorCode::kParse, std::string(what) + " must be an integer");
}

u64 as_uint(const json& j, const char* what) {
    const i64 v = as_int(j, what);
    if (v < 0) fail(ErrorCode::kParse, std::string(what) + " must be nonnegative");
    return static_cast<u64>(v);
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kIo, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        fail(ErrorCode::kParse, path + ": " + e.what());
    }
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::kParse, e.what());
    }
}

FieldCtx field_from_json(const json& j) {
    const u64 p = as_uint(require(j, "p"), "p");
    const u64 n = j.contains("n") ? as_uint(j.at("n"), "n") : 1;
    if (n == 0 || n > std::numeric_limits<unsigned>::max()) fail(ErrorCode::kParse, "bad extension degree");
    if (n == 1 && !j.contains("modulus")) return FieldCtx::prime(p);
    const json& mod = require(j, "modulus");
    if (!mod.is_array()) fail(ErrorCode::kParse, "modulus must be an array");
    std::vector<i64> coeffs;
    for (const auto& c : mod) coeffs.push_back(as_int(c, "modulus coefficient"));
    return FieldCtx::make(p, static_cast<unsigned>(n), coeffs);
}

json to_json(const FieldCtx& k) {
    return {{"p", k.p()}, {"n", k.n()}, {"modulus", k.modulus()}};
}

Elem elem_from_json(const FieldCtx& k, const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return k.from_int(as_int(j, "field element"));
    if (j.is_array()) {
        std::vector<u64> coeffs;
        for (const auto& c : j) {
            const i64 v = as_int(c, "field element coefficient");
            coeffs.push_back(k.from_int(v).v);
        }
        return k.from_coeffs(coeffs);
    }
    fail(ErrorCode::kParse, "field element must be an integer or an array");
}

json to_json(const FieldCtx& k, Elem x) {
    if (k.n() == 1) return x.v;
    return k.coeffs(x);
}

Poly poly_from_json(const FieldCtx& k, const json& j) {
    if (!j.is_array()) fail(ErrorCode::kParse, "polynomial must be an array of coefficients");
    std::vector<Elem> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(elem_from_json(k, e));
    return Poly(k, std::move(c));
}

json to_json(const Poly& f) {
    json arr = json::array();
    for (Elem e : f.coeffs()) arr.push_back(to_json(f.ctx(), e));
    return arr;
}

std::optional<FieldCtx> embedded_field(const json& j) {
    if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
    return std::nullopt;
}

RationalMap map_from_json(const FieldCtx& k, const json& j) {
    Poly a = poly_from_json(k, require(j, "a"));
    Poly b = poly_from_json(k, require(j, "b"));
    const u64 l = as_uint(require(j, "l"), "l");
    std::optional<YMap> s;
    if (j.contains("s_num") || j.contains("s_den")) {
        s = YMap{poly_from_json(k, require(j, "s_num")), poly_from_json(k, require(j, "s_den"))};
    }
    return RationalMap::make(std::move(a), std::move(b), static_cast<unsigned>(l), std::move(s));
}

json to_json(const RationalMap& m) {
    json j{{"a", to_json(m.a())}, {"b", to_json(m.b())}, {"l", m.degree()}, {"field", to_json(m.ctx())}};
    if (m.y_map()) {
        j["s_num"] = to_json(m.y_map()->num);
        j["s_den"] = to_json(m.y_map()->den);
    }
    return j;
}

Curve curve_from_json(const json& j, const std::optional<FieldCtx>& field) {
    std::optional<FieldCtx> k = field ? field : embedded_field(j);
    if (!k) fail(ErrorCode::kParse, "curve has no field and none was supplied");
    return Curve::make(*k, elem_from_json(*k, require(j, "A")), elem_from_json(*k, require(j, "B")));
}

json to_json(const Curve& c) {
    return {{"A", to_json(c.ctx(), c.A())}, {"B", to_json(c.ctx(), c.B())}, {"field", to_json(c.ctx())}};
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<u64>()));
        return mpz_class(std::to_string(j.get<i64>()));
    }
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::kParse, "bad integer string");
        return v;
    }
    fail(ErrorCode::kParse, "integer must be a number or a decimal string");
}

json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<i64>(v.get_si());
    return v.get_str();
}

QuadInt qint_from_json(const json& j) {
    const i64 D = as_int(require(j, "D"), "D");
    return QuadInt(QuadOrder::make(static_cast<long>(D)), mpz_from_json(require(j, "c0")), mpz_from_json(require(j, "c1")));
}

json to_json(const QuadInt& x) {
    return {{"D", x.order().D()}, {"c0", mpz_to_json(x.c0())}, {"c1", mpz_to_json(x.c1())}};
}

json to_json(const ProjPoint& pt, const FieldCtx& k) {
    if (pt.is_infinity()) return "inf";
    return to_json(k, pt.x());
}

json to_json(const CurvePoint& P, const FieldCtx& k) {
    if (P.is_identity()) return "O";
    return json::array({to_json(k, P.x()), to_json(k, P.y())});
}

json to_json(const Factorization& fac, const FieldCtx& k) {
    json factors = json::array();
    for (const auto& e : fac.factors) {
        factors.push_back({{"degree", e.factor.degree()}, {"multiplicity", e.multiplicity}, {"poly", to_json(e.factor)}});
    }
    return {{"unit", to_json(k, fac.unit)}, {"factors", factors}};
}

json to_json(const EndomorphismReport& rep) {
    return {{"passed", rep.passed()},
            {"exhaustive", rep.exhaustive},
            {"points_checked", rep.points_checked},
            {"x_failures", rep.x_failures},
            {"degree_ok", rep.degree_ok},
            {"degree_detail", rep.degree_detail},
            {"y_map_checked", rep.y_map_checked},
            {"y_points_checked", rep.y_points_checked},
            {"y_not_on_curve", rep.y_not_on_curve},
            {"pairs_checked", rep.pairs_checked},
            {"additivity_failures", rep.additivity_failures},
            {"max_fiber", rep.max_fiber}};
}

json to_json(const CurveOrderData& data) { return {{"points", data.count}, {"trace", data.trace}}; }

json to_json(const Valuation& v) { return {{"k", v.k}, {"cofactor", to_json(v.cofactor)}}; }

json to_json(const ValLemmaReport& rep) {
    return {{"base", rep.base}, {"values", rep.values}, {"hypothesis_met", rep.hypothesis_met}, {"holds", rep.holds}};
}

json to_json(const TreeProfile& t, const FieldCtx& k) {
    json leaves = json::object();
    for (const auto& [h, count] : t.leaf_heights) leaves[std::to_string(h)] = count;
    return {{"root", to_json(t.root, k)},
            {"depth", t.depth},
            {"size", t.size},
            {"leaf_heights", leaves},
            {"in_subfield", t.in_subfield}};
}

json to_json(const DepthSummary& s) {
    return {{"trees", s.trees},
            {"uniform_depth", s.uniform_depth},
            {"uniform_leaves", s.uniform_leaves},
            {"depth", s.depth},
            {"min_depth", s.min_depth},
            {"max_depth", s.max_depth}};
}

json graph_summary(const FunctionalGraph& g, unsigned subfield_deg) {
    const auto all = all_tree_profiles(g, subfield_deg);
    std::vector<TreeProfile> sub;
    for (const auto& t : all) {
        if (t.in_subfield) sub.push_back(t);
    }
    json comps = json::array();
    for (const auto& c : g.components()) comps.push_back({{"cycle_length", c.cycle.size()}, {"size", c.size}});
    json profiles = json::array();
    for (const auto& t : sub) profiles.push_back(to_json(t, g.field()));
    return {{"field", to_json(g.field())},
            {"nodes", g.node_count()},
            {"components", comps},
            {"subfield_deg", subfield_deg},
            {"subfield_trees", to_json(summarize(sub))},
            {"all_trees", to_json(summarize(all))},
            {"subfield_profiles", profiles}};
}

json poly_digest(const Poly& f) {
    return {{"degree", f.degree()}, {"fingerprint", hex64(fingerprint(f))}};
}

json to_json(const SequenceRun& run, std::size_t full_cap) {
    json polys = json::array();
    for (std::size_t i = 0; i < run.polys.size(); ++i) {
        const Poly& f = run.polys[i];
        json entry = poly_digest(f);
        entry["index"] = i;
        entry["phase"] = std::string(phase_name(run.phases[i]));
        entry["origin"] = std::string(origin_name(run.origins[i]));
        entry["verified_irreducible"] = static_cast<bool>(run.verified[i]);
        if (static_cast<std::size_t>(f.degree()) <= full_cap) entry["poly"] = to_json(f);
        polys.push_back(std::move(entry));
    }
    json j{{"polys", polys},
           {"retries", run.retries},
           {"first_choice", run.first_choice},
           {"factorizations", run.factorizations},
           {"factorizations_after_first", run.factorizations_after_first},
           {"abandoned", run.abandoned}};
    j["switch_index"] = run.switch_index ? json(*run.switch_index) : json(nullptr);
    return j;
}

}  // namespace ecirr::json_io
