// ecirr command-line front end. Talks to the library only through ecirr.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ecirr.h"

#ifndef ECIRR_DEFAULT_DATA_DIR
#define ECIRR_DEFAULT_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kInlineDegree = 64;

struct DomainError {
    int status;
    std::string message;
};

void check(ecirr_status st) {
    if (st != ECIRR_OK) throw DomainError{st, ecirr_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Field = std::unique_ptr<ecirr_field, Deleter<ecirr_field, ecirr_field_free>>;
using PolyH = std::unique_ptr<ecirr_poly, Deleter<ecirr_poly, ecirr_poly_free>>;
using MapH = std::unique_ptr<ecirr_map, Deleter<ecirr_map, ecirr_map_free>>;
using CurveH = std::unique_ptr<ecirr_curve, Deleter<ecirr_curve, ecirr_curve_free>>;
using QintH = std::unique_ptr<ecirr_qint, Deleter<ecirr_qint, ecirr_qint_free>>;
using GraphH = std::unique_ptr<ecirr_graph, Deleter<ecirr_graph, ecirr_graph_free>>;
using SeqH = std::unique_ptr<ecirr_sequence, Deleter<ecirr_sequence, ecirr_sequence_free>>;

std::string take(char* s) {
    std::string out(s ? s : "");
    ecirr_string_free(s);
    return out;
}

json take_json(char* s) { return json::parse(take(s)); }

/// Inline JSON when the argument starts like a document, otherwise a file path.
std::string json_text(const std::string& arg) {
    const auto pos = arg.find_first_not_of(" \t\n");
    if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[' || arg[pos] == '"' ||
                                     arg[pos] == '-' || std::isdigit(static_cast<unsigned char>(arg[pos])))) {
        return arg;
    }
    char* s = nullptr;
    check(ecirr_read_file(arg.c_str(), &s));
    return take(s);
}

/// A field document, or any document with a "field" entry (curve, map).
Field load_field(const std::string& arg) {
    std::string text = json_text(arg);
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_object() && doc.contains("field") && doc["field"].is_object()) text = doc["field"].dump();
    ecirr_field* k = nullptr;
    check(ecirr_field_from_json(text.c_str(), &k));
    return Field(k);
}

Field field_of(const MapH& m) {
    ecirr_field* k = nullptr;
    check(ecirr_map_field(m.get(), &k));
    return Field(k);
}

MapH load_map(const std::string& arg, const ecirr_field* k) {
    ecirr_map* m = nullptr;
    check(ecirr_map_from_json(k, json_text(arg).c_str(), &m));
    return MapH(m);
}

CurveH load_curve(const std::string& arg, const ecirr_field* k) {
    ecirr_curve* c = nullptr;
    check(ecirr_curve_from_json(k, json_text(arg).c_str(), &c));
    return CurveH(c);
}

PolyH load_poly(const std::string& arg, const ecirr_field* k) {
    ecirr_poly* f = nullptr;
    std::string text = json_text(arg);
    // Accept a field document with a modulus as the polynomial.
    json j = json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("modulus")) text = j["modulus"].dump();
    check(ecirr_poly_from_json(k, text.c_str(), &f));
    return PolyH(f);
}

QintH parse_qint(long D, const std::string& arg) {
    std::string text = arg;
    json j = json::parse(text, nullptr, false);
    ecirr_qint* x = nullptr;
    if (j.is_object()) {
        if (!j.contains("D")) j["D"] = D;
        check(ecirr_qint_from_json(j.dump().c_str(), &x));
        return QintH(x);
    }
    // "c0,c1" or a two-element array
    std::string c0, c1;
    if (j.is_array() && j.size() == 2) {
        c0 = j[0].is_string() ? j[0].get<std::string>() : j[0].dump();
        c1 = j[1].is_string() ? j[1].get<std::string>() : j[1].dump();
    } else {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("quadratic integer", "expected c0,c1");
        c0 = text.substr(0, comma);
        c1 = text.substr(comma + 1);
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" ("));
            s.erase(s.find_last_not_of(" )") + 1);
        };
        trim(c0);
        trim(c1);
    }
    check(ecirr_qint_new(D, c0.c_str(), c1.c_str(), &x));
    return QintH(x);
}

std::string hex(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string describe_poly(const ecirr_poly* f, bool full) {
    const int deg = ecirr_poly_degree(f);
    if (full || deg <= kInlineDegree) {
        char* s = nullptr;
        check(ecirr_poly_to_json(f, &s));
        return "degree " + std::to_string(deg) + ": " + take(s);
    }
    return "degree " + std::to_string(deg) + ", fingerprint " + hex(ecirr_poly_fingerprint(f));
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DomainError{ECIRR_IO, "Io: cannot write " + path.string()};
    out << text << '\n';
}

struct Globals {
    uint64_t seed = 0;
    bool full = false;
};

// ---- iterate -------------------------------------------------------------

struct IterateArgs {
    std::string map, field, f0, selection = "largest-degree", out_dir, emit = "text", verify = "auto";
    uint64_t target = 3;
    int64_t k0 = -1;
    uint64_t max_sub1_steps = 12;
};

SeqH run_sequence(const MapH& m, const PolyH& f0, uint64_t target, const std::string& selection, int64_t k0,
                  uint64_t max_steps, const std::string& verify, uint64_t seed) {
    ecirr_sequence_options o;
    ecirr_sequence_options_init(&o);
    o.k0 = k0;
    o.selection = selection.c_str();
    o.max_sub1_steps = max_steps;
    o.verify_sub2 = verify == "on" ? 1 : verify == "off" ? 0 : -1;
    o.seed = seed;
    ecirr_sequence* s = nullptr;
    check(ecirr_sequence_run(m.get(), f0.get(), target, &o, &s));
    return SeqH(s);
}

int cmd_iterate(const IterateArgs& a, const Globals& g) {
    Field k = a.field.empty() ? Field() : load_field(a.field);
    MapH m = load_map(a.map, k.get());
    Field mk = field_of(m);
    PolyH f0 = load_poly(a.f0, mk.get());
    SeqH s = run_sequence(m, f0, a.target, a.selection, a.k0, a.max_sub1_steps, a.verify, g.seed);

    if (!a.out_dir.empty()) {
        fs::create_directories(a.out_dir);
        for (size_t i = 0; i < ecirr_sequence_length(s.get()); ++i) {
            ecirr_poly* f = nullptr;
            check(ecirr_sequence_poly(s.get(), i, &f));
            PolyH fh(f);
            char* txt = nullptr;
            check(ecirr_poly_to_json(f, &txt));
            write_file(fs::path(a.out_dir) / ("f_" + std::to_string(i) + ".json"), take(txt));
        }
    }

    char* js = nullptr;
    check(ecirr_sequence_json(s.get(), g.full ? SIZE_MAX : kInlineDegree, &js));
    json report = take_json(js);
    if (a.emit == "json") {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    std::cout << "i  phase  degree  fingerprint       origin     irreducibility\n";
    for (const auto& e : report["polys"]) {
        std::printf("%-2llu %-6s %-7d %s  %-9s  %s\n", static_cast<unsigned long long>(e["index"].get<uint64_t>()),
                    e["phase"].get<std::string>().c_str(), e["degree"].get<int>(),
                    e["fingerprint"].get<std::string>().c_str(), e["origin"].get<std::string>().c_str(),
                    e["verified_irreducible"].get<bool>() ? "checked"
                    : e["origin"] == "factor"              ? "factor of f^r"
                                                           : "not checked");
    }
    std::cout << "retries: " << report["retries"] << ", factorizations: " << report["factorizations"]
              << " (after f_1: " << report["factorizations_after_first"] << ")\n";
    if (g.full) {
        for (const auto& e : report["polys"]) std::cout << "f_" << e["index"] << " = " << e["poly"].dump() << '\n';
    }
    return 0;
}

// ---- transform / factor ---------------------------------------------------

int cmd_transform(const std::string& map_arg, const std::string& field_arg, const std::string& poly_arg,
                  const std::string& emit, const Globals& g) {
    Field k = field_arg.empty() ? Field() : load_field(field_arg);
    MapH m = load_map(map_arg, k.get());
    Field mk = field_of(m);
    PolyH f = load_poly(poly_arg, mk.get());
    ecirr_poly* out = nullptr;
    check(ecirr_map_transform(m.get(), f.get(), &out));
    PolyH r(out);
    if (emit == "json") {
        char* s = nullptr;
        check(ecirr_poly_to_json(r.get(), &s));
        json j{{"degree", ecirr_poly_degree(r.get())},
               {"fingerprint", hex(ecirr_poly_fingerprint(r.get()))},
               {"poly", take_json(s)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << describe_poly(r.get(), g.full) << '\n';
    }
    return 0;
}

int cmd_factor(const std::string& field_arg, uint64_t p, const std::string& poly_arg, const std::string& emit,
               const Globals& g) {
    Field k;
    if (!field_arg.empty()) {
        k = load_field(field_arg);
    } else {
        ecirr_field* raw = nullptr;
        check(ecirr_field_new(p, 1, nullptr, 0, &raw));
        k.reset(raw);
    }
    PolyH f = load_poly(poly_arg, k.get());
    char* s = nullptr;
    check(ecirr_poly_factor_json(f.get(), g.seed, &s));
    json fac = take_json(s);
    if (emit == "json") {
        std::cout << fac.dump(2) << '\n';
        return 0;
    }
    std::cout << "unit " << fac["unit"].dump() << '\n';
    for (const auto& e : fac["factors"]) {
        std::cout << "degree " << e["degree"] << " multiplicity " << e["multiplicity"];
        if (g.full || e["degree"].get<int>() <= kInlineDegree) std::cout << ": " << e["poly"].dump();
        std::cout << '\n';
    }
    return 0;
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
    std::string map, field, emit = "summary", start;
    unsigned degree = 0;
    unsigned subfield_deg = 1;
};

int cmd_graph(const GraphArgs& a) {
    MapH m = load_map(a.map, nullptr);
    Field k;
    if (!a.field.empty()) {
        k = load_field(a.field);
    } else if (a.degree > 0) {
        Field mk = field_of(m);
        ecirr_field* raw = nullptr;
        check(ecirr_field_standard(ecirr_field_p(mk.get()), a.degree, &raw));
        k.reset(raw);
    } else {
        k = field_of(m);
    }
    ecirr_graph* raw = nullptr;
    check(ecirr_graph_build(m.get(), k.get(), &raw));
    GraphH gh(raw);

    if (!a.start.empty()) {
        char* s = nullptr;
        check(ecirr_graph_trajectory_json(gh.get(), a.start.c_str(), &s));
        json t = take_json(s);
        if (a.emit == "json") {
            std::cout << t.dump(2) << '\n';
        } else {
            std::cout << "tail (" << t["tail"].size() << "): " << t["tail"].dump() << '\n';
            std::cout << "cycle (" << t["cycle"].size() << "): " << t["cycle"].dump() << '\n';
        }
        return 0;
    }
    if (a.emit == "dot") {
        char* s = nullptr;
        check(ecirr_graph_dot(gh.get(), &s));
        std::cout << take(s);
        return 0;
    }
    char* s = nullptr;
    check(ecirr_graph_summary_json(gh.get(), a.subfield_deg, &s));
    json sum = take_json(s);
    if (a.emit == "json") {
        std::cout << sum.dump(2) << '\n';
        return 0;
    }
    const auto& st = sum["subfield_trees"];
    const auto& all = sum["all_trees"];
    std::cout << "nodes: " << sum["nodes"] << ", components: " << sum["components"].size() << '\n';
    std::cout << "subfield-rooted trees (subfield degree " << a.subfield_deg << "): " << st["trees"]
              << ", depth range [" << st["min_depth"] << ", " << st["max_depth"] << "]"
              << (st["uniform_leaves"].get<bool>() ? ", uniform depth and leaf height" : ", NOT uniform") << '\n';
    std::cout << "all trees: " << all["trees"] << ", depth range [" << all["min_depth"] << ", " << all["max_depth"]
              << "]" << (all["uniform_leaves"].get<bool>() ? ", uniform" : ", not uniform") << '\n';
    return 0;
}

// ---- curves ---------------------------------------------------------------

int cmd_verify_endo(const std::string& curve_arg, const std::string& map_arg, const std::string& field_arg,
                    uint64_t samples, const std::string& emit, const Globals& g) {
    Field k = field_arg.empty() ? Field() : load_field(field_arg);
    CurveH c = load_curve(curve_arg, k.get());
    MapH m = load_map(map_arg, nullptr);
    char* s = nullptr;
    check(ecirr_curve_verify_endo_json(c.get(), m.get(), samples, g.seed, &s));
    json rep = take_json(s);
    if (emit == "json") {
        std::cout << rep.dump(2) << '\n';
    } else {
        std::cout << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << ": "
                  << (rep["exhaustive"].get<bool>() ? "exhaustive" : "sampled") << ", " << rep["points_checked"]
                  << " points, " << rep["x_failures"] << " x-failures, degree " << rep["degree_detail"].get<std::string>();
        if (rep["y_map_checked"].get<bool>()) {
            std::cout << ", y-map off-curve " << rep["y_not_on_curve"] << ", additivity failures "
                      << rep["additivity_failures"] << "/" << rep["pairs_checked"];
        }
        std::cout << '\n';
    }
    return rep["passed"].get<bool>() ? 0 : kExitDomain;
}

int cmd_count_points(const std::string& curve_arg, const std::string& field_arg, const std::string& emit) {
    Field k = field_arg.empty() ? Field() : load_field(field_arg);
    CurveH c = load_curve(curve_arg, k.get());
    char* s = nullptr;
    check(ecirr_curve_count_points_json(c.get(), &s));
    json r = take_json(s);
    if (emit == "json") {
        std::cout << r.dump(2) << '\n';
    } else {
        std::cout << "#E = " << r["points"] << ", trace = " << r["trace"]
                  << (r["ordinary"].get<bool>() ? ", ordinary" : ", supersingular") << '\n';
    }
    return 0;
}

// ---- valuation --------------------------------------------------------------

int cmd_valuation(long D, const std::string& alpha_arg, const std::string& beta_arg, bool lemma,
                  const std::string& emit) {
    QintH alpha = parse_qint(D, alpha_arg);
    QintH beta = parse_qint(D, beta_arg);
    char* s = nullptr;
    if (lemma) {
        char* n = nullptr;
        check(ecirr_qint_norm(alpha.get(), &n));
        const uint64_t l = std::stoull(take(n));
        check(ecirr_val_lemma_json(beta.get(), alpha.get(), l, &s));
        json rep = take_json(s);
        if (emit == "json") {
            std::cout << rep.dump(2) << '\n';
        } else {
            std::cout << "nu_alpha(delta^e - 1), e = 1.." << l << ": " << rep["values"].dump() << '\n';
            if (!rep["hypothesis_met"].get<bool>()) {
                std::cout << "alpha does not divide delta - 1; the identity does not apply\n";
            } else {
                std::cout << (rep["holds"].get<bool>() ? "lemma holds" : "lemma FAILS") << '\n';
            }
        }
        return !rep["hypothesis_met"].get<bool>() || rep["holds"].get<bool>() ? 0 : kExitDomain;
    }
    check(ecirr_qint_valuation_json(beta.get(), alpha.get(), &s));
    json v = take_json(s);
    if (emit == "json") {
        std::cout << v.dump(2) << '\n';
    } else {
        auto str = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        std::cout << "nu_alpha = " << v["k"] << ", cofactor = (" << str(v["cofactor"]["c0"]) << ", "
                  << str(v["cofactor"]["c1"]) << ")\n";
    }
    return 0;
}

// ---- reproduce-paper ---------------------------------------------------------

struct ReproArgs {
    std::string data_dir, selection = "largest-degree", emit = "text", verify = "auto";
    uint64_t target = 3;
};

class Report {
public:
    explicit Report(bool text) : text_(text) {}

    bool check(const std::string& name, bool ok, const std::string& detail) {
        checks_.push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
        if (text_) std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << std::endl;
        if (!ok && !failed_) failed_ = name;
        return ok;
    }
    void info(const std::string& name, const std::string& detail) {
        info_[name] = detail;
        if (text_) std::cout << "[INFO] " << name << ": " << detail << std::endl;
    }
    bool passed() const { return !failed_; }
    json to_json() const {
        json j{{"passed", passed()}, {"checks", checks_}, {"info", info_}};
        if (failed_) j["first_failure"] = *failed_;
        return j;
    }

private:
    bool text_;
    json checks_ = json::array();
    json info_ = json::object();
    std::optional<std::string> failed_;
};

int cmd_reproduce(const ReproArgs& a, const Globals& g) {
    const fs::path dir = a.data_dir;
    const bool text = a.emit != "json";
    Report rep(text);
    json extra = json::object();

    auto finish = [&]() {
        if (!text) {
            json j = rep.to_json();
            j.update(extra);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "RESULT: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
        }
        return rep.passed() ? 0 : kExitDomain;
    };

    // Curve checks.
    CurveH c;
    try {
        c = load_curve((dir / "f83_curve.json").string(), nullptr);
        rep.check("nonsingular", true, "y^2 = x^3 + 56x + 34 over F_83, 4A^3 + 27B^2 != 0");
    } catch (const DomainError& e) {
        rep.check("nonsingular", false, e.message);
        return finish();
    }
    char* s = nullptr;
    check(ecirr_curve_count_points_json(c.get(), &s));
    const json cnt = take_json(s);
    const int64_t t = cnt["trace"].get<int64_t>();
    rep.check("ordinary", cnt["ordinary"].get<bool>(),
              "#E(F_83) = " + cnt["points"].dump() + ", trace t = " + std::to_string(t));

    // Endomorphism.
    MapH m = load_map((dir / "f83_l17.json").string(), nullptr);
    check(ecirr_curve_verify_endo_json(c.get(), m.get(), 64, g.seed, &s));
    const json endo = take_json(s);
    rep.check("endomorphism", endo["passed"].get<bool>(),
              std::string(endo["exhaustive"].get<bool>() ? "exhaustive" : "sampled") + " over F_83: " +
                  endo["points_checked"].dump() + " x-coordinates with points, " + endo["x_failures"].dump() + " x-failures, degree " +
                  endo["degree_detail"].get<std::string>() + ", max fiber " + endo["max_fiber"].dump());
    if (!rep.passed()) return finish();

    // Congruence condition, under both readings of q.
    const json cm = json::parse(json_text((dir / "f83_cm.json").string()));
    const uint64_t l = cm["l"].get<uint64_t>();
    const uint64_t d = cm["d"].get<uint64_t>();
    const uint64_t q_nd = ecirr_mod_pow(83, d, l);
    const uint64_t q_2nd = ecirr_mod_pow(83, 2 * d, l);
    rep.check("q mod l", q_nd != 1,
              "83^" + std::to_string(d) + " mod " + std::to_string(l) + " = " + std::to_string(q_nd) + " != 1");
    rep.info("q mod l (q = p^2nd)", "83^" + std::to_string(2 * d) + " mod " + std::to_string(l) + " = " +
                                        std::to_string(q_2nd));

    // k0 from the order: max over both Frobenius conjugates.
    const long D = cm["D"].get<long>();
    ecirr_qint *pi_raw = nullptr, *pic_raw = nullptr;
    check(ecirr_frobenius_from_trace(D, static_cast<long>(t), "83", &pi_raw, &pic_raw));
    QintH pi(pi_raw), pic(pic_raw);
    QintH alpha = parse_qint(D, cm["alpha"].dump());
    uint64_t k_pi = 0, k_conj = 0;
    check(ecirr_k0_candidates(pi.get(), alpha.get(), d, &k_pi, &k_conj));
    const uint64_t k0 = std::max(k_pi, k_conj);
    rep.info("k0", std::to_string(k0) + " (nu_alpha(pi^2d - 1) = " + std::to_string(k_pi) +
                       ", conjugate " + std::to_string(k_conj) + ")");

    // Sequence.
    PolyH f0 = load_poly((dir / "conway_83_3.json").string(), field_of(m).get());
    SeqH seq;
    try {
        seq = run_sequence(m, f0, a.target, a.selection, static_cast<int64_t>(k0), 12, a.verify, g.seed);
    } catch (const DomainError& e) {
        rep.check("sequence", false, e.message);
        return finish();
    }
    check(ecirr_sequence_json(seq.get(), g.full ? SIZE_MAX : kInlineDegree, &s));
    json sj = take_json(s);
    extra["sequence"] = sj;

    const std::vector<int> golden{3, 6, 102, 1734};
    std::vector<int> degrees;
    for (const auto& e : sj["polys"]) degrees.push_back(e["degree"].get<int>());
    std::vector<int> expected;
    int deg = 3;
    for (uint64_t i = 0; i <= a.target; ++i) {
        if (i < golden.size()) deg = golden[i];
        else deg *= static_cast<int>(l);
        expected.push_back(deg);
    }
    auto list = [](const std::vector<int>& v) {
        std::string out = "[";
        for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
        return out + "]";
    };
    rep.check("degrees", degrees == expected, list(degrees) + (degrees == expected ? "" : " expected " + list(expected)));

    for (size_t i = 1; i < degrees.size(); ++i) {
        const std::string name = "f_" + std::to_string(i) + " irreducible";
        const json& e = sj["polys"][i];
        if (e["verified_irreducible"].get<bool>()) {
            rep.check(name, true, "degree " + std::to_string(degrees[i]) + ", is_irreducible during the run");
            continue;
        }
        if (e["origin"] == "transform" && a.verify == "off") {
            rep.info(name, "degree " + std::to_string(degrees[i]) +
                               ", not checked (verification off); irreducible by the degree law and the construction");
            continue;
        }
        ecirr_poly* fi = nullptr;
        check(ecirr_sequence_poly(seq.get(), i, &fi));
        PolyH fh(fi);
        int irr = 0;
        check(ecirr_poly_is_irreducible(fi, &irr));
        rep.check(name, irr == 1, "degree " + std::to_string(degrees[i]) + ", is_irreducible");
    }

    if (text) {
        std::cout << "\n i  phase  degree  fingerprint\n";
        for (const auto& e : sj["polys"]) {
            std::printf("%2llu  %-5s  %6d  %s\n", static_cast<unsigned long long>(e["index"].get<uint64_t>()),
                        e["phase"].get<std::string>().c_str(), e["degree"].get<int>(),
                        e["fingerprint"].get<std::string>().c_str());
        }
        std::cout << "first-step choice " << sj["first_choice"] << " of the factors of f_0^r, retries "
                  << sj["retries"] << ", factorizations after f_1: " << sj["factorizations_after_first"] << "\n";
        if (g.full) {
            for (const auto& e : sj["polys"]) std::cout << "f_" << e["index"] << " = " << e["poly"].dump() << '\n';
        }
    }
    return finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ecirr: irreducible polynomial sequences from elliptic curve endomorphisms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ecirr_version()));
    Globals g;
    app.add_option("--seed", g.seed, "PRNG seed for all randomized steps")->capture_default_str();
    app.add_flag("--full", g.full, "print all coefficients of large polynomials");

    const std::vector<std::string> verify_modes{"auto", "on", "off"};

    IterateArgs it;
    auto* iterate = app.add_subcommand("iterate", "build f_0, ..., f_target");
    iterate->add_option("--map", it.map, "rational map (JSON file or inline)")->required();
    iterate->add_option("--field", it.field, "field (JSON file or inline); default: the map's");
    iterate->add_option("--f0", it.f0, "f_0 as a coefficient array, or a field file whose modulus is f_0")->required();
    iterate->add_option("--target", it.target, "last index")->capture_default_str();
    iterate->add_option("--selection", it.selection, "factor selection strategy")->capture_default_str();
    iterate->add_option("--k0", it.k0, "factorization budget (negative: unknown)")->capture_default_str();
    iterate->add_option("--max-sub1-steps", it.max_sub1_steps, "budget when k0 is unknown")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    iterate->add_option("--verify-sub2", it.verify, "irreducibility checks after the switch")
        ->check(CLI::IsMember(verify_modes))
        ->capture_default_str();
    iterate->add_option("--out-dir", it.out_dir, "write f_<i>.json here");
    iterate->add_option("--emit", it.emit, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string t_map, t_field, t_poly, t_emit = "text";
    auto* transform = app.add_subcommand("transform", "apply the r-transform to a polynomial");
    transform->add_option("--map", t_map, "rational map")->required();
    transform->add_option("--field", t_field, "field; default: the map's");
    transform->add_option("--poly", t_poly, "coefficient array, little-endian")->required();
    transform->add_option("--emit", t_emit, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string fa_field, fa_poly, fa_emit = "text";
    uint64_t fa_p = 0;
    auto* fac = app.add_subcommand("factor", "factor a polynomial");
    auto* fa_field_opt = fac->add_option("--field", fa_field, "field");
    fac->add_option("--p", fa_p, "prime field F_p")->excludes(fa_field_opt);
    fac->add_option("--poly", fa_poly, "coefficient array, little-endian")->required();
    fac->add_option("--emit", fa_emit, "output format")->check(CLI::IsMember({"text", "json"}));

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "functional graph of the map over a finite field");
    graph->add_option("--map", ga.map, "rational map")->required();
    auto* ga_field = graph->add_option("--field", ga.field, "graph field; default: the map's");
    graph->add_option("--degree", ga.degree, "use F_{p^degree} with a standard modulus")->excludes(ga_field);
    graph->add_option("--subfield-deg", ga.subfield_deg, "degree of the subfield whose trees are profiled")
        ->capture_default_str();
    graph->add_option("--emit", ga.emit, "output format")
        ->check(CLI::IsMember({"dot", "json", "summary"}))
        ->capture_default_str();
    graph->add_option("--trajectory", ga.start, "print the rho decomposition from this element (or \"inf\")");

    std::string v_curve, v_map, v_field, v_emit = "text";
    uint64_t v_samples = 64;
    auto* verify = app.add_subcommand("verify-endo", "check that a map is the x-part of an endomorphism");
    verify->add_option("--curve", v_curve, "curve")->required();
    verify->add_option("--map", v_map, "rational map")->required();
    verify->add_option("--field", v_field, "field; default: the curve's");
    verify->add_option("--samples", v_samples, "sampled points and pairs")->capture_default_str();
    verify->add_option("--emit", v_emit, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string c_curve, c_field, c_emit = "text";
    auto* count = app.add_subcommand("count-points", "count points by enumeration");
    count->add_option("--curve", c_curve, "curve")->required();
    count->add_option("--field", c_field, "field; default: the curve's");
    count->add_option("--emit", c_emit, "output format")->check(CLI::IsMember({"text", "json"}));

    long va_D = 0;
    std::string va_alpha, va_beta, va_emit = "text";
    bool va_lemma = false;
    auto* val = app.add_subcommand("valuation", "alpha-adic valuation in an imaginary quadratic order");
    val->add_option("--D", va_D, "squarefree negative D")->required();
    val->add_option("--alpha", va_alpha, "c0,c1 (element c0 + c1 w)")->required();
    val->add_option("--beta", va_beta, "c0,c1")->required();
    val->add_flag("--lemma", va_lemma, "treat beta as delta and check the valuations of delta^e - 1");
    val->add_option("--emit", va_emit, "output format")->check(CLI::IsMember({"text", "json"}));

    ReproArgs ra;
    if (const char* env = std::getenv("ECIRR_DATA_DIR")) ra.data_dir = env;
    else ra.data_dir = ECIRR_DEFAULT_DATA_DIR;
    auto* repro = app.add_subcommand("reproduce-paper", "run the F_83, l = 17 example end to end");
    repro->add_option("--data-dir", ra.data_dir, "directory with the shipped data files")->capture_default_str();
    repro->add_option("--target", ra.target, "last sequence index")->capture_default_str();
    repro->add_option("--selection", ra.selection, "factor selection strategy")->capture_default_str();
    repro->add_option("--verify-sub2", ra.verify, "irreducibility checks after the switch")
        ->check(CLI::IsMember(verify_modes))
        ->capture_default_str();
    repro->add_option("--emit", ra.emit, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*iterate) return cmd_iterate(it, g);
        if (*transform) return cmd_transform(t_map, t_field, t_poly, t_emit, g);
        if (*fac) {
            if (fa_field.empty() && fa_p == 0) {
                std::cerr << "factor: one of --field or --p is required\n";
                return kExitUsage;
            }
            return cmd_factor(fa_field, fa_p, fa_poly, fa_emit, g);
        }
        if (*graph) return cmd_graph(ga);
        if (*verify) return cmd_verify_endo(v_curve, v_map, v_field, v_samples, v_emit, g);
        if (*count) return cmd_count_points(c_curve, c_field, c_emit);
        if (*val) return cmd_valuation(va_D, va_alpha, va_beta, va_lemma, va_emit);
        if (*repro) return cmd_reproduce(ra, g);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitDomain;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: Parse: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
