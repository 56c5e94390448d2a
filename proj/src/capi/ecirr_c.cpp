#include "ecirr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ecirr/error.hpp"
#include "ecirr/json_io.hpp"

using namespace ecirr;
using ecirr::json_io::json;

struct ecirr_field {
    FieldCtx k;
};
struct ecirr_poly {
    Poly f;
};
struct ecirr_map {
    RationalMap m;
};
struct ecirr_curve {
    Curve c;
};
struct ecirr_qint {
    QuadInt x;
};
struct ecirr_graph {
    FunctionalGraph g;
};
struct ecirr_sequence {
    SequenceRun run;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
ecirr_status guard(Fn&& fn) noexcept {
    try {
        fn();
        return ECIRR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<ecirr_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "Internal: out of memory";
    } catch (const std::exception& e) {
        g_last_error = std::string("Internal: ") + e.what();
    } catch (...) {
        g_last_error = "Internal: unknown exception";
    }
    return ECIRR_INTERNAL;
}

void need(const void* p, const char* what) {
    if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out) {
    need(out, "out");
    *out = dup(j.dump());
}

RationalMap over(const RationalMap& m, const FieldCtx& k) { return m.ctx() == k ? m : m.lift_to(k); }

}  // namespace

extern "C" {

const char* ecirr_version(void) { return "0.1.0"; }

const char* ecirr_status_name(int status) {
    if (status < 0 || status > static_cast<int>(ErrorCode::kInternal)) return "Unknown";
    return error_name(static_cast<ErrorCode>(status)).data();
}

const char* ecirr_last_error(void) { return g_last_error.c_str(); }

void ecirr_string_free(char* s) { std::free(s); }

uint64_t ecirr_enumeration_cap(void) { return enumeration_cap(); }

uint64_t ecirr_mod_pow(uint64_t base, uint64_t exp, uint64_t m) { return m == 0 ? 0 : mod_pow(base % m, exp, m); }

ecirr_status ecirr_read_file(const char* path, char** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = dup(json_io::load_file(path).dump());
    });
}

ecirr_status ecirr_field_new(uint64_t p, unsigned n, const int64_t* modulus, size_t len, ecirr_field** out) {
    return guard([&] {
        need(out, "out");
        if (modulus == nullptr) {
            if (n != 1) fail(ErrorCode::kInvalidArgument, "extension fields need a modulus");
            *out = new ecirr_field{FieldCtx::prime(p)};
            return;
        }
        *out = new ecirr_field{FieldCtx::make(p, n, std::span<const i64>(modulus, len))};
    });
}

ecirr_status ecirr_field_standard(uint64_t p, unsigned n, ecirr_field** out) {
    return guard([&] {
        need(out, "out");
        *out = new ecirr_field{standard_extension(p, n)};
    });
}

ecirr_status ecirr_field_from_json(const char* text, ecirr_field** out) {
    return guard([&] {
        need(text, "json");
        need(out, "out");
        *out = new ecirr_field{json_io::field_from_json(json_io::parse(text))};
    });
}

ecirr_status ecirr_field_to_json(const ecirr_field* k, char** out) {
    return guard([&] {
        need(k, "field");
        emit(json_io::to_json(k->k), out);
    });
}

uint64_t ecirr_field_p(const ecirr_field* k) { return k ? k->k.p() : 0; }
unsigned ecirr_field_degree(const ecirr_field* k) { return k ? k->k.n() : 0; }
uint64_t ecirr_field_order(const ecirr_field* k) { return k ? k->k.order() : 0; }
void ecirr_field_free(ecirr_field* k) { delete k; }

ecirr_status ecirr_poly_from_ints(const ecirr_field* k, const int64_t* coeffs, size_t len, ecirr_poly** out) {
    return guard([&] {
        need(k, "field");
        need(out, "out");
        if (len > 0) need(coeffs, "coeffs");
        *out = new ecirr_poly{Poly::from_ints(k->k, std::span<const i64>(coeffs, len))};
    });
}

ecirr_status ecirr_poly_from_json(const ecirr_field* k, const char* text, ecirr_poly** out) {
    return guard([&] {
        need(k, "field");
        need(text, "json");
        need(out, "out");
        *out = new ecirr_poly{json_io::poly_from_json(k->k, json_io::parse(text))};
    });
}

ecirr_status ecirr_poly_to_json(const ecirr_poly* f, char** out) {
    return guard([&] {
        need(f, "poly");
        emit(json_io::to_json(f->f), out);
    });
}

int ecirr_poly_degree(const ecirr_poly* f) { return f ? f->f.degree() : Poly::kZeroDegree; }
uint64_t ecirr_poly_fingerprint(const ecirr_poly* f) { return f ? fingerprint(f->f) : 0; }
int ecirr_poly_is_monic(const ecirr_poly* f) { return f && f->f.is_monic() ? 1 : 0; }
int ecirr_poly_equal(const ecirr_poly* f, const ecirr_poly* g) { return f && g && f->f == g->f ? 1 : 0; }

ecirr_status ecirr_poly_is_irreducible(const ecirr_poly* f, int* out) {
    return guard([&] {
        need(f, "poly");
        need(out, "out");
        *out = is_irreducible(f->f) ? 1 : 0;
    });
}

ecirr_status ecirr_poly_factor_json(const ecirr_poly* f, uint64_t seed, char** out) {
    return guard([&] {
        need(f, "poly");
        emit(json_io::to_json(factor(f->f, seed), f->f.ctx()), out);
    });
}

void ecirr_poly_free(ecirr_poly* f) { delete f; }

ecirr_status ecirr_map_from_json(const ecirr_field* k, const char* text, ecirr_map** out) {
    return guard([&] {
        need(text, "json");
        need(out, "out");
        const json j = json_io::parse(text);
        std::optional<FieldCtx> field = k ? std::optional<FieldCtx>(k->k) : json_io::embedded_field(j);
        if (!field) fail(ErrorCode::kParse, "map has no field and none was supplied");
        *out = new ecirr_map{json_io::map_from_json(*field, j)};
    });
}

ecirr_status ecirr_map_to_json(const ecirr_map* m, char** out) {
    return guard([&] {
        need(m, "map");
        emit(json_io::to_json(m->m), out);
    });
}

ecirr_status ecirr_map_field(const ecirr_map* m, ecirr_field** out) {
    return guard([&] {
        need(m, "map");
        need(out, "out");
        *out = new ecirr_field{m->m.ctx()};
    });
}

unsigned ecirr_map_degree(const ecirr_map* m) { return m ? m->m.degree() : 0; }

ecirr_status ecirr_map_transform(const ecirr_map* m, const ecirr_poly* g, ecirr_poly** out) {
    return guard([&] {
        need(m, "map");
        need(g, "poly");
        need(out, "out");
        *out = new ecirr_poly{r_transform(g->f, over(m->m, g->f.ctx()))};
    });
}

void ecirr_map_free(ecirr_map* m) { delete m; }

ecirr_status ecirr_curve_from_json(const ecirr_field* k, const char* text, ecirr_curve** out) {
    return guard([&] {
        need(text, "json");
        need(out, "out");
        std::optional<FieldCtx> field;
        if (k) field = k->k;
        *out = new ecirr_curve{json_io::curve_from_json(json_io::parse(text), field)};
    });
}

ecirr_status ecirr_curve_field(const ecirr_curve* c, ecirr_field** out) {
    return guard([&] {
        need(c, "curve");
        need(out, "out");
        *out = new ecirr_field{c->c.ctx()};
    });
}

ecirr_status ecirr_curve_count_points_json(const ecirr_curve* c, char** out) {
    return guard([&] {
        need(c, "curve");
        const CurveOrderData data = count_points(c->c);
        json j = json_io::to_json(data);
        j["ordinary"] = data.trace % static_cast<i64>(c->c.ctx().p()) != 0;
        emit(j, out);
    });
}

ecirr_status ecirr_curve_verify_endo_json(const ecirr_curve* c, const ecirr_map* m, uint64_t samples, uint64_t seed,
                                          char** out) {
    return guard([&] {
        need(c, "curve");
        need(m, "map");
        emit(json_io::to_json(verify_endomorphism(c->c, over(m->m, c->c.ctx()), samples, seed)), out);
    });
}

void ecirr_curve_free(ecirr_curve* c) { delete c; }

ecirr_status ecirr_qint_from_json(const char* text, ecirr_qint** out) {
    return guard([&] {
        need(text, "json");
        need(out, "out");
        *out = new ecirr_qint{json_io::qint_from_json(json_io::parse(text))};
    });
}

ecirr_status ecirr_qint_new(long D, const char* c0, const char* c1, ecirr_qint** out) {
    return guard([&] {
        need(c0, "c0");
        need(c1, "c1");
        need(out, "out");
        mpz_class a, b;
        if (a.set_str(c0, 10) != 0 || b.set_str(c1, 10) != 0) fail(ErrorCode::kParse, "bad integer string");
        *out = new ecirr_qint{QuadInt(QuadOrder::make(D), a, b)};
    });
}

ecirr_status ecirr_qint_to_json(const ecirr_qint* x, char** out) {
    return guard([&] {
        need(x, "qint");
        emit(json_io::to_json(x->x), out);
    });
}

ecirr_status ecirr_qint_norm(const ecirr_qint* x, char** out) {
    return guard([&] {
        need(x, "qint");
        need(out, "out");
        *out = dup(norm(x->x).get_str());
    });
}

void ecirr_qint_free(ecirr_qint* x) { delete x; }

ecirr_status ecirr_qint_valuation_json(const ecirr_qint* beta, const ecirr_qint* alpha, char** out) {
    return guard([&] {
        need(beta, "beta");
        need(alpha, "alpha");
        emit(json_io::to_json(nu_alpha(beta->x, alpha->x)), out);
    });
}

ecirr_status ecirr_val_lemma_json(const ecirr_qint* delta, const ecirr_qint* alpha, uint64_t l, char** out) {
    return guard([&] {
        need(delta, "delta");
        need(alpha, "alpha");
        emit(json_io::to_json(check_val_lemma(delta->x, alpha->x, l)), out);
    });
}

ecirr_status ecirr_frobenius_from_trace(long D, long t, const char* q, ecirr_qint** pi, ecirr_qint** pi_conj) {
    return guard([&] {
        need(q, "q");
        need(pi, "pi");
        need(pi_conj, "pi_conj");
        mpz_class qv;
        if (qv.set_str(q, 10) != 0) fail(ErrorCode::kParse, "bad integer string");
        auto [a, b] = frobenius_from_trace(QuadOrder::make(D), t, qv);
        auto* first = new ecirr_qint{a};
        try {
            *pi_conj = new ecirr_qint{b};
        } catch (...) {
            delete first;
            throw;
        }
        *pi = first;
    });
}

ecirr_status ecirr_k0_candidates(const ecirr_qint* pi, const ecirr_qint* alpha, uint64_t d, uint64_t* k_pi,
                                 uint64_t* k_conj) {
    return guard([&] {
        need(pi, "pi");
        need(alpha, "alpha");
        need(k_pi, "k_pi");
        need(k_conj, "k_conj");
        auto [a, b] = k0_candidates(pi->x, alpha->x, d);
        *k_pi = a;
        *k_conj = b;
    });
}

ecirr_status ecirr_graph_build(const ecirr_map* m, const ecirr_field* k, ecirr_graph** out) {
    return guard([&] {
        need(m, "map");
        need(k, "field");
        need(out, "out");
        *out = new ecirr_graph{build_graph(m->m, k->k)};
    });
}

uint64_t ecirr_graph_node_count(const ecirr_graph* g) { return g ? g->g.node_count() : 0; }

ecirr_status ecirr_graph_summary_json(const ecirr_graph* g, unsigned subfield_deg, char** out) {
    return guard([&] {
        need(g, "graph");
        emit(json_io::graph_summary(g->g, subfield_deg), out);
    });
}

ecirr_status ecirr_graph_dot(const ecirr_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup(to_dot(g->g));
    });
}

ecirr_status ecirr_graph_trajectory_json(const ecirr_graph* g, const char* start, char** out) {
    return guard([&] {
        need(g, "graph");
        need(start, "start");
        const json j = json_io::parse(start);
        const FieldCtx& k = g->g.field();
        ProjPoint pt = ProjPoint::infinity();
        if (!(j.is_string() && j.get<std::string>() == "inf")) {
            auto in_range = [&](const json& c) {
                return (c.is_number_integer() || c.is_number_unsigned()) && c.get<i64>() >= 0 &&
                       static_cast<u64>(c.get<i64>()) < k.p();
            };
            bool ok = in_range(j);
            if (j.is_array()) {
                ok = j.size() <= k.n();
                for (const auto& c : j) ok = ok && in_range(c);
            }
            if (!ok) fail(ErrorCode::kNodeNotFound, "start is not an element of the graph's field");
            pt = ProjPoint::affine(json_io::elem_from_json(k, j));
        }
        auto [tail, cycle] = trajectory(g->g, pt);
        json jt = json::array(), jc = json::array();
        for (const auto& p : tail) jt.push_back(json_io::to_json(p, k));
        for (const auto& p : cycle) jc.push_back(json_io::to_json(p, k));
        emit(json{{"tail", jt}, {"cycle", jc}}, out);
    });
}

void ecirr_graph_free(ecirr_graph* g) { delete g; }

void ecirr_sequence_options_init(ecirr_sequence_options* opts) {
    if (opts == nullptr) return;
    opts->d = 0;
    opts->k0 = -1;
    opts->selection = nullptr;
    opts->max_sub1_steps = SequenceParams::kDefaultMaxSub1Steps;
    opts->verify_sub2 = -1;
    opts->verify_degree_cap = SequenceParams::kDefaultVerifyDegreeCap;
    opts->seed = 0;
}

ecirr_status ecirr_sequence_run(const ecirr_map* m, const ecirr_poly* f0, uint64_t target,
                                const ecirr_sequence_options* opts, ecirr_sequence** out) {
    return guard([&] {
        need(m, "map");
        need(f0, "f0");
        need(out, "out");
        ecirr_sequence_options o;
        ecirr_sequence_options_init(&o);
        if (opts) o = *opts;
        SequenceParams params(over(m->m, f0->f.ctx()), o.d ? o.d : static_cast<unsigned>(std::max(f0->f.degree(), 0)));
        if (o.k0 >= 0) params.k0 = static_cast<u64>(o.k0);
        if (o.selection) params.selection = Selection::parse(o.selection);
        if (o.max_sub1_steps == 0) fail(ErrorCode::kInvalidArgument, "max_sub1_steps must be positive");
        params.max_sub1_steps = o.max_sub1_steps;
        if (o.verify_sub2 >= 0) params.verify_sub2 = o.verify_sub2 != 0;
        params.verify_degree_cap = o.verify_degree_cap;
        *out = new ecirr_sequence{run(f0->f, params, target, o.seed)};
    });
}

size_t ecirr_sequence_length(const ecirr_sequence* s) { return s ? s->run.polys.size() : 0; }

ecirr_status ecirr_sequence_poly(const ecirr_sequence* s, size_t index, ecirr_poly** out) {
    return guard([&] {
        need(s, "sequence");
        need(out, "out");
        if (index >= s->run.polys.size()) fail(ErrorCode::kInvalidArgument, "index out of range");
        *out = new ecirr_poly{s->run.polys[index]};
    });
}

ecirr_status ecirr_sequence_json(const ecirr_sequence* s, size_t full_cap, char** out) {
    return guard([&] {
        need(s, "sequence");
        emit(json_io::to_json(s->run, full_cap), out);
    });
}

void ecirr_sequence_free(ecirr_sequence* s) { delete s; }

}  // extern "C"
