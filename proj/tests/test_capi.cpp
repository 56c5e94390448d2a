#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>

#include "ecirr.h"

#ifndef ECIRR_TEST_DATA_DIR
#error "ECIRR_TEST_DATA_DIR must be defined"
#endif

namespace {

using nlohmann::json;

struct Deleter {
    void operator()(ecirr_field* p) const { ecirr_field_free(p); }
    void operator()(ecirr_poly* p) const { ecirr_poly_free(p); }
    void operator()(ecirr_map* p) const { ecirr_map_free(p); }
    void operator()(ecirr_curve* p) const { ecirr_curve_free(p); }
    void operator()(ecirr_qint* p) const { ecirr_qint_free(p); }
    void operator()(ecirr_graph* p) const { ecirr_graph_free(p); }
    void operator()(ecirr_sequence* p) const { ecirr_sequence_free(p); }
};
template <class T>
using Handle = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
    std::string out = s ? s : "";
    ecirr_string_free(s);
    return out;
}

std::string read(const std::string& name) {
    char* s = nullptr;
    EXPECT_EQ(ecirr_read_file((std::string(ECIRR_TEST_DATA_DIR) + "/" + name).c_str(), &s), ECIRR_OK);
    return take(s);
}

Handle<ecirr_map> example_map() {
    ecirr_map* m = nullptr;
    EXPECT_EQ(ecirr_map_from_json(nullptr, read("f83_l17.json").c_str(), &m), ECIRR_OK);
    return Handle<ecirr_map>(m);
}

Handle<ecirr_poly> example_f0(const ecirr_field* k) {
    const json conway = json::parse(read("conway_83_3.json"));
    ecirr_poly* f = nullptr;
    EXPECT_EQ(ecirr_poly_from_json(k, conway.at("modulus").dump().c_str(), &f), ECIRR_OK);
    return Handle<ecirr_poly>(f);
}

TEST(CApi, StatusNamesAndErrors) {
    EXPECT_STREQ(ecirr_status_name(ECIRR_OK), "Ok");
    EXPECT_STREQ(ecirr_status_name(ECIRR_NOT_PRIME), "NotPrime");
    EXPECT_STREQ(ecirr_status_name(ECIRR_INTERNAL), "Internal");
    EXPECT_STREQ(ecirr_status_name(999), "Unknown");
    ecirr_field* k = nullptr;
    EXPECT_EQ(ecirr_field_new(9, 1, nullptr, 0, &k), ECIRR_NOT_PRIME);
    EXPECT_EQ(k, nullptr);
    EXPECT_NE(std::string(ecirr_last_error()).find("NotPrime"), std::string::npos);
    EXPECT_EQ(ecirr_field_new(5, 1, nullptr, 0, nullptr), ECIRR_INVALID_ARGUMENT);
    EXPECT_EQ(ecirr_field_from_json("{", &k), ECIRR_PARSE);
    char* s = nullptr;
    EXPECT_EQ(ecirr_read_file("/nonexistent/x", &s), ECIRR_IO);
    ecirr_field_free(nullptr);
    ecirr_string_free(nullptr);
    EXPECT_EQ(ecirr_mod_pow(83, 6, 17), 13u);
    EXPECT_GT(ecirr_enumeration_cap(), 0u);
    EXPECT_FALSE(std::string(ecirr_version()).empty());
}

TEST(CApi, LastErrorIsThreadLocal) {
    ecirr_field* k = nullptr;
    ASSERT_EQ(ecirr_field_new(9, 1, nullptr, 0, &k), ECIRR_NOT_PRIME);
    std::string other;
    std::thread t([&] {
        ecirr_field* k2 = nullptr;
        ecirr_field_new(5, 2, nullptr, 0, &k2);
        other = ecirr_last_error();
    });
    t.join();
    EXPECT_NE(std::string(ecirr_last_error()), other);
    EXPECT_NE(std::string(ecirr_last_error()).find("NotPrime"), std::string::npos);
}

TEST(CApi, FieldsAndPolys) {
    ecirr_field* raw = nullptr;
    ASSERT_EQ(ecirr_field_standard(5, 2, &raw), ECIRR_OK);
    Handle<ecirr_field> k(raw);
    EXPECT_EQ(ecirr_field_p(k.get()), 5u);
    EXPECT_EQ(ecirr_field_degree(k.get()), 2u);
    EXPECT_EQ(ecirr_field_order(k.get()), 25u);
    char* s = nullptr;
    ASSERT_EQ(ecirr_field_to_json(k.get(), &s), ECIRR_OK);
    EXPECT_EQ(json::parse(take(s))["modulus"], json::parse("[2, 0, 1]"));

    ecirr_field* kp_raw = nullptr;
    ASSERT_EQ(ecirr_field_new(5, 1, nullptr, 0, &kp_raw), ECIRR_OK);
    Handle<ecirr_field> kp(kp_raw);
    const int64_t c[] = {4, 0, 0, 0, 1};
    ecirr_poly* f_raw = nullptr;
    ASSERT_EQ(ecirr_poly_from_ints(kp.get(), c, 5, &f_raw), ECIRR_OK);
    Handle<ecirr_poly> f(f_raw);
    EXPECT_EQ(ecirr_poly_degree(f.get()), 4);
    EXPECT_TRUE(ecirr_poly_is_monic(f.get()));
    int irr = -1;
    ASSERT_EQ(ecirr_poly_is_irreducible(f.get(), &irr), ECIRR_OK);
    EXPECT_EQ(irr, 0);
    ASSERT_EQ(ecirr_poly_factor_json(f.get(), 1, &s), ECIRR_OK);
    const json fac = json::parse(take(s));
    EXPECT_EQ(fac["factors"].size(), 4u);

    ecirr_poly* g_raw = nullptr;
    ASSERT_EQ(ecirr_poly_from_json(kp.get(), "[-1, 0, 0, 0, 6]", &g_raw), ECIRR_OK);
    Handle<ecirr_poly> g(g_raw);
    EXPECT_TRUE(ecirr_poly_equal(f.get(), g.get()));
    EXPECT_EQ(ecirr_poly_fingerprint(f.get()), ecirr_poly_fingerprint(g.get()));

    ecirr_poly* h_raw = nullptr;
    ASSERT_EQ(ecirr_poly_from_ints(k.get(), c, 5, &h_raw), ECIRR_OK);
    Handle<ecirr_poly> h(h_raw);
    EXPECT_FALSE(ecirr_poly_equal(f.get(), h.get()));

    ecirr_poly* zero_raw = nullptr;
    ASSERT_EQ(ecirr_poly_from_ints(kp.get(), nullptr, 0, &zero_raw), ECIRR_OK);
    Handle<ecirr_poly> zero(zero_raw);
    EXPECT_EQ(ecirr_poly_degree(zero.get()), -1);
    EXPECT_EQ(ecirr_poly_factor_json(zero.get(), 0, &s), ECIRR_DEGREE_ZERO);
}

TEST(CApi, MapTransform) {
    auto m = example_map();
    EXPECT_EQ(ecirr_map_degree(m.get()), 17u);
    ecirr_field* k_raw = nullptr;
    ASSERT_EQ(ecirr_map_field(m.get(), &k_raw), ECIRR_OK);
    Handle<ecirr_field> k(k_raw);
    auto f0 = example_f0(k.get());
    ecirr_poly* t_raw = nullptr;
    ASSERT_EQ(ecirr_map_transform(m.get(), f0.get(), &t_raw), ECIRR_OK);
    Handle<ecirr_poly> t(t_raw);
    EXPECT_EQ(ecirr_poly_degree(t.get()), 51);
    EXPECT_TRUE(ecirr_poly_is_monic(t.get()));

    ecirr_field* other_raw = nullptr;
    ASSERT_EQ(ecirr_field_new(89, 1, nullptr, 0, &other_raw), ECIRR_OK);
    Handle<ecirr_field> other(other_raw);
    const int64_t c[] = {1, 1};
    ecirr_poly* g_raw = nullptr;
    ASSERT_EQ(ecirr_poly_from_ints(other.get(), c, 2, &g_raw), ECIRR_OK);
    Handle<ecirr_poly> g(g_raw);
    ecirr_poly* bad = nullptr;
    EXPECT_EQ(ecirr_map_transform(m.get(), g.get(), &bad), ECIRR_CONTEXT_MISMATCH);
    ecirr_map* bad_map = nullptr;
    EXPECT_EQ(ecirr_map_from_json(k.get(), R"({"a": [0, 0, 1], "b": [1], "l": 3})", &bad_map), ECIRR_DEGREE_MISMATCH);
    EXPECT_EQ(ecirr_map_from_json(nullptr, R"({"a": [0, 0, 1], "b": [1], "l": 2})", &bad_map), ECIRR_PARSE);
}

TEST(CApi, CurveAndEndomorphism) {
    ecirr_curve* c_raw = nullptr;
    ASSERT_EQ(ecirr_curve_from_json(nullptr, read("f83_curve.json").c_str(), &c_raw), ECIRR_OK);
    Handle<ecirr_curve> c(c_raw);
    char* s = nullptr;
    ASSERT_EQ(ecirr_curve_count_points_json(c.get(), &s), ECIRR_OK);
    const json counts = json::parse(take(s));
    EXPECT_EQ(counts["points"], 68);
    EXPECT_EQ(counts["trace"], 16);
    EXPECT_EQ(counts["ordinary"], true);
    auto m = example_map();
    ASSERT_EQ(ecirr_curve_verify_endo_json(c.get(), m.get(), 64, 0, &s), ECIRR_OK);
    EXPECT_EQ(json::parse(take(s))["passed"], true);
    ecirr_curve* sing = nullptr;
    EXPECT_EQ(ecirr_curve_from_json(nullptr, R"({"A": 0, "B": 0, "field": {"p": 7}})", &sing), ECIRR_SINGULAR_CURVE);
}

TEST(CApi, QuadraticIntegers) {
    ecirr_qint* a_raw = nullptr;
    ASSERT_EQ(ecirr_qint_new(-19, "4", "-1", &a_raw), ECIRR_OK);
    Handle<ecirr_qint> alpha(a_raw);
    char* s = nullptr;
    ASSERT_EQ(ecirr_qint_norm(alpha.get(), &s), ECIRR_OK);
    EXPECT_EQ(take(s), "17");
    ecirr_qint* b_raw = nullptr;
    ASSERT_EQ(ecirr_qint_from_json(R"({"D": -19, "c0": 17, "c1": 0})", &b_raw), ECIRR_OK);
    Handle<ecirr_qint> beta(b_raw);
    ASSERT_EQ(ecirr_qint_valuation_json(beta.get(), alpha.get(), &s), ECIRR_OK);
    EXPECT_EQ(json::parse(take(s))["k"], 1);

    ecirr_qint *pi_raw = nullptr, *pic_raw = nullptr;
    ASSERT_EQ(ecirr_frobenius_from_trace(-19, 16, "83", &pi_raw, &pic_raw), ECIRR_OK);
    Handle<ecirr_qint> pi(pi_raw), pic(pic_raw);
    uint64_t k_pi = 9, k_conj = 9;
    ASSERT_EQ(ecirr_k0_candidates(pi.get(), alpha.get(), 3, &k_pi, &k_conj), ECIRR_OK);
    EXPECT_EQ(std::max(k_pi, k_conj), 1u);
    EXPECT_EQ(std::min(k_pi, k_conj), 0u);

    ecirr_qint *near_raw = nullptr, *two_raw = nullptr;
    ASSERT_EQ(ecirr_qint_new(-19, "5", "-1", &near_raw), ECIRR_OK);  // 1 + alpha
    ASSERT_EQ(ecirr_qint_new(-19, "2", "0", &two_raw), ECIRR_OK);
    Handle<ecirr_qint> near(near_raw), two(two_raw);
    ASSERT_EQ(ecirr_val_lemma_json(near.get(), alpha.get(), 17, &s), ECIRR_OK);
    json rep = json::parse(take(s));
    EXPECT_EQ(rep["hypothesis_met"], true);
    EXPECT_EQ(rep["holds"], true);
    EXPECT_EQ(rep["values"].size(), 17u);
    ASSERT_EQ(ecirr_val_lemma_json(two.get(), alpha.get(), 17, &s), ECIRR_OK);
    rep = json::parse(take(s));
    EXPECT_EQ(rep["hypothesis_met"], false);
    EXPECT_EQ(rep["holds"], false);
    EXPECT_EQ(ecirr_val_lemma_json(pi.get(), alpha.get(), 13, &s), ECIRR_INVALID_ARGUMENT);

    ecirr_qint* bad = nullptr;
    EXPECT_EQ(ecirr_qint_new(-19, "x", "0", &bad), ECIRR_PARSE);
    EXPECT_EQ(ecirr_qint_new(-12, "1", "0", &bad), ECIRR_INVALID_ARGUMENT);
}

TEST(CApi, Graph) {
    auto m = example_map();
    ecirr_field* k_raw = nullptr;
    ASSERT_EQ(ecirr_map_field(m.get(), &k_raw), ECIRR_OK);
    Handle<ecirr_field> k(k_raw);
    ecirr_graph* g_raw = nullptr;
    ASSERT_EQ(ecirr_graph_build(m.get(), k.get(), &g_raw), ECIRR_OK);
    Handle<ecirr_graph> g(g_raw);
    EXPECT_EQ(ecirr_graph_node_count(g.get()), 84u);
    char* s = nullptr;
    ASSERT_EQ(ecirr_graph_summary_json(g.get(), 1, &s), ECIRR_OK);
    const json summary = json::parse(take(s));
    EXPECT_EQ(summary["nodes"], 84);
    EXPECT_EQ(ecirr_graph_summary_json(g.get(), 2, &s), ECIRR_SUBFIELD_MISMATCH);
    ASSERT_EQ(ecirr_graph_trajectory_json(g.get(), "\"inf\"", &s), ECIRR_OK);
    const json traj = json::parse(take(s));
    EXPECT_TRUE(traj["tail"].empty());
    EXPECT_EQ(traj["cycle"], json::parse(R"(["inf"])"));
    EXPECT_EQ(ecirr_graph_trajectory_json(g.get(), "500", &s), ECIRR_NODE_NOT_FOUND);
    ASSERT_EQ(ecirr_graph_dot(g.get(), &s), ECIRR_OK);
    EXPECT_EQ(take(s).rfind("digraph", 0), 0u);
}

TEST(CApi, Sequence) {
    auto m = example_map();
    ecirr_field* k_raw = nullptr;
    ASSERT_EQ(ecirr_map_field(m.get(), &k_raw), ECIRR_OK);
    Handle<ecirr_field> k(k_raw);
    auto f0 = example_f0(k.get());
    ecirr_sequence_options opts;
    ecirr_sequence_options_init(&opts);
    EXPECT_LT(opts.k0, 0);
    opts.k0 = 1;
    ecirr_sequence* s_raw = nullptr;
    ASSERT_EQ(ecirr_sequence_run(m.get(), f0.get(), 2, &opts, &s_raw), ECIRR_OK);
    Handle<ecirr_sequence> seq(s_raw);
    ASSERT_EQ(ecirr_sequence_length(seq.get()), 3u);
    const int expected[] = {3, 6, 102};
    for (size_t i = 0; i < 3; ++i) {
        ecirr_poly* f = nullptr;
        ASSERT_EQ(ecirr_sequence_poly(seq.get(), i, &f), ECIRR_OK);
        EXPECT_EQ(ecirr_poly_degree(f), expected[i]);
        ecirr_poly_free(f);
    }
    ecirr_poly* f = nullptr;
    EXPECT_EQ(ecirr_sequence_poly(seq.get(), 3, &f), ECIRR_INVALID_ARGUMENT);
    char* s = nullptr;
    ASSERT_EQ(ecirr_sequence_json(seq.get(), 0, &s), ECIRR_OK);
    EXPECT_EQ(json::parse(take(s))["polys"].size(), 3u);

    opts.selection = "nonsense";
    ecirr_sequence* bad = nullptr;
    EXPECT_EQ(ecirr_sequence_run(m.get(), f0.get(), 2, &opts, &bad), ECIRR_INVALID_ARGUMENT);
    opts.selection = nullptr;
    opts.k0 = 0;
    EXPECT_EQ(ecirr_sequence_run(m.get(), f0.get(), 2, &opts, &bad), ECIRR_EXHAUSTED_CHOICES);
}

}  // namespace
