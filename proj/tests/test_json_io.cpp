#include <gtest/gtest.h>

#include "support.hpp"

namespace ecirr {
namespace {

using json_io::json;
using testing::code_of;

TEST(JsonIo, FieldRoundTrip) {
    const FieldCtx k = standard_extension(7, 3);
    const FieldCtx back = json_io::field_from_json(json_io::to_json(k));
    EXPECT_EQ(back, k);
    EXPECT_EQ(json_io::field_from_json(json::parse(R"({"p": 83})")), FieldCtx::prime(83));
    EXPECT_EQ(code_of([] { json_io::field_from_json(json::parse(R"({"n": 2})")); }), ErrorCode::kParse);
    EXPECT_EQ(code_of([] { json_io::field_from_json(json::parse(R"({"p": 9})")); }), ErrorCode::kNotPrime);
    EXPECT_EQ(code_of([] { json_io::field_from_json(json::parse(R"({"p": 5, "n": 2, "modulus": [1, 0, 1]})")); }),
              ErrorCode::kReducibleModulus);
}

TEST(JsonIo, PolyRoundTrip) {
    Rng rng(4);
    for (const FieldCtx& k : {FieldCtx::prime(83), standard_extension(5, 2)}) {
        for (int i = 0; i < 50; ++i) {
            const Poly f = testing::random_poly(k, static_cast<int>(rng() % 12), rng, false);
            EXPECT_EQ(json_io::poly_from_json(k, json_io::to_json(f)), f);
        }
    }
    const FieldCtx k = FieldCtx::prime(7);
    EXPECT_EQ(json_io::poly_from_json(k, json::parse("[-1, 0, 8]")), Poly(k, {Elem{6}, Elem{0}, Elem{1}}));
    EXPECT_EQ(code_of([&] { json_io::poly_from_json(k, json::parse("{}")); }), ErrorCode::kParse);
    EXPECT_EQ(code_of([&] { json_io::poly_from_json(k, json::parse("[1, \"x\"]")); }), ErrorCode::kParse);
}

TEST(JsonIo, MapAndCurveRoundTrip) {
    const auto ex = testing::load_example83();
    const json mj = json_io::to_json(ex.map);
    const RationalMap m = json_io::map_from_json(ex.map.ctx(), mj);
    EXPECT_EQ(m.a(), ex.map.a());
    EXPECT_EQ(m.b(), ex.map.b());
    EXPECT_EQ(m.degree(), ex.map.degree());
    EXPECT_EQ(json_io::embedded_field(mj), ex.map.ctx());
    const Curve c = json_io::curve_from_json(json_io::to_json(ex.curve));
    EXPECT_EQ(c.A(), ex.curve.A());
    EXPECT_EQ(c.B(), ex.curve.B());
    EXPECT_EQ(code_of([] { json_io::curve_from_json(json::parse(R"({"A": 1, "B": 1})")); }), ErrorCode::kParse);

    const auto fx = testing::load_fixture("D2_l3_p41_d1");
    ASSERT_TRUE(fx.map.y_map().has_value());
    const RationalMap my = json_io::map_from_json(fx.map.ctx(), json_io::to_json(fx.map));
    ASSERT_TRUE(my.y_map().has_value());
    EXPECT_EQ(my.y_map()->num, fx.map.y_map()->num);
    EXPECT_EQ(my.y_map()->den, fx.map.y_map()->den);
}

TEST(JsonIo, QuadIntRoundTrip) {
    const QuadInt x(QuadOrder::make(-19), mpz_class("123456789012345678901234567890"), mpz_class(-7));
    const json j = json_io::to_json(x);
    EXPECT_TRUE(j.at("c0").is_string());
    EXPECT_TRUE(j.at("c1").is_number_integer());
    EXPECT_EQ(json_io::qint_from_json(j), x);
    EXPECT_EQ(code_of([] { json_io::qint_from_json(json::parse(R"({"D": -19, "c0": "1x", "c1": 0})")); }),
              ErrorCode::kParse);
}

TEST(JsonIo, SequenceRunReport) {
    const auto ex = testing::load_example83();
    SequenceParams params(ex.map, ex.d);
    params.k0 = 1;
    const SequenceRun run = ecirr::run(ex.f0, params, 2, 0);
    const json j = json_io::to_json(run, 10);
    ASSERT_EQ(j.at("polys").size(), 3u);
    EXPECT_EQ(j["polys"][1]["degree"], 6);
    EXPECT_EQ(j["polys"][1]["origin"], "factor");
    EXPECT_TRUE(j["polys"][1].contains("poly"));
    EXPECT_FALSE(j["polys"][2].contains("poly"));
    EXPECT_EQ(j["polys"][2]["fingerprint"].get<std::string>().size(), 16u);
    EXPECT_EQ(json_io::poly_from_json(ex.f0.ctx(), j["polys"][1]["poly"]), run.polys[1]);
    EXPECT_TRUE(j.at("switch_index").is_number());
}

TEST(JsonIo, LoadFileErrors) {
    EXPECT_EQ(code_of([] { json_io::load_file("/nonexistent/file.json"); }), ErrorCode::kIo);
    EXPECT_EQ(code_of([] { json_io::parse("{"); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace ecirr
