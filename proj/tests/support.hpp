#ifndef ECIRR_TESTS_SUPPORT_HPP
#define ECIRR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "ecirr/error.hpp"
#include "ecirr/json_io.hpp"

#ifndef ECIRR_TEST_DATA_DIR
#error "ECIRR_TEST_DATA_DIR must be defined"
#endif

namespace ecirr::testing {

inline std::filesystem::path data_dir() { return ECIRR_TEST_DATA_DIR; }

/// Code of the Error thrown by fn, kOk when it returns normally.
inline ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::kOk;
}

/// A small curve with a verified endomorphism and its CM data.
struct Fixture {
    std::string name;
    Curve curve;
    RationalMap map;
    QuadInt alpha;
    QuadInt pi;
    unsigned d;
    u64 l;
    i64 trace;
    u64 points;
    u64 k0;  // tree depth recorded by the generator
};

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(data_dir() / "fixtures")) {
        if (e.is_directory()) out.push_back(e.path().filename().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Fixture load_fixture(const std::string& name) {
    const auto dir = data_dir() / "fixtures" / name;
    const auto cj = json_io::load_file((dir / "curve.json").string());
    const auto mj = json_io::load_file((dir / "map.json").string());
    const auto cm = json_io::load_file((dir / "cm.json").string());
    Curve c = json_io::curve_from_json(cj);
    RationalMap m = json_io::map_from_json(c.ctx(), mj);
    return Fixture{name,
                   c,
                   m,
                   json_io::qint_from_json(cm.at("alpha")),
                   json_io::qint_from_json(cm.at("pi")),
                   cm.at("d").get<unsigned>(),
                   cm.at("l").get<u64>(),
                   cm.at("trace").get<i64>(),
                   cm.at("points").get<u64>(),
                   cm.at("k0").get<u64>()};
}

/// The worked example over F_83: curve, degree-17 map and f_0.
struct Example83 {
    Curve curve;
    RationalMap map;
    Poly f0;
    QuadInt alpha;
    i64 trace;
    unsigned d;
};

inline Example83 load_example83() {
    const auto dir = data_dir();
    Curve c = json_io::curve_from_json(json_io::load_file((dir / "f83_curve.json").string()));
    RationalMap m = json_io::map_from_json(c.ctx(), json_io::load_file((dir / "f83_l17.json").string()));
    const auto conway = json_io::load_file((dir / "conway_83_3.json").string());
    Poly f0 = json_io::poly_from_json(c.ctx(), conway.at("modulus"));
    const auto cm = json_io::load_file((dir / "f83_cm.json").string());
    return Example83{c, m, f0, json_io::qint_from_json(cm.at("alpha")), cm.at("trace").get<i64>(),
                     cm.at("d").get<unsigned>()};
}

/// Random polynomial of exact degree deg (monic when asked).
inline Poly random_poly(const FieldCtx& k, int deg, Rng& rng, bool make_monic) {
    std::vector<Elem> c(deg + 1);
    for (auto& e : c) e = k.random(rng);
    c.back() = make_monic ? k.one() : k.random_nonzero(rng);
    return Poly(k, std::move(c));
}

/// Every monic polynomial of the given degree over a small field.
inline std::vector<Poly> all_monic(const FieldCtx& k, int deg) {
    std::vector<Poly> out;
    std::vector<Elem> c(deg + 1, Elem{0});
    c[deg] = k.one();
    const u64 q = k.order();
    for (;;) {
        out.emplace_back(k, c);
        int i = 0;
        while (i < deg && ++c[i].v == q) c[i++].v = 0;
        if (i == deg) break;
    }
    return out;
}

}  // namespace ecirr::testing

#endif  // ECIRR_TESTS_SUPPORT_HPP
