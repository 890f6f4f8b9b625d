#include "fmz/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmz;
using namespace fmz::test;

TEST(Io, ElementRoundTrip) {
    Rng rng(81);
    for (JordanKind k : kAllKinds) {
        auto x = rng.freud(k, 20);
        Json j = to_json(x);
        EXPECT_EQ(j["format"], kFormatTag);
        EXPECT_EQ(int_element_from_json(parse_json(j.dump())), x);
        auto q = rng.freud_rat(k, 5);
        auto any = element_from_json(parse_json(to_json(q).dump()));
        ASSERT_TRUE(std::holds_alternative<Freud<Rat>>(any));
        EXPECT_EQ(std::get<Freud<Rat>>(any), q);
    }
}

TEST(Io, LargeIntegersUseStrings) {
    Int big("123456789012345678901234567890");
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_TRUE(to_json(Int(-5)).is_number_integer());
    EXPECT_EQ(int_from_json(to_json(big)), big);
    EXPECT_EQ(rat_from_json(Json("-3/6")), Rat(-1, 2));
    EXPECT_THROW(int_from_json(Json(1.5)), DomainError);
}

TEST(Io, ObjectFormForJordanComponents) {
    Json j = parse_json(R"({"kind": "H3B", "alpha": 1, "beta": 2, "A": {"diag": [1, 1, 2]}, "B": {}})");
    auto x = int_element_from_json(j);
    EXPECT_EQ(x, element(JordanKind::H3B, 1, 2, diag(JordanKind::H3B, 1, 1, 2), Jordan<Int>(JordanKind::H3B)));
}

TEST(Io, Errors) {
    EXPECT_THROW(parse_json("{\"kind\": "), ParseError);
    EXPECT_THROW(int_element_from_json(parse_json(R"({"kind": "H3Q", "alpha": 1, "beta": 0})")), DomainError);
    EXPECT_THROW(int_element_from_json(parse_json(R"({"kind": "Diag3", "alpha": 1, "beta": 0, "A": [1, 2]})")),
                 Error);
}

TEST(Io, WordRoundTrip) {
    Rng rng(82);
    for (JordanKind k : kReducibleKinds) {
        auto w = rng.word(k, 8, 3);
        auto back = word_from_json(parse_json(to_json(w).dump()), k);
        auto x = rng.freud(k, 5);
        EXPECT_EQ(apply_word(back, x), apply_word(w, x));
    }
}

TEST(Io, CubeRoundTripAndLayout) {
    auto k = JordanKind::Diag3;
    auto x = element(k, 1, 2, diag(k, 3, 4, 5), diag(k, 6, 7, 8));
    Json j = to_json(to_cube(x));
    // [[[a, e], [c, g]], [[b, f], [d, h]]]
    EXPECT_EQ(j["cube"].dump(), "[[[1,6],[8,4]],[[7,5],[3,2]]]");
    EXPECT_EQ(cube_from_json(j), to_cube(x));
}
