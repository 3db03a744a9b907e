#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwcl/errors.hpp"
#include "hwcl/random.hpp"
#include "hwcl/weights.hpp"
#include "test_support.hpp"

using namespace hwcl;

TEST_CASE("parse_weight accepts prefix;tail and canonicalizes") {
    const Weight a = parse_weight("1,0,-2;0");
    CHECK(a.prefix() == std::vector<long long>{1, 0, -2});
    CHECK(a.tail() == 0);

    const Weight b = parse_weight("-5;1");
    CHECK(b.prefix() == std::vector<long long>{-5});
    CHECK(b.tail() == 1);

    const Weight c = parse_weight("1,1;1");
    CHECK(c.prefix().empty());
    CHECK(c.tail() == 1);

    const Weight zero = parse_weight("");
    CHECK(zero.is_zero());

    const Weight no_tail = parse_weight("2,1");
    CHECK(no_tail.prefix() == std::vector<long long>{2, 1});
    CHECK(no_tail.tail() == 0);
}

TEST_CASE("parse_weight rejects malformed text") {
    CHECK_THROWS_AS(parse_weight("1,a;0"), parse_error);
    CHECK_THROWS_AS(parse_weight("1;2;3"), parse_error);
    CHECK_THROWS_AS(parse_weight("1,,2;0"), parse_error);
    CHECK_THROWS_AS(parse_weight("1,2;"), parse_error);
    CHECK_THROWS_AS(parse_weight("1.5;0"), parse_error);
}

TEST_CASE("weight text round trip") {
    for (const char* text : {"1,0,-2;0", "-5;1", "2,1;0", ";3"}) {
        const Weight w = parse_weight(text);
        CHECK(parse_weight(w.to_string()) == w);
    }
}

TEST_CASE("conjugate on the reference diagram") {
    const Partition p({3, 2, 2, 1});
    CHECK(conjugate(p).parts() == std::vector<long long>{4, 3, 1});
    CHECK(conjugate(Partition{}).parts().empty());
    CHECK(conjugate(Partition({5})).parts() == std::vector<long long>{1, 1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution preserving size") {
    for (long long n = 0; n <= 12; ++n) {
        for (const auto& parts : hwcl_test::partitions_of(n)) {
            const Partition p(parts);
            const Partition pc = conjugate(p);
            CHECK(pc.size() == p.size());
            CHECK(conjugate(pc) == p);
            CHECK(pc.length() == static_cast<std::size_t>(p.part(0)));
        }
    }
}

TEST_CASE("split_signs") {
    auto [p1, m1] = split_signs(FiniteWeight({1, -1}));
    CHECK(p1.parts() == std::vector<long long>{1});
    CHECK(m1.parts() == std::vector<long long>{1});

    auto [p2, m2] = split_signs(FiniteWeight({2, -3, 1}));
    CHECK(p2.parts() == std::vector<long long>{2, 1});
    CHECK(m2.parts() == std::vector<long long>{3});

    auto [p3, m3] = split_signs(FiniteWeight({1}));
    CHECK(p3.parts() == std::vector<long long>{1});
    CHECK(m3.parts().empty());
}

TEST_CASE("split_signs sizes add up") {
    RandomState rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<long long> entries;
        const int len = static_cast<int>(rng.uniform_int(0, 6));
        for (int i = 0; i < len; ++i) entries.push_back(rng.uniform_int(-5, 5));
        const FiniteWeight w(entries);
        const auto [plus, minus] = split_signs(w);
        CHECK(plus.size() + minus.size() == w.size_abs());
    }
}

TEST_CASE("dual_weight") {
    const Weight a = parse_weight("1;0");
    CHECK(dual_weight(a) == parse_weight("-1;0"));
    CHECK(dual_weight(Weight{}) == Weight{});
    CHECK(dual_weight(parse_weight("-5;1")) == parse_weight("5;-1"));
}

TEST_CASE("dual_weight is an involution") {
    RandomState rng(11);
    for (int t = 0; t < 200; ++t) {
        std::vector<long long> prefix;
        const int len = static_cast<int>(rng.uniform_int(0, 5));
        for (int i = 0; i < len; ++i) prefix.push_back(rng.uniform_int(-4, 4));
        const Weight w(prefix, rng.uniform_int(-2, 2));
        CHECK(dual_weight(dual_weight(w)) == w);
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("finite weight trims trailing zeros") {
    const FiniteWeight w({1, 0, -2, 0, 0});
    CHECK(w.entries() == std::vector<long long>{1, 0, -2});
    CHECK(w.size_abs() == 3);
    CHECK(FiniteWeight({0, 0}).is_zero());
}
