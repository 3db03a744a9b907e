#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "hwcl/errors.hpp"
#include "hwcl/oracles.hpp"
#include "hwcl/random.hpp"
#include "test_support.hpp"

using namespace hwcl;
using Complex = std::complex<double>;

TEST_CASE("weyl dimension examples") {
    CHECK(weyl_dim({0}) == 1);
    CHECK(weyl_dim({0, 0, 0, 0}) == 1);
    CHECK(weyl_dim({1, 0}) == 2);
    CHECK(weyl_dim({3, 2, 2, 1}) == 15);
    CHECK(hwcl_test::hook_content_dim(Partition({3, 2, 2, 1}), 4) == 15);
}

TEST_CASE("weyl dimension against the hook-content count") {
    for (long long size = 1; size <= 6; ++size) {
        for (const auto& parts : hwcl_test::partitions_of(size)) {
            const Partition shape(parts);
            for (int n = static_cast<int>(shape.length()); n <= 4; ++n) {
                Tuple padded(parts);
                padded.resize(static_cast<std::size_t>(n), 0);
                CHECK(weyl_dim(padded) == hwcl_test::hook_content_dim(shape, n));
            }
        }
    }
}

TEST_CASE("weyl dimension equals the semistandard tableau count") {
    for (long long size = 0; size <= 6; ++size) {
        for (const auto& parts : hwcl_test::partitions_of(size)) {
            const Partition shape(parts);
            for (int n = std::max<int>(1, static_cast<int>(shape.length())); n <= 4; ++n) {
                if (shape.length() > static_cast<std::size_t>(n)) continue;
                Tuple padded(parts);
                padded.resize(static_cast<std::size_t>(n), 0);
                CHECK(weyl_dim(padded) == ssyt_count(shape, n));
                // shifting every entry leaves the dimension unchanged
                Tuple shifted = padded;
                for (long long& v : shifted) v -= 1;
                CHECK(weyl_dim(shifted) == ssyt_count(shape, n));
            }
        }
    }
}

TEST_CASE("schur evaluation at small shapes") {
    RandomState rng(17);
    for (int t = 0; t < 20; ++t) {
        const EvalPoint x = rng.distinct_unit_circle(2);
        const Complex a = x[0], b = x[1];
        CHECK(std::abs(schur_eval({1, 0}, x) - (a + b)) < 1e-12);
        CHECK(std::abs(schur_eval({1, 1}, x) - a * b) < 1e-12);
        CHECK(std::abs(schur_eval({2, 0}, x) - (a * a + a * b + b * b)) < 1e-12);
    }
}

TEST_CASE("schur evaluation with the determinant twist") {
    RandomState rng(23);
    for (int t = 0; t < 20; ++t) {
        const EvalPoint x = rng.distinct_unit_circle(2);
        const Complex a = x[0], b = x[1];
        const Complex adjoint = schur_eval({1, -1}, x);
        const Complex expected = (a * a + a * b + b * b) / (a * b);
        CHECK(std::abs(adjoint - expected) < 1e-12);
    }
}

TEST_CASE("schur evaluation rejects coincident points") {
    CHECK_THROWS_AS(schur_eval({1, 0}, EvalPoint{{1.0, 0.0}, {1.0, 0.0}}), numeric_error);
}

TEST_CASE("schur evaluation is symmetric in the coordinates") {
    RandomState rng(31);
    for (int t = 0; t < 30; ++t) {
        EvalPoint x = rng.distinct_unit_circle(3);
        const Complex base = schur_eval({3, 1, 0}, x);
        std::swap(x[0], x[2]);
        CHECK(std::abs(schur_eval({3, 1, 0}, x) - base) < 1e-10 * std::max(1.0, std::abs(base)));
    }
}

TEST_CASE("schur evaluation near the identity approaches the dimension") {
    const double eps = 1e-4;
    for (const Tuple& lam : {Tuple{2, 1}, Tuple{1, 1}, Tuple{2, 1, 0}, Tuple{3, 1, 0}}) {
        EvalPoint x;
        for (std::size_t i = 0; i < lam.size(); ++i)
            x.emplace_back(1.0 + eps * static_cast<double>(i + 1), 0.0);
        const double dim = static_cast<double>(weyl_dim(lam));
        CHECK(std::abs(schur_eval(lam, x) - dim) < 1e-2 * dim);
    }
}

TEST_CASE("branching character identity") {
    CHECK(branching_identity_check({2, 0}, 10, 1));
    CHECK(branching_identity_check({2, 0}, 10, 99));
    CHECK(branching_identity_check({1, 1, 0}, 10, 2));
    CHECK(branching_identity_check({3, 1, -1}, 10, 3));
    CHECK_THROWS_AS(branching_identity_check({1}, 10, 0), std::invalid_argument);
}

TEST_CASE("ssyt counts") {
    CHECK(ssyt_count(Partition({1}), 3) == 3);
    CHECK(ssyt_count(Partition({1, 1}), 2) == 1);
    CHECK(ssyt_count(Partition({2}), 2) == 3);
    CHECK(ssyt_count(Partition({1, 1, 1}), 2) == 0);
    CHECK(ssyt_count(Partition{}, 5) == 1);
}
