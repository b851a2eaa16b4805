#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "parsa/rng.hpp"

using namespace parsa;

TEST_CASE("same key reproduces the same sequence") {
    auto a = make_stream({42, 7, 3});
    auto b = make_stream({42, 7, 3});
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next_uniform() == b.next_uniform());
}

TEST_CASE("streams differing in one key field are unrelated") {
    auto check_disjoint = [](StreamKey ka, StreamKey kb) {
        auto a = make_stream(ka);
        auto b = make_stream(kb);
        int differing = 0;
        for (int i = 0; i < 1000; ++i)
            differing += a.next_uniform() != b.next_uniform();
        CHECK(differing >= 990);
    };
    check_disjoint({0, 0, 0}, {0, 1, 0}); // chain
    check_disjoint({0, 5, 0}, {0, 5, 1}); // level
    check_disjoint({1, 5, 2}, {2, 5, 2}); // master seed
}

TEST_CASE("draws lie in [0,1) with the uniform moments") {
    auto s = make_stream({123, 0, 0});
    const int n = 1'000'000;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.004));       // +-0.002 absolute
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.012)); // +-0.001 absolute
    CHECK(s.draws() == static_cast<std::uint64_t>(n));
}

TEST_CASE("coordinate index is uniform and consumes one draw") {
    auto s = make_stream({9, 1, 0});
    SUBCASE("n=1 is always 0") {
        for (int i = 0; i < 100; ++i)
            CHECK(s.next_coordinate_index(1) == 0);
    }
    SUBCASE("n=8 frequencies within 1/8 +- 0.002") {
        const int n = 1'000'000;
        std::vector<int> counts(8, 0);
        for (int i = 0; i < n; ++i)
            ++counts[s.next_coordinate_index(8)];
        for (int d = 0; d < 8; ++d)
            CHECK(std::abs(counts[d] / double(n) - 0.125) < 0.002);
    }
    SUBCASE("counter advances by exactly one") {
        const auto before = s.draws();
        s.next_coordinate_index(5);
        CHECK(s.draws() == before + 1);
    }
}

TEST_CASE("draw i is a pure function of key and i") {
    // counter-based construction: skipping ahead must hit the same values
    auto a = make_stream({77, 3, 9});
    std::vector<double> first(100);
    for (auto& v : first)
        v = a.next_uniform();
    auto b = make_stream({77, 3, 9});
    for (int i = 0; i < 100; ++i)
        CHECK(b.next_uniform() == first[i]);
}
