#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <string>

#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"

using namespace eurhythm;

namespace {

std::string bits(const Rhythm& r) {
    std::string out(static_cast<std::size_t>(r.timespan()), '0');
    for (int o : r.onsets()) out[static_cast<std::size_t>(o)] = '1';
    return out;
}

}  // namespace

TEST_CASE("bjorklund worked examples") {
    CHECK(bits(bjorklund(5, 13)) == "1001010010100");
    CHECK(to_box(bjorklund(3, 8)) == "x..x..x.");
    CHECK(to_box(bjorklund(5, 8)) == "x.xx.xx.");
    CHECK(to_box(bjorklund(7, 19)) == "x..x.x..x..x.x..x..");
    CHECK(bjorklund(4, 4) == Rhythm(4, {0, 1, 2, 3}));
    CHECK(bjorklund(0, 5) == Rhythm(5, {}));
    CHECK(to_box(bjorklund(4, 5)) == "xxxx.");
    CHECK_THROWS_AS(bjorklund(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(bjorklund(1, 0), std::invalid_argument);
}

TEST_CASE("bjorklund stays within a linear number of sequence appends") {
    for (int n = 1; n <= 128; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(detail::bjorklund_instrumented(k, n).sequence_appends <= 2 * n);
}

TEST_CASE("euclidean_recursive worked examples") {
    CHECK(euclidean_recursive(13, 5) == DistanceSeq{2, 3, 3, 2, 3});
    CHECK(euclidean_recursive(12, 4) == DistanceSeq{3, 3, 3, 3});
    CHECK(canonical_necklace(euclidean_recursive(8, 5)) ==
          canonical_necklace(bjorklund(5, 8)));
    CHECK_THROWS_AS(euclidean_recursive(8, 0), std::invalid_argument);
}

TEST_CASE("euclidean_recursive emits k floor-or-ceil terms summing to n") {
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= n; ++k) {
            const DistanceSeq gaps = euclidean_recursive(n, k);
            REQUIRE(static_cast<int>(gaps.size()) == k);
            CHECK(std::accumulate(gaps.begin(), gaps.end(), 0) == n);
            for (int g : gaps) CHECK((g == n / k || g == n / k + 1));
        }
}

TEST_CASE("clough_douthett worked examples") {
    CHECK(clough_douthett(8, 3) == Rhythm(8, {0, 2, 5}));
    CHECK(clough_douthett(5, 5) == Rhythm(5, {0, 1, 2, 3, 4}));
    CHECK(clough_douthett(16, 4) == Rhythm(16, {0, 4, 8, 12}));
    CHECK_THROWS_AS(clough_douthett(8, 0), std::invalid_argument);
}

TEST_CASE("snap worked examples") {
    CHECK(snap(8, 3) == Rhythm(8, {1, 3, 6}));
    CHECK(snap(9, 1).onset_count() == 1);
    CHECK(canonical_necklace(snap(16, 4)) == canonical_necklace(Rhythm(16, {0, 4, 8, 12})));
    CHECK_THROWS_AS(snap(8, 0), std::invalid_argument);
}

TEST_CASE("generated rhythms") {
    CHECK(generated_rhythm(7, 16, 5) == Rhythm(16, {0, 4, 5, 9, 10, 14, 15}));
    CHECK(generated_rhythm(4, 9, 1) == Rhythm(9, {0, 1, 2, 3}));
    CHECK_THROWS_AS(generated_rhythm(4, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(generated_rhythm(2, 4, 4), std::invalid_argument);

    // Coprime steps never collide.
    for (int n = 1; n <= 24; ++n)
        for (int m = 0; m < n; ++m) {
            if (gcd(m, n) != 1) continue;
            for (int k = 1; k <= n; ++k)
                CHECK(generated_rhythm(k, n, m).onset_count() == k);
        }
}

TEST_CASE("exceptional rhythm F") {
    const Rhythm f = exceptional_f();
    CHECK(f == Rhythm(6, {0, 1, 2, 4}));
    CHECK(to_box(f) == "xxx.x.");
    CHECK(f.onset_count() == 4);
    CHECK(f.timespan() == 6);
}

TEST_CASE("all four generators agree at necklace level up to n = 64") {
    for (int n = 2; n <= 64; ++n)
        for (int k = 2; k <= n; ++k) {
            const NecklaceClass ref = canonical_necklace(clough_douthett(n, k));
            CHECK(canonical_necklace(bjorklund(k, n)) == ref);
            CHECK(canonical_necklace(snap(n, k)) == ref);
            CHECK(canonical_necklace(from_distance_seq(euclidean_recursive(n, k), 0, n)) == ref);
        }
}
