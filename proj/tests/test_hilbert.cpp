#include <doctest.h>

#include <random>

#include "ordsel/hilbert.hpp"
#include "ordsel/oracle.hpp"

using namespace ordsel;

namespace {

Int rand_nonzero(std::mt19937_64& rng, long bound) {
    for (;;) {
        long v = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        if (v != 0) return Int(v);
    }
}

} // namespace

TEST_CASE("hilbert symbol fixtures") {
    Place two = Place::finite(Int(2));
    Place inf = Place::infinite();

    // brute-force value computed by the oracle, then frozen
    CHECK(oracle::hilbert_bruteforce(Int(-1), Int(-1), Int(2), 8) == -1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), two) == -1);

    CHECK(hilbert_symbol(Int(-1), Int(-1), inf) == -1); // x^2+y^2+z^2 = 0 has no real point
    for (long b : {-7L, -1L, 2L, 3L, 10L}) {
        CHECK(hilbert_symbol(Int(1), Int(b), two) == 1);
        CHECK(hilbert_symbol(Int(1), Int(b), inf) == 1);
        CHECK(hilbert_symbol(Int(1), Int(b), Place::finite(Int(5))) == 1);
    }
    CHECK_THROWS_AS(hilbert_symbol(Int(0), Int(3), two), validation_error);
}

TEST_CASE("ramified sets") {
    auto rs = ramified_set(QuatAlg::symbol(Int(-1), Int(-1)));
    REQUIRE(rs.size() == 2);
    CHECK(rs[0] == Place::finite(Int(2)));
    CHECK(rs[1] == Place::infinite());

    CHECK(ramified_set(QuatAlg::symbol(Int(-1), Int(5))).empty()); // -1 is a norm from Q(sqrt 5)
    CHECK(ramified_set(QuatAlg::symbol(Int(1), Int(77))).empty());

    auto rs30 = ramified_set(QuatAlg::symbol(Int(-30), Int(77)));
    CHECK(rs30.size() % 2 == 0);

    // ramset form returns its own data
    auto given = ramified_set(QuatAlg::ramset({Int(2), Int(7)}, false));
    REQUIRE(given.size() == 2);
    CHECK(given[0] == Place::finite(Int(2)));
    CHECK(given[1] == Place::finite(Int(7)));

    CHECK_THROWS_AS(QuatAlg::ramset({Int(5)}, false), validation_error); // odd parity
    CHECK_THROWS_AS(QuatAlg::ramset({Int(6), Int(7)}, false), validation_error);
}

TEST_CASE("reciprocity fixtures and 500 random pairs") {
    CHECK(verify_reciprocity(Int(-1), Int(-1)));
    CHECK(verify_reciprocity(Int(3), Int(5)));
    CHECK(verify_reciprocity(Int(-30), Int(77)));

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        Int a = rand_nonzero(rng, 10000);
        Int b = rand_nonzero(rng, 10000);
        CAPTURE(a.get_str());
        CAPTURE(b.get_str());
        CHECK(verify_reciprocity(a, b));
    }
}

TEST_CASE("bilinearity, symmetry, square invariance") {
    std::mt19937_64 rng(99);
    std::vector<Place> places{Place::finite(Int(2)), Place::finite(Int(3)), Place::finite(Int(5)),
                              Place::finite(Int(7)), Place::finite(Int(11)), Place::infinite()};
    for (int t = 0; t < 200; ++t) {
        Int a = rand_nonzero(rng, 300);
        Int b1 = rand_nonzero(rng, 300);
        Int b2 = rand_nonzero(rng, 300);
        Int c = rand_nonzero(rng, 30);
        for (const Place& v : places) {
            CHECK(hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
            CHECK(hilbert_symbol(a, b1, v) == hilbert_symbol(b1, a, v));
            CHECK(hilbert_symbol(a * c * c, b1, v) == hilbert_symbol(a, b1, v));
        }
    }
}

TEST_CASE("formula agrees with the brute-force oracle (reduced sweep)") {
    // the exhaustive p <= 50 sweep runs in the acceptance suite
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        for (long a = -20; a <= 20; ++a) {
            for (long b = -20; b <= 20; ++b) {
                if (a == 0 || b == 0) continue;
                unsigned k = 3 + 2 * std::max(valuation(Int(a), p), valuation(Int(b), p));
                int expect = oracle::hilbert_bruteforce(Int(a), Int(b), p, k);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p.get_str());
                CHECK(hilbert_symbol(Int(a), Int(b), Place::finite(p)) == expect);
            }
        }
    }
}

TEST_CASE("ramified set cardinality is always even") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        Int a = rand_nonzero(rng, 500);
        Int b = rand_nonzero(rng, 500);
        CHECK(ramified_set(QuatAlg::symbol(a, b)).size() % 2 == 0);
    }
}
