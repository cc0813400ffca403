#include "twozero/params.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <tuple>

using namespace twozero;
using params::derive;
using params::enumerate_tuples;
using params::TwoZeroParams;

TEST_CASE("derive computes every scalar of the family") {
    const auto a = derive(3, 1, 2, 1, 2, 1);
    CHECK(a.q == 3);
    CHECK(a.D == 4);
    CHECK(a.n == 8);
    CHECK(a.f == 2);
    CHECK(a.g == 1);
    CHECK(a.f_prime == 2);
    CHECK(a.n1 == 8);
    CHECK(a.n2 == 8);
    CHECK(a.mu == 2);
    CHECK(a.msg_space == 81);

    const auto b = derive(2, 2, 1, 1, 3, 1);
    CHECK(b.q == 4);
    CHECK(b.D == 1);
    CHECK(b.n == 3);
    CHECK(b.f == 1);
    CHECK(b.g == 1);
    CHECK(b.mu == 3);
}

TEST_CASE("derive rejects inadmissible tuples by constraint name") {
    const auto expect_violation = [](auto fn, const std::string& which) {
        try {
            fn();
            FAIL("expected ConstraintViolated(" + which + ")");
        } catch (const ConstraintViolated& e) {
            CHECK(e.which == which);
        }
    };
    expect_violation([] { derive(3, 1, 2, 1, 1, 1); }, "e>1");
    expect_violation([] { derive(4, 1, 2, 1, 2, 1); }, "p prime");
    expect_violation([] { derive(3, 1, 2, 2, 2, 1); }, "de|(q-1)");
    expect_violation([] { derive(5, 1, 1, 1, 2, 2); }, "lambda|d");
    expect_violation([] { derive(3, 1, 1, 1, 2, 1); }, "n>=3");
}

TEST_CASE("enumeration covers the worked desk-scale tuples") {
    const auto has = [](const std::vector<TwoZeroParams>& v,
                        std::int64_t p, std::int64_t t, std::int64_t k,
                        std::int64_t d, std::int64_t e, std::int64_t lambda) {
        for (const auto& prm : v)
            if (prm.p == p && prm.t == t && prm.k == k && prm.d == d &&
                prm.e == e && prm.lambda == lambda)
                return true;
        return false;
    };

    const auto upto4 = enumerate_tuples(4, 1000000, 1000);
    CHECK(has(upto4, 2, 2, 1, 1, 3, 1));  // q=4: the only shape at k=1

    const auto upto3 = enumerate_tuples(3, 1000000, 1000);
    CHECK(has(upto3, 3, 1, 2, 1, 2, 1));
    for (const auto& prm : upto3) {
        CHECK(prm.q == 3);
        CHECK(prm.d == 1);
        CHECK(prm.e == 2);
    }

    CHECK(enumerate_tuples(2, 1000000, 1000).empty());
}

TEST_CASE("every enumerated tuple is internally consistent") {
    const auto tuples = enumerate_tuples(9, 1 << 20, 1000);
    REQUIRE(!tuples.empty());

    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t,
                        std::int64_t, std::int64_t>>
        seen;
    std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t,
               std::int64_t>
        prev{0, 0, 0, 0, 0};
    for (const auto& prm : tuples) {
        // round-trips through derive without error
        const auto again =
            derive(prm.p, prm.t, prm.k, prm.d, prm.e, prm.lambda);
        CHECK(again.n == prm.n);
        CHECK(again.msg_space == prm.msg_space);

        // the two closed forms for n2 agree
        CHECK(prm.n2 == prm.n1 * ((prm.q - 1) / std::gcd(prm.q - 1, prm.n1)));
        CHECK(prm.n2 == (prm.n1 * prm.d) / prm.g);

        // splitting-field degree recomputed independently
        std::int64_t acc = prm.q % prm.n, ord = 1;
        while (acc != 1) {
            acc = acc * (prm.q % prm.n) % prm.n;
            ++ord;
        }
        CHECK(ord == prm.k);

        CHECK((prm.q - 1) % prm.mu == 0);
        CHECK(prm.f == prm.g * prm.f_prime);

        // strict lexicographic order, no duplicates
        const auto key = std::make_tuple(prm.q, prm.k, prm.d, prm.e,
                                         prm.lambda);
        CHECK(seen.insert(key).second);
        CHECK(prev < key);
        prev = key;
    }
}
