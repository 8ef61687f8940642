#include <doctest.h>

#include "longrun/rational.hpp"
#include "longrun/rng.hpp"
#include "longrun/stream.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace longrun;

namespace {

std::vector<Rational> rat(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

EpStream random_stream(Rng& rng) {
    std::vector<Rational> head, cycle;
    std::int64_t h = rng.uniform(0, 4);
    std::int64_t p = rng.uniform(1, 6);
    for (std::int64_t i = 0; i < h; ++i) head.emplace_back(rng.uniform(-3, 3));
    for (std::int64_t i = 0; i < p; ++i) cycle.emplace_back(rng.uniform(-3, 3));
    return EpStream::make(std::move(head), std::move(cycle));
}

}  // namespace

TEST_CASE("canonical form removes redundant head and cycle repetition") {
    // head tail equal to cycle tail gets absorbed into the cycle
    EpStream a = EpStream::make(rat({1}), rat({1, 1}));
    CHECK(a == constant_stream(Rational(1)));
    CHECK(a.head_length() == 0);
    CHECK(a.period() == 1);

    // non-primitive cycle collapses
    EpStream b = EpStream::make({}, rat({1, 0, 1, 0}));
    CHECK(b.period() == 2);
    CHECK(b == EpStream::make({}, rat({1, 0})));

    // absorb-and-rotate: head [2,1] cycle [3,1] == head [2] cycle [1,3]
    EpStream c = EpStream::make(rat({2, 1}), rat({3, 1}));
    CHECK(c.head_length() == 1);
    CHECK(c.head()[0] == Rational(2));
    CHECK(c.period() == 2);
    CHECK(c.cycle()[0] == Rational(1));
    CHECK(c.cycle()[1] == Rational(3));

    CHECK_THROWS_AS(EpStream::make({}, {}), std::invalid_argument);
}

TEST_CASE("canonicalization preserves every value") {
    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> head, cycle;
        std::int64_t h = rng.uniform(0, 5);
        std::int64_t p = rng.uniform(1, 6);
        for (std::int64_t j = 0; j < h; ++j) head.emplace_back(rng.uniform(-2, 2));
        for (std::int64_t j = 0; j < p; ++j) cycle.emplace_back(rng.uniform(-2, 2));
        // reference values straight from the raw (head, cycle) description
        auto raw_at = [&](std::int64_t t) -> Rational {
            if (t <= h) return head[t - 1];
            return cycle[(t - h - 1) % p];
        };
        EpStream s = EpStream::make(head, cycle);
        for (std::int64_t t = 1; t <= h + 3 * p + 2; ++t)
            CHECK(s.value_at(t) == raw_at(t));
    }
}

TEST_CASE("pointwise equality matches agreement up to the canonical horizon") {
    Rng rng(402);
    for (int i = 0; i < 300; ++i) {
        EpStream u = random_stream(rng);
        EpStream v = random_stream(rng);
        std::int64_t lcm = std::lcm(u.period(), v.period());
        std::int64_t horizon = u.head_length() + v.head_length() + 2 * lcm;
        bool agree = true;
        for (std::int64_t t = 1; t <= horizon && agree; ++t)
            agree = u.value_at(t) == v.value_at(t);
        CHECK(agree == (u == v));
    }
}

TEST_CASE("value_at and partial_sum use closed forms") {
    EpStream s = EpStream::make(rat({7}), rat({1, 2, 3}));
    CHECK(s.value_at(1) == Rational(7));
    CHECK(s.value_at(2) == Rational(1));
    CHECK(s.value_at(5) == Rational(1));
    CHECK(s.value_at(1000000000) == Rational(3));  // t-1 = 3*333333333

    // small T against direct accumulation
    Rational acc(0);
    for (std::int64_t t = 1; t <= 17; ++t) {
        acc += s.value_at(t);
        CHECK(s.partial_sum(t) == acc);
    }
    CHECK(s.partial_sum(0) == Rational(0));

    // huge T: 7 + full cycles + remainder, assembled independently
    std::int64_t T = 1000000000;
    std::int64_t tail_len = T - 1;
    Rational expected = Rational(7) + Rational(tail_len / 3) * Rational(6);
    std::int64_t rem = tail_len % 3;
    if (rem >= 1) expected += Rational(1);
    if (rem >= 2) expected += Rational(2);
    CHECK(s.partial_sum(T) == expected);
}

TEST_CASE("cycle statistics and extremes") {
    EpStream s = EpStream::make(rat({-5, 9}), rat({1, 2, 3}));
    CHECK(s.cycle_sum() == Rational(6));
    CHECK(s.cycle_mean() == Rational(2));
    CHECK(s.min_value() == Rational(-5));
    CHECK(s.max_value() == Rational(9));
    CHECK(s.min_cycle() == Rational(1));
    CHECK(s.max_cycle() == Rational(3));
}

TEST_CASE("add and scale are pointwise") {
    Rng rng(403);
    for (int i = 0; i < 100; ++i) {
        EpStream u = random_stream(rng);
        EpStream v = random_stream(rng);
        EpStream sum = add(u, v);
        EpStream sc = scale(u, Rational(-2, 3));
        for (int j = 0; j < 20; ++j) {
            std::int64_t t = rng.uniform(1, 10000);
            CHECK(sum.value_at(t) == u.value_at(t) + v.value_at(t));
            CHECK(sc.value_at(t) == u.value_at(t) * Rational(-2, 3));
        }
    }
}

TEST_CASE("tail drops a prefix") {
    EpStream alt = EpStream::make({}, rat({1, 0}));
    CHECK(tail(alt, 1) == EpStream::make({}, rat({0, 1})));
    CHECK(tail(alt, 2) == alt);
    EpStream s = EpStream::make(rat({5, 6}), rat({1, 2}));
    for (std::int64_t T : {0, 1, 2, 3, 7}) {
        EpStream shifted = tail(s, T);
        for (std::int64_t t = 1; t <= 12; ++t)
            CHECK(shifted.value_at(t) == s.value_at(t + T));
    }
}

TEST_CASE("replicate_prefix repeats the first T values") {
    EpStream alt = EpStream::make({}, rat({1, 0}));
    CHECK(replicate_prefix(alt, 3) == EpStream::make({}, rat({1, 0, 1})));
    CHECK(replicate_prefix(alt, 2) == alt);
    EpStream r = replicate_prefix(EpStream::make(rat({4}), rat({1})), 2);
    CHECK(r == EpStream::make({}, rat({4, 1})));
    CHECK_THROWS_AS(replicate_prefix(alt, 0), std::invalid_argument);
}

TEST_CASE("mean_complete keeps the prefix then holds its mean") {
    EpStream alt = EpStream::make({}, rat({1, 0}));
    EpStream m3 = mean_complete(alt, 3);
    CHECK(m3 == EpStream::make(rat({1, 0, 1}), {Rational(2, 3)}));
    EpStream m2 = mean_complete(alt, 2);
    CHECK(m2 == EpStream::make(rat({1, 0}), {Rational(1, 2)}));
    CHECK(m2.value_at(100) == Rational(1, 2));
}

TEST_CASE("add_indicator bumps one coordinate") {
    EpStream alt = EpStream::make({}, rat({1, 0}));
    EpStream bumped = add_indicator(alt, 2, Rational(1));
    CHECK(bumped == EpStream::make(rat({1, 1}), rat({1, 0})));
    for (std::int64_t t = 1; t <= 20; ++t) {
        Rational want = alt.value_at(t) + (t == 2 ? Rational(1) : Rational(0));
        CHECK(bumped.value_at(t) == want);
    }
}

TEST_CASE("transfer moves beta between two coordinates") {
    EpStream zero = constant_stream(Rational(0));
    EpStream tr = transfer(zero, 1, 2, Rational(1));
    CHECK(tr == EpStream::make(rat({1, -1}), rat({0})));

    Rng rng(404);
    for (int i = 0; i < 50; ++i) {
        EpStream s = random_stream(rng);
        std::int64_t a = rng.uniform(1, 10);
        std::int64_t b = rng.uniform(1, 10);
        if (a == b) continue;
        Rational beta(rng.uniform(-2, 2), 1 + rng.uniform(0, 2));
        EpStream t1 = transfer(s, a, b, beta);
        // inverse transfer restores the stream, partial sums unchanged from max(a,b) on
        CHECK(transfer(t1, a, b, -beta) == s);
        std::int64_t cut = std::max(a, b);
        CHECK(t1.partial_sum(cut) == s.partial_sum(cut));
        CHECK(t1.partial_sum(cut + 5) == s.partial_sum(cut + 5));
        CHECK(t1.value_at(a) == s.value_at(a) + beta);
        CHECK(t1.value_at(b) == s.value_at(b) - beta);
    }
    CHECK_THROWS_AS(transfer(zero, 3, 3, Rational(1)), std::invalid_argument);
}

TEST_CASE("bounded streams enforce their bound") {
    BoundedStream bad([](std::int64_t t) { return t >= 5 ? 2.0 : 0.0; }, 1.0, "bad");
    CHECK(bad.value_at(1) == 0.0);
    CHECK_THROWS_AS(bad.value_at(5), BoundViolation);
}

TEST_CASE("builtin generators") {
    BoundedStream h = harmonic_shift(1.0);
    CHECK(h.value_at(1) == doctest::Approx(2.0));
    CHECK(h.value_at(4) == doctest::Approx(1.25));
    CHECK(h.value_at(1000000) == doctest::Approx(1.000001));

    BoundedStream d = doubling_blocks();
    // parity of floor(log2 t): blocks 1 | 2,3 | 4..7 | 8..15 ...
    CHECK(d.value_at(1) == 0.0);
    CHECK(d.value_at(2) == 1.0);
    CHECK(d.value_at(3) == 1.0);
    CHECK(d.value_at(4) == 0.0);
    CHECK(d.value_at(7) == 0.0);
    CHECK(d.value_at(8) == 1.0);
    CHECK(d.value_at(15) == 1.0);
    CHECK(d.value_at(16) == 0.0);

    BoundedStream rep = replicate_prefix(d, 3);
    CHECK(rep.value_at(1) == 0.0);
    CHECK(rep.value_at(4) == 0.0);
    CHECK(rep.value_at(5) == 1.0);
    CHECK(rep.value_at(6) == 1.0);
}
