#include <doctest.h>

#include "longrun/permutation.hpp"
#include "longrun/rng.hpp"
#include "longrun/stream.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace longrun;

namespace {

std::vector<Rational> rat(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("finite permutations validate their mapping") {
    CHECK_THROWS_AS(FinitePermutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePermutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePermutation({0, 1}), std::invalid_argument);
    FinitePermutation ok({2, 1});
    CHECK(ok.apply(1) == 2);
    CHECK(ok.apply(2) == 1);
    CHECK(ok.apply(3) == 3);
    CHECK(FinitePermutation::identity(4).apply(3) == 3);
    FinitePermutation sw = FinitePermutation::swap_coords(2, 5);
    CHECK(sw.apply(2) == 5);
    CHECK(sw.apply(5) == 2);
    CHECK(sw.apply(3) == 3);
    CHECK(sw.apply(6) == 6);
}

TEST_CASE("applying a finite permutation rearranges a prefix only") {
    EpStream alt = EpStream::make({}, rat({1, 0}));
    EpStream swapped = apply_finite_permutation(alt, FinitePermutation::swap_coords(1, 2));
    CHECK(swapped == EpStream::make(rat({0, 1}), rat({1, 0})));

    // the classic first-coordinate counterexample: moving the single good
    // period changes the stream at coordinate 1
    EpStream dict = EpStream::make(rat({1, 0}), rat({0}));
    EpStream moved = apply_finite_permutation(dict, FinitePermutation::swap_coords(1, 2));
    CHECK(moved.value_at(1) == Rational(0));
    CHECK(moved.value_at(2) == Rational(1));
    CHECK(moved != dict);

    Rng rng(405);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> cycle;
        std::int64_t p = rng.uniform(1, 5);
        for (std::int64_t j = 0; j < p; ++j) cycle.emplace_back(rng.uniform(-3, 3));
        EpStream s = EpStream::make({}, cycle);
        std::int64_t n = rng.uniform(1, 8);
        std::vector<std::int64_t> mapping(n);
        for (std::int64_t j = 0; j < n; ++j) mapping[j] = j + 1;
        for (std::int64_t j = n - 1; j > 0; --j)
            std::swap(mapping[j], mapping[rng.uniform(0, j)]);
        FinitePermutation pi(mapping);
        EpStream out = apply_finite_permutation(s, pi);
        for (std::int64_t t = 1; t <= n; ++t)
            CHECK(out.value_at(t) == s.value_at(pi.apply(t)));
        for (std::int64_t t = n + 1; t <= n + 2 * p + 2; ++t)
            CHECK(out.value_at(t) == s.value_at(t));
    }
}

TEST_CASE("fixed-step permutations validate their blocks") {
    CHECK_THROWS_AS(FixedStepPermutation(2, {}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FixedStepPermutation(2, {{2, 3}}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FixedStepPermutation(0, {}, {}), std::invalid_argument);
    FixedStepPermutation ok(3, {{3, 1, 2}}, {2, 1, 3});
    CHECK(ok.apply(1) == 3);
    CHECK(ok.apply(2) == 1);
    CHECK(ok.apply(3) == 2);
    // later blocks use the tail bijection, offset by the block base
    CHECK(ok.apply(4) == 5);
    CHECK(ok.apply(5) == 4);
    CHECK(ok.apply(6) == 6);
    CHECK(ok.apply(7) == 8);
}

TEST_CASE("fixed-step application reverses blocks") {
    EpStream s = EpStream::make({}, rat({1, 2, 3}));
    FixedStepPermutation rev(3, {}, {3, 2, 1});
    EpStream out = apply_fixed_step_permutation(s, rev);
    CHECK(out == EpStream::make({}, rat({3, 2, 1})));
}

TEST_CASE("fixed-step application preserves block multisets") {
    Rng rng(406);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> head, cycle;
        std::int64_t h = rng.uniform(0, 3);
        std::int64_t p = rng.uniform(1, 5);
        for (std::int64_t j = 0; j < h; ++j) head.emplace_back(rng.uniform(-3, 3));
        for (std::int64_t j = 0; j < p; ++j) cycle.emplace_back(rng.uniform(-3, 3));
        EpStream s = EpStream::make(head, cycle);

        std::int64_t k = rng.uniform(2, 4);
        auto random_block = [&]() {
            std::vector<std::int64_t> b(k);
            for (std::int64_t j = 0; j < k; ++j) b[j] = j + 1;
            for (std::int64_t j = k - 1; j > 0; --j)
                std::swap(b[j], b[rng.uniform(0, j)]);
            return b;
        };
        std::vector<std::vector<std::int64_t>> blocks;
        std::int64_t nb = rng.uniform(0, 3);
        for (std::int64_t j = 0; j < nb; ++j) blocks.push_back(random_block());
        FixedStepPermutation pi(k, blocks, random_block());
        EpStream out = apply_fixed_step_permutation(s, pi);

        // per-block multisets match, hence all k-step partial sums match
        std::int64_t blocks_to_check = nb + h + 4 * p + 4;
        for (std::int64_t b = 0; b < blocks_to_check; ++b) {
            std::vector<Rational> xs, ys;
            for (std::int64_t r = 1; r <= k; ++r) {
                xs.push_back(s.value_at(b * k + r));
                ys.push_back(out.value_at(b * k + r));
            }
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            CHECK(xs == ys);
        }
        CHECK(out.partial_sum(7 * k) == s.partial_sum(7 * k));
    }
}
