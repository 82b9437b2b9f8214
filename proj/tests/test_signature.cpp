#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystals/signature.hpp"
#include "crystals/tableau.hpp"

using namespace crystals;
using Elem = FiniteCrystal::Elem;

TEST_CASE("component signatures") {
    CHECK(component_signature(2, 1, 5) ==
          Signature{{false, 5}, {false, 5}, {true, 5}});
    CHECK(component_signature(0, 0, 1).empty());
}

TEST_CASE("stack reduction") {
    // + - cancels, - + does not.
    CHECK(reduce_signature({{true, 2}, {false, 1}}).empty());
    CHECK(reduce_signature({{false, 2}, {true, 1}}) ==
          Signature{{false, 2}, {true, 1}});
    // Idempotence and shape on random inputs.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Signature s;
        int len = static_cast<int>(rng() % 20);
        for (int t = 0; t < len; ++t) s.push_back({rng() % 2 == 0, t});
        auto r = reduce_signature(s);
        CHECK(reduce_signature(r) == r);
        bool seen_plus = false;
        for (const auto& entry : r) {
            if (entry.plus) seen_plus = true;
            else CHECK(!seen_plus);  // minuses before pluses
        }
        // Reduction preserves the (count of -) - (count of +) difference? No:
        // it preserves both counts minus the number of cancelled pairs, so the
        // difference of (minus - plus) is invariant.
        int d0 = 0, d1 = 0;
        for (const auto& entry : s) d0 += entry.plus ? 1 : -1;
        for (const auto& entry : r) d1 += entry.plus ? 1 : -1;
        CHECK(d0 == d1);
    }
}

// The level-2 rank-1 worked example: B = {(1,1),(1,2),(2,2)} with
// f_1: (1,1) -> (1,2) -> (2,2).
TEST_CASE("tensor signature of the level-2 rank-1 example") {
    TableauCrystal B(1, 1, 2);
    const Elem b00{1, 1}, b01{1, 2}, b11{2, 2};

    CHECK(B.f(1, b00) == b01);
    CHECK(B.f(1, b01) == b11);
    CHECK(!B.f(1, b11).has_value());

    // Truncation at 5 components with the leading two-plus block at slot 6:
    // p(5) = (2,2) is the hidden ground-state component.
    std::vector<Elem> factors{b11, b01, b01, b01, b00};
    Signature s = tensor_signature(B, 1, factors, 2);
    CHECK(signature_to_string(s) ==
          "+@6,+@6,-@5,-@5,-@4,+@4,-@3,+@3,-@2,+@2,+@1,+@1");
    CHECK(signature_to_string(reduce_signature(s)) == "-@4,+@2,+@1,+@1");

    CHECK(f_position(B, 1, factors, 2) == 2);
    CHECK(e_position(B, 1, factors, 2) == 4);

    // Without the truncation padding the statistics are the same.
    std::vector<Elem> window{b01, b01, b01, b00};
    CHECK(tensor_eps_phi(B, 1, window) == std::pair(1, 3));
    CHECK(f_position(B, 1, window) == 2);
    CHECK(e_position(B, 1, window) == 4);

    auto fw = tensor_apply(B, 'f', 1, window);
    REQUIRE(fw.has_value());
    CHECK(*fw == std::vector<Elem>{b01, b01, b11, b00});
    auto ew = tensor_apply(B, 'e', 1, window);
    REQUIRE(ew.has_value());
    CHECK(*ew == std::vector<Elem>{b00, b01, b01, b00});
}

TEST_CASE("tensor apply and inverse on pairs") {
    TableauCrystal B(2, 1, 1);
    auto all = B.elements();
    for (const auto& x : all)
        for (const auto& y : all) {
            for (int i = 0; i <= 2; ++i) {
                std::vector<Elem> pair{x, y};
                auto fw = tensor_apply(B, 'f', i, pair);
                if (!fw) continue;
                auto back = tensor_apply(B, 'e', i, *fw);
                REQUIRE(back.has_value());
                CHECK(*back == pair);
            }
        }
}

TEST_CASE("u-block selection") {
    TableauCrystal B(1, 1, 2);
    // Leftmost surviving plus comes from the block: f picks position m+1,
    // e is undefined.
    std::vector<Elem> window{Elem{1, 1}};
    CHECK(f_position(B, 1, window, 2) == std::optional<int>(2));
    CHECK(!e_position(B, 1, window, 2).has_value());
    // The block's pluses cancel against component minuses.
    std::vector<Elem> wall{Elem{2, 2}};
    CHECK(!f_position(B, 1, wall, 2).has_value());
    CHECK(f_position(B, 0, wall, 0) == std::optional<int>(1));
}
