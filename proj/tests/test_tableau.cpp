#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crystals/graph.hpp"
#include "crystals/tableau.hpp"

using namespace crystals;
using Elem = FiniteCrystal::Elem;

TEST_CASE("B^{2,1} at rank 3: elements and full graph") {
    TableauCrystal B(3, 2, 1);
    auto all = B.elements();
    REQUIRE(all == std::vector<Elem>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

    auto g = build_graph(B, all, {0, 1, 2, 3});
    CHECK(g.vertices == std::vector<std::string>{
                            B.encode({1, 2}), B.encode({1, 3}), B.encode({1, 4}),
                            B.encode({2, 3}), B.encode({2, 4}), B.encode({3, 4})});
    // Vertex indices: 12=0, 13=1, 14=2, 23=3, 24=4, 34=5.
    std::vector<std::array<int, 3>> expect{
        {0, 1, 2},  // 12 -2-> 13
        {1, 3, 1},  // 13 -1-> 23
        {1, 2, 3},  // 13 -3-> 14
        {3, 4, 3},  // 23 -3-> 24
        {2, 4, 1},  // 14 -1-> 24
        {4, 5, 2},  // 24 -2-> 34
        {4, 0, 0},  // 24 -0-> 12
        {5, 1, 0},  // 34 -0-> 13
    };
    auto lhs = g.edges;
    std::sort(lhs.begin(), lhs.end());
    std::sort(expect.begin(), expect.end());
    CHECK(lhs == expect);
}

TEST_CASE("promotion on single columns") {
    TableauCrystal B(3, 2, 1);
    CHECK(B.promotion({2, 4}) == Elem{1, 3});
    CHECK(B.promotion({3, 4}) == Elem{1, 4});
    CHECK(B.promotion_inverse(B.promotion({2, 4})) == Elem{2, 4});
}

TEST_CASE("affine arrows through promotion") {
    TableauCrystal B(3, 2, 1);
    CHECK(B.f(0, {2, 4}) == Elem{1, 2});
    CHECK(B.f(0, {3, 4}) == Elem{1, 3});
    CHECK(!B.f(0, {1, 2}).has_value());
    CHECK(B.e(0, {1, 2}) == Elem{2, 4});
    CHECK(B.e(0, {1, 3}) == Elem{3, 4});
}

TEST_CASE("promotion has order n+1") {
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 2; ++l) {
            TableauCrystal B(3, k, l);
            for (const auto& b : B.elements()) {
                Elem cur = b;
                for (int t = 0; t < 4; ++t) cur = B.promotion(cur);
                CHECK(cur == b);
                // and the inverse really inverts
                CHECK(B.promotion_inverse(B.promotion(b)) == b);
            }
        }
    }
}

TEST_CASE("ground states") {
    TableauCrystal B(3, 2, 1);
    CHECK(B.ground_state_tableau(1) == Elem{3, 4});
    CHECK(B.ground_state_tableau(2) == Elem{1, 2});
    CHECK(B.ground_state_tableau(3) == Elem{3, 4});  // period 2 when k = 2
    CHECK(B.phi_weight({3, 4}) == Weight{1, 0, 0, 0});
    CHECK(B.eps_weight({3, 4}) == Weight{0, 0, 1, 0});
    CHECK(B.minimal({1, 0, 0, 0}) == Elem{3, 4});
    CHECK(B.minimal({0, 0, 1, 0}) == Elem{1, 2});

    TableauCrystal S(1, 1, 2);
    CHECK(S.ground_state_tableau(1) == Elem{2, 2});
    CHECK(S.ground_state_tableau(2) == Elem{1, 1});
}

TEST_CASE("operator laws, exhaustively at small size") {
    for (auto [n, k, l] : {std::tuple{3, 2, 1}, {3, 1, 2}, {3, 3, 2}, {2, 2, 2}}) {
        TableauCrystal B(n, k, l);
        for (const auto& b : B.elements()) {
            for (int i = 0; i <= n; ++i) {
                const int phi = B.phi(i, b), eps = B.eps(i, b);
                auto fb = B.f(i, b);
                CHECK(fb.has_value() == (phi > 0));
                if (fb) {
                    CHECK(B.contains(*fb));
                    CHECK(B.e(i, *fb) == b);
                    CHECK(B.phi(i, *fb) == phi - 1);
                    CHECK(B.eps(i, *fb) == eps + 1);
                }
                auto eb = B.e(i, b);
                CHECK(eb.has_value() == (eps > 0));
                if (eb) CHECK(B.f(i, *eb) == b);
            }
        }
    }
}

TEST_CASE("perfectness surrogate") {
    for (auto [n, k, l] : {std::tuple{3, 2, 1}, {3, 2, 2}, {1, 1, 2}, {2, 1, 1}}) {
        auto rep = check_perfectness(TableauCrystal(n, k, l));
        INFO("n=", n, " k=", k, " l=", l, ": ", rep.detail);
        CHECK(rep.ok);
    }
}
