#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mediankit/algebra.hpp"
#include "mediankit/conservative.hpp"
#include "mediankit/poset.hpp"

using namespace mediankit;

namespace {

MedianAlgebra two_by_two() { return product(chain_algebra(2), chain_algebra(2)); }

MedianAlgebra cube3() {
    return product(product(chain_algebra(2), chain_algebra(2)), chain_algebra(2));
}

bool contains_triple(const std::array<int, 3>& w, int v) {
    return w[0] == v || w[1] == v || w[2] == v;
}

} // namespace

TEST_CASE("chain algebras are conservative") {
    for (int n = 1; n <= 6; ++n)
        CHECK(is_conservative(chain_algebra(n)).conservative);
}

TEST_CASE("2x2 is conservative despite not being a chain") {
    CHECK(is_conservative(two_by_two()).conservative);
}

TEST_CASE("the A2 algebra is not conservative, with witness (a,c,d) -> b") {
    auto r = is_conservative(a2_algebra());
    REQUIRE(!r.conservative);
    auto alg = a2_algebra();
    CHECK(alg.m(r.witness[0], r.witness[1], r.witness[2]) == r.median);
    CHECK(!contains_triple(r.witness, r.median));
    CHECK(alg.m(0, 2, 3) == 1);
}

TEST_CASE("find_a2_subalgebra on A2 itself returns the whole universe") {
    auto w = find_a2_subalgebra(a2_algebra());
    REQUIRE(w.has_value());
    CHECK(w->figure == ForbiddenFigure::A2);
    CHECK(w->elements == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("find_a2_subalgebra finds a witness inside the 3-cube") {
    auto cube = cube3();
    auto w = find_a2_subalgebra(cube);
    REQUIRE(w.has_value());
    // the witness really is a closed subset carrying the A2 algebra
    auto sub = induced_subalgebra(cube, w->elements);
    REQUIRE(sub.has_value());
    CHECK(are_isomorphic(*sub, a2_algebra()).has_value());
}

TEST_CASE("find_a2_subalgebra is empty on conservative algebras") {
    CHECK(!find_a2_subalgebra(chain_algebra(5)));
    CHECK(!find_a2_subalgebra(two_by_two()));
}

TEST_CASE("each reference figure is recognized as itself") {
    for (auto f : {ForbiddenFigure::A1, ForbiddenFigure::A2, ForbiddenFigure::A3,
                   ForbiddenFigure::A4, ForbiddenFigure::A5}) {
        auto w = find_forbidden_poset(forbidden_figure(f));
        REQUIRE(w.has_value());
        CHECK(w->figure == f);
    }
}

TEST_CASE("the diamond contains no forbidden figure") {
    auto diamond = order_from_point(two_by_two(), 0).poset;
    CHECK(!find_forbidden_poset(diamond));
}

TEST_CASE("chains contain no forbidden figure") {
    CHECK(!find_forbidden_poset(FinitePoset::chain(7)));
}

TEST_CASE("single-figure search honors its restriction") {
    auto a3 = forbidden_figure(ForbiddenFigure::A3);
    auto w = find_forbidden_poset(a3, ForbiddenFigure::A2);
    REQUIRE(w.has_value());
    CHECK(w->figure == ForbiddenFigure::A2);
    CHECK(!find_forbidden_poset(FinitePoset::chain(6), ForbiddenFigure::A5));
}

TEST_CASE("forbidden witness induces the figure up to order isomorphism") {
    // A3 and A5 contain induced copies of A2; A4 does not (its only
    // incomparable pair sits directly above the bottom)
    for (auto f : {ForbiddenFigure::A3, ForbiddenFigure::A5}) {
        auto p = forbidden_figure(f);
        auto w = find_forbidden_poset(p, ForbiddenFigure::A2);
        REQUIRE(w.has_value());
        auto sub = p.induced(w->elements);
        CHECK(poset_isomorphism(sub, forbidden_figure(ForbiddenFigure::A2)).has_value());
    }
    CHECK(!find_forbidden_poset(forbidden_figure(ForbiddenFigure::A4), ForbiddenFigure::A2));
}

TEST_CASE("chain decomposition of the 5-chain from its midpoint") {
    auto [c0, c1] = chain_decomposition(chain_algebra(5), 2);
    if (c0 == std::vector<int>{2, 3, 4})
        std::swap(c0, c1);
    CHECK(c0 == std::vector<int>{2, 1, 0});
    CHECK(c1 == std::vector<int>{2, 3, 4});
}

TEST_CASE("chain decomposition from an endpoint degenerates") {
    auto [c0, c1] = chain_decomposition(chain_algebra(5), 0);
    if (c1.size() > c0.size())
        std::swap(c0, c1);
    CHECK(c0 == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(c1 == std::vector<int>{0});
}

TEST_CASE("chain decomposition rejects 2x2 and non-conservative input") {
    CHECK_THROWS_AS(chain_decomposition(two_by_two(), 0), TooSmallError);
    CHECK_THROWS_AS(chain_decomposition(a2_algebra(), 0), NotConservativeError);
}

TEST_CASE("decomposition chains cover the universe and meet only at the base") {
    for (int n : {5, 6, 7})
        for (int base = 0; base < n; ++base) {
            auto alg = chain_algebra(n);
            auto [c0, c1] = chain_decomposition(alg, base);
            CHECK(c0.front() == base);
            CHECK(c1.front() == base);
            std::vector<int> all(c0);
            all.insert(all.end(), c1.begin() + 1, c1.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expect(n);
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(all == expect);
            auto order = order_from_point(alg, base);
            for (std::size_t i = 0; i + 1 < c0.size(); ++i)
                CHECK(order.poset.lt(c0[i], c0[i + 1]));
            for (std::size_t i = 0; i + 1 < c1.size(); ++i)
                CHECK(order.poset.lt(c1[i], c1[i + 1]));
        }
}

TEST_CASE("bot-coalesced sum of a 3-chain and a 2-chain") {
    auto sum = bot_coalesced_sum({0, 1, 2}, {0, 3});
    CHECK(sum.poset.size() == 4);
    CHECK(sum.elements == std::vector<int>{0, 1, 2, 3});
    CHECK(*sum.poset.bottom() == 0);
    CHECK(sum.poset.lt(0, 1));
    CHECK(sum.poset.lt(1, 2));
    CHECK(sum.poset.lt(0, 3));
    CHECK(!sum.poset.le(1, 3));
    CHECK(!sum.poset.le(3, 1));
}

TEST_CASE("chain ordering of a chain recovers it or its reversal") {
    auto rep = std::get<ChainRepresentation>(chain_ordering(chain_algebra(5)));
    auto fwd = std::vector<int>{0, 1, 2, 3, 4};
    auto rev = std::vector<int>{4, 3, 2, 1, 0};
    CHECK((rep.total_order == fwd || rep.total_order == rev));
    CHECK(median_of_total_order(rep.total_order) == chain_algebra(5));
}

TEST_CASE("chain ordering of 2x2 reports the exceptional branch") {
    auto result = chain_ordering(two_by_two());
    auto* branch = std::get_if<TwoByTwoResult>(&result);
    REQUIRE(branch != nullptr);
    auto target = two_by_two();
    auto src = two_by_two();
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z)
                CHECK(branch->iso[src.m(x, y, z)] ==
                      target.m(branch->iso[x], branch->iso[y], branch->iso[z]));
}

TEST_CASE("chain ordering refuses non-conservative algebras") {
    CHECK_THROWS_AS(chain_ordering(a2_algebra()), NotConservativeError);
}

TEST_CASE("round trip through random total orders") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6); // sizes 3..8
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto alg = median_of_total_order(perm);
        auto rep = std::get<ChainRepresentation>(chain_ordering(alg));
        std::vector<int> reversed(rep.total_order.rbegin(), rep.total_order.rend());
        CHECK((rep.total_order == perm || reversed == perm));
        CHECK(median_of_total_order(rep.total_order) == alg);
    }
}

TEST_CASE("small conservative algebras also get a total order") {
    for (int n = 1; n <= 4; ++n) {
        if (n == 4) {
            // both 4-element conservative shapes: the chain and 2x2
            auto rep = std::get<ChainRepresentation>(chain_ordering(chain_algebra(4)));
            CHECK(median_of_total_order(rep.total_order) == chain_algebra(4));
            continue;
        }
        auto rep = std::get<ChainRepresentation>(chain_ordering(chain_algebra(n)));
        CHECK(median_of_total_order(rep.total_order) == chain_algebra(n));
    }
}

TEST_CASE("conservativity agrees with the A2-subalgebra and poset criteria") {
    std::vector<MedianAlgebra> samples{chain_algebra(5), two_by_two(), a2_algebra(), cube3(),
                                       product(chain_algebra(3), chain_algebra(2))};
    for (const auto& alg : samples) {
        bool direct = is_conservative(alg).conservative;
        CHECK(direct == !find_a2_subalgebra(alg).has_value());
        bool poset_clean = true;
        for (int base = 0; base < alg.size() && poset_clean; ++base)
            if (find_forbidden_poset(order_from_point(alg, base).poset, ForbiddenFigure::A2))
                poset_clean = false;
        CHECK(direct == poset_clean);
    }
}
