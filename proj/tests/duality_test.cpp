#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "mediankit/algebra.hpp"
#include "mediankit/duality.hpp"
#include "mediankit/poset.hpp"

using namespace mediankit;

namespace {

MedianAlgebra two_by_two() { return product(chain_algebra(2), chain_algebra(2)); }

std::uint32_t mask(std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems)
        m |= 1u << e;
    return m;
}

} // namespace

TEST_CASE("prime convexity on the 3-chain") {
    auto c3 = chain_algebra(3);
    CHECK(is_prime_convex(c3, mask({0, 1})));
    CHECK(!is_prime_convex(c3, mask({0, 2}))); // m(0,2,1) = 1 escapes the set
}

TEST_CASE("prime convex subsets of the 3-chain") {
    auto sets = prime_convex_subsets(chain_algebra(3));
    std::vector<std::uint32_t> expect{mask({}),     mask({0}),    mask({2}),
                                      mask({0, 1}), mask({1, 2}), mask({0, 1, 2})};
    std::sort(expect.begin(), expect.end());
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expect);
}

TEST_CASE("prime convex subsets of 2x2 are the four halves plus the bounds") {
    auto sets = prime_convex_subsets(two_by_two());
    CHECK(sets.size() == 6);
    std::vector<std::uint32_t> expect{mask({}),     mask({0, 1}), mask({2, 3}),
                                      mask({0, 2}), mask({1, 3}), mask({0, 1, 2, 3})};
    std::sort(expect.begin(), expect.end());
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expect);
}

TEST_CASE("prime convex subsets come in complement pairs") {
    for (const auto& alg : {chain_algebra(4), two_by_two(), chain_algebra(5)}) {
        auto sets = prime_convex_subsets(alg);
        std::uint32_t full = (1u << alg.size()) - 1;
        for (auto s : sets)
            CHECK(std::count(sets.begin(), sets.end(), full & ~s) == 1);
    }
}

TEST_CASE("the one-element algebra has the 2-point dual") {
    auto d = dual_space(MedianAlgebra::from_table(1, {0}));
    CHECK(d.size == 2);
    CHECK(d.complement[d.bottom] == d.top);
    CHECK(d.le(d.bottom, d.top));
}

TEST_CASE("the dual of the n-chain has 2n points") {
    for (int n = 1; n <= 6; ++n)
        CHECK(dual_space(chain_algebra(n)).size == 2 * n);
}

TEST_CASE("dual space validation catches broken complements") {
    // 2-point chain with identity complement: not order-reversing onto
    std::vector<char> le{1, 1, 0, 1};
    CHECK_THROWS_AS(DualSpace::build(2, le, {0, 1}), ValidationError);
}

TEST_CASE("dual of the 3-chain is two glued copies of the upset chain") {
    // hand-built model: bottom 0, branches 1 < 2 and 3 < 4, top 5,
    // complement swapping the branches and the bounds
    int n = 6;
    std::vector<char> le(n * n, 0);
    auto set = [&](int x, int y) { le[x * n + y] = 1; };
    for (int x = 0; x < n; ++x) {
        set(x, x);
        set(0, x);
        set(x, 5);
    }
    set(1, 2);
    set(3, 4);
    auto model = DualSpace::build(n, le, {5, 4, 3, 2, 1, 0});
    CHECK(dual_isomorphism(model, dual_space(chain_algebra(3))).has_value());
}

TEST_CASE("dual of a product is the coproduct of the duals") {
    auto lhs = coproduct(dual_space(chain_algebra(2)), dual_space(chain_algebra(2)));
    auto rhs = dual_space(two_by_two());
    CHECK(dual_isomorphism(lhs, rhs).has_value());

    auto lhs2 = coproduct(dual_space(chain_algebra(3)), dual_space(chain_algebra(2)));
    auto rhs2 = dual_space(product(chain_algebra(3), chain_algebra(2)));
    CHECK(dual_isomorphism(lhs2, rhs2).has_value());
}

TEST_CASE("coproduct sizes amalgamate the bounds") {
    auto x = dual_space(chain_algebra(3));
    auto y = dual_space(chain_algebra(2));
    auto s = coproduct(x, y);
    CHECK(s.size == x.size + y.size - 2);
    CHECK(s.complement[s.bottom] == s.top);
}

TEST_CASE("complete ideals of the 2-point dual give the one-element algebra") {
    auto d = dual_space(MedianAlgebra::from_table(1, {0}));
    auto ci = complete_ideals(d);
    CHECK(ci.algebra.size() == 1);
    CHECK(ci.ideals.size() == 1);
}

TEST_CASE("complete ideals of dual(3-chain) recover a 3-chain") {
    auto ci = complete_ideals(dual_space(chain_algebra(3)));
    CHECK(ci.algebra.size() == 3);
    CHECK(are_isomorphic(ci.algebra, chain_algebra(3)).has_value());
}

TEST_CASE("complete ideals of dual(2x2) recover 2x2") {
    auto ci = complete_ideals(dual_space(two_by_two()));
    CHECK(ci.algebra.size() == 4);
    CHECK(are_isomorphic(ci.algebra, two_by_two()).has_value());
}

TEST_CASE("double dual unit is a bijection onto the complete ideals") {
    for (const auto& alg :
         {chain_algebra(3), two_by_two(), chain_algebra(5),
          product(chain_algebra(3), chain_algebra(2))}) {
        auto unit = double_dual_unit(alg);
        CHECK(static_cast<int>(unit.size()) == alg.size());
        auto sorted = unit;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        auto ci = complete_ideals(dual_space(alg));
        CHECK(ci.algebra.size() == alg.size());
        for (int x = 0; x < alg.size(); ++x)
            for (int y = 0; y < alg.size(); ++y)
                for (int z = 0; z < alg.size(); ++z)
                    CHECK(unit[alg.m(x, y, z)] == ci.algebra.m(unit[x], unit[y], unit[z]));
    }
}

TEST_CASE("dual of a constant hom collapses to the bound points") {
    auto a = chain_algebra(3);
    auto b = chain_algebra(2);
    HomMap f{3, 2, {1, 1, 1}}; // constant 1
    auto star = dual_of_hom(f, a, b);
    auto db = dual_space(b);
    for (std::size_t i = 0; i < star.size(); ++i) {
        bool one_in = (db.point_sets[i] >> 1) & 1u;
        auto da = dual_space(a);
        // preimage of a set containing 1 is everything, else empty
        CHECK(da.point_sets[star[i]] == (one_in ? 0b111u : 0u));
    }
}

TEST_CASE("dual of an onto hom is injective on dual points") {
    HomMap f{3, 2, {0, 0, 1}};
    auto star = dual_of_hom(f, chain_algebra(3), chain_algebra(2));
    auto sorted = star;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("dual_of_hom rejects non-homs") {
    HomMap f{4, 2, {0, 1, 1, 0}};
    CHECK_THROWS_AS(dual_of_hom(f, two_by_two(), chain_algebra(2)), NotAHomError);
}

TEST_CASE("hypercube embedding of the 2-chain lands in 2^4") {
    auto e = embed_in_hypercube(chain_algebra(2));
    CHECK(e.domain_size == 2);
    CHECK(e.codomain_size == 16); // spec has 4 points
    CHECK(e.map[0] != e.map[1]);
}

TEST_CASE("hypercube embedding of the 3-chain is an injective chain image") {
    auto e = embed_in_hypercube(chain_algebra(3));
    CHECK(e.domain_size == 3);
    CHECK(e.codomain_size == 64);
    CHECK(e.map[0] != e.map[1]);
    CHECK(e.map[1] != e.map[2]);
    CHECK(e.map[0] != e.map[2]);
    // the image is a 3-chain in the median sense: the middle element is
    // the componentwise majority of the other two
    auto maj = [](int x, int y, int z) { return (x & y) | (x & z) | (y & z); };
    CHECK(maj(e.map[0], e.map[1], e.map[2]) == e.map[1]);
}

TEST_CASE("enumeration limit guards the subset scan") {
    CHECK_THROWS_AS(prime_convex_subsets(chain_algebra(5), 4), SizeLimitError);
    CHECK_THROWS_AS(dual_space(chain_algebra(5), 4), SizeLimitError);
}
