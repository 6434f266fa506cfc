#include "mediankit/duality.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "mediankit/homs.hpp"
#include "mediankit/poset.hpp"

namespace mediankit {

namespace {

bool is_convex(const MedianAlgebra& a, std::uint32_t subset) {
    const int n = a.size();
    for (int c1 = 0; c1 < n; ++c1) {
        if (!(subset >> c1 & 1u))
            continue;
        for (int c2 = 0; c2 < n; ++c2) {
            if (!(subset >> c2 & 1u))
                continue;
            for (int x = 0; x < n; ++x)
                if (!(subset >> a.m(c1, c2, x) & 1u))
                    return false;
        }
    }
    return true;
}

// m(x,y,z) in C iff at least one of the pairs {x,y}, {x,z}, {y,z} lies in C
bool prime_by_pairs(const MedianAlgebra& a, std::uint32_t subset) {
    const int n = a.size();
    auto in = [&](int e) { return (subset >> e & 1u) != 0; };
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                bool pair = (in(x) && in(y)) || (in(x) && in(z)) || (in(y) && in(z));
                if (in(a.m(x, y, z)) != pair)
                    return false;
            }
    return true;
}

} // namespace

bool is_prime_convex(const MedianAlgebra& a, std::uint32_t subset) {
    const std::uint32_t full = (a.size() == 32) ? ~0u : ((1u << a.size()) - 1);
    bool by_convexity = is_convex(a, subset) && is_convex(a, full & ~subset);
    if (by_convexity != prime_by_pairs(a, subset))
        throw RoundTripFailure("prime-convex characterizations disagree");
    return by_convexity;
}

std::vector<std::uint32_t> prime_convex_subsets(const MedianAlgebra& a, int limit) {
    const int n = a.size();
    if (n > limit || n > 31)
        throw SizeLimitError("universe too large for subset enumeration");
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (is_prime_convex(a, s))
            out.push_back(s);
    std::sort(out.begin(), out.end(), [](std::uint32_t x, std::uint32_t y) {
        auto px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    return out;
}

DualSpace DualSpace::build(int size, std::vector<char> le, std::vector<int> complement,
                           std::vector<std::uint32_t> point_sets, int source_size) {
    if (size <= 0 || le.size() != static_cast<std::size_t>(size) * size ||
        complement.size() != static_cast<std::size_t>(size))
        throw ValidationError("dual space shape mismatch");
    auto poset = FinitePoset::from_relation(size, le); // poset laws
    auto bot = poset.bottom();
    auto top = poset.top();
    if (!bot || !top)
        throw ValidationError("dual space must be bounded");
    for (int x = 0; x < size; ++x) {
        int xc = complement[x];
        if (xc < 0 || xc >= size || complement[xc] != x)
            throw ValidationError("complement is not an involution");
        if (poset.le(x, xc) && x != *bot)
            throw ValidationError("x <= x^c holds off the bottom");
        for (int y = 0; y < size; ++y)
            if (poset.le(x, y) != poset.le(complement[y], xc))
                throw ValidationError("complement is not order-reversing");
    }
    if (complement[*bot] != *top)
        throw ValidationError("bottom and top must be complements");
    DualSpace d{size, std::move(le), std::move(complement), *bot, *top,
                std::move(point_sets), source_size};
    return d;
}

DualSpace dual_space(const MedianAlgebra& a, int limit) {
    auto points = prime_convex_subsets(a, limit);
    const int k = static_cast<int>(points.size());
    const std::uint32_t full = (1u << a.size()) - 1;
    std::vector<char> le(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            le[i * k + j] = ((points[i] & points[j]) == points[i]) ? 1 : 0;
    std::vector<int> comp(k, -1);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(points.begin(), points.end(), full & ~points[i]);
        if (it == points.end())
            throw RoundTripFailure("set complement of a prime convex set is not prime convex");
        comp[i] = static_cast<int>(it - points.begin());
    }
    return DualSpace::build(k, std::move(le), std::move(comp), std::move(points), a.size());
}

CompleteIdealAlgebra complete_ideals(const DualSpace& x) {
    const int k = x.size;
    if (k > 48)
        throw SizeLimitError("dual space too large for complete-ideal enumeration");
    std::vector<std::pair<int, int>> pairs; // (point, its complement), point < comp
    for (int i = 0; i < k; ++i)
        if (i < x.complement[i])
            pairs.emplace_back(i, x.complement[i]);
    if (pairs.size() > 24)
        throw SizeLimitError("too many complement pairs");

    auto is_downset = [&](std::uint64_t w) {
        for (int i = 0; i < k; ++i) {
            if (!(w >> i & 1ull))
                continue;
            for (int j = 0; j < k; ++j)
                if (x.le(j, i) && !(w >> j & 1ull))
                    return false;
        }
        return true;
    };

    std::vector<std::uint64_t> ideals;
    const std::uint64_t combos = 1ull << pairs.size();
    for (std::uint64_t sel = 0; sel < combos; ++sel) {
        std::uint64_t w = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            w |= 1ull << ((sel >> p & 1ull) ? pairs[p].second : pairs[p].first);
        if (is_downset(w))
            ideals.push_back(w);
    }
    std::sort(ideals.begin(), ideals.end());

    const int n = static_cast<int>(ideals.size());
    std::map<std::uint64_t, int> index;
    for (int i = 0; i < n; ++i)
        index[ideals[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                std::uint64_t maj = (ideals[i] & ideals[j]) | (ideals[i] & ideals[l]) |
                                    (ideals[j] & ideals[l]);
                auto it = index.find(maj);
                if (it == index.end())
                    throw RoundTripFailure("majority of complete ideals is not a complete ideal");
                table[(i * n + j) * n + l] = it->second;
            }
    return {MedianAlgebra::from_table(n, std::move(table)), std::move(ideals)};
}

std::vector<int> double_dual_unit(const MedianAlgebra& a, int limit) {
    auto dual = dual_space(a, limit);
    auto ci = complete_ideals(dual);
    const int n = a.size();
    if (ci.algebra.size() != n)
        throw RoundTripFailure("double dual has the wrong size");

    std::vector<int> unit(n, -1);
    for (int e = 0; e < n; ++e) {
        std::uint64_t r = 0;
        for (int i = 0; i < dual.size; ++i)
            if (!(dual.point_sets[i] >> e & 1u))
                r |= 1ull << i;
        auto it = std::find(ci.ideals.begin(), ci.ideals.end(), r);
        if (it == ci.ideals.end())
            throw RoundTripFailure("r_a is not a complete ideal");
        unit[e] = static_cast<int>(it - ci.ideals.begin());
    }

    std::vector<char> hit(n, 0);
    for (int e = 0; e < n; ++e) {
        if (hit[unit[e]])
            throw RoundTripFailure("double dual unit is not injective");
        hit[unit[e]] = 1;
    }
    HomMap f{n, n, unit};
    auto check = is_median_hom(f, a, ci.algebra);
    if (!check.ok)
        throw RoundTripFailure("double dual unit is not a median homomorphism");
    return unit;
}

std::vector<int> dual_of_hom(const HomMap& f, const MedianAlgebra& a, const MedianAlgebra& b,
                             int limit) {
    auto check = is_median_hom(f, a, b);
    if (!check.ok)
        throw NotAHomError("map is not a median homomorphism", check.witness[0],
                           check.witness[1], check.witness[2]);
    auto da = dual_space(a, limit);
    auto db = dual_space(b, limit);
    std::vector<int> dual_map(db.size, -1);
    for (int i = 0; i < db.size; ++i) {
        std::uint32_t pre = 0;
        for (int e = 0; e < a.size(); ++e)
            if (db.point_sets[i] >> f(e) & 1u)
                pre |= 1u << e;
        auto it = std::find(da.point_sets.begin(), da.point_sets.end(), pre);
        if (it == da.point_sets.end())
            throw RoundTripFailure("preimage of a prime convex set is not prime convex");
        dual_map[i] = static_cast<int>(it - da.point_sets.begin());
    }
    // structure preservation
    for (int i = 0; i < db.size; ++i) {
        if (da.complement[dual_map[i]] != dual_map[db.complement[i]])
            throw RoundTripFailure("dual map does not preserve complement");
        for (int j = 0; j < db.size; ++j)
            if (db.le(i, j) && !da.le(dual_map[i], dual_map[j]))
                throw RoundTripFailure("dual map does not preserve inclusion");
    }
    if (dual_map[db.bottom] != da.bottom || dual_map[db.top] != da.top)
        throw RoundTripFailure("dual map does not preserve the bounds");
    return dual_map;
}

DualSpace coproduct(const DualSpace& x, const DualSpace& y) {
    std::vector<int> x_inner, y_inner;
    for (int i = 0; i < x.size; ++i)
        if (i != x.bottom && i != x.top)
            x_inner.push_back(i);
    for (int i = 0; i < y.size; ++i)
        if (i != y.bottom && i != y.top)
            y_inner.push_back(i);

    const int n = 2 + static_cast<int>(x_inner.size() + y_inner.size());
    // new indices: 0 = bottom, 1 = top, then x's inner points, then y's
    std::vector<int> x_idx(x.size, -1), y_idx(y.size, -1);
    x_idx[x.bottom] = 0;
    x_idx[x.top] = 1;
    y_idx[y.bottom] = 0;
    y_idx[y.top] = 1;
    int next = 2;
    for (int i : x_inner)
        x_idx[i] = next++;
    for (int i : y_inner)
        y_idx[i] = next++;

    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        le[i * n + i] = 1;
        le[0 * n + i] = 1;
        le[i * n + 1] = 1;
    }
    for (int i : x_inner)
        for (int j : x_inner)
            if (x.le(i, j))
                le[x_idx[i] * n + x_idx[j]] = 1;
    for (int i : y_inner)
        for (int j : y_inner)
            if (y.le(i, j))
                le[y_idx[i] * n + y_idx[j]] = 1;

    std::vector<int> comp(n, -1);
    comp[0] = 1;
    comp[1] = 0;
    for (int i : x_inner)
        comp[x_idx[i]] = x_idx[x.complement[i]];
    for (int i : y_inner)
        comp[y_idx[i]] = y_idx[y.complement[i]];

    return DualSpace::build(n, std::move(le), std::move(comp));
}

namespace {

bool extend_dual_iso(const DualSpace& x, const DualSpace& y, std::vector<int>& h,
                     std::vector<char>& used, int next) {
    if (next == x.size)
        return true;
    for (int img = 0; img < y.size; ++img) {
        if (used[img])
            continue;
        if ((next == x.bottom) != (img == y.bottom) || (next == x.top) != (img == y.top))
            continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (x.le(p, next) != y.le(h[p], img) || x.le(next, p) != y.le(img, h[p]))
                ok = false;
        if (ok && x.complement[next] < next && h[x.complement[next]] != y.complement[img])
            ok = false;
        if (!ok)
            continue;
        h[next] = img;
        used[img] = 1;
        if (extend_dual_iso(x, y, h, used, next + 1))
            return true;
        h[next] = -1;
        used[img] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> dual_isomorphism(const DualSpace& x, const DualSpace& y) {
    if (x.size != y.size)
        return std::nullopt;
    std::vector<int> h(x.size, -1);
    std::vector<char> used(x.size, 0);
    if (extend_dual_iso(x, y, h, used, 0))
        return h;
    return std::nullopt;
}

HomMap embed_in_hypercube(const MedianAlgebra& a, int limit) {
    auto points = prime_convex_subsets(a, limit);
    const int p = static_cast<int>(points.size());
    if (p > 30)
        throw SizeLimitError("spectrum too large to index a hypercube");
    const int n = a.size();
    std::vector<int> enc(n, 0);
    for (int e = 0; e < n; ++e)
        for (int i = 0; i < p; ++i)
            if (!(points[i] >> e & 1u))
                enc[e] |= 1 << i;
    for (int e1 = 0; e1 < n; ++e1)
        for (int e2 = e1 + 1; e2 < n; ++e2)
            if (enc[e1] == enc[e2])
                throw RoundTripFailure("hypercube embedding is not injective");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int maj = (enc[x] & enc[y]) | (enc[x] & enc[z]) | (enc[y] & enc[z]);
                if (enc[a.m(x, y, z)] != maj)
                    throw RoundTripFailure("hypercube embedding is not median-preserving");
            }
    return HomMap{n, 1 << p, std::move(enc)};
}

} // namespace mediankit
