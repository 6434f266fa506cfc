#include "mediankit/conservative.hpp"

#include <algorithm>
#include <numeric>

namespace mediankit {

const char* figure_name(ForbiddenFigure f) {
    switch (f) {
        case ForbiddenFigure::A1: return "A1";
        case ForbiddenFigure::A2: return "A2";
        case ForbiddenFigure::A3: return "A3";
        case ForbiddenFigure::A4: return "A4";
        case ForbiddenFigure::A5: return "A5";
    }
    return "?";
}

FinitePoset forbidden_figure(ForbiddenFigure f) {
    switch (f) {
        case ForbiddenFigure::A1:
            // N5: 0 < 1 < 2 < 4 and 0 < 3 < 4
            return FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
        case ForbiddenFigure::A2:
            // bottom 0, atom 1, incomparable 2 and 3 above 1
            return FinitePoset::from_covers(4, {{0, 1}, {1, 2}, {1, 3}});
        case ForbiddenFigure::A3:
            // diamond 0 < {1,2} < 3 with 4 above 1 only
            return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}});
        case ForbiddenFigure::A4:
            // diamond with an extra top 4 above 3
            return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
        case ForbiddenFigure::A5:
            // atoms 1,2,3 pairwise bounded above (by 4,5,6) with no join
            return FinitePoset::from_covers(
                7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}});
    }
    throw ValidationError("unknown figure");
}

ConservativityResult is_conservative(const MedianAlgebra& a) {
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                int v = a.m(x, y, z);
                if (v != x && v != y && v != z)
                    return {false, {x, y, z}, v};
            }
    return {true, {}, -1};
}

MedianAlgebra a2_algebra() {
    return median_from_semilattice(MeetSemilattice::from_poset(forbidden_figure(ForbiddenFigure::A2)));
}

namespace {

// Visit all k-subsets of {0..n-1}; stop when f returns true.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n)
        return false;
    while (true) {
        if (f(pick))
            return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

// Fast test: is the induced subposet on these four elements a copy of A2?
// Exactly one incomparable pair, the other two elements form a chain
// below it.
bool is_a2_quadruple(const FinitePoset& p, const std::vector<int>& e) {
    int inc_a = -1, inc_b = -1, inc_count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!p.le(e[i], e[j]) && !p.le(e[j], e[i])) {
                ++inc_count;
                inc_a = e[i];
                inc_b = e[j];
            }
    if (inc_count != 1)
        return false;
    std::vector<int> rest;
    for (int i = 0; i < 4; ++i)
        if (e[i] != inc_a && e[i] != inc_b)
            rest.push_back(e[i]);
    int lo = rest[0], hi = rest[1];
    if (!p.lt(lo, hi))
        std::swap(lo, hi);
    return p.lt(lo, hi) && p.lt(hi, inc_a) && p.lt(hi, inc_b);
}

} // namespace

std::optional<ForbiddenWitness> find_a2_subalgebra(const MedianAlgebra& a) {
    const auto target = a2_algebra();
    std::optional<ForbiddenWitness> found;
    for_each_subset(a.size(), 4, [&](const std::vector<int>& pick) {
        auto sub = induced_subalgebra(a, pick);
        if (!sub)
            return false;
        if (are_isomorphic(*sub, target)) {
            found = ForbiddenWitness{ForbiddenFigure::A2, pick};
            return true;
        }
        return false;
    });
    return found;
}

std::optional<ForbiddenWitness> find_forbidden_poset(const FinitePoset& s, ForbiddenFigure f) {
    const auto figure = forbidden_figure(f);
    const int k = figure.size();
    if (s.size() < k)
        return std::nullopt;
    std::optional<ForbiddenWitness> found;
    for_each_subset(s.size(), k, [&](const std::vector<int>& pick) {
        if (f == ForbiddenFigure::A2) {
            if (!is_a2_quadruple(s, pick))
                return false;
        } else if (!poset_isomorphism(s.induced(pick), figure)) {
            return false;
        }
        found = ForbiddenWitness{f, pick};
        return true;
    });
    return found;
}

std::optional<ForbiddenWitness> find_forbidden_poset(const FinitePoset& s) {
    constexpr ForbiddenFigure all[] = {ForbiddenFigure::A1, ForbiddenFigure::A2,
                                       ForbiddenFigure::A3, ForbiddenFigure::A4,
                                       ForbiddenFigure::A5};
    // a poset that is itself one of the figures reports its own kind
    for (auto f : all) {
        auto figure = forbidden_figure(f);
        if (figure.size() == s.size() && poset_isomorphism(s, figure)) {
            std::vector<int> whole(s.size());
            std::iota(whole.begin(), whole.end(), 0);
            return ForbiddenWitness{f, whole};
        }
    }
    // A2 is the decisive figure; search it first
    constexpr ForbiddenFigure order[] = {ForbiddenFigure::A2, ForbiddenFigure::A1,
                                         ForbiddenFigure::A3, ForbiddenFigure::A4,
                                         ForbiddenFigure::A5};
    for (auto f : order)
        if (auto w = find_forbidden_poset(s, f))
            return w;
    return std::nullopt;
}

std::pair<std::vector<int>, std::vector<int>> chain_decomposition(const MedianAlgebra& a,
                                                                  int base) {
    const int n = a.size();
    if (base < 0 || base >= n)
        throw ValidationError("base point out of range");
    auto cons = is_conservative(a);
    if (!cons.conservative)
        throw NotConservativeError("algebra is not conservative");
    if (n < 5)
        throw TooSmallError("chain decomposition requires at least five elements");

    auto lt_base = [&](int x, int y) { return x != y && a.m(base, x, y) == x; };

    // smallest-index pair b < c with m(b,c,base) = base, for determinism
    int b = -1, c = -1;
    for (int i = 0; i < n && b < 0; ++i)
        for (int j = i + 1; j < n && b < 0; ++j)
            if (i != base && j != base && a.m(i, j, base) == base) {
                b = i;
                c = j;
            }

    std::vector<int> c0{base}, c1{base};
    if (b < 0) {
        // <=_base is already total: one chain carries everything
        for (int d = 0; d < n; ++d)
            if (d != base)
                c0.push_back(d);
    } else {
        for (int d = 0; d < n; ++d) {
            if (d == base)
                continue;
            if (a.m(b, d, base) != base)
                c0.push_back(d);
            else
                c1.push_back(d);
        }
    }
    auto sort_chain = [&](std::vector<int>& chain) {
        std::sort(chain.begin(), chain.end(), lt_base);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (!lt_base(chain[i], chain[i + 1]))
                throw RoundTripFailure("decomposition branch is not a chain");
    };
    sort_chain(c0);
    sort_chain(c1);
    if (c0.size() + c1.size() != static_cast<std::size_t>(n) + 1)
        throw RoundTripFailure("decomposition branches do not partition the universe");
    return {c0, c1};
}

CoalescedSum bot_coalesced_sum(const std::vector<int>& c0, const std::vector<int>& c1) {
    if (c0.empty() || c1.empty() || c0.front() != c1.front())
        throw ValidationError("chains must be nonempty and share their bottom element");
    const int s0 = static_cast<int>(c0.size());
    const int s1 = static_cast<int>(c1.size());
    const int n = s0 + s1 - 1;
    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    // indices 0..s0-1 follow c0; indices s0..n-1 follow c1 above the bottom
    for (int i = 0; i < s0; ++i)
        for (int j = i; j < s0; ++j)
            le[i * n + j] = 1;
    for (int i = s0; i < n; ++i)
        for (int j = i; j < n; ++j)
            le[i * n + j] = 1;
    for (int j = 0; j < n; ++j)
        le[0 * n + j] = 1;
    for (int i = 0; i < n; ++i)
        le[i * n + i] = 1;
    std::vector<int> elements = c0;
    elements.insert(elements.end(), c1.begin() + 1, c1.end());
    return {FinitePoset::from_relation(n, std::move(le)), std::move(elements)};
}

MedianAlgebra median_of_total_order(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
            throw ValidationError("order must be a permutation of the universe");
        pos[order[i]] = i;
    }
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int px = pos[x], py = pos[y], pz = pos[z];
                int mid = px + py + pz - std::min({px, py, pz}) - std::max({px, py, pz});
                table[(x * n + y) * n + z] = order[mid];
            }
    return MedianAlgebra::from_table(n, std::move(table));
}

namespace {

bool order_realizes(const MedianAlgebra& a, const std::vector<int>& order) {
    const int n = a.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int px = pos[x], py = pos[y], pz = pos[z];
                int mid = px + py + pz - std::min({px, py, pz}) - std::max({px, py, pz});
                if (a.m(x, y, z) != order[mid])
                    return false;
            }
    return true;
}

} // namespace

std::variant<ChainRepresentation, TwoByTwoResult> chain_ordering(const MedianAlgebra& a) {
    auto cons = is_conservative(a);
    if (!cons.conservative)
        throw NotConservativeError("algebra is not conservative");
    const int n = a.size();

    if (n <= 4) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (order_realizes(a, perm))
                return ChainRepresentation{perm[0], perm, {perm[0]}, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto two_by_two = product(chain_algebra(2), chain_algebra(2));
        auto iso = are_isomorphic(a, two_by_two);
        if (!iso)
            throw RoundTripFailure("small conservative algebra is neither a chain nor 2x2");
        return TwoByTwoResult{*iso};
    }

    const int base = 0;
    auto [c0, c1] = chain_decomposition(a, base);
    std::vector<int> total(c1.rbegin(), c1.rend()); // c1 reversed ends at the base
    total.insert(total.end(), c0.begin() + 1, c0.end());
    if (!order_realizes(a, total))
        throw RoundTripFailure("constructed total order does not realize the median");
    return ChainRepresentation{base, std::move(c0), std::move(c1), std::move(total)};
}

} // namespace mediankit
