#include "mediankit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mediankit {

FinitePoset FinitePoset::from_relation(int n, std::vector<char> le,
                                       std::vector<std::string> labels) {
    if (n <= 0 || le.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("relation matrix size mismatch");
    auto at = [&](int x, int y) { return le[x * n + y] != 0; };
    for (int x = 0; x < n; ++x)
        if (!at(x, x))
            throw ValidationError("relation is not reflexive");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && at(x, y) && at(y, x))
                throw ValidationError("relation is not antisymmetric");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (at(x, y) && at(y, z) && !at(x, z))
                    throw ValidationError("relation is not transitive");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
        throw ValidationError("label count does not match poset size");
    return FinitePoset(n, std::move(le), std::move(labels));
}

FinitePoset FinitePoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                     std::vector<std::string> labels) {
    if (n <= 0)
        throw ValidationError("poset size must be positive");
    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        le[i * n + i] = 1;
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
            throw ValidationError("cover pair out of range");
        le[lo * n + hi] = 1;
    }
    // Warshall closure
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (le[x * n + k])
                for (int y = 0; y < n; ++y)
                    if (le[k * n + y])
                        le[x * n + y] = 1;
    return from_relation(n, std::move(le), std::move(labels)); // rejects cycles via antisymmetry
}

FinitePoset FinitePoset::chain(int n) {
    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            le[x * n + y] = 1;
    return from_relation(n, std::move(le));
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!lt(x, y))
                continue;
            bool cover = true;
            for (int z = 0; z < n_ && cover; ++z)
                if (lt(x, z) && lt(z, y))
                    cover = false;
            if (cover)
                out.emplace_back(x, y);
        }
    return out;
}

std::optional<int> FinitePoset::bottom() const {
    for (int x = 0; x < n_; ++x) {
        bool below_all = true;
        for (int y = 0; y < n_ && below_all; ++y)
            if (!le(x, y))
                below_all = false;
        if (below_all)
            return x;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
    for (int x = 0; x < n_; ++x) {
        bool above_all = true;
        for (int y = 0; y < n_ && above_all; ++y)
            if (!le(y, x))
                above_all = false;
        if (above_all)
            return x;
    }
    return std::nullopt;
}

bool FinitePoset::is_chain() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (!le(x, y) && !le(y, x))
                return false;
    return true;
}

std::optional<int> FinitePoset::meet(int x, int y) const {
    for (int g = 0; g < n_; ++g) {
        if (!le(g, x) || !le(g, y))
            continue;
        bool greatest = true;
        for (int z = 0; z < n_ && greatest; ++z)
            if (le(z, x) && le(z, y) && !le(z, g))
                greatest = false;
        if (greatest)
            return g;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::join(int x, int y) const {
    for (int u = 0; u < n_; ++u) {
        if (!le(x, u) || !le(y, u))
            continue;
        bool least = true;
        for (int z = 0; z < n_ && least; ++z)
            if (le(x, z) && le(y, z) && !le(u, z))
                least = false;
        if (least)
            return u;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::join3(int x, int y, int z) const {
    for (int u = 0; u < n_; ++u) {
        if (!le(x, u) || !le(y, u) || !le(z, u))
            continue;
        bool least = true;
        for (int w = 0; w < n_ && least; ++w)
            if (le(x, w) && le(y, w) && le(z, w) && !le(u, w))
                least = false;
        if (least)
            return u;
    }
    return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
    const int k = static_cast<int>(elements.size());
    std::vector<char> sub(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub[i * k + j] = le(elements[i], elements[j]) ? 1 : 0;
    return from_relation(k, std::move(sub));
}

MeetSemilattice MeetSemilattice::from_poset(FinitePoset p) {
    const int n = p.size();
    std::vector<int> meets(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto g = p.meet(x, y);
            if (!g)
                throw ValidationError("not a meet-semilattice: no meet for a pair");
            meets[x * n + y] = *g;
        }
    return MeetSemilattice{std::move(p), std::move(meets)};
}

MeetSemilattice order_from_point(const MedianAlgebra& a, int base) {
    const int n = a.size();
    if (base < 0 || base >= n)
        throw ValidationError("base point out of range");
    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            le[x * n + y] = (a.m(base, x, y) == x) ? 1 : 0;
    std::vector<int> meets(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            meets[x * n + y] = a.m(base, x, y);
    auto poset = FinitePoset::from_relation(n, std::move(le));
    // the meet table must agree with greatest lower bounds
    MeetSemilattice s{std::move(poset), std::move(meets)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto g = s.poset.meet(x, y);
            if (!g || *g != s.meet(x, y))
                throw ValidationError("m(a,x,y) is not the meet under <=_a");
        }
    return s;
}

namespace {

// Joins inside the principal ideal down(t); nullopt when missing.
std::optional<int> ideal_join(const FinitePoset& p, int t, int x, int y) {
    const int n = p.size();
    for (int u = 0; u < n; ++u) {
        if (!p.le(u, t) || !p.le(x, u) || !p.le(y, u))
            continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
            if (p.le(w, t) && p.le(x, w) && p.le(y, w) && !p.le(u, w))
                least = false;
        if (least)
            return u;
    }
    return std::nullopt;
}

} // namespace

MedianSemilatticeCheck is_median_semilattice(const MeetSemilattice& s) {
    const auto& p = s.poset;
    const int n = p.size();
    std::ostringstream why;

    // every principal ideal a distributive lattice
    for (int t = 0; t < n; ++t) {
        std::vector<int> ideal;
        for (int x = 0; x < n; ++x)
            if (p.le(x, t))
                ideal.push_back(x);
        for (int x : ideal)
            for (int y : ideal) {
                if (!ideal_join(p, t, x, y)) {
                    why << "principal ideal of " << t << " is not a lattice: no join of " << x
                        << "," << y;
                    return {false, why.str()};
                }
            }
        for (int x : ideal)
            for (int y : ideal)
                for (int z : ideal) {
                    int yz = *ideal_join(p, t, y, z);
                    int lhs = s.meet(x, yz);
                    int rhs = *ideal_join(p, t, s.meet(x, y), s.meet(x, z));
                    if (lhs != rhs) {
                        why << "principal ideal of " << t << " is not distributive at (" << x
                            << "," << y << "," << z << ")";
                        return {false, why.str()};
                    }
                }
    }

    // pairwise-upper-bounded triples must have a join
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                if (!p.join(x, y) || !p.join(x, z) || !p.join(y, z))
                    continue;
                if (!p.join3(x, y, z)) {
                    why << "triple " << x << "," << y << "," << z
                        << " is pairwise bounded above but has no join";
                    return {false, why.str()};
                }
            }
    return {true, ""};
}

MedianAlgebra median_from_semilattice(const MeetSemilattice& s) {
    auto check = is_median_semilattice(s);
    if (!check.ok)
        throw NotMedianSemilatticeError(check.diagnosis);
    const auto& p = s.poset;
    const int n = p.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = s.meet(x, y), xz = s.meet(x, z), zy = s.meet(z, y);
                auto v = p.join3(xy, xz, zy);
                if (!v)
                    throw NotMedianSemilatticeError("missing join of pairwise meets");
                table[(x * n + y) * n + z] = *v;
            }
    return MedianAlgebra::from_table(n, std::move(table));
}

namespace {

bool extend_poset_iso(const FinitePoset& p, const FinitePoset& q, std::vector<int>& h,
                      std::vector<char>& used, int next) {
    const int n = p.size();
    if (next == n)
        return true;
    for (int img = 0; img < n; ++img) {
        if (used[img])
            continue;
        bool ok = true;
        for (int x = 0; x < next && ok; ++x)
            if (p.le(x, next) != q.le(h[x], img) || p.le(next, x) != q.le(img, h[x]))
                ok = false;
        if (!ok)
            continue;
        h[next] = img;
        used[img] = 1;
        if (extend_poset_iso(p, q, h, used, next + 1))
            return true;
        h[next] = -1;
        used[img] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& p, const FinitePoset& q) {
    const int n = p.size();
    if (n != q.size())
        return std::nullopt;
    auto degrees = [](const FinitePoset& r) {
        std::vector<std::pair<int, int>> d(r.size());
        for (int x = 0; x < r.size(); ++x)
            for (int y = 0; y < r.size(); ++y) {
                if (r.le(y, x))
                    ++d[x].first;
                if (r.le(x, y))
                    ++d[x].second;
            }
        return d;
    };
    auto dp = degrees(p), dq = degrees(q);
    auto sp = dp, sq = dq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq)
        return std::nullopt;
    std::vector<int> h(n, -1);
    std::vector<char> used(n, 0);
    if (extend_poset_iso(p, q, h, used, 0))
        return h;
    return std::nullopt;
}

bool is_isotone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.le(x, y) && !q.le(f[x], f[y]))
                return false;
    return true;
}

bool is_antitone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.le(x, y) && !q.le(f[y], f[x]))
                return false;
    return true;
}

bool is_monotone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q) {
    return is_isotone(f, p, q) || is_antitone(f, p, q);
}

} // namespace mediankit
