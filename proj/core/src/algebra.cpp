#include "mediankit/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mediankit {

namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << (i ? "," : "") << t[i];
    out << ")";
    return out.str();
}

} // namespace

std::string AxiomViolation::describe() const {
    std::string name;
    switch (kind) {
        case Kind::NotClosed: name = "table not closed"; break;
        case Kind::Majority: name = "majority m(x,x,y)=x"; break;
        case Kind::Symmetry: name = "symmetry"; break;
        case Kind::Associativity: name = "associativity-like law"; break;
    }
    return name + " fails at " + tuple_str(witness);
}

std::optional<AxiomViolation> MedianAlgebra::check_axioms(int n, const std::vector<int>& table) {
    if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n * n)
        return AxiomViolation{AxiomViolation::Kind::NotClosed, {}};
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] < 0 || table[i] >= n) {
            int x = static_cast<int>(i) / (n * n);
            int y = static_cast<int>(i) / n % n;
            int z = static_cast<int>(i) % n;
            return AxiomViolation{AxiomViolation::Kind::NotClosed, {x, y, z}};
        }

    auto m = [&](int x, int y, int z) { return table[(x * n + y) * n + z]; };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m(x, x, y) != x)
                return AxiomViolation{AxiomViolation::Kind::Majority, {x, x, y}};

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int v = m(x, y, z);
                if (m(y, x, z) != v || m(y, z, x) != v)
                    return AxiomViolation{AxiomViolation::Kind::Symmetry, {x, y, z}};
            }

    // m(m(x,y,z),t,u) = m(x, m(y,t,u), m(z,t,u)); O(n^5)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xyz = m(x, y, z);
                for (int t = 0; t < n; ++t)
                    for (int u = 0; u < n; ++u)
                        if (m(xyz, t, u) != m(x, m(y, t, u), m(z, t, u)))
                            return AxiomViolation{AxiomViolation::Kind::Associativity,
                                                  {x, y, z, t, u}};
            }
    return std::nullopt;
}

MedianAlgebra MedianAlgebra::from_table(int n, std::vector<int> table,
                                        std::vector<std::string> labels) {
    if (auto bad = check_axioms(n, table))
        throw ValidationError("invalid median table: " + bad->describe());
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
        throw ValidationError("label count does not match universe size");
    return MedianAlgebra(n, std::move(table), std::move(labels));
}

std::optional<IdentityViolation> verify_derived_identities(const MedianAlgebra& a) {
    const int n = a.size();
    // (5): m(x,y,m(x,y,z)) = m(x,y,z)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int v = a.m(x, y, z);
                if (a.m(x, y, v) != v)
                    return IdentityViolation{5, {x, y, z}};
            }
    // (4): m(x,y,z) = m(m(m(x,y,z),x,t), m(m(x,y,z),z,t), m(m(x,y,z),y,t))
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int v = a.m(x, y, z);
                for (int t = 0; t < n; ++t)
                    if (a.m(a.m(v, x, t), a.m(v, z, t), a.m(v, y, t)) != v)
                        return IdentityViolation{4, {x, y, z, t}};
            }
    return std::nullopt;
}

MedianAlgebra product(const MedianAlgebra& a, const MedianAlgebra& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int first = a.m(x / nb, y / nb, z / nb);
                int second = b.m(x % nb, y % nb, z % nb);
                table[(x * n + y) * n + z] = first * nb + second;
            }
    return MedianAlgebra::from_table(n, std::move(table));
}

MedianAlgebra chain_algebra(int n) {
    if (n <= 0)
        throw ValidationError("chain length must be positive");
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lo = std::min({x, y, z});
                int hi = std::max({x, y, z});
                table[(x * n + y) * n + z] = x + y + z - lo - hi;
            }
    return MedianAlgebra::from_table(n, std::move(table));
}

std::vector<int> subalgebra_generated(const MedianAlgebra& a, const std::vector<int>& seed) {
    std::set<int> closed(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(closed.begin(), closed.end());
        for (int x : cur)
            for (int y : cur)
                for (int z : cur)
                    if (closed.insert(a.m(x, y, z)).second)
                        grew = true;
    }
    return {closed.begin(), closed.end()};
}

std::optional<MedianAlgebra> induced_subalgebra(const MedianAlgebra& a,
                                                const std::vector<int>& elements) {
    const int k = static_cast<int>(elements.size());
    std::map<int, int> index;
    for (int i = 0; i < k; ++i)
        index[elements[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(k) * k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                auto it = index.find(a.m(elements[i], elements[j], elements[l]));
                if (it == index.end())
                    return std::nullopt; // not closed
                table[(i * k + j) * k + l] = it->second;
            }
    return MedianAlgebra::from_table(k, std::move(table));
}

namespace {

// Per-element invariant: the sorted list over all base points a of the
// size of the down-set of x under <=_a. Isomorphisms must preserve it.
std::vector<std::vector<int>> downset_signatures(const MedianAlgebra& a) {
    const int n = a.size();
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
        for (int base = 0; base < n; ++base) {
            int down = 0;
            for (int y = 0; y < n; ++y)
                if (a.m(base, y, x) == y)
                    ++down;
            sig[x].push_back(down);
        }
        std::sort(sig[x].begin(), sig[x].end());
    }
    return sig;
}

bool extend_iso(const MedianAlgebra& a, const MedianAlgebra& b, std::vector<int>& h,
                std::vector<char>& used, int next,
                const std::vector<std::vector<int>>& sa,
                const std::vector<std::vector<int>>& sb) {
    const int n = a.size();
    if (next == n)
        return true;
    for (int img = 0; img < n; ++img) {
        if (used[img] || sa[next] != sb[img])
            continue;
        h[next] = img;
        used[img] = 1;
        bool ok = true;
        // check all triples whose entries and median are already mapped
        for (int x = 0; x <= next && ok; ++x)
            for (int y = 0; y <= next && ok; ++y)
                for (int z = 0; z <= next && ok; ++z) {
                    int v = a.m(x, y, z);
                    if (v <= next && h[v] != b.m(h[x], h[y], h[z]))
                        ok = false;
                }
        if (ok && extend_iso(a, b, h, used, next + 1, sa, sb))
            return true;
        used[img] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const MedianAlgebra& a, const MedianAlgebra& b) {
    if (a.size() != b.size())
        return std::nullopt;
    auto sa = downset_signatures(a);
    auto sb = downset_signatures(b);
    auto sorted_a = sa;
    auto sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return std::nullopt;
    std::vector<int> h(a.size(), -1);
    std::vector<char> used(a.size(), 0);
    if (extend_iso(a, b, h, used, 0, sa, sb))
        return h;
    return std::nullopt;
}

} // namespace mediankit
