#include "mediankit/homs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mediankit/conservative.hpp"

namespace mediankit {

HomCheck is_median_hom(const HomMap& f, const MedianAlgebra& a, const MedianAlgebra& b) {
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z)
                if (f(a.m(x, y, z)) != b.m(f(x), f(y), f(z)))
                    return {false, {x, y, z}};
    return {true, {}};
}

std::vector<HomMap> enumerate_homs_brute(const MedianAlgebra& a, const MedianAlgebra& b,
                                         std::uint64_t limit) {
    const int n = a.size(), k = b.size();
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(k);
        if (count > limit)
            throw SizeLimitError("map space exceeds the enumeration bound");
    }
    std::vector<HomMap> out;
    std::vector<int> map(n, 0);
    while (true) {
        HomMap f{n, k, map};
        if (is_median_hom(f, a, b).ok)
            out.push_back(std::move(f));
        int i = n - 1;
        while (i >= 0 && map[i] == k - 1)
            map[i--] = 0;
        if (i < 0)
            break;
        ++map[i];
    }
    return out;
}

int ProductOfChains::size() const {
    int s = 1;
    for (int l : lengths) {
        if (l < 1)
            throw ValidationError("chain lengths must be positive");
        s *= l;
    }
    return s;
}

std::vector<int> ProductOfChains::decode(int index) const {
    std::vector<int> tuple(lengths.size());
    for (int i = static_cast<int>(lengths.size()) - 1; i >= 0; --i) {
        tuple[i] = index % lengths[i];
        index /= lengths[i];
    }
    return tuple;
}

int ProductOfChains::encode(const std::vector<int>& tuple) const {
    int index = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        index = index * lengths[i] + tuple[i];
    return index;
}

MedianAlgebra ProductOfChains::algebra() const {
    const int n = size();
    const int r = static_cast<int>(lengths.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto tx = decode(x), ty = decode(y), tz = decode(z);
                std::vector<int> tm(r);
                for (int i = 0; i < r; ++i) {
                    int lo = std::min({tx[i], ty[i], tz[i]});
                    int hi = std::max({tx[i], ty[i], tz[i]});
                    tm[i] = tx[i] + ty[i] + tz[i] - lo - hi;
                }
                table[(x * n + y) * n + z] = encode(tm);
            }
    return MedianAlgebra::from_table(n, std::move(table));
}

std::vector<std::pair<std::vector<int>, bool>> enumerate_monotone_chain_maps(int from_len,
                                                                             int to_len) {
    std::vector<std::pair<std::vector<int>, bool>> out;
    std::vector<int> cur(from_len);
    // weakly increasing sequences, lexicographic
    auto emit_isotone = [&](auto&& self, int pos, int min_val) -> void {
        if (pos == from_len) {
            out.emplace_back(cur, false);
            return;
        }
        for (int v = min_val; v < to_len; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    emit_isotone(emit_isotone, 0, 0);
    const std::size_t isotone_count = out.size();
    for (std::size_t i = 0; i < isotone_count; ++i) {
        auto rev = out[i].first;
        std::reverse(rev.begin(), rev.end());
        bool constant = std::all_of(rev.begin(), rev.end(),
                                    [&](int v) { return v == rev.front(); });
        if (!constant)
            out.emplace_back(std::move(rev), true);
    }
    return out;
}

HomMap ProductHomDecomposition::recombine(const ProductOfChains& a,
                                          const ProductOfChains& b) const {
    const int n = a.size();
    std::vector<int> map(n);
    for (int x = 0; x < n; ++x) {
        auto tx = a.decode(x);
        std::vector<int> ty(components.size());
        for (std::size_t i = 0; i < components.size(); ++i)
            ty[i] = components[i].table[tx[components[i].source_coord]];
        map[x] = b.encode(ty);
    }
    return HomMap{n, b.size(), std::move(map)};
}

ProductHomDecomposition decompose_product_hom(const HomMap& f, const ProductOfChains& a,
                                              const ProductOfChains& b) {
    auto check = is_median_hom(f, a.algebra(), b.algebra());
    if (!check.ok)
        throw NotAHomError("map is not a median homomorphism", check.witness[0],
                           check.witness[1], check.witness[2]);

    const int n = a.size();
    const int r = static_cast<int>(a.lengths.size());
    const int m = static_cast<int>(b.lengths.size());
    std::vector<std::vector<int>> outputs(n);
    for (int x = 0; x < n; ++x)
        outputs[x] = b.decode(f(x));

    ProductHomDecomposition dec;
    for (int i = 0; i < m; ++i) {
        MonotoneComponent comp{-1, {}, false};
        for (int j = 0; j < r && comp.source_coord < 0; ++j) {
            std::vector<int> t(a.lengths[j], -1);
            bool consistent = true;
            for (int x = 0; x < n && consistent; ++x) {
                int xj = a.decode(x)[j];
                int v = outputs[x][i];
                if (t[xj] < 0)
                    t[xj] = v;
                else if (t[xj] != v)
                    consistent = false;
            }
            if (!consistent)
                continue;
            bool iso = std::is_sorted(t.begin(), t.end());
            bool anti = std::is_sorted(t.rbegin(), t.rend());
            if (!iso && !anti)
                continue;
            comp = MonotoneComponent{j, std::move(t), !iso && anti};
        }
        if (comp.source_coord < 0)
            throw RoundTripFailure("hom between products of chains does not decompose");
        dec.components.push_back(std::move(comp));
    }
    if (!(dec.recombine(a, b) == f))
        throw RoundTripFailure("recombined decomposition differs from the input map");
    return dec;
}

std::vector<ProductHomDecomposition> enumerate_product_homs(const ProductOfChains& a,
                                                            const ProductOfChains& b,
                                                            std::uint64_t limit) {
    const int r = static_cast<int>(a.lengths.size());
    const int m = static_cast<int>(b.lengths.size());

    // per target coordinate: every (source coordinate, monotone map) pair
    std::vector<std::vector<MonotoneComponent>> choices(m);
    std::uint64_t combos = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < r; ++j)
            for (auto& [table, antitone] : enumerate_monotone_chain_maps(a.lengths[j], b.lengths[i]))
                choices[i].push_back({j, table, antitone});
        combos *= choices[i].size();
        if (combos > limit)
            throw SizeLimitError("decomposition space exceeds the enumeration bound");
    }

    std::vector<ProductHomDecomposition> out;
    std::set<std::vector<int>> seen; // dedupe by the induced map table
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        ProductHomDecomposition dec;
        for (int i = 0; i < m; ++i)
            dec.components.push_back(choices[i][pick[i]]);
        auto f = dec.recombine(a, b);
        if (seen.insert(f.map).second)
            out.push_back(std::move(dec));
        int i = m - 1;
        while (i >= 0 && pick[i] + 1 == choices[i].size())
            pick[i--] = 0;
        if (i < 0)
            break;
        ++pick[i];
    }
    return out;
}

HomMap BooleanHomClass::recombine(int n, int m) const {
    const int dn = 1 << n, dm = 1 << m;
    std::vector<int> map(dn);
    for (int x = 0; x < dn; ++x) {
        int y = 0;
        for (int i = 0; i < m; ++i) {
            int bit;
            if (sigma[i] < 0) {
                bit = negate[i] ? 1 : 0;
            } else {
                bit = x >> (n - 1 - sigma[i]) & 1;
                if (negate[i])
                    bit ^= 1;
            }
            y |= bit << (m - 1 - i);
        }
        map[x] = y;
    }
    return HomMap{dn, dm, std::move(map)};
}

BooleanHomClass classify_boolean_hom(const HomMap& f, int n, int m) {
    const int dn = 1 << n;
    if (f.domain_size != dn || f.codomain_size != (1 << m))
        throw ValidationError("map shape does not match the cube exponents");

    BooleanHomClass cls;
    cls.sigma.assign(m, -2);
    cls.negate.assign(m, false);
    for (int i = 0; i < m; ++i) {
        auto out_bit = [&](int x) { return f(x) >> (m - 1 - i) & 1; };
        bool const0 = true, const1 = true;
        for (int x = 0; x < dn; ++x) {
            const0 &= out_bit(x) == 0;
            const1 &= out_bit(x) == 1;
        }
        if (const0) {
            cls.sigma[i] = -1;
            cls.negate[i] = false;
            continue;
        }
        if (const1) {
            cls.sigma[i] = -1;
            cls.negate[i] = true;
            continue;
        }
        for (int j = 0; j < n && cls.sigma[i] == -2; ++j) {
            bool id = true, neg = true;
            for (int x = 0; x < dn; ++x) {
                int in_bit = x >> (n - 1 - j) & 1;
                id &= out_bit(x) == in_bit;
                neg &= out_bit(x) == (in_bit ^ 1);
            }
            if (id) {
                cls.sigma[i] = j;
                cls.negate[i] = false;
            } else if (neg) {
                cls.sigma[i] = j;
                cls.negate[i] = true;
            }
        }
        if (cls.sigma[i] == -2) {
            // some coordinate is not a signed projection: not a hom
            ProductOfChains cube_n{std::vector<int>(n, 2)}, cube_m{std::vector<int>(m, 2)};
            auto check = is_median_hom(f, cube_n.algebra(), cube_m.algebra());
            if (check.ok)
                throw RoundTripFailure("boolean hom escapes the signed-projection form");
            throw NotAHomError("map is not a median homomorphism", check.witness[0],
                               check.witness[1], check.witness[2]);
        }
    }
    if (!(cls.recombine(n, m) == f))
        throw RoundTripFailure("boolean classification does not reproduce the map");
    return cls;
}

std::vector<std::pair<std::vector<int>, std::vector<bool>>> enumerate_boolean_isomorphisms(
    int n, std::uint64_t limit) {
    std::uint64_t count = 1u << n;
    for (int i = 2; i <= n; ++i)
        count *= static_cast<std::uint64_t>(i);
    if (count > limit)
        throw SizeLimitError("signed permutation count exceeds the enumeration bound");

    ProductOfChains cube{std::vector<int>(n, 2)};
    auto algebra = cube.algebra();

    std::vector<std::pair<std::vector<int>, std::vector<bool>>> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            std::vector<bool> negate(n);
            for (int i = 0; i < n; ++i)
                negate[i] = (signs >> i & 1) != 0;
            BooleanHomClass cls{perm, negate};
            auto f = cls.recombine(n, n);
            auto check = is_median_hom(f, algebra, algebra);
            if (!check.ok)
                throw RoundTripFailure("signed permutation failed the hom check");
            std::vector<char> hit(f.codomain_size, 0);
            for (int v : f.map)
                hit[v] = 1;
            if (std::find(hit.begin(), hit.end(), 0) != hit.end())
                throw RoundTripFailure("signed permutation is not a bijection");
            out.emplace_back(perm, std::move(negate));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

// The chain ordering as a poset; for the 2x2-like exception, where no
// total order realizes the median, fall back to the base-0 semilattice
// order so the predicate still covers the Fig. 2-scale cases.
FinitePoset comparison_order(const MedianAlgebra& alg) {
    auto rep = chain_ordering(alg);
    if (std::holds_alternative<TwoByTwoResult>(rep))
        return order_from_point(alg, 0).poset;
    const auto& order = std::get<ChainRepresentation>(rep).total_order;
    const int n = alg.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (pos[x] <= pos[y])
                le[x * n + y] = 1;
    return FinitePoset::from_relation(n, std::move(le));
}

} // namespace

bool is_monotone_wrt_chain_orderings(const HomMap& f, const MedianAlgebra& a,
                                     const MedianAlgebra& b) {
    auto order_a = comparison_order(a);

    std::vector<int> image(f.map.begin(), f.map.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto sub = induced_subalgebra(b, image);
    if (!sub)
        throw NoChainOrderingError("image is not closed under the codomain median");
    auto order_img = comparison_order(*sub);

    auto img_index = [&](int e) {
        return static_cast<int>(std::lower_bound(image.begin(), image.end(), e) - image.begin());
    };
    std::vector<int> g(a.size());
    for (int x = 0; x < a.size(); ++x)
        g[x] = img_index(f(x));
    return is_monotone(g, order_a, order_img);
}

} // namespace mediankit
