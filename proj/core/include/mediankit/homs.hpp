#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mediankit/algebra.hpp"
#include "mediankit/errors.hpp"

namespace mediankit {

struct HomCheck {
    bool ok;
    std::array<int, 3> witness{}; // a triple breaking f(m(x,y,z)) = m(fx,fy,fz)
};

HomCheck is_median_hom(const HomMap& f, const MedianAlgebra& a, const MedianAlgebra& b);

/// Every total map A -> B passing is_median_hom, by exhaustive scan of
/// all |B|^|A| maps. Throws SizeLimitError above `limit` candidates.
std::vector<HomMap> enumerate_homs_brute(const MedianAlgebra& a, const MedianAlgebra& b,
                                         std::uint64_t limit = 1u << 24);

/// A finite product of chains C_{k_1} x ... x C_{k_r}. Elements are
/// tuples encoded row-major with the first coordinate most significant,
/// matching product().
struct ProductOfChains {
    std::vector<int> lengths;

    int size() const;
    std::vector<int> decode(int index) const;
    int encode(const std::vector<int>& tuple) const;
    MedianAlgebra algebra() const;
};

/// One target coordinate of a decomposed product hom: depends only on
/// source coordinate `source_coord` through the monotone map `table`.
struct MonotoneComponent {
    int source_coord;
    std::vector<int> table; // length = source chain length, values in the target chain
    bool antitone;          // constants are canonically labeled isotone
};

struct ProductHomDecomposition {
    std::vector<MonotoneComponent> components; // one per target coordinate

    HomMap recombine(const ProductOfChains& a, const ProductOfChains& b) const;
};

/// Decompose a median hom between products of chains into (sigma,
/// monotone components); target coordinate i depends only on source
/// coordinate sigma(i). Throws NotAHomError with a witness otherwise.
ProductHomDecomposition decompose_product_hom(const HomMap& f, const ProductOfChains& a,
                                              const ProductOfChains& b);

/// All median homs A -> B, each exactly once (deduplicated by map
/// table), generated coordinatewise from monotone chain maps.
std::vector<ProductHomDecomposition> enumerate_product_homs(const ProductOfChains& a,
                                                            const ProductOfChains& b,
                                                            std::uint64_t limit = 1u << 24);

/// Monotone maps between chains as (table, antitone) pairs: weakly
/// increasing sequences plus their reversals, constants deduplicated
/// and labeled isotone.
std::vector<std::pair<std::vector<int>, bool>> enumerate_monotone_chain_maps(int from_len,
                                                                             int to_len);

/// Classification of a hom between Boolean cubes: output coordinate i is
/// eps_i x_{sigma_i}, with sigma_i = -1 encoding a constant (eps id for
/// constant 0, negation for constant 1).
struct BooleanHomClass {
    std::vector<int> sigma;   // per target coordinate: source coordinate or -1
    std::vector<bool> negate; // per target coordinate

    HomMap recombine(int n, int m) const;
};

/// Cube elements are encoded with coordinate 0 as the most significant
/// bit, consistent with ProductOfChains over all-2 lengths.
BooleanHomClass classify_boolean_hom(const HomMap& f, int n, int m);

/// All signed permutations of the n-cube, each verified to be a median
/// automorphism. There are n! * 2^n of them.
std::vector<std::pair<std::vector<int>, std::vector<bool>>> enumerate_boolean_isomorphisms(
    int n, std::uint64_t limit = 1u << 24);

/// True iff f is isotone or antitone between the chain orderings of A
/// and of the image subalgebra f(A). Throws NoChainOrderingError when
/// either side is 2x2-like or the image is not a subalgebra.
bool is_monotone_wrt_chain_orderings(const HomMap& f, const MedianAlgebra& a,
                                     const MedianAlgebra& b);

} // namespace mediankit
