#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mediankit/algebra.hpp"
#include "mediankit/errors.hpp"

namespace mediankit {

inline constexpr int kDefaultEnumerationLimit = 20; // max universe size for 2^n scans

/// Finite dual of a median algebra: a bounded poset with an
/// order-reversing complement involution. In the finite case the topology
/// is discrete, so only the order, complement and bounds are carried.
/// When built from an algebra, point_sets holds each point as a bitmask
/// over the source universe.
struct DualSpace {
    int size;
    std::vector<char> le_matrix;
    std::vector<int> complement;
    int bottom;
    int top;
    std::vector<std::uint32_t> point_sets; // empty for synthetic spaces
    int source_size = 0;

    bool le(int x, int y) const { return le_matrix[x * size + y] != 0; }

    /// Validates: poset laws, order-reversing involution, x <= x^c only
    /// at bottom, bottom/top are the bounds and each other's complement.
    static DualSpace build(int size, std::vector<char> le, std::vector<int> complement,
                           std::vector<std::uint32_t> point_sets = {}, int source_size = 0);
};

/// True iff C and its complement are both convex. Also evaluated through
/// the pair characterization (m(x,y,z) in C iff some pair of {x,y,z}
/// lies in C) and the two answers are required to agree.
bool is_prime_convex(const MedianAlgebra& a, std::uint32_t subset);

/// All prime convex subsets as bitmasks, sorted by size then value.
/// Throws SizeLimitError when 2^n exceeds the enumeration bound.
std::vector<std::uint32_t> prime_convex_subsets(const MedianAlgebra& a,
                                                int limit = kDefaultEnumerationLimit);

DualSpace dual_space(const MedianAlgebra& a, int limit = kDefaultEnumerationLimit);

struct CompleteIdealAlgebra {
    MedianAlgebra algebra;               // median: componentwise majority of characteristic vectors
    std::vector<std::uint64_t> ideals;   // each ideal as a bitmask over dual points
};

/// All downsets W with x in W iff x^c not in W, as a median algebra.
CompleteIdealAlgebra complete_ideals(const DualSpace& x);

/// The unit a -> r_a = {I in spec(A) | a not in I}, as indices into
/// complete_ideals(dual_space(A)).ideals. Verified to be a median
/// isomorphism; RoundTripFailure signals a bug.
std::vector<int> double_dual_unit(const MedianAlgebra& a,
                                  int limit = kDefaultEnumerationLimit);

/// The preimage map f*(I) = f^{-1}(I) from B* to A*, as point indices.
/// Verified to preserve inclusion, complement, bottom and top.
/// Throws NotAHomError if f is not a median homomorphism.
std::vector<int> dual_of_hom(const HomMap& f, const MedianAlgebra& a, const MedianAlgebra& b,
                             int limit = kDefaultEnumerationLimit);

/// Disjoint union with bottoms and tops identified; complement acts
/// within each copy.
DualSpace coproduct(const DualSpace& x, const DualSpace& y);

/// Structure isomorphism: order, complement, bottom and top preserved.
std::optional<std::vector<int>> dual_isomorphism(const DualSpace& x, const DualSpace& y);

/// The map a -> (indicator of a not in C) over all prime convex C, into
/// the componentwise-majority algebra on 2^{|spec(A)|}. Verified
/// injective and median-preserving; the codomain cube is not materialized.
HomMap embed_in_hypercube(const MedianAlgebra& a, int limit = kDefaultEnumerationLimit);

} // namespace mediankit
