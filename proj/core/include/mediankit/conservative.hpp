#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "mediankit/algebra.hpp"
#include "mediankit/poset.hpp"

namespace mediankit {

enum class ForbiddenFigure { A1, A2, A3, A4, A5 };

const char* figure_name(ForbiddenFigure f);

/// The five reference posets: A1 is N5; A2 is the decisive figure (one
/// atom below two incomparable elements over a bottom); A3/A4 extend the
/// diamond; A5 is the three-atom poset whose atoms are pairwise bounded
/// above but have no join.
FinitePoset forbidden_figure(ForbiddenFigure f);

struct ForbiddenWitness {
    ForbiddenFigure figure;
    std::vector<int> elements; // induced subposet is order-isomorphic to the figure
};

struct ConservativityResult {
    bool conservative;
    std::array<int, 3> witness{}; // a triple with m(x,y,z) outside {x,y,z}
    int median = -1;              // its median, when not conservative
};

/// True iff m(x,y,z) lies in {x,y,z} for every triple.
ConservativityResult is_conservative(const MedianAlgebra& a);

/// The median algebra of the A2 poset (4 elements, base 0).
MedianAlgebra a2_algebra();

/// A 4-element subset closed under m whose induced algebra is isomorphic
/// to the A2 algebra, or nullopt. Empty exactly when the algebra is
/// conservative.
std::optional<ForbiddenWitness> find_a2_subalgebra(const MedianAlgebra& a);

/// An induced subposet order-isomorphic to one of A1..A5, or nullopt.
/// If the whole poset is itself one of the figures, that kind is
/// reported; otherwise A2 is searched first.
std::optional<ForbiddenWitness> find_forbidden_poset(const FinitePoset& s);

/// Restrict the search to a single figure.
std::optional<ForbiddenWitness> find_forbidden_poset(const FinitePoset& s, ForbiddenFigure f);

/// Two chains under <=_base, bottom-first, both starting at `base`, with
/// union A and intersection {base}. Requires a conservative algebra of at
/// least five elements.
std::pair<std::vector<int>, std::vector<int>> chain_decomposition(const MedianAlgebra& a,
                                                                  int base);

struct CoalescedSum {
    FinitePoset poset;
    std::vector<int> elements; // element ids: c0 in order, then c1 minus the bottom
};

/// Glue two bottom-first chains at their (equal) bottom elements.
CoalescedSum bot_coalesced_sum(const std::vector<int>& c0, const std::vector<int>& c1);

struct ChainRepresentation {
    int base;
    std::vector<int> c0;          // chain through base, bottom-first
    std::vector<int> c1;          // second chain, bottom-first (may be just {base})
    std::vector<int> total_order; // universe permutation, bottom-first, with m_<= = m
};

struct TwoByTwoResult {
    std::vector<int> iso; // isomorphism onto product(chain(2), chain(2))
};

/// The total order realizing m, or the distinguished 2x2 branch.
/// Throws NotConservativeError otherwise.
std::variant<ChainRepresentation, TwoByTwoResult> chain_ordering(const MedianAlgebra& a);

/// The median table induced by a total order given as a bottom-first
/// permutation of {0,...,n-1}: m(x,y,z) is the positional middle.
MedianAlgebra median_of_total_order(const std::vector<int>& order);

} // namespace mediankit
