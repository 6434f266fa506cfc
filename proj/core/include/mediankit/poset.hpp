#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mediankit/algebra.hpp"
#include "mediankit/errors.hpp"

namespace mediankit {

/// A finite poset as a reflexive antisymmetric transitive boolean matrix.
class FinitePoset {
public:
    static FinitePoset from_relation(int n, std::vector<char> le,
                                     std::vector<std::string> labels = {});

    /// Build from cover pairs (lo, hi); the relation is the reflexive
    /// transitive closure. Rejects cyclic input.
    static FinitePoset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                   std::vector<std::string> labels = {});

    static FinitePoset chain(int n);

    int size() const { return n_; }
    bool le(int x, int y) const { return le_[x * n_ + y] != 0; }
    bool lt(int x, int y) const { return x != y && le(x, y); }

    const std::vector<std::string>& labels() const { return labels_; }

    /// Cover pairs (x, y): x < y with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    std::optional<int> bottom() const;
    std::optional<int> top() const;
    bool is_chain() const;

    /// Greatest lower bound by scanning, if it exists.
    std::optional<int> meet(int x, int y) const;
    /// Least upper bound by scanning, if it exists.
    std::optional<int> join(int x, int y) const;
    std::optional<int> join3(int x, int y, int z) const;

    /// Restriction to the given elements, in their given order.
    FinitePoset induced(const std::vector<int>& elements) const;

    bool operator==(const FinitePoset& other) const {
        return n_ == other.n_ && le_ == other.le_;
    }

private:
    FinitePoset(int n, std::vector<char> le, std::vector<std::string> labels)
        : n_(n), le_(std::move(le)), labels_(std::move(labels)) {}

    int n_;
    std::vector<char> le_;
    std::vector<std::string> labels_;
};

/// A meet-semilattice: a poset in which all binary meets exist, with the
/// meet table materialized. from_poset verifies meet(x,y) is the greatest
/// lower bound for every pair.
struct MeetSemilattice {
    FinitePoset poset;
    std::vector<int> meet_table;

    static MeetSemilattice from_poset(FinitePoset p);

    int meet(int x, int y) const { return meet_table[x * poset.size() + y]; }
};

struct MedianSemilatticeCheck {
    bool ok;
    std::string diagnosis; // names the failing principal ideal or triple
};

/// The order x <=_a y iff m(a,x,y) = x, a meet-semilattice with bottom a
/// and meet x ^ y = m(a,x,y).
MeetSemilattice order_from_point(const MedianAlgebra& a, int base);

/// True iff every principal ideal is a distributive lattice and every
/// pairwise-upper-bounded triple has a join.
MedianSemilatticeCheck is_median_semilattice(const MeetSemilattice& s);

/// The median m(x,y,z) = (x^y) v (x^z) v (z^y) of a median semilattice.
/// Throws NotMedianSemilatticeError if a required join is missing or a
/// principal ideal is non-distributive.
MedianAlgebra median_from_semilattice(const MeetSemilattice& s);

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& p, const FinitePoset& q);

bool is_isotone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q);
bool is_antitone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q);
bool is_monotone(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q);

} // namespace mediankit
