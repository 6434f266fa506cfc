#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mediankit/errors.hpp"

namespace mediankit {

/// Report for a failed axiom check. The witness holds the variable
/// assignment that breaks the named axiom family.
struct AxiomViolation {
    enum class Kind { NotClosed, Majority, Symmetry, Associativity };
    Kind kind;
    std::vector<int> witness;

    std::string describe() const;
};

struct IdentityViolation {
    int which; // 4 or 5, the derived identity that failed
    std::vector<int> witness;
};

/// A finite median algebra: universe {0,...,n-1} with a ternary operation
/// stored as a flat table in row-major (x,y,z) order.
///
/// Construction is eager: from_table rejects any table violating the
/// median axioms. The associativity-like law is checked by an O(n^5)
/// exhaustive loop, which caps practical sizes around n <= 32.
class MedianAlgebra {
public:
    static MedianAlgebra from_table(int n, std::vector<int> table,
                                    std::vector<std::string> labels = {});

    /// Check the axioms without constructing; nullopt means valid.
    static std::optional<AxiomViolation> check_axioms(int n, const std::vector<int>& table);

    int size() const { return n_; }

    int m(int x, int y, int z) const { return table_[(x * n_ + y) * n_ + z]; }

    const std::vector<int>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const MedianAlgebra& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    MedianAlgebra(int n, std::vector<int> table, std::vector<std::string> labels)
        : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}

    int n_;
    std::vector<int> table_;
    std::vector<std::string> labels_;
};

/// A total map between two algebra universes.
struct HomMap {
    int domain_size;
    int codomain_size;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
    bool operator==(const HomMap&) const = default;
};

/// Cross-check the two derived identities of the median variety on a
/// validated algebra. Must always return nullopt; a witness signals an
/// internal inconsistency.
std::optional<IdentityViolation> verify_derived_identities(const MedianAlgebra& a);

/// Componentwise product; element (x, y) is encoded as x * |B| + y.
MedianAlgebra product(const MedianAlgebra& a, const MedianAlgebra& b);

/// The n-element chain 0 < 1 < ... < n-1 with its median (middle of three).
MedianAlgebra chain_algebra(int n);

/// Smallest superset of `seed` closed under m, sorted.
std::vector<int> subalgebra_generated(const MedianAlgebra& a, const std::vector<int>& seed);

/// Restriction of the algebra to a closed subset (sorted element list).
/// Returns nullopt if the subset is not closed under m.
std::optional<MedianAlgebra> induced_subalgebra(const MedianAlgebra& a,
                                                const std::vector<int>& elements);

/// Exact isomorphism search: backtracking with pruning by the multiset of
/// down-set sizes of each element over all base-point orders. Returns a
/// bijection h with h(m(x,y,z)) = m(hx,hy,hz), or nullopt.
std::optional<std::vector<int>> are_isomorphic(const MedianAlgebra& a, const MedianAlgebra& b);

} // namespace mediankit
