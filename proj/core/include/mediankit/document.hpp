#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mediankit/algebra.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/poset.hpp"

namespace mediankit {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// One algebra description file: a single-line JSON object with a "kind"
/// discriminator. Kinds and payloads:
///   table        {"kind":"table","n":N,"table":[...]}   flat (x,y,z) row-major
///   poset        {"kind":"poset","n":N,"covers":[[a,b],...]}
///   chain        {"kind":"chain","length":K}
///   product      {"kind":"product","lengths":[k1,...]}
///   boolean-cube {"kind":"boolean-cube","exponent":E}
struct AlgebraDocument {
    enum class Kind { Table, Poset, Chain, Product, BooleanCube };

    Kind kind;
    int n = 0;
    std::vector<int> table;
    std::vector<std::pair<int, int>> covers;
    int length = 0;
    std::vector<int> lengths;
    int exponent = 0;

    /// The validated algebra the document denotes. A poset document is
    /// read as a median semilattice and throws if it is not one.
    MedianAlgebra to_algebra() const;

    /// The poset view: the covers for a poset document, the base-0 order
    /// <=_0 for the other kinds.
    FinitePoset to_poset() const;

    std::string serialize() const; // canonical single line
};

/// Parse and eagerly validate. Throws ParseError on malformed text and
/// ValidationError (or a core diagnostic) on semantic failure.
AlgebraDocument parse_document(const std::string& text);

AlgebraDocument load_document(const std::string& path);

} // namespace mediankit
