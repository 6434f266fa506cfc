#include "mediankit/dot.hpp"

#include <sstream>

namespace mediankit {

namespace {

std::string subset_label(std::uint32_t mask, int source_size) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int e = 0; e < source_size; ++e)
        if (mask >> e & 1u) {
            if (!first)
                out << ",";
            out << e;
            first = false;
        }
    out << "}";
    return out.str();
}

} // namespace

std::string emit_dot(const FinitePoset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < p.size(); ++i) {
        out << "  n" << i;
        if (!p.labels().empty())
            out << " [label=\"" << p.labels()[i] << "\"]";
        out << ";\n";
    }
    for (auto [lo, hi] : p.covers())
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const DualSpace& x) {
    std::ostringstream out;
    out << "digraph dual {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < x.size; ++i) {
        out << "  n" << i;
        if (!x.point_sets.empty())
            out << " [label=\"" << subset_label(x.point_sets[i], x.source_size) << "\"]";
        out << ";\n";
    }
    // Hasse covers of the inclusion order
    for (int i = 0; i < x.size; ++i)
        for (int j = 0; j < x.size; ++j) {
            if (i == j || !x.le(i, j))
                continue;
            bool cover = true;
            for (int k = 0; k < x.size && cover; ++k)
                if (k != i && k != j && x.le(i, k) && x.le(k, j))
                    cover = false;
            if (cover)
                out << "  n" << i << " -> n" << j << ";\n";
        }
    for (int i = 0; i < x.size; ++i)
        if (i < x.complement[i])
            out << "  n" << i << " -> n" << x.complement[i]
                << " [dir=none, style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

} // namespace mediankit
