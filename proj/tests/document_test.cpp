#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "mediankit/algebra.hpp"
#include "mediankit/conservative.hpp"
#include "mediankit/document.hpp"
#include "mediankit/dot.hpp"
#include "mediankit/duality.hpp"
#include "mediankit/homs.hpp"
#include "mediankit/poset.hpp"

using namespace mediankit;

namespace {

// write a document to a temp file and run the CLI against it
struct TempDoc {
    std::string path;

    explicit TempDoc(const std::string& text) {
        static int counter = 0;
        path = "/tmp/mediankit_doc_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << text << "\n";
    }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("chain documents denote chain algebras") {
    auto doc = parse_document(R"({"kind":"chain","length":3})");
    CHECK(doc.to_algebra() == chain_algebra(3));
    CHECK(doc.to_poset() == FinitePoset::chain(3));
}

TEST_CASE("product documents denote componentwise algebras") {
    auto doc = parse_document(R"({"kind":"product","lengths":[3,2]})");
    CHECK(doc.to_algebra() == product(chain_algebra(3), chain_algebra(2)));
}

TEST_CASE("table documents validate eagerly") {
    auto doc = parse_document(R"({"kind":"table","n":2,"table":[0,0,0,1,0,1,1,1]})");
    CHECK(doc.to_algebra().m(0, 1, 1) == 1);
    CHECK_THROWS_AS(parse_document(R"({"kind":"table","n":2,"table":[0,0,0,1,0,1,1,0]})"),
                    ValidationError);
}

TEST_CASE("poset documents are read as median semilattices") {
    auto doc = parse_document(R"({"kind":"poset","n":4,"covers":[[0,1],[1,2],[1,3]]})");
    CHECK(doc.to_algebra() == a2_algebra());
    // N5 is not a median semilattice
    CHECK_THROWS_AS(
        parse_document(R"({"kind":"poset","n":5,"covers":[[0,1],[1,2],[2,4],[0,3],[3,4]]})")
            .to_algebra(),
        NotMedianSemilatticeError);
}

TEST_CASE("boolean-cube documents denote power-of-two products") {
    auto doc = parse_document(R"({"kind":"boolean-cube","exponent":3})");
    CHECK(doc.to_algebra().size() == 8);
    CHECK(doc.to_algebra() ==
          product(product(chain_algebra(2), chain_algebra(2)), chain_algebra(2)));
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(parse_document("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"mystery"})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"length":3})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"chain","length":0})"), ValidationError);
}

TEST_CASE("serialize emits a canonical single line that round-trips") {
    for (const char* text :
         {R"({"kind":"chain","length":3})", R"({"kind":"product","lengths":[3,2]})",
          R"({"kind":"poset","n":4,"covers":[[0,1],[1,2],[1,3]]})",
          R"({"kind":"boolean-cube","exponent":2})"}) {
        auto doc = parse_document(text);
        auto line = doc.serialize();
        CHECK(line.find('\n') == std::string::npos);
        auto again = parse_document(line);
        CHECK(again.serialize() == line);
        CHECK(again.to_algebra() == doc.to_algebra());
    }
}

TEST_CASE("dot output for the 2-chain is two nodes and one edge") {
    auto dot = emit_dot(FinitePoset::chain(2));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n1 -> n0") == std::string::npos);
}

TEST_CASE("dot output for the A2 poset has the three cover edges") {
    auto dot = emit_dot(forbidden_figure(ForbiddenFigure::A2));
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n1 -> n2") != std::string::npos);
    CHECK(dot.find("n1 -> n3") != std::string::npos);
    CHECK(dot.find("n0 -> n2") == std::string::npos);
}

TEST_CASE("dot output for a dual space annotates the complement pairing") {
    auto dot = emit_dot(dual_space(chain_algebra(3)));
    CHECK(dot.find("dashed") != std::string::npos);
}

TEST_CASE("cli check on a chain reports conservative and exits 0") {
    TempDoc doc(R"({"kind":"chain","length":5})");
    auto r = run_cli({"check", "--in", doc.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"conservative\":true") != std::string::npos);
    CHECK(r.out.find("\"valid\":true") != std::string::npos);
}

TEST_CASE("cli check on an invalid table exits 1 with the axiom witness") {
    TempDoc doc(R"({"kind":"table","n":2,"table":[1,0,0,1,0,1,1,1]})");
    auto r = run_cli({"check", "--in", doc.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"valid\":false") != std::string::npos);
    CHECK(r.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("cli chain-rep on the A2 algebra exits 1 with the median witness") {
    TempDoc doc(R"({"kind":"poset","n":4,"covers":[[0,1],[1,2],[1,3]]})");
    auto r = run_cli({"chain-rep", "--in", doc.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"witness\":[0,2,3]") != std::string::npos);
    CHECK(r.out.find("\"witness_median\":1") != std::string::npos);
}

TEST_CASE("cli chain-rep on 2x2 reports the exceptional branch") {
    TempDoc doc(R"({"kind":"product","lengths":[2,2]})");
    auto r = run_cli({"chain-rep", "--in", doc.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"two_by_two\":true") != std::string::npos);
}

TEST_CASE("cli homs count agrees with brute force") {
    TempDoc from(R"({"kind":"product","lengths":[3,2]})");
    TempDoc to(R"({"kind":"product","lengths":[2,2]})");
    auto fast = run_cli({"homs", "--from", from.path, "--to", to.path, "--count"});
    CHECK(fast.code == 0);
    auto brute = enumerate_homs_brute(product(chain_algebra(3), chain_algebra(2)),
                                      product(chain_algebra(2), chain_algebra(2)));
    CHECK(fast.out.find("\"count\":" + std::to_string(brute.size())) != std::string::npos);
    CHECK(fast.out.find("product-decomposition") != std::string::npos);
}

TEST_CASE("cli roundtrip reports the double-dual unit") {
    TempDoc doc(R"({"kind":"chain","length":4})");
    auto r = run_cli({"roundtrip", "--in", doc.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"isomorphic\":true") != std::string::npos);
}

TEST_CASE("cli reports usage errors with exit 2") {
    auto r = run_cli({"check"});
    CHECK(r.code == 2);
    auto missing = run_cli({"check", "--in", "/nonexistent/file.json"});
    CHECK(missing.code == 2);
    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("cli text format prints one key per line") {
    TempDoc doc(R"({"kind":"chain","length":3})");
    auto r = run_cli({"check", "--in", doc.path, "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("conservative: true") != std::string::npos);
}

TEST_CASE("cli limit option guards big enumerations") {
    TempDoc doc(R"({"kind":"chain","length":6})");
    auto r = run_cli({"dual", "--in", doc.path, "--limit", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("size limit") != std::string::npos);
}
