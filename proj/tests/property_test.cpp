#include "ecst/ecst_xml.hpp"
#include "ecst/frontend.hpp"
#include "ecst/metrics.hpp"

#include "support/test_support.hpp"

#include <gtest/gtest.h>

namespace ecst {
namespace {

std::vector<int> unitComplexities(const Tree& tree) {
    std::vector<int> out;
    for (const Node* n : findNodes(tree, UniversalKind::FunctionDecl)) {
        out.push_back(cyclomaticComplexity(*n));
    }
    return out;
}

std::vector<int> expectedComplexities(const std::vector<testing::Unit>& units) {
    std::vector<int> out;
    for (const auto& unit : units) {
        out.push_back(1 + testing::countDecisions(unit.body));
    }
    return out;
}

class RandomPrograms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomPrograms, ComplexityMatchesBruteForce) {
    testing::ProgramGenerator generator(GetParam());
    for (int trial = 0; trial < 40; ++trial) {
        const auto units = generator.units();
        const auto expected = expectedComplexities(units);
        const auto modula = testing::renderModula(units);
        const auto java = testing::renderJava(units);
        const Tree m = parseSource(modula, "modula2");
        const Tree j = parseSource(java, "javaoo");
        ASSERT_EQ(unitComplexities(m), expected) << modula;
        ASSERT_EQ(unitComplexities(j), expected) << java;

        const Tree rewritten = parseSource(testing::renderJava(units, true), "javaoo");
        ASSERT_EQ(unitComplexities(rewritten), expected);

        // Round trip holds for arbitrary shapes too.
        ASSERT_EQ(parseTreeXml(serializeTree(j)).root(), j.root());
    }
}

TEST_P(RandomPrograms, LineCountsAgreeWithOracle) {
    testing::ProgramGenerator generator(GetParam() ^ 0x5bd1e995u);
    for (int trial = 0; trial < 20; ++trial) {
        const auto units = generator.units();
        for (const auto& [language, text] :
             {std::pair<std::string, std::string>{"modula2", testing::renderModula(units)},
              std::pair<std::string, std::string>{"javaoo", testing::renderJava(units)}}) {
            const Tree tree = parseSource(text, language);
            const auto totals = fileTotals(tree);
            const auto oracle = testing::classifyLines(text, language);
            ASSERT_EQ(totals.loc, oracle.physical);
            ASSERT_EQ(totals.sloc, oracle.code) << text;
            ASSERT_EQ(totals.cloc, oracle.comment) << text;
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPrograms, ::testing::Values(1u, 7u, 42u, 1234u, 99991u));

} // namespace
} // namespace ecst
