/**
 * @file metrics.hpp
 * @brief Cyclomatic complexity and line counts computed over an eCST.
 *
 * Everything here keys on universal markers and token categories, so the
 * same code measures every language a frontend supports.
 *
 * A decision point is a LOOP_STATEMENT, or a BRANCH that owns a CONDITION
 * (an ELSE arm has none). A unit's complexity is one plus the decision
 * points inside it; loop and branch rows report the bare count.
 */

#pragma once

#include "ecst/core.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecst {

class UnsupportedElementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MetricsOptions {
    /// Also count each binary logical operator inside a CONDITION as a decision.
    bool extendedCc = false;
};

struct LocBundle {
    int loc = 0;
    int sloc = 0;
    int cloc = 0;

    friend bool operator==(const LocBundle&, const LocBundle&) = default;
};

struct ElementMetrics {
    std::string elementName;
    UniversalKind annotation = UniversalKind::FunctionDecl;
    int cc = 0;
    int loc = 0;
    int sloc = 0;
    int cloc = 0;
    SourceSpan span;

    friend bool operator==(const ElementMetrics&, const ElementMetrics&) = default;
};

struct MetricsReport {
    std::string sourcePath;
    std::string languageId;
    std::vector<ElementMetrics> rows;
    LocBundle totals;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline constexpr std::array<std::string_view, 4> kLogicalOperators = {"AND", "OR", "&&", "||"};

inline bool isDecisionPoint(const Node& node) {
    if (node.is(UniversalKind::LoopStatement)) {
        return true;
    }
    if (!node.is(UniversalKind::Branch)) {
        return false;
    }
    const auto children = node.children();
    return std::any_of(children.begin(), children.end(),
                       [](const Node& c) { return c.is(UniversalKind::Condition); });
}

namespace detail {

inline bool isLogicalOperator(const Node& node) {
    return node.tokenType() == TokenType::Operator &&
           std::find(kLogicalOperators.begin(), kLogicalOperators.end(), node.label()) !=
               kLogicalOperators.end();
}

inline int countDecisions(const Node& node, bool insideCondition, const MetricsOptions& options) {
    if (node.isConcrete()) {
        return options.extendedCc && insideCondition && isLogicalOperator(node) ? 1 : 0;
    }
    int count = isDecisionPoint(node) ? 1 : 0;
    const bool condition = insideCondition || node.is(UniversalKind::Condition);
    for (const auto& child : node.children()) {
        count += countDecisions(child, condition, options);
    }
    return count;
}

} // namespace detail

/// Decision points in the subtree rooted at @p node, the node itself included.
inline int decisionCount(const Node& node, const MetricsOptions& options = {}) {
    return detail::countDecisions(node, false, options);
}

inline bool isMeasuredKind(UniversalKind kind) noexcept {
    return kind == UniversalKind::FunctionDecl || kind == UniversalKind::LoopStatement ||
           kind == UniversalKind::BranchStatement || kind == UniversalKind::Branch;
}

inline int cyclomaticComplexity(const Node& node, const MetricsOptions& options = {}) {
    const auto kind = node.universalKind();
    if (!kind || !isMeasuredKind(*kind)) {
        throw UnsupportedElementError("cyclomatic complexity is not defined for '" +
                                      node.label() + "'");
    }
    const int decisions = decisionCount(node, options);
    return *kind == UniversalKind::FunctionDecl ? 1 + decisions : decisions;
}

/**
 * @brief Physical, code and comment line counts for one subtree.
 *
 * A line holding both code and a comment counts toward sloc and cloc.
 */
inline LocBundle locBundle(const Node& node) {
    const SourceSpan span = subtreeSpan(node);
    const auto lines = static_cast<std::size_t>(span.lineCount());
    std::vector<bool> code(lines, false);
    std::vector<bool> comment(lines, false);
    for (const Node* n : traversePreorder(node)) {
        if (n->isUniversal()) {
            continue;
        }
        auto& marks = n->isComment() ? comment : code;
        for (int line = n->span().startLine; line <= n->span().endLine; ++line) {
            marks[static_cast<std::size_t>(line - span.startLine)] = true;
        }
    }
    return {span.lineCount(), static_cast<int>(std::count(code.begin(), code.end(), true)),
            static_cast<int>(std::count(comment.begin(), comment.end(), true))};
}

inline LocBundle locBundle(const Node& node, const Tree&) { return locBundle(node); }

/// File-level counts: loc is the physical line count of the whole file.
inline LocBundle fileTotals(const Tree& tree) {
    LocBundle totals = locBundle(tree.root());
    totals.loc = tree.totalLines();
    return totals;
}

namespace detail {

/// Identifier directly followed by "(", else the first identifier.
inline std::string unitName(const Node& unit) {
    const auto children = unit.children();
    const Node* first = nullptr;
    const Node* previousIdentifier = nullptr;
    for (const auto& child : children) {
        if (child.isComment()) {
            continue;
        }
        if (child.tokenType() == TokenType::Punctuation && child.label() == "(" &&
            previousIdentifier != nullptr) {
            return previousIdentifier->label();
        }
        previousIdentifier = child.tokenType() == TokenType::Identifier ? &child : nullptr;
        if (previousIdentifier != nullptr && first == nullptr) {
            first = &child;
        }
    }
    if (first != nullptr) {
        return first->label();
    }
    for (const Node* n : traversePreorder(unit)) {
        if (n->tokenType() == TokenType::Identifier) {
            return n->label();
        }
    }
    return {};
}

/// Keywords ahead of the CONDITION ("IF", "ELSIF", "else if"), else the first keyword.
inline std::string introducingKeywords(const Node& node) {
    std::vector<std::string_view> keywords;
    for (const auto& child : node.children()) {
        if (child.is(UniversalKind::Condition)) {
            break;
        }
        if (child.tokenType() == TokenType::Keyword) {
            keywords.push_back(child.label());
        }
    }
    const bool conditional = isDecisionPoint(node) && node.is(UniversalKind::Branch);
    if (keywords.empty()) {
        return node.label();
    }
    if (!conditional) {
        return std::string(keywords.front());
    }
    std::string name;
    for (auto keyword : keywords) {
        if (!name.empty()) {
            name += ' ';
        }
        name += keyword;
    }
    return name;
}

} // namespace detail

inline std::string elementName(const Node& node) {
    switch (node.universalKind().value_or(UniversalKind::CompilationUnit)) {
    case UniversalKind::FunctionDecl: return detail::unitName(node);
    case UniversalKind::BranchStatement: return "BRANCHING";
    case UniversalKind::LoopStatement:
    case UniversalKind::Branch: return detail::introducingKeywords(node);
    default: return node.label();
    }
}

/// One row per FUNCTION_DECL, LOOP_STATEMENT, BRANCH_STATEMENT and BRANCH, in preorder.
inline MetricsReport measureTree(const Tree& tree, const MetricsOptions& options = {}) {
    MetricsReport report;
    report.sourcePath = tree.sourcePath();
    report.languageId = tree.languageId();
    for (const Node* node : traversePreorder(tree)) {
        const auto kind = node->universalKind();
        if (!kind || !isMeasuredKind(*kind)) {
            continue;
        }
        const auto lines = locBundle(*node);
        report.rows.push_back({elementName(*node), *kind, cyclomaticComplexity(*node, options),
                               lines.loc, lines.sloc, lines.cloc, node->span()});
    }
    report.totals = fileTotals(tree);
    return report;
}

/// Plain-text table with the same columns as the metrics document.
inline void writeTable(std::ostream& out, const MetricsReport& report) {
    std::size_t nameWidth = 10;
    for (const auto& row : report.rows) {
        nameWidth = std::max(nameWidth, row.elementName.size());
    }
    auto line = [&](std::string_view name, std::string_view annotation, const std::string& cc,
                    const std::string& loc, const std::string& sloc, const std::string& cloc) {
        out << std::left << std::setw(static_cast<int>(nameWidth)) << name << "  "
            << std::setw(16) << annotation << std::right << std::setw(4) << cc << std::setw(6)
            << loc << std::setw(6) << sloc << std::setw(6) << cloc << '\n';
    };
    out << report.sourcePath << " (" << report.languageId << ")\n";
    line("PL element", "Annotation", "CC", "LOC", "SLOC", "CLOC");
    for (const auto& row : report.rows) {
        line(row.elementName, toString(row.annotation), std::to_string(row.cc),
             std::to_string(row.loc), std::to_string(row.sloc), std::to_string(row.cloc));
    }
    line("(file)", "", "", std::to_string(report.totals.loc), std::to_string(report.totals.sloc),
         std::to_string(report.totals.cloc));
}

} // namespace ecst
