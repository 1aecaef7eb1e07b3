/**
 * @file core.hpp
 * @brief Enriched concrete syntax tree (eCST) data structure.
 *
 * An eCST is a concrete syntax tree whose token leaves are grouped under
 * "universal" marker nodes (FUNCTION_DECL, LOOP_STATEMENT, ...). Metric
 * algorithms key on the markers only, so they work unchanged for every
 * input language that a frontend can lower into this shape.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecst {

/// Raised whenever a tree violates one of the structural invariants.
class MalformedTreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Inclusive 1-based line/column range.
 *
 * Columns count bytes; the end column is the column of the last character.
 */
struct SourceSpan {
    int startLine = 1;
    int startColumn = 1;
    int endLine = 1;
    int endColumn = 1;

    bool isValid() const noexcept {
        if (startLine < 1 || startColumn < 1 || endLine < 1 || endColumn < 1) {
            return false;
        }
        if (startLine != endLine) {
            return startLine < endLine;
        }
        return startColumn <= endColumn;
    }

    int lineCount() const noexcept { return endLine - startLine + 1; }

    bool contains(const SourceSpan& other) const noexcept {
        return !before(other.startLine, other.startColumn, startLine, startColumn) &&
               !before(endLine, endColumn, other.endLine, other.endColumn);
    }

    /// Smallest span covering both operands.
    SourceSpan merged(const SourceSpan& other) const noexcept {
        SourceSpan out = *this;
        if (before(other.startLine, other.startColumn, out.startLine, out.startColumn)) {
            out.startLine = other.startLine;
            out.startColumn = other.startColumn;
        }
        if (before(out.endLine, out.endColumn, other.endLine, other.endColumn)) {
            out.endLine = other.endLine;
            out.endColumn = other.endColumn;
        }
        return out;
    }

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;

private:
    static bool before(int l1, int c1, int l2, int c2) noexcept {
        return l1 < l2 || (l1 == l2 && c1 < c2);
    }
};

/// Closed vocabulary of marker nodes.
enum class UniversalKind : std::uint8_t {
    CompilationUnit,
    FunctionDecl,
    LoopStatement,
    BranchStatement,
    Branch,
    Condition,
};

inline constexpr UniversalKind kAllUniversalKinds[] = {
    UniversalKind::CompilationUnit, UniversalKind::FunctionDecl, UniversalKind::LoopStatement,
    UniversalKind::BranchStatement, UniversalKind::Branch,       UniversalKind::Condition,
};

/// Canonical spelling, used verbatim in XML documents and reports.
constexpr std::string_view toString(UniversalKind kind) noexcept {
    switch (kind) {
    case UniversalKind::CompilationUnit: return "COMPILATION_UNIT";
    case UniversalKind::FunctionDecl: return "FUNCTION_DECL";
    case UniversalKind::LoopStatement: return "LOOP_STATEMENT";
    case UniversalKind::BranchStatement: return "BRANCH_STATEMENT";
    case UniversalKind::Branch: return "BRANCH";
    case UniversalKind::Condition: return "CONDITION";
    }
    return "";
}

inline std::optional<UniversalKind> universalKindFromString(std::string_view text) noexcept {
    for (auto kind : kAllUniversalKinds) {
        if (toString(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

/// Lexical category of a concrete token.
enum class TokenType : std::uint8_t {
    Keyword,
    Identifier,
    Literal,
    Operator,
    Punctuation,
    Comment,
};

constexpr std::string_view toString(TokenType type) noexcept {
    switch (type) {
    case TokenType::Keyword: return "keyword";
    case TokenType::Identifier: return "identifier";
    case TokenType::Literal: return "literal";
    case TokenType::Operator: return "operator";
    case TokenType::Punctuation: return "punctuation";
    case TokenType::Comment: return "comment";
    }
    return "";
}

inline std::optional<TokenType> tokenTypeFromString(std::string_view text) noexcept {
    for (auto type : {TokenType::Keyword, TokenType::Identifier, TokenType::Literal,
                      TokenType::Operator, TokenType::Punctuation, TokenType::Comment}) {
        if (toString(type) == text) {
            return type;
        }
    }
    return std::nullopt;
}

class Node;
SourceSpan subtreeSpan(const Node& node);

/**
 * @brief One eCST node: a concrete token or a universal marker.
 *
 * Nodes are values. A universal node's span is derived from its concrete
 * descendants when the node is created, so a universal node that covers no
 * source text cannot exist.
 */
class Node {
public:
    static Node concrete(std::string lexeme, TokenType type, SourceSpan span) {
        if (lexeme.empty()) {
            throw MalformedTreeError("concrete node with empty lexeme");
        }
        if (!span.isValid()) {
            throw MalformedTreeError("concrete node '" + lexeme + "' has an invalid span");
        }
        Node node;
        node.label_ = std::move(lexeme);
        node.tokenType_ = type;
        node.span_ = span;
        return node;
    }

    static Node universal(UniversalKind kind, std::vector<Node> children) {
        Node node;
        node.kind_ = kind;
        node.label_ = std::string(toString(kind));
        node.children_ = std::move(children);
        node.span_ = subtreeSpan(node);
        return node;
    }

    bool isUniversal() const noexcept { return kind_.has_value(); }
    bool isConcrete() const noexcept { return !kind_.has_value(); }
    bool is(UniversalKind kind) const noexcept { return kind_ == kind; }
    bool isComment() const noexcept { return tokenType_ == TokenType::Comment; }

    std::optional<UniversalKind> universalKind() const noexcept { return kind_; }
    std::optional<TokenType> tokenType() const noexcept { return tokenType_; }
    const std::string& label() const noexcept { return label_; }
    const SourceSpan& span() const noexcept { return span_; }
    std::span<const Node> children() const noexcept { return children_; }

    /// Preorder index within the owning tree; 0 until the node is placed in a Tree.
    int id() const noexcept { return id_; }

    /// Structural equality; node ids are ignored.
    friend bool operator==(const Node& a, const Node& b) {
        return a.kind_ == b.kind_ && a.tokenType_ == b.tokenType_ && a.label_ == b.label_ &&
               a.span_ == b.span_ && a.children_ == b.children_;
    }

private:
    friend class Tree;
    friend SourceSpan subtreeSpan(const Node& node);

    Node() = default;

    std::optional<UniversalKind> kind_;
    std::optional<TokenType> tokenType_;
    std::string label_;
    SourceSpan span_;
    std::vector<Node> children_;
    int id_ = 0;
};

/**
 * @brief Minimal span covering every concrete node under @p node.
 *
 * Walks the subtree rather than trusting cached spans. Throws
 * MalformedTreeError for a universal node with no concrete descendants.
 */
inline SourceSpan subtreeSpan(const Node& node) {
    if (node.isConcrete()) {
        return node.span_;
    }
    std::optional<SourceSpan> acc;
    std::vector<const Node*> stack{&node};
    while (!stack.empty()) {
        const Node* current = stack.back();
        stack.pop_back();
        if (current->isConcrete()) {
            acc = acc ? acc->merged(current->span_) : current->span_;
            continue;
        }
        for (const auto& child : current->children_) {
            stack.push_back(&child);
        }
    }
    if (!acc) {
        throw MalformedTreeError(std::string(toString(*node.kind_)) +
                                 " node has no concrete descendants");
    }
    return *acc;
}

/// Depth-first, left-to-right walk over the subtree rooted at @p root.
inline std::vector<const Node*> traversePreorder(const Node& root) {
    std::vector<const Node*> out;
    std::vector<const Node*> stack{&root};
    while (!stack.empty()) {
        const Node* current = stack.back();
        stack.pop_back();
        out.push_back(current);
        auto children = current->children();
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack.push_back(&*it);
        }
    }
    return out;
}

/// eCST for one compilation unit (one source file).
class Tree {
public:
    Tree(Node root, std::string sourcePath, std::string languageId, int totalLines)
        : root_(std::move(root)),
          sourcePath_(std::move(sourcePath)),
          languageId_(std::move(languageId)),
          totalLines_(totalLines) {
        validate();
        int next = 0;
        assignIds(root_, next);
        nodeCount_ = next;
    }

    const Node& root() const noexcept { return root_; }
    const std::string& sourcePath() const noexcept { return sourcePath_; }
    const std::string& languageId() const noexcept { return languageId_; }
    int totalLines() const noexcept { return totalLines_; }
    int nodeCount() const noexcept { return nodeCount_; }

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.sourcePath_ == b.sourcePath_ && a.languageId_ == b.languageId_ &&
               a.totalLines_ == b.totalLines_ && a.root_ == b.root_;
    }

private:
    static void assignIds(Node& node, int& next) {
        node.id_ = next++;
        for (auto& child : node.children_) {
            assignIds(child, next);
        }
    }

    void validate() const {
        if (!root_.is(UniversalKind::CompilationUnit)) {
            throw MalformedTreeError("tree root must be COMPILATION_UNIT");
        }
        if (totalLines_ < 1) {
            throw MalformedTreeError("totalLines must be positive");
        }
        if (root_.span().endLine > totalLines_) {
            throw MalformedTreeError("tokens extend past the last source line");
        }
        validateNode(root_, false, true);
    }

    static void validateNode(const Node& node, bool insideConditionHost, bool isRoot) {
        if (node.isConcrete()) {
            return;
        }
        const auto kind = *node.universalKind();
        if (kind == UniversalKind::CompilationUnit && !isRoot) {
            throw MalformedTreeError("COMPILATION_UNIT may only appear as the root");
        }
        if (kind == UniversalKind::Condition && !insideConditionHost) {
            throw MalformedTreeError("CONDITION outside of a BRANCH or LOOP_STATEMENT");
        }
        if (kind == UniversalKind::FunctionDecl) {
            auto nodes = traversePreorder(node);
            bool named = std::any_of(nodes.begin(), nodes.end(), [](const Node* n) {
                return n->tokenType() == TokenType::Identifier;
            });
            if (!named) {
                throw MalformedTreeError("FUNCTION_DECL without an identifier");
            }
        }
        const bool host = insideConditionHost || kind == UniversalKind::Branch ||
                          kind == UniversalKind::LoopStatement;
        for (const auto& child : node.children()) {
            if (kind == UniversalKind::BranchStatement && child.isUniversal() &&
                !child.is(UniversalKind::Branch)) {
                throw MalformedTreeError("BRANCH_STATEMENT may only hold BRANCH markers, found " +
                                         child.label());
            }
            validateNode(child, host, false);
        }
    }

    Node root_;
    std::string sourcePath_;
    std::string languageId_;
    int totalLines_ = 1;
    int nodeCount_ = 0;
};

inline std::vector<const Node*> traversePreorder(const Tree& tree) {
    return traversePreorder(tree.root());
}

/// All nodes of @p kind, in preorder.
inline std::vector<const Node*> findNodes(const Node& root, UniversalKind kind) {
    std::vector<const Node*> out;
    std::vector<const Node*> stack{&root};
    while (!stack.empty()) {
        const Node* current = stack.back();
        stack.pop_back();
        if (current->is(kind)) {
            out.push_back(current);
        }
        auto children = current->children();
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            if (it->isUniversal()) {
                stack.push_back(&*it);
            }
        }
    }
    return out;
}

inline std::vector<const Node*> findNodes(const Tree& tree, UniversalKind kind) {
    return findNodes(tree.root(), kind);
}

} // namespace ecst
