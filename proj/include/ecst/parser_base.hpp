#pragma once

#include "ecst/core.hpp"
#include "ecst/token.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecst::detail {

/**
 * @brief Token cursor plus tree builder shared by the recursive-descent
 * frontends.
 *
 * Grammar code only ever sees non-comment tokens. Comment tokens are
 * attached to whichever node is open when the next code token is consumed;
 * comments that precede a newly opened marker stay with the enclosing node.
 */
class ParserBase {
protected:
    explicit ParserBase(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (tokens_[i].type != TokenType::Comment) {
                code_.push_back(i);
            }
        }
        frames_.push_back({UniversalKind::CompilationUnit, {}});
    }

    bool atEnd() const noexcept { return cursor_ >= code_.size(); }

    /// The @p ahead-th upcoming code token, or nullptr past the end.
    const Token* peek(std::size_t ahead = 0) const noexcept {
        return cursor_ + ahead < code_.size() ? &tokens_[code_[cursor_ + ahead]] : nullptr;
    }

    bool check(TokenType type, std::string_view lexeme, std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->is(type, lexeme);
    }
    bool checkType(TokenType type, std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->type == type;
    }
    bool keyword(std::string_view k, std::size_t ahead = 0) const noexcept {
        return check(TokenType::Keyword, k, ahead);
    }
    bool punct(std::string_view p, std::size_t ahead = 0) const noexcept {
        return check(TokenType::Punctuation, p, ahead);
    }
    bool op(std::string_view o, std::size_t ahead = 0) const noexcept {
        return check(TokenType::Operator, o, ahead);
    }

    const Token& consume() {
        if (atEnd()) {
            fail("unexpected end of input");
        }
        const std::size_t target = code_[cursor_++];
        auto& sink = frames_.back().children;
        for (; flushed_ <= target; ++flushed_) {
            const auto& t = tokens_[flushed_];
            sink.push_back(Node::concrete(t.lexeme, t.type, t.span));
        }
        return tokens_[target];
    }

    const Token& expect(TokenType type, std::string_view lexeme) {
        if (!check(type, lexeme)) {
            fail("expected '" + std::string(lexeme) + "'");
        }
        return consume();
    }
    const Token& expectType(TokenType type) {
        if (!checkType(type)) {
            fail("expected " + std::string(toString(type)));
        }
        return consume();
    }
    const Token& expectKeyword(std::string_view k) { return expect(TokenType::Keyword, k); }
    const Token& expectPunct(std::string_view p) { return expect(TokenType::Punctuation, p); }
    const Token& expectOp(std::string_view o) { return expect(TokenType::Operator, o); }
    const Token& expectIdentifier() { return expectType(TokenType::Identifier); }

    bool accept(TokenType type, std::string_view lexeme) {
        if (check(type, lexeme)) {
            consume();
            return true;
        }
        return false;
    }

    void open(UniversalKind kind) {
        flushComments();
        frames_.push_back({kind, {}});
    }

    void close() {
        auto frame = std::move(frames_.back());
        frames_.pop_back();
        frames_.back().children.push_back(Node::universal(frame.kind, std::move(frame.children)));
    }

    /// Attaches trailing comments and returns the COMPILATION_UNIT root.
    Node finish() {
        if (!atEnd()) {
            fail("unexpected trailing input");
        }
        flushComments();
        if (frames_.size() != 1) {
            throw MalformedTreeError("unbalanced marker nodes at end of parse");
        }
        if (frames_.back().children.empty()) {
            throw FrontendError(FrontendErrorKind::ParseError, "empty compilation unit",
                                SourceSpan{1, 1, 1, 1});
        }
        return Node::universal(UniversalKind::CompilationUnit,
                               std::move(frames_.back().children));
    }

    /// Throws ParseError positioned at the offending token (or just past the last one).
    [[noreturn]] void fail(const std::string& message) const {
        if (const Token* t = peek()) {
            throw FrontendError(FrontendErrorKind::ParseError,
                                message + ", found '" + t->lexeme + "'", t->span);
        }
        SourceSpan at{1, 1, 1, 1};
        if (!tokens_.empty()) {
            const auto& last = tokens_.back().span;
            at = {last.endLine, last.endColumn + 1, last.endLine, last.endColumn + 1};
        }
        throw FrontendError(FrontendErrorKind::ParseError, message + ", found end of input", at);
    }

private:
    struct Frame {
        UniversalKind kind;
        std::vector<Node> children;
    };

    void flushComments() {
        const std::size_t stop = atEnd() ? tokens_.size() : code_[cursor_];
        auto& sink = frames_.back().children;
        for (; flushed_ < stop; ++flushed_) {
            const auto& t = tokens_[flushed_];
            sink.push_back(Node::concrete(t.lexeme, t.type, t.span));
        }
    }

    std::vector<Token> tokens_;
    std::vector<std::size_t> code_;
    std::size_t cursor_ = 0;
    std::size_t flushed_ = 0;
    std::vector<Frame> frames_;
};

} // namespace ecst::detail
