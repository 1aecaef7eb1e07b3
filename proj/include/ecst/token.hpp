#pragma once

#include "ecst/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ecst {

/// Scanner output. Only block comments may span several lines.
struct Token {
    std::string lexeme;
    TokenType type = TokenType::Identifier;
    SourceSpan span;

    bool is(TokenType t, std::string_view text) const noexcept {
        return type == t && lexeme == text;
    }

    friend bool operator==(const Token&, const Token&) = default;
};

enum class FrontendErrorKind { UnknownExtension, LexError, ParseError, IoError };

constexpr std::string_view toString(FrontendErrorKind kind) noexcept {
    switch (kind) {
    case FrontendErrorKind::UnknownExtension: return "unknown extension";
    case FrontendErrorKind::LexError: return "lex error";
    case FrontendErrorKind::ParseError: return "parse error";
    case FrontendErrorKind::IoError: return "i/o error";
    }
    return "";
}

/// Failure while detecting, reading, scanning or parsing a source file.
class FrontendError : public std::runtime_error {
public:
    FrontendError(FrontendErrorKind kind, std::string message,
                  std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(format(kind, message, span)),
          kind_(kind),
          message_(std::move(message)),
          span_(span) {}

    FrontendErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }
    const std::optional<SourceSpan>& span() const noexcept { return span_; }

private:
    static std::string format(FrontendErrorKind kind, const std::string& message,
                              const std::optional<SourceSpan>& span) {
        std::string out(toString(kind));
        if (span) {
            out += " at " + std::to_string(span->startLine) + ":" +
                   std::to_string(span->startColumn);
        }
        return out + ": " + message;
    }

    FrontendErrorKind kind_;
    std::string message_;
    std::optional<SourceSpan> span_;
};

} // namespace ecst
