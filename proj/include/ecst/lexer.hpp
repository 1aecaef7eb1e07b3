/**
 * @file lexer.hpp
 * @brief Hand-written scanners for the Modula-2 and Java subsets.
 *
 * Whitespace is dropped; comments are kept as tokens so the tree can
 * account for comment lines.
 */

#pragma once

#include "ecst/token.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ecst {

namespace detail {

/// Character cursor that tracks 1-based line/column positions.
class Scanner {
public:
    explicit Scanner(std::string_view source) : source_(source) {}

    bool atEnd() const noexcept { return pos_ >= source_.size(); }
    char peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < source_.size() ? source_[pos_ + ahead] : '\0';
    }
    bool startsWith(std::string_view text) const noexcept {
        return source_.substr(pos_, text.size()) == text;
    }

    void advance() noexcept {
        lastLine_ = line_;
        lastColumn_ = column_;
        if (source_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
    void advance(std::size_t n) noexcept {
        for (std::size_t i = 0; i < n; ++i) {
            advance();
        }
    }

    void mark() noexcept {
        startPos_ = pos_;
        startLine_ = line_;
        startColumn_ = column_;
    }

    /// Token covering everything consumed since the last mark().
    Token take(TokenType type) const {
        return Token{std::string(source_.substr(startPos_, pos_ - startPos_)), type,
                     SourceSpan{startLine_, startColumn_, lastLine_, lastColumn_}};
    }

    SourceSpan here() const noexcept { return {line_, column_, line_, column_}; }
    SourceSpan markSpan() const noexcept {
        return {startLine_, startColumn_, startLine_, startColumn_};
    }

    [[noreturn]] void fail(const std::string& message, SourceSpan at) const {
        throw FrontendError(FrontendErrorKind::LexError, message, at);
    }

    void skipWhitespace() noexcept {
        while (!atEnd()) {
            const char c = peek();
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
                return;
            }
            advance();
        }
    }

    /// Control characters other than tab, CR and LF cannot be stored in XML.
    static void rejectControlCharacters(std::string_view source) {
        int line = 1;
        int column = 1;
        for (char c : source) {
            if (c == '\n') {
                ++line;
                column = 1;
                continue;
            }
            if ((static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\r') || c == 0x7f) {
                throw FrontendError(FrontendErrorKind::LexError, "unexpected control character",
                                    SourceSpan{line, column, line, column});
            }
            ++column;
        }
    }

private:
    std::string_view source_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int lastLine_ = 1;
    int lastColumn_ = 1;
    std::size_t startPos_ = 0;
    int startLine_ = 1;
    int startColumn_ = 1;
};

inline bool isAlpha(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool isDigit(char c) noexcept { return c >= '0' && c <= '9'; }

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view text) noexcept {
    for (auto item : set) {
        if (item == text) {
            return true;
        }
    }
    return false;
}

/// Longest entry of @p set (ordered longest first) matching at the cursor.
template <std::size_t N>
std::string_view matchSymbol(const Scanner& s, const std::array<std::string_view, N>& set) {
    for (auto symbol : set) {
        if (s.startsWith(symbol)) {
            return symbol;
        }
    }
    return {};
}

inline void scanQuoted(Scanner& s, char quote, bool allowEscapes, std::string_view what) {
    s.advance();
    while (true) {
        if (s.atEnd() || s.peek() == '\n') {
            s.fail("unterminated " + std::string(what), s.markSpan());
        }
        const char c = s.peek();
        if (allowEscapes && c == '\\') {
            s.advance();
            if (s.atEnd() || s.peek() == '\n') {
                s.fail("unterminated " + std::string(what), s.markSpan());
            }
            s.advance();
            continue;
        }
        s.advance();
        if (c == quote) {
            return;
        }
    }
}

inline constexpr std::array<std::string_view, 26> kModula2Keywords = {
    "MODULE", "PROCEDURE", "BEGIN", "END",    "IF",    "THEN",   "ELSIF",
    "ELSE",   "WHILE",     "DO",    "REPEAT", "UNTIL", "FOR",    "TO",
    "BY",     "VAR",       "CONST", "TYPE",   "ARRAY", "OF",     "RETURN",
    "IMPORT", "FROM",      "EXIT",  "LOOP",   "RECORD"};

inline constexpr std::array<std::string_view, 5> kModula2WordOperators = {"AND", "OR", "NOT",
                                                                          "DIV", "MOD"};

inline constexpr std::array<std::string_view, 15> kModula2Operators = {
    ":=", "<=", ">=", "<>", "+", "-", "*", "/", "=", "#", "<", ">", "&", "~", "^"};

inline constexpr std::array<std::string_view, 12> kModula2Punctuation = {
    "..", ".", ",", ";", ":", "(", ")", "[", "]", "{", "}", "|"};

inline constexpr std::array<std::string_view, 36> kJavaKeywords = {
    "class",   "public",   "private", "protected", "static", "final",   "abstract",
    "void",    "int",      "long",    "short",     "byte",   "char",    "boolean",
    "double",  "float",    "if",      "else",      "while",  "do",      "for",
    "return",  "new",      "break",   "continue",  "this",   "import",  "package",
    "extends", "implements", "throws", "throw",    "try",    "catch",   "finally",
    "switch"};

inline constexpr std::array<std::string_view, 3> kJavaWordLiterals = {"true", "false", "null"};

inline constexpr std::array<std::string_view, 37> kJavaOperators = {
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",   "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<", ">>", "+",  "-",  "*",  "/",
    "%",    "=",   "<",   ">",   "!",  "~",  "&",  "|",  "^",  "?",  ":"};

inline constexpr std::array<std::string_view, 9> kJavaPunctuation = {"(", ")", "{", "}", "[",
                                                                     "]", ";", ",", "."};

inline std::vector<Token> lexModula2(std::string_view source) {
    Scanner::rejectControlCharacters(source);
    Scanner s(source);
    std::vector<Token> tokens;
    while (true) {
        s.skipWhitespace();
        if (s.atEnd()) {
            break;
        }
        s.mark();
        const char c = s.peek();
        if (s.startsWith("(*")) {
            int depth = 0;
            do {
                if (s.atEnd()) {
                    s.fail("unterminated comment", s.markSpan());
                }
                if (s.startsWith("(*")) {
                    ++depth;
                    s.advance(2);
                } else if (s.startsWith("*)")) {
                    --depth;
                    s.advance(2);
                } else {
                    s.advance();
                }
            } while (depth > 0);
            tokens.push_back(s.take(TokenType::Comment));
        } else if (isAlpha(c)) {
            while (isAlpha(s.peek()) || isDigit(s.peek()) || s.peek() == '_') {
                s.advance();
            }
            auto token = s.take(TokenType::Identifier);
            if (contains(kModula2Keywords, token.lexeme)) {
                token.type = TokenType::Keyword;
            } else if (contains(kModula2WordOperators, token.lexeme)) {
                token.type = TokenType::Operator;
            }
            tokens.push_back(std::move(token));
        } else if (isDigit(c)) {
            while (isDigit(s.peek())) {
                s.advance();
            }
            if (s.peek() == '.' && isDigit(s.peek(1))) {
                s.advance();
                while (isDigit(s.peek())) {
                    s.advance();
                }
            }
            tokens.push_back(s.take(TokenType::Literal));
        } else if (c == '\'' || c == '"') {
            scanQuoted(s, c, false, "string");
            tokens.push_back(s.take(TokenType::Literal));
        } else if (auto op = matchSymbol(s, kModula2Operators); !op.empty()) {
            s.advance(op.size());
            tokens.push_back(s.take(TokenType::Operator));
        } else if (auto punct = matchSymbol(s, kModula2Punctuation); !punct.empty()) {
            s.advance(punct.size());
            tokens.push_back(s.take(TokenType::Punctuation));
        } else {
            s.fail(std::string("unexpected character '") + c + "'", s.here());
        }
    }
    return tokens;
}

inline std::vector<Token> lexJava(std::string_view source) {
    Scanner::rejectControlCharacters(source);
    Scanner s(source);
    std::vector<Token> tokens;
    auto identStart = [](char ch) { return isAlpha(ch) || ch == '_' || ch == '$'; };
    while (true) {
        s.skipWhitespace();
        if (s.atEnd()) {
            break;
        }
        s.mark();
        const char c = s.peek();
        if (s.startsWith("//")) {
            while (!s.atEnd() && s.peek() != '\n' && s.peek() != '\r') {
                s.advance();
            }
            tokens.push_back(s.take(TokenType::Comment));
        } else if (s.startsWith("/*")) {
            s.advance(2);
            while (!s.startsWith("*/")) {
                if (s.atEnd()) {
                    s.fail("unterminated comment", s.markSpan());
                }
                s.advance();
            }
            s.advance(2);
            tokens.push_back(s.take(TokenType::Comment));
        } else if (identStart(c)) {
            while (identStart(s.peek()) || isDigit(s.peek())) {
                s.advance();
            }
            auto token = s.take(TokenType::Identifier);
            if (contains(kJavaKeywords, token.lexeme)) {
                token.type = TokenType::Keyword;
            } else if (contains(kJavaWordLiterals, token.lexeme)) {
                token.type = TokenType::Literal;
            }
            tokens.push_back(std::move(token));
        } else if (isDigit(c) || (c == '.' && isDigit(s.peek(1)))) {
            if (s.startsWith("0x") || s.startsWith("0X")) {
                s.advance(2);
            }
            while (isDigit(s.peek()) || isAlpha(s.peek()) || s.peek() == '_' ||
                   (s.peek() == '.' && isDigit(s.peek(1)))) {
                s.advance();
            }
            tokens.push_back(s.take(TokenType::Literal));
        } else if (c == '"') {
            scanQuoted(s, '"', true, "string literal");
            tokens.push_back(s.take(TokenType::Literal));
        } else if (c == '\'') {
            scanQuoted(s, '\'', true, "character literal");
            tokens.push_back(s.take(TokenType::Literal));
        } else if (auto op = matchSymbol(s, kJavaOperators); !op.empty()) {
            s.advance(op.size());
            tokens.push_back(s.take(TokenType::Operator));
        } else if (auto punct = matchSymbol(s, kJavaPunctuation); !punct.empty()) {
            s.advance(punct.size());
            tokens.push_back(s.take(TokenType::Punctuation));
        } else {
            s.fail(std::string("unexpected character '") + c + "'", s.here());
        }
    }
    return tokens;
}

} // namespace detail

} // namespace ecst
