/**
 * @file frontend.hpp
 * @brief Language dispatch: source text -> tokens -> eCST.
 */

#pragma once

#include "ecst/java.hpp"
#include "ecst/lexer.hpp"
#include "ecst/modula2.hpp"
#include "ecst/registry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ecst {

inline constexpr std::string_view kModula2 = "modula2";
inline constexpr std::string_view kJava = "javaoo";

inline bool isSupportedLanguage(std::string_view languageId) noexcept {
    return languageId == kModula2 || languageId == kJava;
}

namespace detail {
[[noreturn]] inline void unsupported(std::string_view languageId) {
    throw FrontendError(FrontendErrorKind::UnknownExtension,
                        "no frontend for language '" + std::string(languageId) + "'");
}
} // namespace detail

/// Physical line count: newline characters plus an unterminated last line.
inline int countPhysicalLines(std::string_view source) noexcept {
    int lines = 0;
    for (char c : source) {
        if (c == '\n') {
            ++lines;
        }
    }
    if (!source.empty() && source.back() != '\n') {
        ++lines;
    }
    return lines;
}

/// Tokens in source order, comments included, whitespace dropped.
inline std::vector<Token> lex(std::string_view source, std::string_view languageId) {
    if (languageId == kModula2) {
        return detail::lexModula2(source);
    }
    if (languageId == kJava) {
        return detail::lexJava(source);
    }
    detail::unsupported(languageId);
}

/**
 * @brief Builds the eCST for one compilation unit.
 *
 * @p totalLines of 0 means "up to the last token", which undercounts files
 * that end in blank lines; prefer parseSource() when the text is at hand.
 */
inline Tree parse(std::vector<Token> tokens, std::string_view languageId,
                  std::string sourcePath = {}, int totalLines = 0) {
    if (!isSupportedLanguage(languageId)) {
        detail::unsupported(languageId);
    }
    const int lastTokenLine = tokens.empty() ? 1 : tokens.back().span.endLine;
    Node root = languageId == kModula2 ? detail::Modula2Parser(std::move(tokens)).parse()
                                       : detail::JavaParser(std::move(tokens)).parse();
    return Tree(std::move(root), std::move(sourcePath), std::string(languageId),
                totalLines > 0 ? totalLines : lastTokenLine);
}

inline Tree parseSource(std::string_view source, std::string_view languageId,
                        std::string sourcePath = {}) {
    return parse(lex(source, languageId), languageId, std::move(sourcePath),
                 countPhysicalLines(source));
}

inline std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FrontendError(FrontendErrorKind::IoError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Detects the language from the extension, then reads and parses the file.
inline Tree parseFile(const std::filesystem::path& path, const LanguageRegistry& registry) {
    const auto languageId = detectLanguage(path, registry);
    if (!isSupportedLanguage(languageId)) {
        detail::unsupported(languageId);
    }
    return parseSource(readFile(path), languageId, path.generic_string());
}

} // namespace ecst
