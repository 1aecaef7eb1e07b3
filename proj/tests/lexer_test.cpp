#include "ecst/frontend.hpp"

#include <gtest/gtest.h>

namespace ecst {
namespace {

struct Expected {
    std::string lexeme;
    TokenType type;
};

void expectTokens(const std::vector<Token>& actual, const std::vector<Expected>& expected) {
    ASSERT_EQ(actual.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(actual[i].lexeme, expected[i].lexeme) << "token " << i;
        EXPECT_EQ(actual[i].type, expected[i].type) << "token " << i;
    }
}

TEST(Lexer, EmptySourceYieldsNoTokens) {
    EXPECT_TRUE(lex("", "modula2").empty());
    EXPECT_TRUE(lex("", "javaoo").empty());
    EXPECT_TRUE(lex("  \n\t\r\n", "javaoo").empty());
}

TEST(Lexer, Modula2IfHeader) {
    const auto tokens = lex("IF a > b THEN", "modula2");
    expectTokens(tokens, {{"IF", TokenType::Keyword},
                          {"a", TokenType::Identifier},
                          {">", TokenType::Operator},
                          {"b", TokenType::Identifier},
                          {"THEN", TokenType::Keyword}});
    EXPECT_EQ(tokens[0].span, (SourceSpan{1, 1, 1, 2}));
    EXPECT_EQ(tokens[4].span, (SourceSpan{1, 10, 1, 13}));
}

TEST(Lexer, Modula2KeywordsAreCaseSensitive) {
    const auto tokens = lex("while While WHILE", "modula2");
    EXPECT_EQ(tokens[0].type, TokenType::Identifier);
    EXPECT_EQ(tokens[1].type, TokenType::Identifier);
    EXPECT_EQ(tokens[2].type, TokenType::Keyword);
}

TEST(Lexer, Modula2WordOperatorsAndRanges) {
    expectTokens(lex("x := a DIV 2 AND NOT b; [0..9]", "modula2"),
                 {{"x", TokenType::Identifier},
                  {":=", TokenType::Operator},
                  {"a", TokenType::Identifier},
                  {"DIV", TokenType::Operator},
                  {"2", TokenType::Literal},
                  {"AND", TokenType::Operator},
                  {"NOT", TokenType::Operator},
                  {"b", TokenType::Identifier},
                  {";", TokenType::Punctuation},
                  {"[", TokenType::Punctuation},
                  {"0", TokenType::Literal},
                  {"..", TokenType::Punctuation},
                  {"9", TokenType::Literal},
                  {"]", TokenType::Punctuation}});
}

TEST(Lexer, Modula2NestedMultilineComment) {
    const auto tokens = lex("x (* outer (* inner *)\n still *) y", "modula2");
    ASSERT_EQ(tokens.size(), 3u);
    EXPECT_EQ(tokens[1].type, TokenType::Comment);
    EXPECT_EQ(tokens[1].lexeme, "(* outer (* inner *)\n still *)");
    EXPECT_EQ(tokens[1].span, (SourceSpan{1, 3, 2, 9}));
    EXPECT_EQ(tokens[2].span, (SourceSpan{2, 11, 2, 11}));
}

TEST(Lexer, JavaDoWhile) {
    const auto tokens = lex("do { } while (x);", "javaoo");
    expectTokens(tokens, {{"do", TokenType::Keyword},
                          {"{", TokenType::Punctuation},
                          {"}", TokenType::Punctuation},
                          {"while", TokenType::Keyword},
                          {"(", TokenType::Punctuation},
                          {"x", TokenType::Identifier},
                          {")", TokenType::Punctuation},
                          {";", TokenType::Punctuation}});
}

TEST(Lexer, JavaOperatorsUseLongestMatch) {
    expectTokens(lex("a >>>= b && c++ <= --d || !e", "javaoo"),
                 {{"a", TokenType::Identifier},
                  {">>>=", TokenType::Operator},
                  {"b", TokenType::Identifier},
                  {"&&", TokenType::Operator},
                  {"c", TokenType::Identifier},
                  {"++", TokenType::Operator},
                  {"<=", TokenType::Operator},
                  {"--", TokenType::Operator},
                  {"d", TokenType::Identifier},
                  {"||", TokenType::Operator},
                  {"!", TokenType::Operator},
                  {"e", TokenType::Identifier}});
}

TEST(Lexer, JavaCommentsAndLiterals) {
    const auto tokens = lex("s = \"a // not a comment\"; // trailing\r\n/* block\n */ 'x' 1.5f true",
                            "javaoo");
    expectTokens(tokens, {{"s", TokenType::Identifier},
                          {"=", TokenType::Operator},
                          {"\"a // not a comment\"", TokenType::Literal},
                          {";", TokenType::Punctuation},
                          {"// trailing", TokenType::Comment},
                          {"/* block\n */", TokenType::Comment},
                          {"'x'", TokenType::Literal},
                          {"1.5f", TokenType::Literal},
                          {"true", TokenType::Literal}});
    EXPECT_EQ(tokens[5].span, (SourceSpan{2, 1, 3, 3}));
}

TEST(Lexer, UnrecognizedCharacterIsLexErrorWithSpan) {
    try {
        lex("x := 1;\n  y := `2", "modula2");
        FAIL() << "expected LexError";
    } catch (const FrontendError& e) {
        EXPECT_EQ(e.kind(), FrontendErrorKind::LexError);
        ASSERT_TRUE(e.span().has_value());
        EXPECT_EQ(e.span()->startLine, 2);
        EXPECT_EQ(e.span()->startColumn, 8);
    }
}

TEST(Lexer, UnterminatedCommentPointsAtItsStart) {
    try {
        lex("int x;\n  /* never closed", "javaoo");
        FAIL() << "expected LexError";
    } catch (const FrontendError& e) {
        EXPECT_EQ(e.kind(), FrontendErrorKind::LexError);
        EXPECT_EQ(e.span()->startLine, 2);
        EXPECT_EQ(e.span()->startColumn, 3);
    }
}

TEST(Lexer, ControlCharactersAreRejected) {
    EXPECT_THROW(lex("x\x01y", "javaoo"), FrontendError);
    EXPECT_THROW(lex("(* \x07 *)", "modula2"), FrontendError);
}

TEST(Lexer, UnknownLanguage) {
    EXPECT_THROW(lex("x", "cobol"), FrontendError);
}

TEST(Lexer, SpansAreSingleLineExceptBlockComments) {
    const auto tokens = lex("public class A {\n  int x = 1; /* a\n b */\n}\n", "javaoo");
    for (const auto& t : tokens) {
        if (t.type != TokenType::Comment) {
            EXPECT_EQ(t.span.startLine, t.span.endLine) << t.lexeme;
        }
        EXPECT_EQ(t.span.endColumn - t.span.startColumn + 1 == static_cast<int>(t.lexeme.size()),
                  t.span.startLine == t.span.endLine)
            << t.lexeme;
    }
}

} // namespace
} // namespace ecst
