/**
 * @file java.hpp
 * @brief Recursive-descent frontend for an object-oriented Java subset.
 *
 * Supported: package/import headers, (nested) classes, fields, methods and
 * constructors, local variables, if/else chains, while, do-while, for and
 * for-each loops, return/break/continue, and the usual expression forms
 * (calls, indexing, new, ++/--, ternaries, compound assignment).
 * Generics, lambdas, switch and exceptions are outside the subset.
 */

#pragma once

#include "ecst/lexer.hpp"
#include "ecst/parser_base.hpp"

#include <array>

namespace ecst::detail {

class JavaParser : public ParserBase {
public:
    explicit JavaParser(std::vector<Token> tokens) : ParserBase(std::move(tokens)) {}

    Node parse() {
        if (accept(TokenType::Keyword, "package")) {
            qualifiedName();
            expectPunct(";");
        }
        while (accept(TokenType::Keyword, "import")) {
            accept(TokenType::Keyword, "static");
            qualifiedName();
            if (accept(TokenType::Punctuation, ".")) {
                expectOp("*");
            }
            expectPunct(";");
        }
        while (!atEnd()) {
            if (accept(TokenType::Punctuation, ";")) {
                continue;
            }
            modifiers();
            classDeclaration();
        }
        return finish();
    }

private:
    static constexpr std::array<std::string_view, 6> kModifiers = {
        "public", "private", "protected", "static", "final", "abstract"};
    static constexpr std::array<std::string_view, 9> kPrimitives = {
        "void", "int", "long", "short", "byte", "char", "boolean", "double", "float"};

    bool isModifier(std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->type == TokenType::Keyword && contains(kModifiers, t->lexeme);
    }
    bool isPrimitive(std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->type == TokenType::Keyword && contains(kPrimitives, t->lexeme);
    }

    void modifiers() {
        while (isModifier()) {
            consume();
        }
    }

    void qualifiedName() {
        expectIdentifier();
        while (punct(".") && checkType(TokenType::Identifier, 1)) {
            consume();
            consume();
        }
    }

    void classDeclaration() {
        expectKeyword("class");
        expectIdentifier();
        if (accept(TokenType::Keyword, "extends")) {
            typeRef();
        }
        if (accept(TokenType::Keyword, "implements")) {
            do {
                typeRef();
            } while (accept(TokenType::Punctuation, ","));
        }
        classBody();
    }

    void classBody() {
        expectPunct("{");
        while (!punct("}")) {
            if (atEnd()) {
                fail("expected '}'");
            }
            member();
        }
        expectPunct("}");
    }

    /// Length of the type starting @p ahead tokens from the cursor, or 0.
    std::size_t typeLength(std::size_t ahead) const noexcept {
        std::size_t k = ahead;
        if (isPrimitive(k)) {
            ++k;
        } else if (checkType(TokenType::Identifier, k)) {
            ++k;
            while (punct(".", k) && checkType(TokenType::Identifier, k + 1)) {
                k += 2;
            }
        } else {
            return 0;
        }
        while (punct("[", k) && punct("]", k + 1)) {
            k += 2;
        }
        return k - ahead;
    }

    void member() {
        if (accept(TokenType::Punctuation, ";")) {
            return;
        }
        std::size_t k = 0;
        while (isModifier(k)) {
            ++k;
        }
        if (keyword("class", k)) {
            modifiers();
            classDeclaration();
            return;
        }
        const bool constructor = checkType(TokenType::Identifier, k) && punct("(", k + 1);
        const std::size_t typeLen = typeLength(k);
        const bool method =
            constructor || (typeLen > 0 && checkType(TokenType::Identifier, k + typeLen) &&
                            punct("(", k + typeLen + 1));
        if (method) {
            methodDeclaration(constructor);
            return;
        }
        modifiers();
        typeRef();
        variableDeclarators();
        expectPunct(";");
    }

    void methodDeclaration(bool constructor) {
        open(UniversalKind::FunctionDecl);
        modifiers();
        if (!constructor) {
            typeRef();
        }
        expectIdentifier();
        expectPunct("(");
        if (!punct(")")) {
            do {
                accept(TokenType::Keyword, "final");
                typeRef();
                expectIdentifier();
                dims();
            } while (accept(TokenType::Punctuation, ","));
        }
        expectPunct(")");
        if (accept(TokenType::Keyword, "throws")) {
            do {
                typeRef();
            } while (accept(TokenType::Punctuation, ","));
        }
        if (!accept(TokenType::Punctuation, ";")) {
            block();
        }
        close();
    }

    void typeRef() {
        if (isPrimitive()) {
            consume();
        } else {
            qualifiedName();
        }
        dims();
    }

    void dims() {
        while (punct("[") && punct("]", 1)) {
            consume();
            consume();
        }
    }

    void variableDeclarators() {
        do {
            expectIdentifier();
            dims();
            if (accept(TokenType::Operator, "=")) {
                variableInitializer();
            }
        } while (accept(TokenType::Punctuation, ","));
    }

    void variableInitializer() {
        if (punct("{")) {
            arrayInitializer();
        } else {
            expression();
        }
    }

    void arrayInitializer() {
        expectPunct("{");
        while (!punct("}")) {
            variableInitializer();
            if (!accept(TokenType::Punctuation, ",")) {
                break;
            }
        }
        expectPunct("}");
    }

    void block() {
        expectPunct("{");
        while (!punct("}")) {
            if (atEnd()) {
                fail("expected '}'");
            }
            blockStatement();
        }
        expectPunct("}");
    }

    bool localVariableAhead() const noexcept {
        std::size_t k = keyword("final") ? 1 : 0;
        const std::size_t len = typeLength(k);
        return len > 0 && checkType(TokenType::Identifier, k + len);
    }

    void localVariableDeclaration() {
        accept(TokenType::Keyword, "final");
        typeRef();
        variableDeclarators();
    }

    void blockStatement() {
        if (localVariableAhead()) {
            localVariableDeclaration();
            expectPunct(";");
        } else {
            statement();
        }
    }

    void statement() {
        if (punct("{")) {
            block();
        } else if (accept(TokenType::Punctuation, ";")) {
        } else if (keyword("if")) {
            ifStatement();
        } else if (keyword("while")) {
            whileStatement();
        } else if (keyword("do")) {
            doStatement();
        } else if (keyword("for")) {
            forStatement();
        } else if (accept(TokenType::Keyword, "return")) {
            if (!punct(";")) {
                expression();
            }
            expectPunct(";");
        } else if (keyword("break") || keyword("continue")) {
            consume();
            expectPunct(";");
        } else {
            expression();
            expectPunct(";");
        }
    }

    void condition() {
        open(UniversalKind::Condition);
        expression();
        close();
    }

    void parenthesizedCondition() {
        expectPunct("(");
        condition();
        expectPunct(")");
    }

    /// An `else if` continues the chain instead of nesting a new one.
    void ifStatement() {
        open(UniversalKind::BranchStatement);
        open(UniversalKind::Branch);
        expectKeyword("if");
        parenthesizedCondition();
        statement();
        close();
        while (keyword("else")) {
            open(UniversalKind::Branch);
            consume();
            if (accept(TokenType::Keyword, "if")) {
                parenthesizedCondition();
                statement();
                close();
                continue;
            }
            statement();
            close();
            break;
        }
        close();
    }

    void whileStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("while");
        parenthesizedCondition();
        statement();
        close();
    }

    /// The trailing `while` belongs to this loop; it does not start another one.
    void doStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("do");
        statement();
        expectKeyword("while");
        parenthesizedCondition();
        expectPunct(";");
        close();
    }

    void forStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("for");
        expectPunct("(");
        if (localVariableAhead()) {
            accept(TokenType::Keyword, "final");
            typeRef();
            expectIdentifier();
            dims();
            if (accept(TokenType::Operator, ":")) {
                expression();
                expectPunct(")");
                statement();
                close();
                return;
            }
            if (accept(TokenType::Operator, "=")) {
                variableInitializer();
            }
            if (accept(TokenType::Punctuation, ",")) {
                variableDeclarators();
            }
        } else if (!punct(";")) {
            expressionList();
        }
        expectPunct(";");
        if (!punct(";")) {
            condition();
        }
        expectPunct(";");
        if (!punct(")")) {
            expressionList();
        }
        expectPunct(")");
        statement();
        close();
    }

    void expressionList() {
        expression();
        while (accept(TokenType::Punctuation, ",")) {
            expression();
        }
    }

    static constexpr std::array<std::string_view, 31> kBinary = {
        "=",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
        ">>>=", "||", "&&", "|", "^",  "&",  "==", "!=", "<",  ">",   "<=",
        ">=", "<<", ">>", ">>>", "+", "-",  "*",  "/",  "%"};

    bool atBinaryOperator() const noexcept {
        return checkType(TokenType::Operator) && contains(kBinary, peek()->lexeme);
    }

    void expression() {
        unary();
        while (true) {
            if (atBinaryOperator()) {
                consume();
                unary();
            } else if (accept(TokenType::Operator, "?")) {
                expression();
                expectOp(":");
                unary();
            } else {
                return;
            }
        }
    }

    void unary() {
        if (op("+") || op("-") || op("!") || op("~") || op("++") || op("--")) {
            consume();
            unary();
            return;
        }
        if (punct("(") && isPrimitive(1) && typeLength(1) > 0 && punct(")", 1 + typeLength(1))) {
            consume();
            typeRef();
            expectPunct(")");
            unary();
            return;
        }
        primary();
        postfix();
    }

    void primary() {
        if (checkType(TokenType::Literal) || checkType(TokenType::Identifier) ||
            keyword("this")) {
            consume();
        } else if (accept(TokenType::Punctuation, "(")) {
            expression();
            expectPunct(")");
        } else if (accept(TokenType::Keyword, "new")) {
            if (isPrimitive()) {
                consume();
            } else {
                qualifiedName();
            }
            if (punct("(")) {
                arguments();
            } else if (punct("[")) {
                while (punct("[") && !punct("]", 1)) {
                    consume();
                    expression();
                    expectPunct("]");
                }
                dims();
                if (punct("{")) {
                    arrayInitializer();
                }
            } else {
                fail("expected '(' or '[' after new");
            }
        } else {
            fail("expected an expression");
        }
    }

    void postfix() {
        while (true) {
            if (punct(".") && (checkType(TokenType::Identifier, 1))) {
                consume();
                consume();
            } else if (punct("(")) {
                arguments();
            } else if (accept(TokenType::Punctuation, "[")) {
                expression();
                expectPunct("]");
            } else if (op("++") || op("--")) {
                consume();
            } else {
                return;
            }
        }
    }

    void arguments() {
        expectPunct("(");
        if (!punct(")")) {
            expressionList();
        }
        expectPunct(")");
    }
};

} // namespace ecst::detail
