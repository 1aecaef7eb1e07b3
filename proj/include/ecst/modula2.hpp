/**
 * @file modula2.hpp
 * @brief Recursive-descent frontend for a procedural Modula-2 subset.
 *
 * Supported: program modules or bare declaration sequences, imports,
 * CONST/TYPE/VAR sections, procedures (nested, with VAR parameters),
 * assignment, calls, IF/ELSIF/ELSE, WHILE, REPEAT, FOR, RETURN,
 * designators with indexing and field selection, (* nested *) comments.
 */

#pragma once

#include "ecst/lexer.hpp"
#include "ecst/parser_base.hpp"

#include <array>

namespace ecst::detail {

class Modula2Parser : public ParserBase {
public:
    explicit Modula2Parser(std::vector<Token> tokens) : ParserBase(std::move(tokens)) {}

    Node parse() {
        if (keyword("MODULE")) {
            programModule();
        } else {
            while (!atEnd()) {
                if (!declaration()) {
                    fail("expected a declaration");
                }
            }
        }
        return finish();
    }

private:
    void programModule() {
        expectKeyword("MODULE");
        const std::string name = expectIdentifier().lexeme;
        expectPunct(";");
        while (keyword("IMPORT") || keyword("FROM")) {
            importList();
        }
        block(name);
        expectPunct(".");
    }

    void importList() {
        if (accept(TokenType::Keyword, "FROM")) {
            expectIdentifier();
        }
        expectKeyword("IMPORT");
        identList();
        expectPunct(";");
    }

    /// Declarations, optional BEGIN part, END and the closing name.
    void block(const std::string& name) {
        while (declaration()) {
        }
        if (accept(TokenType::Keyword, "BEGIN")) {
            statementSequence();
        }
        expectKeyword("END");
        if (!checkType(TokenType::Identifier) || peek()->lexeme != name) {
            fail("expected closing name '" + name + "'");
        }
        consume();
    }

    bool declaration() {
        if (accept(TokenType::Keyword, "CONST")) {
            while (checkType(TokenType::Identifier)) {
                consume();
                expectOp("=");
                expression();
                expectPunct(";");
            }
        } else if (accept(TokenType::Keyword, "TYPE")) {
            while (checkType(TokenType::Identifier)) {
                consume();
                expectOp("=");
                type();
                expectPunct(";");
            }
        } else if (accept(TokenType::Keyword, "VAR")) {
            while (checkType(TokenType::Identifier)) {
                identList();
                expectPunct(":");
                type();
                expectPunct(";");
            }
        } else if (keyword("PROCEDURE")) {
            procedure();
        } else {
            return false;
        }
        return true;
    }

    void procedure() {
        open(UniversalKind::FunctionDecl);
        expectKeyword("PROCEDURE");
        const std::string name = expectIdentifier().lexeme;
        if (punct("(")) {
            formalParameters();
        }
        if (accept(TokenType::Punctuation, ":")) {
            qualident();
        }
        expectPunct(";");
        block(name);
        expectPunct(";");
        close();
    }

    void formalParameters() {
        expectPunct("(");
        if (!punct(")")) {
            do {
                accept(TokenType::Keyword, "VAR");
                identList();
                expectPunct(":");
                if (accept(TokenType::Keyword, "ARRAY")) {
                    expectKeyword("OF");
                }
                qualident();
            } while (accept(TokenType::Punctuation, ";"));
        }
        expectPunct(")");
    }

    void type() {
        if (accept(TokenType::Keyword, "ARRAY")) {
            do {
                simpleType();
            } while (accept(TokenType::Punctuation, ","));
            expectKeyword("OF");
            type();
        } else {
            simpleType();
        }
    }

    void simpleType() {
        if (accept(TokenType::Punctuation, "[")) {
            expression();
            expectPunct("..");
            expression();
            expectPunct("]");
        } else if (accept(TokenType::Punctuation, "(")) {
            identList();
            expectPunct(")");
        } else {
            qualident();
        }
    }

    void qualident() {
        expectIdentifier();
        while (punct(".") && checkType(TokenType::Identifier, 1)) {
            consume();
            consume();
        }
    }

    void identList() {
        expectIdentifier();
        while (accept(TokenType::Punctuation, ",")) {
            expectIdentifier();
        }
    }

    bool atSequenceEnd() const noexcept {
        return atEnd() || keyword("END") || keyword("ELSE") || keyword("ELSIF") ||
               keyword("UNTIL");
    }

    void statementSequence() {
        statement();
        while (accept(TokenType::Punctuation, ";")) {
            statement();
        }
    }

    void statement() {
        if (atSequenceEnd() || punct(";")) {
            return;
        }
        if (keyword("IF")) {
            ifStatement();
        } else if (keyword("WHILE")) {
            whileStatement();
        } else if (keyword("REPEAT")) {
            repeatStatement();
        } else if (keyword("FOR")) {
            forStatement();
        } else if (accept(TokenType::Keyword, "RETURN")) {
            if (!atSequenceEnd() && !punct(";")) {
                expression();
            }
        } else if (checkType(TokenType::Identifier)) {
            designator();
            if (accept(TokenType::Operator, ":=")) {
                expression();
            } else if (punct("(")) {
                actualParameters();
            }
        } else {
            fail("expected a statement");
        }
    }

    void condition() {
        open(UniversalKind::Condition);
        expression();
        close();
    }

    void ifStatement() {
        open(UniversalKind::BranchStatement);
        open(UniversalKind::Branch);
        expectKeyword("IF");
        condition();
        expectKeyword("THEN");
        statementSequence();
        close();
        while (keyword("ELSIF")) {
            open(UniversalKind::Branch);
            consume();
            condition();
            expectKeyword("THEN");
            statementSequence();
            close();
        }
        if (keyword("ELSE")) {
            open(UniversalKind::Branch);
            consume();
            statementSequence();
            close();
        }
        expectKeyword("END");
        close();
    }

    void whileStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("WHILE");
        condition();
        expectKeyword("DO");
        statementSequence();
        expectKeyword("END");
        close();
    }

    void repeatStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("REPEAT");
        statementSequence();
        expectKeyword("UNTIL");
        condition();
        close();
    }

    /// The TO bound is the loop's guard.
    void forStatement() {
        open(UniversalKind::LoopStatement);
        expectKeyword("FOR");
        expectIdentifier();
        expectOp(":=");
        expression();
        expectKeyword("TO");
        condition();
        if (accept(TokenType::Keyword, "BY")) {
            expression();
        }
        expectKeyword("DO");
        statementSequence();
        expectKeyword("END");
        close();
    }

    void designator() {
        expectIdentifier();
        while (true) {
            if (punct(".") && checkType(TokenType::Identifier, 1)) {
                consume();
                consume();
            } else if (accept(TokenType::Punctuation, "[")) {
                expressionList();
                expectPunct("]");
            } else if (!accept(TokenType::Operator, "^")) {
                return;
            }
        }
    }

    void actualParameters() {
        expectPunct("(");
        if (!punct(")")) {
            expressionList();
        }
        expectPunct(")");
    }

    void expressionList() {
        expression();
        while (accept(TokenType::Punctuation, ",")) {
            expression();
        }
    }

    static constexpr std::array<std::string_view, 16> kBinary = {
        "=", "#", "<>", "<", "<=", ">", ">=", "+", "-", "*", "/", "&", "DIV", "MOD", "AND", "OR"};

    bool atBinaryOperator() const noexcept {
        return checkType(TokenType::Operator) && contains(kBinary, peek()->lexeme);
    }

    void expression() {
        if (op("+") || op("-")) {
            consume();
        }
        factor();
        while (atBinaryOperator()) {
            consume();
            factor();
        }
    }

    void factor() {
        if (checkType(TokenType::Literal)) {
            consume();
        } else if (checkType(TokenType::Identifier)) {
            designator();
            if (punct("(")) {
                actualParameters();
            }
        } else if (accept(TokenType::Punctuation, "(")) {
            expression();
            expectPunct(")");
        } else if (op("NOT") || op("~") || op("-") || op("+")) {
            consume();
            factor();
        } else {
            fail("expected an expression");
        }
    }
};

} // namespace ecst::detail
