// Shared helpers for the test suites: corpus access, independent oracles,
// and a random structured-program generator for both language subsets.
//
// Nothing here calls into the metrics code; the oracles work on raw source
// text or serialized XML text.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecst::testing {

inline std::filesystem::path corpusDir() { return std::filesystem::path(ECST_CORPUS_DIR); }

inline std::string readText(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string readCorpus(std::string_view name) {
    return readText(corpusDir() / std::string(name));
}

inline const std::vector<std::string>& corpusFiles() {
    static const std::vector<std::string> files = {"QuickSort.mod",   "QuickSort.java",
                                                   "QuickSortWhile.java", "Statistics.mod",
                                                   "Search.java",     "Empty.mod"};
    return files;
}

inline std::string languageOf(std::string_view file) {
    return file.ends_with(".mod") ? "modula2" : "javaoo";
}

// ---------------------------------------------------------------------------
// Line-classification oracle over raw source text
// ---------------------------------------------------------------------------

struct LineClasses {
    int physical = 0;
    int code = 0;    // lines with a non-blank character outside comments
    int comment = 0; // lines with any character inside a comment
    int blank = 0;   // lines with neither
};

/// Character-level state machine; knows only the comment and string
/// delimiters of each language.
inline LineClasses classifyLines(std::string_view text, std::string_view language) {
    const bool modula = language == "modula2";
    std::vector<bool> code;
    std::vector<bool> comment;
    auto ensure = [&](std::size_t line) {
        if (code.size() <= line) {
            code.resize(line + 1, false);
            comment.resize(line + 1, false);
        }
    };
    std::size_t line = 0;
    int depth = 0;          // block comment nesting
    bool lineComment = false;
    char quote = 0;
    ensure(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const char next = i + 1 < text.size() ? text[i + 1] : '\0';
        if (c == '\n') {
            lineComment = false;
            ++line;
            if (i + 1 < text.size()) {
                ensure(line);
            }
            continue;
        }
        if (lineComment) {
            comment[line] = true;
            continue;
        }
        if (quote != 0) {
            code[line] = true;
            if (!modula && c == '\\') {
                ++i;
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (depth > 0) {
            comment[line] = true;
            if (modula && c == '(' && next == '*') {
                ++depth;
                ++i;
            } else if ((modula && c == '*' && next == ')') || (!modula && c == '*' && next == '/')) {
                --depth;
                ++i;
            }
            continue;
        }
        if (modula && c == '(' && next == '*') {
            depth = 1;
            comment[line] = true;
            ++i;
        } else if (!modula && c == '/' && next == '*') {
            depth = 1;
            comment[line] = true;
            ++i;
        } else if (!modula && c == '/' && next == '/') {
            lineComment = true;
            comment[line] = true;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
        } else {
            if (c == '"' || c == '\'') {
                quote = c;
            }
            code[line] = true;
        }
    }
    LineClasses out;
    out.physical = text.empty() ? 0 : static_cast<int>(code.size());
    for (std::size_t l = 0; l < code.size() && out.physical > 0; ++l) {
        out.code += code[l] ? 1 : 0;
        out.comment += comment[l] ? 1 : 0;
        out.blank += (!code[l] && !comment[l]) ? 1 : 0;
    }
    return out;
}

// ---------------------------------------------------------------------------
// XML-text oracle: per-<node> line extents read straight from the document
// ---------------------------------------------------------------------------

struct XmlNodeExtent {
    std::string kind;
    int startLine = 0;
    int endLine = 0;
    int codeLines = 0;
    int commentLines = 0;
};

/// Scans a serialized tree document line by line with regular expressions.
/// Returns one entry per <node>, in document order.
inline std::vector<XmlNodeExtent> scanTreeDocument(const std::string& document) {
    static const std::regex open(R"re(^\s*<node kind="([A-Z_]+)">\s*$)re");
    static const std::regex close(R"(^\s*</node>\s*$)");
    static const std::regex token(R"re(^\s*<token type="([a-z]+)" line="(\d+)" col="\d+" endLine="(\d+)" endCol="\d+">)re");
    struct Open {
        std::size_t index;
        std::map<int, bool> code;
        std::map<int, bool> comment;
    };
    std::vector<XmlNodeExtent> out;
    std::vector<Open> stack;
    std::istringstream in(document);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (std::regex_search(line, m, open)) {
            out.push_back({m[1].str(), 0, 0, 0, 0});
            stack.push_back({out.size() - 1, {}, {}});
        } else if (std::regex_search(line, m, close)) {
            auto done = std::move(stack.back());
            stack.pop_back();
            auto& extent = out[done.index];
            extent.codeLines = static_cast<int>(done.code.size());
            extent.commentLines = static_cast<int>(done.comment.size());
            if (!stack.empty()) {
                stack.back().code.insert(done.code.begin(), done.code.end());
                stack.back().comment.insert(done.comment.begin(), done.comment.end());
                auto& parent = out[stack.back().index];
                parent.startLine = parent.startLine == 0 ? extent.startLine
                                                         : std::min(parent.startLine, extent.startLine);
                parent.endLine = std::max(parent.endLine, extent.endLine);
            }
        } else if (std::regex_search(line, m, token)) {
            const int from = std::stoi(m[2].str());
            const int to = std::stoi(m[3].str());
            auto& top = stack.back();
            auto& extent = out[top.index];
            extent.startLine = extent.startLine == 0 ? from : std::min(extent.startLine, from);
            extent.endLine = std::max(extent.endLine, to);
            for (int l = from; l <= to; ++l) {
                (m[1].str() == "comment" ? top.comment : top.code)[l] = true;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random structured programs
// ---------------------------------------------------------------------------

/// Language-neutral statement shape, rendered into either subset.
struct Stmt {
    enum class Kind { Simple, While, PostTest, For, If };
    Kind kind = Kind::Simple;
    std::vector<Stmt> body;                // loops and the IF arm
    std::vector<std::vector<Stmt>> elifs;  // ELSIF / else if arms
    bool hasElse = false;
    std::vector<Stmt> elseBody;
    bool commented = false;
};

struct Unit {
    std::string name;
    std::vector<Stmt> body;
};

/// Loops plus condition-bearing arms; the brute-force expectation.
inline int countDecisions(const std::vector<Stmt>& stmts) {
    int n = 0;
    for (const auto& s : stmts) {
        switch (s.kind) {
        case Stmt::Kind::Simple: break;
        case Stmt::Kind::While:
        case Stmt::Kind::PostTest:
        case Stmt::Kind::For: n += 1 + countDecisions(s.body); break;
        case Stmt::Kind::If:
            n += 1 + static_cast<int>(s.elifs.size()) + countDecisions(s.body) +
                 countDecisions(s.elseBody);
            for (const auto& arm : s.elifs) {
                n += countDecisions(arm);
            }
            break;
        }
    }
    return n;
}

class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint32_t seed) : rng_(seed) {}

    std::vector<Unit> units() {
        std::vector<Unit> out;
        const int count = pick(1, 3);
        for (int i = 0; i < count; ++i) {
            out.push_back({"Unit" + std::to_string(i), block(0)});
        }
        return out;
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::vector<Stmt> block(int depth) {
        std::vector<Stmt> out;
        const int count = pick(depth == 0 ? 1 : 0, 3);
        for (int i = 0; i < count; ++i) {
            out.push_back(statement(depth));
        }
        return out;
    }

    Stmt statement(int depth) {
        Stmt s;
        s.commented = pick(0, 5) == 0;
        if (depth >= 5 || pick(0, 3) == 0) {
            return s;
        }
        s.kind = static_cast<Stmt::Kind>(pick(1, 4));
        s.body = block(depth + 1);
        if (s.kind == Stmt::Kind::If) {
            const int elifs = pick(0, 2);
            for (int i = 0; i < elifs; ++i) {
                s.elifs.push_back(block(depth + 1));
            }
            s.hasElse = pick(0, 1) == 1;
            if (s.hasElse) {
                s.elseBody = block(depth + 1);
            }
        }
        return s;
    }

    std::mt19937 rng_;
};

namespace detail {

inline std::string pad(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

inline void renderModula(std::ostringstream& out, const std::vector<Stmt>& stmts, int depth) {
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        const auto& s = stmts[i];
        if (s.commented) {
            out << pad(depth) << "(* step *)\n";
        }
        switch (s.kind) {
        case Stmt::Kind::Simple: out << pad(depth) << "x := x + 1"; break;
        case Stmt::Kind::While:
            out << pad(depth) << "WHILE x < 10 DO\n";
            renderModula(out, s.body, depth + 1);
            out << pad(depth) << "END";
            break;
        case Stmt::Kind::PostTest:
            out << pad(depth) << "REPEAT\n";
            renderModula(out, s.body, depth + 1);
            out << pad(depth) << "UNTIL (x > 3) AND (y # 0)";
            break;
        case Stmt::Kind::For:
            out << pad(depth) << "FOR i := 1 TO n DO\n";
            renderModula(out, s.body, depth + 1);
            out << pad(depth) << "END";
            break;
        case Stmt::Kind::If:
            out << pad(depth) << "IF x = 1 THEN\n";
            renderModula(out, s.body, depth + 1);
            for (const auto& arm : s.elifs) {
                out << pad(depth) << "ELSIF x > y THEN\n";
                renderModula(out, arm, depth + 1);
            }
            if (s.hasElse) {
                out << pad(depth) << "ELSE\n";
                renderModula(out, s.elseBody, depth + 1);
            }
            out << pad(depth) << "END";
            break;
        }
        out << (i + 1 < stmts.size() ? ";\n" : "\n");
    }
}

inline void renderJava(std::ostringstream& out, const std::vector<Stmt>& stmts, int depth,
                       bool doWhileAsWhile) {
    for (const auto& s : stmts) {
        if (s.commented) {
            out << pad(depth) << "// step\n";
        }
        switch (s.kind) {
        case Stmt::Kind::Simple: out << pad(depth) << "x = x + 1;\n"; break;
        case Stmt::Kind::While:
            out << pad(depth) << "while (x < 10) {\n";
            renderJava(out, s.body, depth + 1, doWhileAsWhile);
            out << pad(depth) << "}\n";
            break;
        case Stmt::Kind::PostTest:
            if (doWhileAsWhile) {
                out << pad(depth) << "while (x <= 3 || y == 0) {\n";
                renderJava(out, s.body, depth + 1, doWhileAsWhile);
                out << pad(depth) << "}\n";
            } else {
                out << pad(depth) << "do {\n";
                renderJava(out, s.body, depth + 1, doWhileAsWhile);
                out << pad(depth) << "} while (x <= 3 || y == 0);\n";
            }
            break;
        case Stmt::Kind::For:
            out << pad(depth) << "for (int i = 1; i <= n; i++) {\n";
            renderJava(out, s.body, depth + 1, doWhileAsWhile);
            out << pad(depth) << "}\n";
            break;
        case Stmt::Kind::If:
            out << pad(depth) << "if (x == 1) {\n";
            renderJava(out, s.body, depth + 1, doWhileAsWhile);
            for (const auto& arm : s.elifs) {
                out << pad(depth) << "} else if (x > y) {\n";
                renderJava(out, arm, depth + 1, doWhileAsWhile);
            }
            if (s.hasElse) {
                out << pad(depth) << "} else {\n";
                renderJava(out, s.elseBody, depth + 1, doWhileAsWhile);
            }
            out << pad(depth) << "}\n";
            break;
        }
    }
}

} // namespace detail

inline std::string renderModula(const std::vector<Unit>& units) {
    std::ostringstream out;
    out << "MODULE Generated;\n\nVAR x, y, i, n : INTEGER;\n\n";
    for (const auto& unit : units) {
        out << "PROCEDURE " << unit.name << "(VAR a : INTEGER);\nBEGIN\n";
        detail::renderModula(out, unit.body, 1);
        out << "END " << unit.name << ";\n\n";
    }
    out << "BEGIN\n  x := 0\nEND Generated.\n";
    return out.str();
}

inline std::string renderJava(const std::vector<Unit>& units, bool doWhileAsWhile = false) {
    std::ostringstream out;
    out << "public class Generated {\n    static int x, y, n;\n\n";
    for (const auto& unit : units) {
        out << "    public static void " << unit.name << "(int a) {\n";
        detail::renderJava(out, unit.body, 3, doWhileAsWhile);
        out << "    }\n\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace ecst::testing
