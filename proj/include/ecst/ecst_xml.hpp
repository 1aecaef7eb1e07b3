/**
 * @file ecst_xml.hpp
 * @brief XML interchange for eCSTs and metric reports.
 *
 * Tree documents:
 * @code
 * <ecst source="PATH" language="LANGUAGE_ID" totalLines="N">
 *   <node kind="COMPILATION_UNIT">
 *     <token type="keyword" line="1" col="1" endLine="1" endCol="6">MODULE</token>
 *     ...
 *   </node>
 * </ecst>
 * @endcode
 *
 * Only tokens carry positions; marker spans are derived again on load.
 * Output is byte-deterministic: fixed attribute order, two-space indent,
 * LF line endings.
 */

#pragma once

#include "ecst/core.hpp"
#include "ecst/metrics.hpp"
#include "ecst/xml_dom.hpp"

#include <charconv>
#include <string>
#include <string_view>

namespace ecst {

/// Well-formed or not, the document is not a valid eCST document.
class XmlSchemaError : public std::runtime_error {
public:
    XmlSchemaError(const std::string& element, long line, const std::string& message)
        : std::runtime_error("<" + element + "> at line " + std::to_string(line) + ": " +
                             message),
          element_(element),
          line_(line) {}

    const std::string& element() const noexcept { return element_; }
    long line() const noexcept { return line_; }

private:
    std::string element_;
    long line_;
};

inline constexpr std::string_view kXmlDeclaration = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

namespace detail {

inline void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

inline void attribute(std::string& out, std::string_view key, std::string_view value) {
    out += ' ';
    out += key;
    out += "=\"";
    out += xml::escape(value);
    out += '"';
}

inline void attribute(std::string& out, std::string_view key, int value) {
    attribute(out, key, std::to_string(value));
}

inline void writeNode(std::string& out, const Node& node, int depth) {
    indent(out, depth);
    if (node.isConcrete()) {
        const auto& span = node.span();
        out += "<token";
        attribute(out, "type", toString(*node.tokenType()));
        attribute(out, "line", span.startLine);
        attribute(out, "col", span.startColumn);
        attribute(out, "endLine", span.endLine);
        attribute(out, "endCol", span.endColumn);
        out += '>';
        out += xml::escape(node.label());
        out += "</token>\n";
        return;
    }
    out += "<node";
    attribute(out, "kind", node.label());
    out += ">\n";
    for (const auto& child : node.children()) {
        writeNode(out, child, depth + 1);
    }
    indent(out, depth);
    out += "</node>\n";
}

inline const std::string& requireAttribute(const xml::Element& element, std::string_view key) {
    if (const auto* value = element.attribute(key)) {
        return *value;
    }
    throw XmlSchemaError(element.name, element.line,
                         "missing attribute '" + std::string(key) + "'");
}

inline int positiveAttribute(const xml::Element& element, std::string_view key) {
    const auto& text = requireAttribute(element, key);
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
        throw XmlSchemaError(element.name, element.line,
                             "attribute '" + std::string(key) + "' must be a positive integer, got '" +
                                 text + "'");
    }
    return value;
}

inline Node readNode(const xml::Element& element) {
    if (element.name == "token") {
        if (!element.children.empty()) {
            throw XmlSchemaError(element.name, element.line, "tokens cannot contain elements");
        }
        const auto& typeText = requireAttribute(element, "type");
        const auto type = tokenTypeFromString(typeText);
        if (!type) {
            throw XmlSchemaError(element.name, element.line, "unknown token type '" + typeText + "'");
        }
        const SourceSpan span{positiveAttribute(element, "line"), positiveAttribute(element, "col"),
                              positiveAttribute(element, "endLine"),
                              positiveAttribute(element, "endCol")};
        try {
            return Node::concrete(element.text, *type, span);
        } catch (const MalformedTreeError& e) {
            throw XmlSchemaError(element.name, element.line, e.what());
        }
    }
    if (element.name != "node") {
        throw XmlSchemaError(element.name, element.line, "unknown element");
    }
    const auto& kindText = requireAttribute(element, "kind");
    const auto kind = universalKindFromString(kindText);
    if (!kind) {
        throw XmlSchemaError(element.name, element.line, "unknown kind '" + kindText + "'");
    }
    if (!xml::isBlank(element.text)) {
        throw XmlSchemaError(element.name, element.line, "unexpected text inside <node>");
    }
    std::vector<Node> children;
    children.reserve(element.children.size());
    for (const auto& child : element.children) {
        children.push_back(readNode(child));
    }
    try {
        return Node::universal(*kind, std::move(children));
    } catch (const MalformedTreeError& e) {
        throw XmlSchemaError(element.name, element.line, e.what());
    }
}

} // namespace detail

inline std::string serializeTree(const Tree& tree) {
    std::string out(kXmlDeclaration);
    out += "<ecst";
    detail::attribute(out, "source", tree.sourcePath());
    detail::attribute(out, "language", tree.languageId());
    detail::attribute(out, "totalLines", tree.totalLines());
    out += ">\n";
    detail::writeNode(out, tree.root(), 1);
    out += "</ecst>\n";
    return out;
}

/// Rebuilds a tree; node ids are regenerated in preorder.
inline Tree parseTreeXml(std::string_view document) {
    if (xml::isBlank(document)) {
        throw XmlSchemaError("ecst", 1, "empty document");
    }
    xml::Element root;
    try {
        root = xml::parseDocument(document);
    } catch (const xml::XmlSyntaxError& e) {
        throw XmlSchemaError("ecst", e.line(), std::string("not well-formed XML: ") + e.what());
    }
    if (root.name != "ecst") {
        throw XmlSchemaError(root.name, root.line, "expected root element <ecst>");
    }
    const auto& source = detail::requireAttribute(root, "source");
    const auto& language = detail::requireAttribute(root, "language");
    const int totalLines = detail::positiveAttribute(root, "totalLines");
    if (root.children.size() != 1) {
        throw XmlSchemaError(root.name, root.line, "expected exactly one top-level <node>");
    }
    const auto& top = root.children.front();
    Node node = detail::readNode(top);
    if (!node.is(UniversalKind::CompilationUnit)) {
        throw XmlSchemaError(top.name, top.line, "top-level node must be COMPILATION_UNIT");
    }
    try {
        return Tree(std::move(node), source, language, totalLines);
    } catch (const MalformedTreeError& e) {
        throw XmlSchemaError(root.name, root.line, e.what());
    }
}

inline std::string serializeMetrics(const MetricsReport& report) {
    std::string out(kXmlDeclaration);
    out += "<metrics";
    detail::attribute(out, "source", report.sourcePath);
    detail::attribute(out, "language", report.languageId);
    out += ">\n";
    for (const auto& row : report.rows) {
        out += "  <element";
        detail::attribute(out, "name", row.elementName);
        detail::attribute(out, "annotation", toString(row.annotation));
        detail::attribute(out, "cc", row.cc);
        detail::attribute(out, "loc", row.loc);
        detail::attribute(out, "sloc", row.sloc);
        detail::attribute(out, "cloc", row.cloc);
        detail::attribute(out, "startLine", row.span.startLine);
        detail::attribute(out, "endLine", row.span.endLine);
        out += "/>\n";
    }
    out += "  <totals";
    detail::attribute(out, "loc", report.totals.loc);
    detail::attribute(out, "sloc", report.totals.sloc);
    detail::attribute(out, "cloc", report.totals.cloc);
    out += "/>\n</metrics>\n";
    return out;
}

} // namespace ecst
