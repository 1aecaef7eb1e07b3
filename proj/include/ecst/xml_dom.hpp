/**
 * @file xml_dom.hpp
 * @brief Small in-memory XML element tree built on expat.
 *
 * Both the language registry and the eCST documents are tiny, so a full
 * DOM is cheaper to reason about than streaming callbacks. Every element
 * remembers the line it started on for error messages.
 */

#pragma once

#include <expat.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecst::xml {

/// Not well-formed XML.
class XmlSyntaxError : public std::runtime_error {
public:
    XmlSyntaxError(const std::string& message, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::string text; ///< concatenated character data directly inside this element
    std::vector<Element> children;
    long line = 0;

    const std::string* attribute(std::string_view key) const noexcept {
        for (const auto& [k, v] : attributes) {
            if (k == key) {
                return &v;
            }
        }
        return nullptr;
    }
};

namespace detail {

struct ParseState {
    XML_Parser parser = nullptr;
    std::vector<Element*> open;
    std::optional<Element> root;
};

inline void XMLCALL onStart(void* data, const XML_Char* name, const XML_Char** attrs) {
    auto* state = static_cast<ParseState*>(data);
    Element element;
    element.name = name;
    element.line = static_cast<long>(XML_GetCurrentLineNumber(state->parser));
    for (int i = 0; attrs[i] != nullptr; i += 2) {
        element.attributes.emplace_back(attrs[i], attrs[i + 1]);
    }
    if (state->open.empty()) {
        state->root = std::move(element);
        state->open.push_back(&*state->root);
    } else {
        auto& siblings = state->open.back()->children;
        siblings.push_back(std::move(element));
        state->open.push_back(&siblings.back());
    }
}

inline void XMLCALL onEnd(void* data, const XML_Char*) {
    static_cast<ParseState*>(data)->open.pop_back();
}

inline void XMLCALL onText(void* data, const XML_Char* text, int len) {
    auto* state = static_cast<ParseState*>(data);
    if (!state->open.empty()) {
        state->open.back()->text.append(text, static_cast<std::size_t>(len));
    }
}

} // namespace detail

/// Parses a complete document and returns its root element.
inline Element parseDocument(std::string_view bytes) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!parser) {
        throw std::bad_alloc();
    }
    detail::ParseState state;
    state.parser = parser.get();
    XML_SetUserData(parser.get(), &state);
    XML_SetElementHandler(parser.get(), &detail::onStart, &detail::onEnd);
    XML_SetCharacterDataHandler(parser.get(), &detail::onText);
    // Children vectors hold elements by value; pointers into them stay valid
    // only because a parent never gains a child while a sibling is open.
    if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
        XML_STATUS_ERROR) {
        throw XmlSyntaxError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                             static_cast<long>(XML_GetCurrentLineNumber(parser.get())));
    }
    if (!state.root) {
        throw XmlSyntaxError("document has no root element", 1);
    }
    return std::move(*state.root);
}

/// Escapes text for use in element content or a double-quoted attribute.
inline std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\r': out += "&#13;"; break;
        case '\t': out += "&#9;"; break;
        default: out += c;
        }
    }
    return out;
}

inline bool isBlank(std::string_view text) noexcept {
    return text.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

} // namespace ecst::xml
