/**
 * @file registry.hpp
 * @brief File-extension to language mapping, loaded from XML.
 *
 * @code
 * <languages>
 *   <language id="modula2" name="Modula-2"><ext>mod</ext></language>
 *   <language id="javaoo" name="Java"><ext>java</ext></language>
 * </languages>
 * @endcode
 */

#pragma once

#include "ecst/token.hpp"
#include "ecst/xml_dom.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ecst {

/// Registry document is unreadable, not XML, or violates the schema.
class RegistryError : public std::runtime_error {
public:
    enum class Kind { Io, Config };

    RegistryError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct LanguageRegistryEntry {
    std::string extension; ///< without the leading dot
    std::string languageId;
    std::string displayName;

    friend bool operator==(const LanguageRegistryEntry&, const LanguageRegistryEntry&) = default;
};

namespace detail {
inline std::string lowerAscii(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
} // namespace detail

class LanguageRegistry {
public:
    LanguageRegistry() = default;

    /// Throws RegistryError(Config) if the extension is already registered.
    void add(LanguageRegistryEntry entry) {
        if (entry.extension.empty()) {
            throw RegistryError(RegistryError::Kind::Config,
                                "language '" + entry.languageId + "' has an empty <ext>");
        }
        if (find(entry.extension) != nullptr) {
            throw RegistryError(RegistryError::Kind::Config,
                                "duplicate extension '" + entry.extension + "'");
        }
        entries_.push_back(std::move(entry));
    }

    /// Case-insensitive lookup; @p extension has no leading dot.
    const LanguageRegistryEntry* find(std::string_view extension) const {
        const auto key = detail::lowerAscii(extension);
        for (const auto& entry : entries_) {
            if (detail::lowerAscii(entry.extension) == key) {
                return &entry;
            }
        }
        return nullptr;
    }

    const std::vector<LanguageRegistryEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// The two languages this build ships frontends for.
    static LanguageRegistry builtin() {
        LanguageRegistry registry;
        registry.add({"mod", "modula2", "Modula-2"});
        registry.add({"java", "javaoo", "Java"});
        return registry;
    }

private:
    std::vector<LanguageRegistryEntry> entries_;
};

inline LanguageRegistry parseRegistry(std::string_view bytes) {
    xml::Element root;
    try {
        root = xml::parseDocument(bytes);
    } catch (const xml::XmlSyntaxError& e) {
        throw RegistryError(RegistryError::Kind::Io,
                            std::string("malformed registry XML: ") + e.what());
    }
    auto config = [](const xml::Element& at, const std::string& what) {
        return RegistryError(RegistryError::Kind::Config,
                             "registry line " + std::to_string(at.line) + ": " + what);
    };
    if (root.name != "languages") {
        throw config(root, "expected <languages>, found <" + root.name + ">");
    }
    LanguageRegistry registry;
    for (const auto& language : root.children) {
        if (language.name != "language") {
            throw config(language, "unknown element <" + language.name + ">");
        }
        const auto* id = language.attribute("id");
        if (id == nullptr || id->empty()) {
            throw config(language, "<language> without an id attribute");
        }
        const auto* name = language.attribute("name");
        bool anyExtension = false;
        for (const auto& ext : language.children) {
            if (ext.name != "ext") {
                throw config(ext, "unknown element <" + ext.name + ">");
            }
            std::string extension = ext.text;
            auto first = extension.find_first_not_of(" \t\r\n");
            auto last = extension.find_last_not_of(" \t\r\n");
            extension = first == std::string::npos ? "" : extension.substr(first, last - first + 1);
            if (!extension.empty() && extension.front() == '.') {
                extension.erase(0, 1);
            }
            registry.add({extension, *id, name != nullptr ? *name : *id});
            anyExtension = true;
        }
        if (!anyExtension) {
            throw config(language, "language '" + *id + "' declares no <ext>");
        }
    }
    return registry;
}

inline LanguageRegistry loadRegistry(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RegistryError(RegistryError::Kind::Io,
                            "cannot read registry '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseRegistry(buffer.str());
}

/// Language id registered for the extension of @p path.
inline std::string detectLanguage(const std::filesystem::path& path,
                                  const LanguageRegistry& registry) {
    auto extension = path.extension().string();
    if (extension.size() <= 1) {
        throw FrontendError(FrontendErrorKind::UnknownExtension,
                            "'" + path.string() + "' has no file extension");
    }
    extension.erase(0, 1);
    if (const auto* entry = registry.find(extension)) {
        return entry->languageId;
    }
    throw FrontendError(FrontendErrorKind::UnknownExtension,
                        "no language registered for extension '" + extension + "'");
}

} // namespace ecst
