/**
 * @file pipeline.hpp
 * @brief The batch pipeline behind the command-line tool.
 *
 * detect language -> parse to eCST -> write tree XML -> reload tree XML ->
 * measure -> write metrics XML. Each command returns a process exit code
 * so the tool's main() stays a thin argument parser.
 */

#pragma once

#include "ecst/ecst_xml.hpp"
#include "ecst/frontend.hpp"
#include "ecst/metrics.hpp"
#include "ecst/registry.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ecst {

namespace ExitCode {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kUnknownExtension = 2;
inline constexpr int kParseError = 3;
inline constexpr int kIoError = 4;
inline constexpr int kSchemaError = 5;
} // namespace ExitCode

inline constexpr std::string_view kTreeSuffix = ".ecst.xml";
inline constexpr std::string_view kMetricsSuffix = ".metrics.xml";
inline constexpr std::string_view kDefaultRegistry = "languages.xml";

struct RunConfig {
    std::vector<std::filesystem::path> inputPaths;
    std::optional<std::filesystem::path> registryPath;
    std::optional<std::filesystem::path> treeOutDir;
    std::filesystem::path metricsOutDir = ".";
    bool extendedCc = false;
    bool emitTextTable = false;
};

inline int exitCodeFor(const FrontendError& error) noexcept {
    switch (error.kind()) {
    case FrontendErrorKind::UnknownExtension: return ExitCode::kUnknownExtension;
    case FrontendErrorKind::LexError:
    case FrontendErrorKind::ParseError: return ExitCode::kParseError;
    case FrontendErrorKind::IoError: return ExitCode::kIoError;
    }
    return ExitCode::kIoError;
}

/**
 * @brief Registry to use for a command.
 *
 * An explicit path must load. Without one, ./languages.xml is used when
 * present and the built-in two-language registry otherwise.
 */
inline LanguageRegistry resolveRegistry(const std::optional<std::filesystem::path>& explicitPath) {
    if (explicitPath) {
        return loadRegistry(*explicitPath);
    }
    std::error_code ec;
    if (std::filesystem::exists(kDefaultRegistry, ec)) {
        return loadRegistry(std::filesystem::path(kDefaultRegistry));
    }
    return LanguageRegistry::builtin();
}

inline void writeFile(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size())) ||
        !out.flush()) {
        throw FrontendError(FrontendErrorKind::IoError, "cannot write '" + path.string() + "'");
    }
}

inline bool isTreeDocument(const std::filesystem::path& path) {
    const auto name = path.filename().string();
    return name.size() > kTreeSuffix.size() && name.ends_with(kTreeSuffix);
}

/// "dir/QuickSort.mod.ecst.xml" -> "QuickSort.mod"
inline std::string sourceName(const std::filesystem::path& path) {
    auto name = path.filename().string();
    if (isTreeDocument(path)) {
        name.resize(name.size() - kTreeSuffix.size());
    }
    return name;
}

inline std::filesystem::path defaultTreePath(const std::filesystem::path& source) {
    auto out = source;
    out += std::string(kTreeSuffix);
    return out;
}

inline std::filesystem::path defaultMetricsPath(const std::filesystem::path& input) {
    return input.parent_path() / (sourceName(input) + std::string(kMetricsSuffix));
}

namespace detail {

/// Runs @p body, translating every pipeline failure into an exit code.
template <typename Body>
int guarded(std::ostream& err, std::string_view subject, Body&& body) {
    try {
        body();
        return ExitCode::kOk;
    } catch (const FrontendError& e) {
        err << subject << ": " << e.what() << '\n';
        return exitCodeFor(e);
    } catch (const RegistryError& e) {
        err << "registry: " << e.what() << '\n';
        return ExitCode::kIoError;
    } catch (const XmlSchemaError& e) {
        err << subject << ": " << e.what() << '\n';
        return ExitCode::kSchemaError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << subject << ": " << e.what() << '\n';
        return ExitCode::kIoError;
    }
}

} // namespace detail

inline int cmdParse(const std::filesystem::path& file,
                    const std::optional<std::filesystem::path>& registryPath,
                    const std::optional<std::filesystem::path>& outPath, std::ostream& out,
                    std::ostream& err) {
    return detail::guarded(err, file.string(), [&] {
        const auto registry = resolveRegistry(registryPath);
        const auto tree = parseFile(file, registry);
        const auto target = outPath.value_or(defaultTreePath(file));
        writeFile(target, serializeTree(tree));
        out << file.string() << " -> " << target.string() << '\n';
    });
}

inline int cmdMeasure(const std::filesystem::path& input,
                      const std::optional<std::filesystem::path>& registryPath,
                      const std::optional<std::filesystem::path>& outPath,
                      const MetricsOptions& options, bool emitTextTable, std::ostream& out,
                      std::ostream& err) {
    return detail::guarded(err, input.string(), [&] {
        const auto tree = isTreeDocument(input) ? parseTreeXml(readFile(input))
                                                : parseFile(input, resolveRegistry(registryPath));
        const auto report = measureTree(tree, options);
        const auto target = outPath.value_or(defaultMetricsPath(input));
        writeFile(target, serializeMetrics(report));
        if (emitTextTable) {
            writeTable(out, report);
        }
        out << input.string() << " -> " << target.string() << '\n';
    });
}

struct FileOutcome {
    int exitCode = ExitCode::kOk;
    std::string summary;
    std::string diagnostics;
    std::string table;
};

/// Full pipeline for one file. The tree is always reloaded from its XML form.
inline FileOutcome runOne(const std::filesystem::path& input, const LanguageRegistry& registry,
                          const RunConfig& config) {
    FileOutcome outcome;
    std::ostringstream err;
    std::size_t rows = 0;
    int maxCc = 0;
    std::filesystem::path metricsPath;
    outcome.exitCode = detail::guarded(err, input.string(), [&] {
        const auto tree = parseFile(input, registry);
        const auto document = serializeTree(tree);
        if (config.treeOutDir) {
            writeFile(*config.treeOutDir / (input.filename().string() + std::string(kTreeSuffix)),
                      document);
        }
        const auto reloaded = parseTreeXml(document);
        const auto report = measureTree(reloaded, MetricsOptions{config.extendedCc});
        metricsPath =
            config.metricsOutDir / (input.filename().string() + std::string(kMetricsSuffix));
        writeFile(metricsPath, serializeMetrics(report));
        rows = report.rows.size();
        for (const auto& row : report.rows) {
            maxCc = std::max(maxCc, row.cc);
        }
        if (config.emitTextTable) {
            std::ostringstream table;
            writeTable(table, report);
            outcome.table = table.str();
        }
    });
    outcome.diagnostics = err.str();
    if (outcome.exitCode == ExitCode::kOk) {
        outcome.summary = input.string() + ": ok, " + std::to_string(rows) +
                          " elements, max CC " + std::to_string(maxCc) + " -> " +
                          metricsPath.string();
    } else {
        outcome.summary = input.string() + ": failed (exit " + std::to_string(outcome.exitCode) + ")";
    }
    return outcome;
}

/**
 * @brief Runs the pipeline over every input, concurrently.
 *
 * Failing files are reported and skipped. Returns 0 when every file
 * succeeded, else the highest per-file exit code.
 */
inline int cmdRun(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputPaths.empty()) {
        err << "run: no input files\n";
        return ExitCode::kUsage;
    }
    std::optional<LanguageRegistry> registry;
    const int registryCode = detail::guarded(err, "run", [&] {
        registry = resolveRegistry(config.registryPath);
        std::filesystem::create_directories(config.metricsOutDir);
        if (config.treeOutDir) {
            std::filesystem::create_directories(*config.treeOutDir);
        }
    });
    if (registryCode != ExitCode::kOk) {
        return registryCode;
    }
    std::vector<std::future<FileOutcome>> pending;
    pending.reserve(config.inputPaths.size());
    for (const auto& input : config.inputPaths) {
        pending.push_back(std::async(std::launch::async, [&registry, &config, input] {
            return runOne(input, *registry, config);
        }));
    }
    int exitCode = ExitCode::kOk;
    for (auto& future : pending) {
        const auto outcome = future.get();
        err << outcome.diagnostics;
        out << outcome.table << outcome.summary << '\n';
        exitCode = std::max(exitCode, outcome.exitCode);
    }
    return exitCode;
}

} // namespace ecst
