// Command-line front end for the eCST metrics pipeline.
//
//   ecst parse   <file> [--registry PATH] [--out PATH]
//   ecst measure <file|tree.ecst.xml> [--registry PATH] [--out PATH] [--extended-cc] [--table]
//   ecst run     <file...> [--registry PATH] [--tree-dir DIR] [--metrics-dir DIR]
//                [--extended-cc] [--table]

#include "ecst/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

std::optional<std::filesystem::path> optionalPath(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return std::filesystem::path(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Language-independent source metrics over enriched concrete syntax trees"};
    app.require_subcommand(1);

    std::string registry;
    std::string out;

    std::string parseInput;
    auto* parse = app.add_subcommand("parse", "Parse a source file and write its eCST as XML");
    parse->add_option("file", parseInput, "Source file")->required();
    parse->add_option("--registry", registry, "Language registry XML (default: languages.xml)");
    parse->add_option("--out", out, "Output path (default: <file>.ecst.xml)");

    std::string measureInput;
    bool extendedCc = false;
    bool table = false;
    auto* measure =
        app.add_subcommand("measure", "Compute metrics for a source file or an eCST document");
    measure->add_option("file", measureInput, "Source file or *.ecst.xml")->required();
    measure->add_option("--registry", registry, "Language registry XML (default: languages.xml)");
    measure->add_option("--out", out, "Output path (default: <source>.metrics.xml)");
    measure->add_flag("--extended-cc", extendedCc,
                      "Count logical operators in conditions as decisions");
    measure->add_flag("--table", table, "Print a text table to standard output");

    std::vector<std::string> runInputs;
    std::string treeDir;
    std::string metricsDir = ".";
    auto* run = app.add_subcommand("run", "Full pipeline with XML reload, one metrics file per input");
    run->add_option("files", runInputs, "Source files")->required();
    run->add_option("--registry", registry, "Language registry XML (default: languages.xml)");
    run->add_option("--tree-dir", treeDir, "Directory for eCST documents");
    run->add_option("--metrics-dir", metricsDir, "Directory for metrics documents");
    run->add_flag("--extended-cc", extendedCc, "Count logical operators in conditions as decisions");
    run->add_flag("--table", table, "Print a text table per file to standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ecst::ExitCode::kUsage;
    }

    if (parse->parsed()) {
        return ecst::cmdParse(parseInput, optionalPath(registry), optionalPath(out), std::cout,
                              std::cerr);
    }
    if (measure->parsed()) {
        return ecst::cmdMeasure(measureInput, optionalPath(registry), optionalPath(out),
                                ecst::MetricsOptions{extendedCc}, table, std::cout, std::cerr);
    }
    ecst::RunConfig config;
    config.inputPaths.assign(runInputs.begin(), runInputs.end());
    config.registryPath = optionalPath(registry);
    config.treeOutDir = optionalPath(treeDir);
    config.metricsOutDir = metricsDir;
    config.extendedCc = extendedCc;
    config.emitTextTable = table;
    return ecst::cmdRun(config, std::cout, std::cerr);
}
