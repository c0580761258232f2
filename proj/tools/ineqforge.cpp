#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ineqforge/ineqforge.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ineqforge::IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ineqforge::IoError("failed reading config file " + path);
    return buf.str();
}

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ineqforge::ValidationError("seed",
                                         origin + " must be a nonnegative integer");
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ineqforge: numeric verification and counterexample search for "
        "weighted-convexity inequalities"};
    std::string configPath;
    std::string output;
    std::string format;
    std::string seedText;
    app.add_option("-c,--config", configPath, "Path to the JSON run config")
        ->required();
    CLI::Option* outputOpt =
        app.add_option("-o,--output", output, "Report path override (default stdout)");
    CLI::Option* formatOpt =
        app.add_option("--format", format, "Report format override: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    CLI::Option* seedOpt = app.add_option(
        "--seed", seedText,
        "Seed override; when absent, the INEQFORGE_SEED env var, then the config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ineqforge::kExitError;
    }

    try {
        ineqforge::RunConfig config = ineqforge::parse_config(read_file(configPath));
        if (outputOpt->count() > 0) config.output = output;
        if (formatOpt->count() > 0) config.format = *ineqforge::format_from_name(format);
        std::optional<std::uint64_t> seedOverride;
        if (seedOpt->count() > 0) {
            seedOverride = parse_seed(seedText, "--seed");
        } else if (const char* env = std::getenv("INEQFORGE_SEED")) {
            seedOverride = parse_seed(env, "INEQFORGE_SEED");
        }
        if (seedOverride) {
            config.seed = *seedOverride;
            config.grid.seed = *seedOverride;
            if (config.searchSpace) config.searchSpace->seed = *seedOverride;
        }
        return ineqforge::run(config);
    } catch (const ineqforge::Error& e) {
        std::cerr << "ineqforge: " << e.what() << std::endl;
        return ineqforge::kExitError;
    } catch (const std::exception& e) {
        std::cerr << "ineqforge: " << e.what() << std::endl;
        return ineqforge::kExitError;
    }
}
