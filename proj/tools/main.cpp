#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "euclid/script.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses `path`, printing a diagnostic on failure.
std::optional<euclid::script::Program> load(const std::string& path)
{
    try {
        return euclid::script::parse(read_file(path));
    } catch (const euclid::script::ScriptError& e) {
        std::cerr << path << ":" << e.diagnostic() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "euclid: " << e.what() << '\n';
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Interval geometry scripts: constructions and three-valued queries"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::size_t max_dro = euclid::csp::kDefaultDroCap;
    app.add_option("--seed", seed, "Reserved; accepted and ignored");
    app.add_option("--max-dro", max_dro, "Propagation safety cap (domain reductions per call)")
        ->check(CLI::PositiveNumber);

    std::string script_path;
    bool no_timing = false;
    auto* run = app.add_subcommand("run", "Execute a script and print its report");
    run->add_option("script", script_path, "Script file")->required();
    run->add_flag("--no-timing", no_timing, "Omit duration_us lines");

    auto* check = app.add_subcommand("check", "Parse a script; exit status 0 if valid");
    check->add_option("script", script_path, "Script file")->required();

    CLI11_PARSE(app, argc, argv);

    const auto program = load(script_path);
    if (!program)
        return 1;
    if (*check)
        return 0;

    euclid::script::ExecuteOptions options;
    options.predicates.max_dro = max_dro;
    const auto report = euclid::script::execute(*program, options);
    std::cout << euclid::script::format_report(report, {.durations = !no_timing});
    return 0;
}
