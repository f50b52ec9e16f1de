// Command-line front end: extension enumeration and acceptance for AFs,
// possible/necessary acceptance for IAFs, stability checks, and negotiation
// runs.
//
// Exit codes: 0 = query answered true / success, 1 = query answered false,
// 2 = usage or validation error, 3 = resource guard tripped.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "argstab/af.hpp"
#include "argstab/formats.hpp"
#include "argstab/iaf.hpp"
#include "argstab/negotiation.hpp"
#include "argstab/semantics.hpp"
#include "argstab/stability.hpp"

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;

std::string read_file(const std::string& path) {
    std::ifstream input(path, std::ios::binary);
    if (!input) throw argstab::error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return buffer.str();
}

std::string format_extension(const argstab::extension& ext) {
    std::string out = "[";
    for (std::size_t i = 0; i < ext.size(); ++i) {
        if (i > 0) out += ",";
        out += ext[i].name();
    }
    return out + "]";
}

argstab::semantics parse_semantics_flag(const std::string& text) {
    auto sem = argstab::semantics_from_string(text);
    if (!sem) throw CLI::ValidationError("--semantics must be one of gr, co, st, pr");
    return *sem;
}

argstab::acceptance_mode parse_mode_flag(const std::string& text) {
    auto mode = argstab::acceptance_mode_from_string(text);
    if (!mode) throw CLI::ValidationError("--mode must be credulous or skeptical");
    return *mode;
}

struct solve_options {
    std::string file;
    std::string format = "apx";
    std::string semantics;
    std::string arg;
    std::string mode;
    bool enumerate = false;
};

int run_solve(const solve_options& opt) {
    const argstab::semantics sem = parse_semantics_flag(opt.semantics);

    argstab::argumentation_framework af;
    const std::string text = read_file(opt.file);
    if (opt.format == "apx") {
        argstab::apx_value value = argstab::parse_apx(text);
        if (std::holds_alternative<argstab::incomplete_af>(value))
            throw argstab::error("input contains ?arg statements; use the iaf command");
        af = std::get<argstab::argumentation_framework>(std::move(value));
    } else if (opt.format == "tgf") {
        af = argstab::parse_tgf(text);
    } else {
        throw CLI::ValidationError("--format must be apx or tgf");
    }

    if (opt.enumerate) {
        for (const auto& ext : argstab::extensions(af, sem))
            std::cout << format_extension(ext) << "\n";
        return exit_true;
    }

    const bool yes = argstab::accepted(af, argstab::argument_id(opt.arg), sem,
                                       parse_mode_flag(opt.mode));
    std::cout << (yes ? "YES" : "NO") << "\n";
    return yes ? exit_true : exit_false;
}

struct iaf_options {
    std::string file;
    std::string semantics;
    std::string arg;
    std::string mode;
    std::string necessity;
};

int run_iaf(const iaf_options& opt) {
    const argstab::semantics sem = parse_semantics_flag(opt.semantics);
    const argstab::acceptance_mode mode = parse_mode_flag(opt.mode);
    auto nec = argstab::necessity_mode_from_string(opt.necessity);
    if (!nec) throw CLI::ValidationError("--necessity must be possible or necessary");

    argstab::apx_value value = argstab::parse_apx(read_file(opt.file));
    argstab::incomplete_af iaf;
    if (const auto* af = std::get_if<argstab::argumentation_framework>(&value))
        iaf = argstab::incomplete_af(af->arguments(), {}, af->attacks());
    else
        iaf = std::get<argstab::incomplete_af>(std::move(value));

    const bool yes = argstab::iaf_accepted(iaf, argstab::argument_id(opt.arg), sem, mode, *nec);
    std::cout << (yes ? "YES" : "NO") << "\n";
    return yes ? exit_true : exit_false;
}

struct stability_options {
    std::string universe_file;
    std::string current_file;
    std::string arg;
    std::string semantics;
    std::string mode;
    bool witness = false;
};

int run_stability(const stability_options& opt) {
    const argstab::stability_problem problem = argstab::load_stability_problem(
        read_file(opt.universe_file), read_file(opt.current_file),
        argstab::argument_id(opt.arg), parse_semantics_flag(opt.semantics),
        parse_mode_flag(opt.mode));

    const argstab::stability_verdict verdict = argstab::check_stability(problem);
    std::cout << argstab::to_string(verdict.outcome()) << "\n";
    if (verdict.outcome() != argstab::stability_outcome::unstable) return exit_true;

    if (opt.witness) {
        std::cout << "accepting: "
                  << format_extension(verdict.witness_accepting()->arguments()) << "\n";
        std::cout << "rejecting: "
                  << format_extension(verdict.witness_rejecting()->arguments()) << "\n";
    }
    return exit_false;
}

struct negotiate_options {
    std::string scenario_file;
    bool baseline = false;
};

int run_negotiate(const negotiate_options& opt) {
    const argstab::negotiation_scenario scenario =
        argstab::parse_scenario(read_file(opt.scenario_file));
    const argstab::transcript result = argstab::run_negotiation(scenario, !opt.baseline);
    std::cout << argstab::render(result);
    return result.agreement() ? exit_true : exit_false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract argumentation solver with stability checking"};
    app.require_subcommand(1);

    solve_options solve;
    auto* solve_cmd = app.add_subcommand("solve", "Extensions and acceptance of an AF");
    solve_cmd->add_option("--file", solve.file, "input AF")->required();
    solve_cmd->add_option("--format", solve.format, "apx or tgf (default apx)");
    solve_cmd->add_option("--semantics", solve.semantics, "gr, co, st or pr")->required();
    solve_cmd->add_flag("--enumerate", solve.enumerate, "print all extensions");
    solve_cmd->add_option("--arg", solve.arg, "query argument");
    solve_cmd->add_option("--mode", solve.mode, "credulous or skeptical");

    iaf_options iaf;
    auto* iaf_cmd = app.add_subcommand("iaf", "Possible/necessary acceptance in an IAF");
    iaf_cmd->add_option("--file", iaf.file, "input IAF (apx with ?arg)")->required();
    iaf_cmd->add_option("--semantics", iaf.semantics, "gr, co, st or pr")->required();
    iaf_cmd->add_option("--arg", iaf.arg, "query argument")->required();
    iaf_cmd->add_option("--mode", iaf.mode, "credulous or skeptical")->required();
    iaf_cmd->add_option("--necessity", iaf.necessity, "possible or necessary")->required();

    stability_options stability;
    auto* stability_cmd = app.add_subcommand("stability", "Stability of an argument's status");
    stability_cmd->add_option("--universe", stability.universe_file, "universe AF")->required();
    stability_cmd->add_option("--current", stability.current_file, "current AF")->required();
    stability_cmd->add_option("--arg", stability.arg, "target argument")->required();
    stability_cmd->add_option("--semantics", stability.semantics, "gr, co, st or pr")->required();
    stability_cmd->add_option("--mode", stability.mode, "credulous or skeptical")->required();
    stability_cmd->add_flag("--witness", stability.witness, "print witnesses when unstable");

    negotiate_options negotiate;
    auto* negotiate_cmd = app.add_subcommand("negotiate", "Run a negotiation scenario");
    negotiate_cmd->add_option("--scenario", negotiate.scenario_file, "scenario file")->required();
    negotiate_cmd->add_flag("--baseline", negotiate.baseline, "disable stability checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (solve_cmd->parsed()) {
            const bool query = !solve.arg.empty() || !solve.mode.empty();
            if (solve.enumerate && query)
                throw argstab::error("--enumerate cannot be combined with --arg/--mode");
            if (!solve.enumerate && (solve.arg.empty() || solve.mode.empty()))
                throw argstab::error("pass either --enumerate or --arg with --mode");
            return run_solve(solve);
        }
        if (iaf_cmd->parsed()) return run_iaf(iaf);
        if (stability_cmd->parsed()) return run_stability(stability);
        if (negotiate_cmd->parsed()) return run_negotiate(negotiate);
    } catch (const argstab::enumeration_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_guard;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const argstab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
