#ifndef ARGSTAB_TESTS_SUPPORT_HPP
#define ARGSTAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdio>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "argstab/af.hpp"
#include "argstab/iaf.hpp"
#include "argstab/semantics.hpp"
#include "argstab/stability.hpp"

namespace support {

inline argstab::argument_id id(const std::string& name) { return argstab::argument_id(name); }

inline std::vector<argstab::argument_id> ids(std::initializer_list<const char*> names) {
    std::vector<argstab::argument_id> result;
    for (const char* name : names) result.emplace_back(name);
    return result;
}

inline argstab::argumentation_framework
make_af(std::initializer_list<const char*> args,
        std::initializer_list<std::pair<const char*, const char*>> attacks) {
    std::vector<argstab::attack> atts;
    for (const auto& [src, dst] : attacks) atts.emplace_back(id(src), id(dst));
    return argstab::argumentation_framework(ids(args), std::move(atts));
}

inline argstab::extension ext(std::initializer_list<const char*> names) { return ids(names); }

// Seven arguments; a1 beats a2, a3 and a4 attack each other, a5/a6/a7 cycle.
inline argstab::argumentation_framework example_af() {
    return make_af({"a1", "a2", "a3", "a4", "a5", "a6", "a7"},
                   {{"a1", "a2"},
                    {"a2", "a3"},
                    {"a3", "a4"},
                    {"a4", "a3"},
                    {"a4", "a5"},
                    {"a5", "a6"},
                    {"a6", "a7"},
                    {"a7", "a5"}});
}

// The same graph with a4 and a7 uncertain.
inline argstab::incomplete_af example_iaf() {
    const auto full = example_af();
    return argstab::incomplete_af(ids({"a1", "a2", "a3", "a5", "a6"}), ids({"a4", "a7"}),
                                  full.attacks());
}

// Universe for the stability examples: the example AF without the attack a6 -> a7.
inline argstab::argumentation_framework stability_universe() {
    return make_af({"a1", "a2", "a3", "a4", "a5", "a6", "a7"},
                   {{"a1", "a2"},
                    {"a2", "a3"},
                    {"a3", "a4"},
                    {"a4", "a3"},
                    {"a4", "a5"},
                    {"a5", "a6"},
                    {"a7", "a5"}});
}

inline argstab::stability_problem stability_example(const char* target, argstab::semantics sem,
                                                    argstab::acceptance_mode mode) {
    auto uni = stability_universe();
    auto current = uni.restricted_to(ids({"a3", "a4", "a5", "a6", "a7"}));
    return argstab::stability_problem{argstab::universe{std::move(uni)}, std::move(current),
                                      id(target), sem, mode};
}

// Negotiation universe: practical arguments p1..p3 are mutually exclusive,
// a1..a3 attack p1, a4 answers a3 and p2, a5/a6 answer a2/a1 but exclude each
// other.
inline argstab::argumentation_framework nego_universe() {
    return make_af({"a1", "a2", "a3", "a4", "a5", "a6", "p1", "p2", "p3"},
                   {{"p1", "p2"},
                    {"p2", "p1"},
                    {"p2", "p3"},
                    {"p3", "p2"},
                    {"p1", "p3"},
                    {"p3", "p1"},
                    {"a1", "p1"},
                    {"a2", "p1"},
                    {"a3", "p1"},
                    {"a4", "a3"},
                    {"a4", "p2"},
                    {"a5", "a2"},
                    {"a6", "a1"},
                    {"a5", "a6"},
                    {"a6", "a5"}});
}

// --- direct predicates, used to double-check solver output ------------------

inline bool directly_conflict_free(const argstab::argumentation_framework& af,
                                   const argstab::extension& s) {
    for (const auto& a : s)
        for (const auto& b : s)
            if (af.has_attack(a, b)) return false;
    return true;
}

inline bool directly_admissible(const argstab::argumentation_framework& af,
                                const argstab::extension& s) {
    if (!directly_conflict_free(af, s)) return false;
    for (const auto& member : s) {
        for (const auto& [src, dst] : af.attacks()) {
            if (dst != member) continue;
            bool countered = false;
            for (const auto& defender : s)
                if (af.has_attack(defender, src)) countered = true;
            if (!countered) return false;
        }
    }
    return true;
}

inline bool contains_extension(const std::vector<argstab::extension>& exts,
                               const argstab::extension& e) {
    return std::find(exts.begin(), exts.end(), e) != exts.end();
}

inline bool subset_of(const argstab::extension& a, const argstab::extension& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// --- randomized inputs -------------------------------------------------------

inline argstab::argumentation_framework random_af(std::mt19937& rng, int max_args) {
    std::uniform_int_distribution<int> size_dist(0, max_args);
    const int n = size_dist(rng);
    std::uniform_real_distribution<double> density_dist(0.0, 0.45);
    const double density = density_dist(rng);
    std::bernoulli_distribution attack_dist(density);

    std::vector<argstab::argument_id> args;
    for (int i = 0; i < n; ++i) args.push_back(id("x" + std::to_string(i)));
    std::vector<argstab::attack> attacks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (attack_dist(rng)) attacks.emplace_back(args[i], args[j]);
    return argstab::argumentation_framework(std::move(args), std::move(attacks));
}

inline argstab::incomplete_af random_iaf(std::mt19937& rng, int max_args) {
    const auto af = random_af(rng, max_args);
    std::bernoulli_distribution uncertain_dist(0.4);
    std::vector<argstab::argument_id> certain, uncertain;
    for (const auto& a : af.arguments())
        (uncertain_dist(rng) ? uncertain : certain).push_back(a);
    return argstab::incomplete_af(std::move(certain), std::move(uncertain), af.attacks());
}

inline argstab::semantics random_semantics(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, 3);
    return argstab::all_semantics[dist(rng)];
}

inline argstab::acceptance_mode random_mode(std::mt19937& rng) {
    std::bernoulli_distribution dist(0.5);
    return dist(rng) ? argstab::acceptance_mode::credulous : argstab::acceptance_mode::skeptical;
}

// Universe of up to max_args arguments with at most max_optional of them
// outside the current AF; the target is some current argument.
inline argstab::stability_problem random_stability_problem(std::mt19937& rng, int max_args,
                                                           int max_optional) {
    argstab::argumentation_framework uni;
    do {
        uni = random_af(rng, max_args);
    } while (uni.arguments().empty());

    const int n = static_cast<int>(uni.arguments().size());
    std::uniform_int_distribution<int> optional_dist(0, std::min(max_optional, n - 1));
    const int optional = optional_dist(rng);

    std::vector<argstab::argument_id> current_args = uni.arguments();
    std::shuffle(current_args.begin(), current_args.end(), rng);
    current_args.erase(current_args.begin() + (n - optional), current_args.end());

    std::uniform_int_distribution<std::size_t> target_dist(0, current_args.size() - 1);
    const argstab::argument_id target = current_args[target_dist(rng)];

    return argstab::stability_problem{argstab::universe{uni},
                                      uni.restricted_to(std::move(current_args)), target,
                                      random_semantics(rng), random_mode(rng)};
}

// --- subprocesses ------------------------------------------------------------

struct command_result {
    int exit_code;
    std::string output;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline command_result run_command(const std::string& command) {
    const std::string full = command + " 2>/dev/null";
    FILE* pipe = ::popen(full.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

inline std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace support

#endif
