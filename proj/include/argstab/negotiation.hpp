#ifndef ARGSTAB_NEGOTIATION_HPP
#define ARGSTAB_NEGOTIATION_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "argstab/af.hpp"
#include "argstab/errors.hpp"
#include "argstab/formats.hpp"
#include "argstab/semantics.hpp"
#include "argstab/stability.hpp"

namespace argstab {

enum class agent_id { agent1, agent2 };

inline std::string_view to_string(agent_id id) {
    return id == agent_id::agent1 ? "agent1" : "agent2";
}

/// A negotiable option together with the argument that supports it.
struct offer {
    std::string name;
    argument_id practical_argument;

    friend bool operator==(const offer&, const offer&) = default;
};

/// One negotiating agent: a strict preference order over offer names (best
/// first), the arguments it may utter, and the universe it believes bounds
/// the debate (its opponent model).
struct agent_spec {
    agent_id id;
    std::vector<std::string> preference;
    std::vector<argument_id> portfolio;
    universe model;
};

struct negotiation_scenario {
    universe true_universe;
    std::vector<offer> offers;
    std::array<agent_spec, 2> agents;
    std::vector<argument_id> initial_debate;
    semantics sem;
    acceptance_mode mode;
};

// --- transcript --------------------------------------------------------------

struct utter_event {
    agent_id agent;
    argument_id argument;
};
struct pass_event {
    agent_id agent;
};
struct goal_switch_event {
    agent_id agent;
    std::string from_offer;
    std::string to_offer;
    stability_verdict reason;
};
struct propose_event {
    agent_id agent;
    std::string offer_name;
};
struct accept_event {
    agent_id agent;
    std::string offer_name;
};
struct terminate_event {
    std::optional<std::string> agreement; // empty => failure
};

using negotiation_event = std::variant<utter_event, pass_event, goal_switch_event, propose_event,
                                       accept_event, terminate_event>;

struct transcript {
    std::vector<negotiation_event> events;

    bool agreement() const {
        if (events.empty()) return false;
        const auto* done = std::get_if<terminate_event>(&events.back());
        return done && done->agreement.has_value();
    }
};

inline std::string render(const negotiation_event& ev) {
    struct renderer {
        std::string operator()(const utter_event& e) const {
            return "UTTER " + std::string(to_string(e.agent)) + " " + e.argument.name();
        }
        std::string operator()(const pass_event& e) const {
            return "PASS " + std::string(to_string(e.agent));
        }
        std::string operator()(const goal_switch_event& e) const {
            std::string reason(to_string(e.reason.outcome()));
            std::transform(reason.begin(), reason.end(), reason.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            return "GOAL-SWITCH " + std::string(to_string(e.agent)) + " " + e.from_offer +
                   " -> " + e.to_offer + " (" + reason + ")";
        }
        std::string operator()(const propose_event& e) const {
            return "PROPOSE " + std::string(to_string(e.agent)) + " " + e.offer_name;
        }
        std::string operator()(const accept_event& e) const {
            return "ACCEPT " + std::string(to_string(e.agent)) + " " + e.offer_name;
        }
        std::string operator()(const terminate_event& e) const {
            return e.agreement ? "AGREEMENT " + *e.agreement : std::string("FAILURE");
        }
    };
    return std::visit(renderer{}, ev);
}

inline std::string render(const transcript& t) {
    std::string out;
    for (const auto& ev : t.events) out += render(ev) + "\n";
    return out;
}

// --- moves -------------------------------------------------------------------

struct utter_move {
    argument_id argument;
};
struct pass_move {};
struct propose_move {
    std::string offer_name;
};
using negotiation_move = std::variant<utter_move, pass_move, propose_move>;

// --- scenario validation -----------------------------------------------------

inline void validate_scenario(const negotiation_scenario& scenario) {
    const auto& uni = scenario.true_universe.framework;

    std::vector<std::string> names;
    for (const auto& o : scenario.offers) {
        if (std::find(names.begin(), names.end(), o.name) != names.end())
            throw invalid_scenario_error("duplicate offer name '" + o.name + "'");
        names.push_back(o.name);
        for (const auto& other : scenario.offers)
            if (&other != &o && other.practical_argument == o.practical_argument)
                throw invalid_scenario_error("offers '" + o.name + "' and '" + other.name +
                                             "' share the practical argument '" +
                                             o.practical_argument.name() + "'");
        if (!uni.contains(o.practical_argument))
            throw invalid_scenario_error("practical argument '" + o.practical_argument.name() +
                                         "' is not in the universe");
        if (std::find(scenario.initial_debate.begin(), scenario.initial_debate.end(),
                      o.practical_argument) == scenario.initial_debate.end())
            throw invalid_scenario_error("practical argument '" + o.practical_argument.name() +
                                         "' must be part of the initial debate");
    }

    for (const auto& a : scenario.initial_debate)
        if (!uni.contains(a))
            throw invalid_scenario_error("initial argument '" + a.name() +
                                         "' is not in the universe");

    if (scenario.agents[0].id != agent_id::agent1 || scenario.agents[1].id != agent_id::agent2)
        throw invalid_scenario_error("agents must be listed as agent 1 then agent 2");

    for (const auto& agent : scenario.agents) {
        std::vector<std::string> ranked = agent.preference;
        std::sort(ranked.begin(), ranked.end());
        std::vector<std::string> expected = names;
        std::sort(expected.begin(), expected.end());
        if (ranked != expected)
            throw invalid_scenario_error(std::string(to_string(agent.id)) +
                                         " must rank every offer exactly once");
        for (const auto& a : agent.portfolio)
            if (!uni.contains(a))
                throw invalid_scenario_error("portfolio argument '" + a.name() +
                                             "' is not in the universe");
        for (const auto& a : scenario.initial_debate)
            if (!agent.model.framework.contains(a))
                throw invalid_scenario_error(std::string(to_string(agent.id)) +
                                             "'s model is missing the initial argument '" +
                                             a.name() + "'");
        for (const auto& o : scenario.offers)
            if (!agent.model.framework.contains(o.practical_argument))
                throw invalid_scenario_error(std::string(to_string(agent.id)) +
                                             "'s model is missing the practical argument '" +
                                             o.practical_argument.name() + "'");
    }
}

// --- agent reasoning ---------------------------------------------------------

namespace detail {

inline const offer* find_offer(const negotiation_scenario& scenario, const std::string& name) {
    for (const auto& o : scenario.offers)
        if (o.name == name) return &o;
    return nullptr;
}

// The debate as the agent models it. Throws if the model disagrees with the
// observed attacks or lacks an argument that has been uttered.
inline argumentation_framework debate_in_model(const agent_spec& agent,
                                               const argumentation_framework& debate) {
    for (const auto& a : debate.arguments())
        if (!agent.model.framework.contains(a))
            throw model_inconsistency_error(std::string(to_string(agent.id)) +
                                            "'s model does not contain the debated argument '" +
                                            a.name() + "'");
    argumentation_framework modelled =
        agent.model.framework.restricted_to(debate.arguments());
    if (!(modelled == debate))
        throw model_inconsistency_error(std::string(to_string(agent.id)) +
                                        "'s model disagrees with the debate's attacks");
    return modelled;
}

inline stability_verdict agent_verdict(const agent_spec& agent,
                                       const argumentation_framework& debate,
                                       const argument_id& target,
                                       const negotiation_scenario& scenario) {
    stability_problem p{agent.model, debate_in_model(agent, debate), target, scenario.sem,
                        scenario.mode};
    return check_stability(p);
}

// Unused portfolio arguments the agent can reason about, in name order.
inline std::vector<argument_id> unused_arguments(const agent_spec& agent,
                                                 const argumentation_framework& debate) {
    std::vector<argument_id> unused;
    for (const auto& a : agent.portfolio)
        if (!debate.contains(a) && agent.model.framework.contains(a)) unused.push_back(a);
    sort_unique(unused);
    return unused;
}

// The debate extended by one argument, with attacks induced from the agent's
// model.
inline argumentation_framework extended_in_model(const agent_spec& agent,
                                                 const argumentation_framework& debate,
                                                 const argument_id& extra) {
    std::vector<argument_id> args = debate.arguments();
    args.push_back(extra);
    return agent.model.framework.restricted_to(std::move(args));
}

inline int verdict_rank(stability_outcome outcome) {
    switch (outcome) {
        case stability_outcome::stable_rejected: return 0;
        case stability_outcome::unstable: return 1;
        case stability_outcome::stable_accepted: return 2;
    }
    return 0;
}

} // namespace detail

/// The agent's goal: its most-preferred offer whose practical argument is not
/// stable-rejected in its model, given the current debate; none when every
/// offer is stable-rejected.
inline std::optional<offer> current_goal(const agent_spec& agent,
                                         const argumentation_framework& debate,
                                         const negotiation_scenario& scenario) {
    for (const auto& name : agent.preference) {
        const offer* o = detail::find_offer(scenario, name);
        if (!o) continue;
        if (detail::agent_verdict(agent, debate, o->practical_argument, scenario).outcome() !=
            stability_outcome::stable_rejected)
            return *o;
    }
    return std::nullopt;
}

/// One deterministic move. `previous_goal` is the goal the agent pursued on
/// its previous turn; it defaults to the agent's most-preferred offer.
inline negotiation_move select_move(const agent_spec& agent,
                                    const argumentation_framework& debate,
                                    const negotiation_scenario& scenario,
                                    std::optional<std::string> previous_goal = std::nullopt) {
    const std::optional<offer> goal = current_goal(agent, debate, scenario);
    if (!goal) return pass_move{};

    const std::string prev = previous_goal.value_or(
        agent.preference.empty() ? std::string() : agent.preference.front());
    const argument_id& target = goal->practical_argument;
    const auto unused = detail::unused_arguments(agent, debate);

    // Freshly switched goals whose argument already stands, and which no
    // utterance can make more robust, are proposed rather than argued for.
    if (goal->name != prev && accepted(debate, target, scenario.sem, acceptance_mode::credulous)) {
        const int now = detail::verdict_rank(
            detail::agent_verdict(agent, debate, target, scenario).outcome());
        bool improvable = false;
        for (const auto& u : unused) {
            stability_problem p{agent.model, detail::extended_in_model(agent, debate, u), target,
                                scenario.sem, scenario.mode};
            if (detail::verdict_rank(check_stability(p).outcome()) > now) {
                improvable = true;
                break;
            }
        }
        if (!improvable) return propose_move{goal->name};
    }

    for (const auto& u : unused) {
        if (accepted(detail::extended_in_model(agent, debate, u), target, scenario.sem,
                     scenario.mode))
            return utter_move{u};
    }

    if (detail::agent_verdict(agent, debate, target, scenario).outcome() !=
        stability_outcome::stable_rejected)
        return propose_move{goal->name};
    return pass_move{};
}

// --- the engine --------------------------------------------------------------

namespace detail {

// Settle rule: an offer is acceptable when it is not stable-rejected and no
// strictly preferred offer is worth holding out for, i.e. each one is either
// stable-rejected, or undecided with no unused argument that would keep its
// practical argument accepted.
inline bool accepts_offer(const agent_spec& agent, const offer& proposed,
                          const argumentation_framework& debate,
                          const negotiation_scenario& scenario) {
    if (agent_verdict(agent, debate, proposed.practical_argument, scenario).outcome() ==
        stability_outcome::stable_rejected)
        return false;
    for (const auto& name : agent.preference) {
        if (name == proposed.name) break; // preferences below the proposal do not matter
        const offer* better = find_offer(scenario, name);
        if (!better) continue;
        const stability_outcome v =
            agent_verdict(agent, debate, better->practical_argument, scenario).outcome();
        if (v == stability_outcome::stable_rejected) continue;
        if (v == stability_outcome::stable_accepted) return false;
        for (const auto& u : unused_arguments(agent, debate)) {
            if (accepted(extended_in_model(agent, debate, u), better->practical_argument,
                         scenario.sem, scenario.mode))
                return false;
        }
    }
    return true;
}

// Baseline ("stability checks disabled"): the agent always pursues its top
// preference, utters arguments that keep it accepted or at least defend it,
// proposes it when out of moves, and accepts only that same offer.
inline std::optional<offer> baseline_goal(const agent_spec& agent,
                                          const negotiation_scenario& scenario) {
    if (agent.preference.empty()) return std::nullopt;
    const offer* o = find_offer(scenario, agent.preference.front());
    return o ? std::optional<offer>(*o) : std::nullopt;
}

inline negotiation_move baseline_move(const agent_spec& agent,
                                      const argumentation_framework& debate,
                                      const negotiation_scenario& scenario) {
    const auto goal = baseline_goal(agent, scenario);
    if (!goal) return pass_move{};
    const argument_id& target = goal->practical_argument;
    const auto unused = unused_arguments(agent, debate);

    for (const auto& u : unused) {
        if (accepted(extended_in_model(agent, debate, u), target, scenario.sem, scenario.mode))
            return utter_move{u};
    }
    // No winning utterance: defend the goal against some debated attacker.
    for (const auto& u : unused) {
        for (const auto& b : debate.arguments()) {
            if (debate.has_attack(b, target) && agent.model.framework.has_attack(u, b))
                return utter_move{u};
        }
    }
    return propose_move{goal->name};
}

} // namespace detail

/// Runs the alternating-turn protocol to termination. Agent 1 moves first;
/// the debate only grows, with attacks induced from the true universe. With
/// `stability_enabled` false the agents ignore their stability checks
/// (baseline behaviour).
inline transcript run_negotiation(const negotiation_scenario& scenario,
                                  bool stability_enabled = true) {
    validate_scenario(scenario);

    const argumentation_framework& uni = scenario.true_universe.framework;
    argumentation_framework debate = uni.restricted_to(scenario.initial_debate);

    transcript log;
    std::optional<std::pair<agent_id, std::string>> pending;
    std::array<std::optional<std::string>, 2> prev_goal;
    for (std::size_t i = 0; i < 2; ++i)
        if (!scenario.agents[i].preference.empty())
            prev_goal[i] = scenario.agents[i].preference.front();
    // per agent: offer last proposed and the debate size at that point
    std::array<std::optional<std::pair<std::string, std::size_t>>, 2> last_proposal;
    int consecutive_passes = 0;

    const std::size_t turn_cap = std::max<std::size_t>(2, 2 * uni.arguments().size());
    for (std::size_t turn = 0; turn < turn_cap; ++turn) {
        const std::size_t who = turn % 2;
        const agent_spec& agent = scenario.agents[who];

        if (pending && pending->first != agent.id) {
            const offer* o = detail::find_offer(scenario, pending->second);
            const bool take = stability_enabled
                                  ? detail::accepts_offer(agent, *o, debate, scenario)
                                  : (detail::baseline_goal(agent, scenario) &&
                                     detail::baseline_goal(agent, scenario)->name == o->name);
            if (take) {
                log.events.push_back(accept_event{agent.id, o->name});
                log.events.push_back(terminate_event{o->name});
                return log;
            }
            pending.reset(); // declined; the agent moves on
        }

        negotiation_move move = pass_move{};
        if (stability_enabled) {
            const auto goal = current_goal(agent, debate, scenario);
            if (goal && prev_goal[who] && goal->name != *prev_goal[who]) {
                const offer* abandoned = detail::find_offer(scenario, *prev_goal[who]);
                log.events.push_back(goal_switch_event{
                    agent.id, *prev_goal[who], goal->name,
                    detail::agent_verdict(agent, debate, abandoned->practical_argument,
                                          scenario)});
            }
            move = select_move(agent, debate, scenario, prev_goal[who]);
            if (goal) prev_goal[who] = goal->name;
        } else {
            move = detail::baseline_move(agent, debate, scenario);
        }

        // A repeated proposal of the same offer at an unchanged debate is a pass.
        if (const auto* prop = std::get_if<propose_move>(&move)) {
            if (last_proposal[who] &&
                *last_proposal[who] ==
                    std::make_pair(prop->offer_name, debate.arguments().size()))
                move = pass_move{};
        }

        if (const auto* utter = std::get_if<utter_move>(&move)) {
            std::vector<argument_id> args = debate.arguments();
            args.push_back(utter->argument);
            debate = uni.restricted_to(std::move(args));
            log.events.push_back(utter_event{agent.id, utter->argument});
            consecutive_passes = 0;
            // nothing left to say once the debate saturates the universe
            if (debate.arguments() == uni.arguments()) {
                log.events.push_back(terminate_event{std::nullopt});
                return log;
            }
        } else if (const auto* prop = std::get_if<propose_move>(&move)) {
            last_proposal[who] = {prop->offer_name, debate.arguments().size()};
            pending = {agent.id, prop->offer_name};
            log.events.push_back(propose_event{agent.id, prop->offer_name});
            consecutive_passes = 0;
        } else {
            log.events.push_back(pass_event{agent.id});
            if (++consecutive_passes >= 2) {
                log.events.push_back(terminate_event{std::nullopt});
                return log;
            }
        }
    }

    log.events.push_back(terminate_event{std::nullopt}); // hard turn cap
    return log;
}

// --- scenario file -----------------------------------------------------------

/// Parses the sectioned scenario format:
///   [universe]   APX statements for the true universe
///   [offers]     lines `offer <name> <practical-arg>`
///   [agent 1] / [agent 2]
///                `prefers: o3 > o2 > o1`, `portfolio: a1 a2 a3`, and an
///                optional `model:` followed by APX statements (defaults to
///                the true universe)
///   [initial]    whitespace-separated argument names
///   [protocol]   `semantics: st` and `mode: credulous`
/// `%` starts a comment line anywhere.
inline negotiation_scenario parse_scenario(std::string_view text) {
    enum class section { none, universe, offers, agent1, agent2, initial, protocol };
    section where = section::none;
    bool in_model = false;

    std::vector<detail::apx_statement> universe_statements;
    std::array<std::vector<detail::apx_statement>, 2> model_statements;
    std::array<bool, 2> has_model{false, false};
    std::array<std::vector<std::string>, 2> preference;
    std::array<std::vector<argument_id>, 2> portfolio;
    std::array<bool, 2> seen_agent{false, false};
    std::vector<offer> offers;
    std::vector<argument_id> initial;
    std::optional<semantics> sem;
    std::optional<acceptance_mode> mode;

    auto split_tokens = [](std::string_view s) {
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
            if (i > start) tokens.emplace_back(s.substr(start, i - start));
        }
        return tokens;
    };

    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line.empty() || line.front() == '%') return;

        if (line.front() == '[') {
            in_model = false;
            if (line == "[universe]") where = section::universe;
            else if (line == "[offers]") where = section::offers;
            else if (line == "[agent 1]") { where = section::agent1; seen_agent[0] = true; }
            else if (line == "[agent 2]") { where = section::agent2; seen_agent[1] = true; }
            else if (line == "[initial]") where = section::initial;
            else if (line == "[protocol]") where = section::protocol;
            else throw parse_error(line_no, "unknown section " + std::string(line));
            return;
        }

        switch (where) {
            case section::none:
                throw parse_error(line_no, "content before the first section header");
            case section::universe:
                universe_statements.push_back(detail::parse_apx_statement(line, line_no));
                return;
            case section::offers: {
                auto tokens = split_tokens(line);
                if (tokens.size() != 3 || tokens[0] != "offer")
                    throw parse_error(line_no, "expected 'offer <name> <practical-arg>'");
                offers.push_back(offer{tokens[1], argument_id(tokens[2])});
                return;
            }
            case section::agent1:
            case section::agent2: {
                const std::size_t who = where == section::agent1 ? 0 : 1;
                if (in_model) {
                    model_statements[who].push_back(detail::parse_apx_statement(line, line_no));
                    return;
                }
                if (line.starts_with("prefers:")) {
                    std::string_view rest = line.substr(8);
                    std::size_t pos = 0;
                    std::string ranking(rest);
                    std::vector<std::string> ranked;
                    while (pos <= ranking.size()) {
                        std::size_t gt = ranking.find('>', pos);
                        std::string token = ranking.substr(
                            pos, gt == std::string::npos ? std::string::npos : gt - pos);
                        auto parts = split_tokens(token);
                        if (parts.size() != 1)
                            throw parse_error(line_no, "malformed preference ranking");
                        ranked.push_back(parts.front());
                        if (gt == std::string::npos) break;
                        pos = gt + 1;
                    }
                    preference[who] = std::move(ranked);
                    return;
                }
                if (line.starts_with("portfolio:")) {
                    for (const auto& token : split_tokens(line.substr(10)))
                        portfolio[who].emplace_back(token);
                    return;
                }
                if (line == "model:") {
                    has_model[who] = true;
                    in_model = true;
                    return;
                }
                throw parse_error(line_no, "expected prefers:, portfolio: or model:");
            }
            case section::initial:
                for (const auto& token : split_tokens(line)) initial.emplace_back(token);
                return;
            case section::protocol: {
                if (line.starts_with("semantics:")) {
                    auto tokens = split_tokens(line.substr(10));
                    if (tokens.size() != 1 || !(sem = semantics_from_string(tokens.front())))
                        throw parse_error(line_no, "semantics must be one of gr, co, st, pr");
                    return;
                }
                if (line.starts_with("mode:")) {
                    auto tokens = split_tokens(line.substr(5));
                    if (tokens.size() != 1 ||
                        !(mode = acceptance_mode_from_string(tokens.front())))
                        throw parse_error(line_no, "mode must be credulous or skeptical");
                    return;
                }
                throw parse_error(line_no, "expected semantics: or mode:");
            }
        }
    });

    auto as_universe = [](const std::vector<detail::apx_statement>& statements,
                          const char* role) {
        apx_value value = detail::assemble_apx(statements);
        if (std::holds_alternative<incomplete_af>(value))
            throw invalid_scenario_error(std::string(role) +
                                         " must not contain ?arg statements");
        return universe{std::get<argumentation_framework>(std::move(value))};
    };

    if (!seen_agent[0] || !seen_agent[1])
        throw invalid_scenario_error("both [agent 1] and [agent 2] sections are required");
    if (!sem || !mode)
        throw invalid_scenario_error("the [protocol] section must set semantics and mode");

    negotiation_scenario scenario{
        as_universe(universe_statements, "the universe"),
        std::move(offers),
        {agent_spec{agent_id::agent1, std::move(preference[0]), std::move(portfolio[0]),
                    universe{}},
         agent_spec{agent_id::agent2, std::move(preference[1]), std::move(portfolio[1]),
                    universe{}}},
        std::move(initial),
        *sem,
        *mode};
    for (std::size_t who = 0; who < 2; ++who) {
        scenario.agents[who].model =
            has_model[who] ? as_universe(model_statements[who], "an agent model")
                           : scenario.true_universe;
    }

    validate_scenario(scenario);
    return scenario;
}

} // namespace argstab

#endif
