#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "argstab/semantics.hpp"
#include "argstab/stability.hpp"
#include "support.hpp"

using namespace argstab;
using support::ids;

TEST_CASE("problem validation")
{
    CHECK_NOTHROW(validate_problem(
        support::stability_example("a3", semantics::stable, acceptance_mode::credulous)));

    auto uni = support::stability_universe();
    CHECK_NOTHROW(validate_problem(stability_problem{
        universe{uni}, uni, argument_id("a1"), semantics::stable, acceptance_mode::credulous}));

    // current framework drops an attack the universe induces
    const auto bad_current = support::make_af({"a3", "a4"}, {{"a3", "a4"}});
    CHECK_THROWS_AS(validate_problem(stability_problem{universe{uni}, bad_current,
                                                       argument_id("a3"), semantics::stable,
                                                       acceptance_mode::credulous}),
                    invalid_problem_error);

    // current framework with an argument outside the universe
    const auto foreign = support::make_af({"zz"}, {});
    CHECK_THROWS_AS(validate_problem(stability_problem{universe{uni}, foreign,
                                                       argument_id("zz"), semantics::stable,
                                                       acceptance_mode::credulous}),
                    invalid_problem_error);

    // target missing from the current framework
    auto p = support::stability_example("a3", semantics::stable, acceptance_mode::credulous);
    p.target = argument_id("a1");
    CHECK_THROWS_AS(validate_problem(p), invalid_problem_error);
}

TEST_CASE("future AFs")
{
    const auto p = support::stability_example("a3", semantics::stable,
                                              acceptance_mode::credulous);
    const auto futures = future_afs(p);
    REQUIRE(futures.size() == 4); // optional arguments a1, a2
    CHECK(futures[0] == p.current);
    CHECK(futures[1] == p.u.framework.restricted_to(ids({"a1", "a3", "a4", "a5", "a6", "a7"})));
    CHECK(futures[2] == p.u.framework.restricted_to(ids({"a2", "a3", "a4", "a5", "a6", "a7"})));
    CHECK(futures[3] == p.u.framework);

    auto whole = p;
    whole.current = p.u.framework;
    whole.target = argument_id("a1");
    CHECK(future_afs(whole) == std::vector<argumentation_framework>{p.u.framework});
}

TEST_CASE("corresponding IAF")
{
    const auto p = support::stability_example("a3", semantics::stable,
                                              acceptance_mode::credulous);
    const auto iaf = corresponding_iaf(p);
    CHECK(iaf.certain() == ids({"a3", "a4", "a5", "a6", "a7"}));
    CHECK(iaf.uncertain() == ids({"a1", "a2"}));
    CHECK(iaf.attacks() == p.u.framework.attacks());

    // the completions are exactly the future AFs
    CHECK(completions(iaf) == future_afs(p));

    auto whole = p;
    whole.current = p.u.framework;
    whole.target = argument_id("a1");
    CHECK(corresponding_iaf(whole).uncertain().empty());

    const auto nego = support::nego_universe();
    const stability_problem nego_problem{
        universe{nego}, nego.restricted_to(ids({"a1", "a2", "a3", "p1", "p2", "p3"})),
        argument_id("p1"), semantics::stable, acceptance_mode::credulous};
    CHECK(corresponding_iaf(nego_problem).uncertain() == ids({"a4", "a5", "a6"}));
    CHECK(future_afs(nego_problem).size() == 8);
}

TEST_CASE("stability verdicts on the worked example")
{
    const auto credulous = check_stability(
        support::stability_example("a3", semantics::stable, acceptance_mode::credulous));
    REQUIRE(credulous.outcome() == stability_outcome::unstable);
    REQUIRE(credulous.witness_accepting().has_value());
    REQUIRE(credulous.witness_rejecting().has_value());
    // first accepting completion is the current AF itself; the first
    // rejecting one adds a2
    CHECK(*credulous.witness_accepting() ==
          support::stability_example("a3", semantics::stable, acceptance_mode::credulous)
              .current);
    CHECK(credulous.witness_rejecting()->contains(argument_id("a2")));

    CHECK(check_stability(support::stability_example("a3", semantics::stable,
                                                     acceptance_mode::skeptical))
              .outcome() == stability_outcome::stable_rejected);
    CHECK(check_stability(support::stability_example("a6", semantics::stable,
                                                     acceptance_mode::skeptical))
              .outcome() == stability_outcome::stable_accepted);

    for (semantics sem : all_semantics)
        for (acceptance_mode mode :
             {acceptance_mode::credulous, acceptance_mode::skeptical})
            CHECK(check_stability(support::stability_example("a6", sem, mode)).outcome() ==
                  stability_outcome::stable_accepted);
}

TEST_CASE("negotiation example: p1 is settled once a1..a3 are in the debate")
{
    const auto nego = support::nego_universe();
    for (acceptance_mode mode : {acceptance_mode::credulous, acceptance_mode::skeptical}) {
        const stability_problem p{
            universe{nego}, nego.restricted_to(ids({"a1", "a2", "a3", "p1", "p2", "p3"})),
            argument_id("p1"), semantics::stable, mode};
        CHECK(check_stability(p).outcome() == stability_outcome::stable_rejected);
    }
}

TEST_CASE("stable verdicts carry no witnesses")
{
    const auto verdict = check_stability(
        support::stability_example("a6", semantics::stable, acceptance_mode::skeptical));
    CHECK_FALSE(verdict.witness_accepting().has_value());
    CHECK_FALSE(verdict.witness_rejecting().has_value());
}

TEST_CASE("unattacked targets are stable-accepted everywhere")
{
    const auto p = support::stability_example("a7", semantics::stable,
                                              acceptance_mode::credulous);
    for (semantics sem : all_semantics)
        for (acceptance_mode mode :
             {acceptance_mode::credulous, acceptance_mode::skeptical}) {
            auto q = p;
            q.sem = sem;
            q.mode = mode;
            CHECK(check_stability(q).outcome() == stability_outcome::stable_accepted);
        }
}

TEST_CASE("current equal to the universe reduces to plain acceptance")
{
    std::mt19937 rng(321321);
    for (int round = 0; round < 40; ++round) {
        auto uni = support::random_af(rng, 8);
        if (uni.arguments().empty()) continue;
        const auto sem = support::random_semantics(rng);
        const auto mode = support::random_mode(rng);
        const auto& target = uni.arguments().front();
        const stability_problem p{universe{uni}, uni, target, sem, mode};
        CAPTURE(round);

        const auto verdict = check_stability(p);
        CHECK(verdict.outcome() != stability_outcome::unstable);
        CHECK((verdict.outcome() == stability_outcome::stable_accepted) ==
              accepted(uni, target, sem, mode));
    }
}

TEST_CASE("randomized: the IAF route agrees with a direct future-AF loop")
{
    std::mt19937 rng(889900);
    for (int round = 0; round < 80; ++round) {
        const auto p = support::random_stability_problem(rng, 10, 6);
        CAPTURE(round);

        const auto futures = future_afs(p);
        CHECK(completions(corresponding_iaf(p)) == futures);

        bool all = true, none = true;
        std::optional<argumentation_framework> first_accepting, first_rejecting;
        for (const auto& f : futures) {
            if (accepted(f, p.target, p.sem, p.mode)) {
                none = false;
                if (!first_accepting) first_accepting = f;
            } else {
                all = false;
                if (!first_rejecting) first_rejecting = f;
            }
        }

        const auto verdict = check_stability(p);
        if (all) {
            CHECK(verdict.outcome() == stability_outcome::stable_accepted);
        } else if (none) {
            CHECK(verdict.outcome() == stability_outcome::stable_rejected);
        } else {
            REQUIRE(verdict.outcome() == stability_outcome::unstable);
            CHECK(*verdict.witness_accepting() == *first_accepting);
            CHECK(*verdict.witness_rejecting() == *first_rejecting);
        }
    }
}
