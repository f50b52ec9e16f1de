#ifndef ARGSTAB_STABILITY_HPP
#define ARGSTAB_STABILITY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "argstab/af.hpp"
#include "argstab/errors.hpp"
#include "argstab/iaf.hpp"
#include "argstab/semantics.hpp"

namespace argstab {

/// The finite argumentation universe every valid debate state lives in.
struct universe {
    argumentation_framework framework;

    friend bool operator==(const universe&, const universe&) = default;
};

/// A stability query: is `target`'s acceptance status settled across every
/// framework the current AF can still grow into within the universe?
struct stability_problem {
    universe u;
    argumentation_framework current;
    argument_id target;
    semantics sem;
    acceptance_mode mode;
};

enum class stability_outcome { stable_accepted, stable_rejected, unstable };

inline std::string_view to_string(stability_outcome outcome) {
    switch (outcome) {
        case stability_outcome::stable_accepted: return "STABLE-ACCEPTED";
        case stability_outcome::stable_rejected: return "STABLE-REJECTED";
        case stability_outcome::unstable: return "UNSTABLE";
    }
    return "";
}

/// Outcome of a stability check. Unstable verdicts carry one future AF that
/// accepts the target and one that rejects it (first hits in canonical
/// completion order); stable verdicts carry no witnesses.
class stability_verdict {
public:
    static stability_verdict stable_accepted() {
        return stability_verdict(stability_outcome::stable_accepted, {}, {});
    }
    static stability_verdict stable_rejected() {
        return stability_verdict(stability_outcome::stable_rejected, {}, {});
    }
    static stability_verdict unstable(argumentation_framework accepting,
                                      argumentation_framework rejecting) {
        return stability_verdict(stability_outcome::unstable, std::move(accepting),
                                 std::move(rejecting));
    }

    stability_outcome outcome() const { return outcome_; }
    const std::optional<argumentation_framework>& witness_accepting() const {
        return witness_accepting_;
    }
    const std::optional<argumentation_framework>& witness_rejecting() const {
        return witness_rejecting_;
    }

    friend bool operator==(const stability_verdict&, const stability_verdict&) = default;

private:
    stability_verdict(stability_outcome outcome,
                      std::optional<argumentation_framework> accepting,
                      std::optional<argumentation_framework> rejecting)
        : outcome_(outcome), witness_accepting_(std::move(accepting)),
          witness_rejecting_(std::move(rejecting)) {}

    stability_outcome outcome_;
    std::optional<argumentation_framework> witness_accepting_;
    std::optional<argumentation_framework> witness_rejecting_;
};

/// Checks that `current` is a valid sub-framework of the universe (arguments
/// included, attacks exactly the induced ones) and that the target is part of
/// the current AF. Throws invalid_problem_error naming the offender.
inline void validate_problem(const stability_problem& p) {
    const auto& uni = p.u.framework;
    for (const auto& a : p.current.arguments())
        if (!uni.contains(a))
            throw invalid_problem_error("argument '" + a.name() + "' is not in the universe");
    for (const auto& [src, dst] : p.current.attacks())
        if (!uni.has_attack(src, dst))
            throw invalid_problem_error("attack (" + src.name() + "," + dst.name() +
                                        ") is not in the universe");
    for (const auto& [src, dst] : uni.attacks())
        if (p.current.contains(src) && p.current.contains(dst) && !p.current.has_attack(src, dst))
            throw invalid_problem_error("attack (" + src.name() + "," + dst.name() +
                                        ") is missing from the current AF");
    if (!p.current.contains(p.target))
        throw invalid_problem_error("target argument '" + p.target.name() +
                                    "' is not in the current AF");
}

namespace detail {

inline std::vector<argument_id> optional_arguments(const stability_problem& p) {
    std::vector<argument_id> opt;
    for (const auto& a : p.u.framework.arguments())
        if (!p.current.contains(a)) opt.push_back(a);
    return opt; // universe arguments are sorted already
}

} // namespace detail

/// All valid AFs the current one can evolve into (itself included), in
/// canonical completion order.
inline std::vector<argumentation_framework> future_afs(const stability_problem& p) {
    validate_problem(p);
    const auto optional = detail::optional_arguments(p);
    if (optional.size() > enumeration_guard)
        throw enumeration_limit_error(optional.size(), enumeration_guard);

    std::vector<argumentation_framework> result;
    const std::uint32_t count = std::uint32_t{1} << optional.size();
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        std::vector<argument_id> args = p.current.arguments();
        for (std::size_t i = 0; i < optional.size(); ++i)
            if (bits & (std::uint32_t{1} << i)) args.push_back(optional[i]);
        result.push_back(p.u.framework.restricted_to(std::move(args)));
    }
    return result;
}

/// The IAF whose certain arguments are the current AF, whose uncertain
/// arguments are the rest of the universe, and whose attacks are the
/// universe's. Its completions are exactly the future AFs.
inline incomplete_af corresponding_iaf(const stability_problem& p) {
    validate_problem(p);
    return incomplete_af(p.current.arguments(), detail::optional_arguments(p),
                         p.u.framework.attacks());
}

/// Decides stability through the corresponding IAF: the target is stable iff
/// it is necessarily accepted (stable-accepted) or not possibly accepted
/// (stable-rejected) across the IAF's completions. Otherwise the verdict is
/// unstable, with the first accepting and first rejecting completions as
/// witnesses.
inline stability_verdict check_stability(const stability_problem& p) {
    const incomplete_af iaf = corresponding_iaf(p);
    std::optional<argumentation_framework> accepting, rejecting;
    detail::for_each_completion(iaf.certain(), iaf.uncertain(), iaf.attacks(),
                                [&](argumentation_framework af) {
                                    bool acc = accepted(af, p.target, p.sem, p.mode);
                                    if (acc && !accepting) accepting = std::move(af);
                                    if (!acc && !rejecting) rejecting = std::move(af);
                                    return !(accepting && rejecting);
                                });
    if (accepting && rejecting)
        return stability_verdict::unstable(std::move(*accepting), std::move(*rejecting));
    if (accepting) return stability_verdict::stable_accepted();
    return stability_verdict::stable_rejected();
}

} // namespace argstab

#endif
