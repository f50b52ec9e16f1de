#ifndef ARGSTAB_IAF_HPP
#define ARGSTAB_IAF_HPP

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "argstab/af.hpp"
#include "argstab/errors.hpp"
#include "argstab/semantics.hpp"

namespace argstab {

enum class necessity_mode { possible, necessary };

inline std::string_view to_string(necessity_mode nec) {
    return nec == necessity_mode::possible ? "possible" : "necessary";
}

inline std::optional<necessity_mode> necessity_mode_from_string(std::string_view text) {
    if (text == "possible") return necessity_mode::possible;
    if (text == "necessary") return necessity_mode::necessary;
    return std::nullopt;
}

/// Argument-incomplete AF: certain arguments, uncertain arguments (disjoint),
/// and an attack relation over their union.
class incomplete_af {
public:
    incomplete_af() = default;

    incomplete_af(std::vector<argument_id> certain, std::vector<argument_id> uncertain,
                  std::vector<attack> attacks)
        : certain_(std::move(certain)), uncertain_(std::move(uncertain)),
          attacks_(std::move(attacks)) {
        detail::sort_unique(certain_);
        detail::sort_unique(uncertain_);
        detail::sort_unique(attacks_);
        for (const auto& id : uncertain_)
            if (detail::sorted_contains(certain_, id))
                throw error("argument '" + id.name() + "' is both certain and uncertain");
        for (const auto& [src, dst] : attacks_) {
            if (!contains(src)) throw unknown_argument_error(src.name());
            if (!contains(dst)) throw unknown_argument_error(dst.name());
        }
    }

    const std::vector<argument_id>& certain() const { return certain_; }
    const std::vector<argument_id>& uncertain() const { return uncertain_; }
    const std::vector<attack>& attacks() const { return attacks_; }

    bool contains(const argument_id& id) const {
        return detail::sorted_contains(certain_, id) || detail::sorted_contains(uncertain_, id);
    }

    friend bool operator==(const incomplete_af&, const incomplete_af&) = default;

private:
    std::vector<argument_id> certain_;
    std::vector<argument_id> uncertain_;
    std::vector<attack> attacks_;
};

namespace detail {

// Visits each completion in canonical order: included-uncertain subsets as
// bit patterns over the lexicographically sorted uncertain arguments.
// `fn` returning false stops the walk early.
template <typename Fn>
void for_each_completion(const std::vector<argument_id>& certain,
                         const std::vector<argument_id>& optional,
                         const std::vector<attack>& attacks, Fn&& fn) {
    if (optional.size() > enumeration_guard)
        throw enumeration_limit_error(optional.size(), enumeration_guard);
    const std::uint32_t count = std::uint32_t{1} << optional.size();
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        std::vector<argument_id> args = certain;
        for (std::size_t i = 0; i < optional.size(); ++i)
            if (bits & (std::uint32_t{1} << i)) args.push_back(optional[i]);
        sort_unique(args);
        std::vector<attack> induced;
        for (const auto& att : attacks)
            if (sorted_contains(args, att.first) && sorted_contains(args, att.second))
                induced.push_back(att);
        if (!fn(argumentation_framework(std::move(args), std::move(induced))))
            return;
    }
}

} // namespace detail

/// All 2^|uncertain| completions, in canonical order.
inline std::vector<argumentation_framework> completions(const incomplete_af& iaf) {
    std::vector<argumentation_framework> result;
    result.reserve(std::size_t{1} << std::min<std::size_t>(iaf.uncertain().size(), 20));
    detail::for_each_completion(iaf.certain(), iaf.uncertain(), iaf.attacks(),
                                [&](argumentation_framework af) {
                                    result.push_back(std::move(af));
                                    return true;
                                });
    return result;
}

/// Possible: accepted in some completion. Necessary: accepted in every
/// completion. Queries are only defined for certain arguments.
inline bool iaf_accepted(const incomplete_af& iaf, const argument_id& a, semantics sem,
                         acceptance_mode mode, necessity_mode nec) {
    if (detail::sorted_contains(iaf.uncertain(), a)) throw uncertain_argument_error(a.name());
    if (!detail::sorted_contains(iaf.certain(), a)) throw unknown_argument_error(a.name());
    bool result = nec == necessity_mode::necessary;
    detail::for_each_completion(iaf.certain(), iaf.uncertain(), iaf.attacks(),
                                [&](const argumentation_framework& af) {
                                    bool acc = accepted(af, a, sem, mode);
                                    if (nec == necessity_mode::possible && acc) {
                                        result = true;
                                        return false;
                                    }
                                    if (nec == necessity_mode::necessary && !acc) {
                                        result = false;
                                        return false;
                                    }
                                    return true;
                                });
    return result;
}

} // namespace argstab

#endif
