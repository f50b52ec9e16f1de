#ifndef ARGSTAB_AF_HPP
#define ARGSTAB_AF_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argstab/errors.hpp"

namespace argstab {

/// Name of an argument. Nonempty, no whitespace, parentheses or commas;
/// equality and ordering are by name.
class argument_id {
public:
    explicit argument_id(std::string name) : name_(std::move(name)) {
        if (name_.empty())
            throw error("argument name must not be empty");
        for (char c : name_) {
            if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
                throw error("invalid character in argument name: '" + name_ + "'");
        }
    }

    const std::string& name() const { return name_; }

    friend bool operator==(const argument_id&, const argument_id&) = default;
    friend auto operator<=>(const argument_id& a, const argument_id& b) {
        return a.name_ <=> b.name_;
    }

private:
    std::string name_;
};

using attack = std::pair<argument_id, argument_id>;

/// A set of jointly acceptable arguments, kept sorted by name.
using extension = std::vector<argument_id>;

enum class semantics { grounded, complete, stable, preferred };
enum class acceptance_mode { credulous, skeptical };

inline std::string_view to_string(semantics sem) {
    switch (sem) {
        case semantics::grounded: return "gr";
        case semantics::complete: return "co";
        case semantics::stable: return "st";
        case semantics::preferred: return "pr";
    }
    return "";
}

inline std::string_view to_string(acceptance_mode mode) {
    return mode == acceptance_mode::credulous ? "credulous" : "skeptical";
}

inline std::optional<semantics> semantics_from_string(std::string_view text) {
    if (text == "gr") return semantics::grounded;
    if (text == "co") return semantics::complete;
    if (text == "st") return semantics::stable;
    if (text == "pr") return semantics::preferred;
    return std::nullopt;
}

inline std::optional<acceptance_mode> acceptance_mode_from_string(std::string_view text) {
    if (text == "credulous") return acceptance_mode::credulous;
    if (text == "skeptical") return acceptance_mode::skeptical;
    return std::nullopt;
}

constexpr semantics all_semantics[] = {semantics::grounded, semantics::complete,
                                       semantics::stable, semantics::preferred};

namespace detail {

inline void sort_unique(std::vector<argument_id>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

inline void sort_unique(std::vector<attack>& atts) {
    std::sort(atts.begin(), atts.end());
    atts.erase(std::unique(atts.begin(), atts.end()), atts.end());
}

inline bool sorted_contains(const std::vector<argument_id>& ids, const argument_id& id) {
    return std::binary_search(ids.begin(), ids.end(), id);
}

} // namespace detail

/// Finite directed attack graph over named arguments. Arguments and attacks
/// are stored sorted, so structurally equal frameworks compare equal and
/// serialize identically. Self-attacks are allowed; the empty framework is
/// valid.
class argumentation_framework {
public:
    argumentation_framework() = default;

    argumentation_framework(std::vector<argument_id> arguments, std::vector<attack> attacks)
        : arguments_(std::move(arguments)), attacks_(std::move(attacks)) {
        detail::sort_unique(arguments_);
        detail::sort_unique(attacks_);
        for (const auto& [src, dst] : attacks_) {
            if (!contains(src)) throw unknown_argument_error(src.name());
            if (!contains(dst)) throw unknown_argument_error(dst.name());
        }
    }

    const std::vector<argument_id>& arguments() const { return arguments_; }
    const std::vector<attack>& attacks() const { return attacks_; }

    bool contains(const argument_id& id) const {
        return detail::sorted_contains(arguments_, id);
    }

    bool has_attack(const argument_id& src, const argument_id& dst) const {
        return std::binary_search(attacks_.begin(), attacks_.end(), attack{src, dst});
    }

    bool empty() const { return arguments_.empty(); }

    /// Sub-framework induced by `subset`: the given arguments plus every
    /// attack of this framework between them.
    argumentation_framework restricted_to(std::vector<argument_id> subset) const {
        detail::sort_unique(subset);
        std::vector<attack> atts;
        for (const auto& att : attacks_) {
            if (detail::sorted_contains(subset, att.first) &&
                detail::sorted_contains(subset, att.second))
                atts.push_back(att);
        }
        return argumentation_framework(std::move(subset), std::move(atts));
    }

    friend bool operator==(const argumentation_framework&, const argumentation_framework&) = default;

private:
    std::vector<argument_id> arguments_; // sorted, unique
    std::vector<attack> attacks_;        // sorted, unique, endpoints in arguments_
};

} // namespace argstab

#endif
