#ifndef ARGSTAB_SEMANTICS_HPP
#define ARGSTAB_SEMANTICS_HPP

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "argstab/af.hpp"
#include "argstab/errors.hpp"

namespace argstab {

namespace detail {

// Index view of a framework: arguments 0..n-1 in sorted-name order, with
// attacker/attackee adjacency lists.
struct framework_index {
    const argumentation_framework& af;
    std::size_t n;
    std::vector<std::vector<int>> attackers;
    std::vector<std::vector<int>> attackees;

    explicit framework_index(const argumentation_framework& framework)
        : af(framework), n(framework.arguments().size()), attackers(n), attackees(n) {
        for (const auto& [src, dst] : framework.attacks()) {
            int s = index_of(src);
            int d = index_of(dst);
            attackers[d].push_back(s);
            attackees[s].push_back(d);
        }
    }

    int index_of(const argument_id& id) const {
        const auto& args = af.arguments();
        auto it = std::lower_bound(args.begin(), args.end(), id);
        if (it == args.end() || *it != id) throw unknown_argument_error(id.name());
        return static_cast<int>(it - args.begin());
    }

    extension to_extension(const std::vector<int>& members) const {
        extension result;
        result.reserve(members.size());
        for (int i : members) result.push_back(af.arguments()[i]);
        return result; // members ascending => names sorted
    }
};

// Canonical extension order: by size, then lexicographic member names.
inline bool extension_less(const extension& a, const extension& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline void canonicalize(std::vector<extension>& exts) {
    for (auto& e : exts) std::sort(e.begin(), e.end());
    std::sort(exts.begin(), exts.end(), extension_less);
    exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
}

inline std::vector<int> member_indices(const framework_index& idx,
                                       const std::vector<argument_id>& s) {
    std::vector<int> members;
    members.reserve(s.size());
    for (const auto& id : s) members.push_back(idx.index_of(id));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

// --- labelling search -------------------------------------------------------
//
// Complete extensions are enumerated as complete labellings: every argument
// ends up in / out / undec with
//   in    <=>  all attackers are out,
//   out   <=>  some attacker is in.
// The search branches on unknown arguments and propagates forced labels; a
// final check validates the two conditions exactly, so the propagation only
// has to be sound, not clever.

enum class label : std::uint8_t { unknown, in, out, undec };

class complete_enumerator {
public:
    explicit complete_enumerator(const framework_index& idx) : idx_(idx) {}

    std::vector<std::vector<int>> run() {
        std::vector<label> lab(idx_.n, label::unknown);
        search(lab);
        return std::move(found_);
    }

private:
    const framework_index& idx_;
    std::vector<std::vector<int>> found_;

    // Applies forced labels until a fixpoint; returns false on contradiction.
    bool propagate(std::vector<label>& lab) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < idx_.n; ++x) {
                bool all_out = true, some_in = false, has_unknown = false;
                for (int y : idx_.attackers[x]) {
                    if (lab[y] != label::out) all_out = false;
                    if (lab[y] == label::in) some_in = true;
                    if (lab[y] == label::unknown) has_unknown = true;
                }
                switch (lab[x]) {
                    case label::unknown:
                        if (some_in) { lab[x] = label::out; changed = true; }
                        else if (all_out) { lab[x] = label::in; changed = true; }
                        break;
                    case label::in:
                        if (some_in) return false;
                        // every attacker of an in argument must be out
                        for (int y : idx_.attackers[x]) {
                            if (lab[y] == label::undec) return false;
                            if (lab[y] == label::unknown) { lab[y] = label::out; changed = true; }
                        }
                        break;
                    case label::out:
                        if (!some_in && !has_unknown) return false;
                        break;
                    case label::undec:
                        if (some_in || all_out) return false;
                        break;
                }
            }
        }
        return true;
    }

    bool is_complete_labelling(const std::vector<label>& lab) const {
        for (std::size_t x = 0; x < idx_.n; ++x) {
            bool all_out = true, some_in = false;
            for (int y : idx_.attackers[x]) {
                if (lab[y] != label::out) all_out = false;
                if (lab[y] == label::in) some_in = true;
            }
            if ((lab[x] == label::in) != all_out) return false;
            if ((lab[x] == label::out) != some_in) return false;
        }
        return true;
    }

    void search(std::vector<label> lab) {
        if (!propagate(lab)) return;
        auto it = std::find(lab.begin(), lab.end(), label::unknown);
        if (it == lab.end()) {
            if (is_complete_labelling(lab)) {
                std::vector<int> members;
                for (std::size_t x = 0; x < idx_.n; ++x)
                    if (lab[x] == label::in) members.push_back(static_cast<int>(x));
                found_.push_back(std::move(members));
            }
            return;
        }
        std::size_t x = static_cast<std::size_t>(it - lab.begin());
        for (label choice : {label::in, label::out, label::undec}) {
            std::vector<label> next = lab;
            next[x] = choice;
            search(std::move(next));
        }
    }
};

// Least fixpoint of the characteristic function, as member indices.
inline std::vector<int> grounded_indices(const framework_index& idx) {
    std::vector<char> in(idx.n, 0), attacked_by_in(idx.n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < idx.n; ++x) {
            if (in[x]) continue;
            bool defended = true;
            for (int y : idx.attackers[x])
                if (!attacked_by_in[y]) { defended = false; break; }
            if (defended) {
                in[x] = 1;
                changed = true;
                for (int z : idx.attackees[x]) attacked_by_in[z] = 1;
            }
        }
    }
    std::vector<int> members;
    for (std::size_t x = 0; x < idx.n; ++x)
        if (in[x]) members.push_back(static_cast<int>(x));
    return members;
}

} // namespace detail

/// True iff no member of `s` attacks another member (or itself).
inline bool conflict_free(const argumentation_framework& af, const std::vector<argument_id>& s) {
    for (const auto& a : s)
        if (!af.contains(a)) throw unknown_argument_error(a.name());
    for (const auto& a : s)
        for (const auto& b : s)
            if (af.has_attack(a, b)) return false;
    return true;
}

/// True iff every attacker of `a` is attacked by some member of `s`.
inline bool defends(const argumentation_framework& af, const std::vector<argument_id>& s,
                    const argument_id& a) {
    if (!af.contains(a)) throw unknown_argument_error(a.name());
    for (const auto& id : s)
        if (!af.contains(id)) throw unknown_argument_error(id.name());
    for (const auto& [src, dst] : af.attacks()) {
        if (dst != a) continue;
        bool countered = false;
        for (const auto& c : s) {
            if (af.has_attack(c, src)) { countered = true; break; }
        }
        if (!countered) return false;
    }
    return true;
}

/// The set of arguments defended by `s`.
inline extension characteristic_function(const argumentation_framework& af,
                                         const std::vector<argument_id>& s) {
    for (const auto& id : s)
        if (!af.contains(id)) throw unknown_argument_error(id.name());
    extension result;
    for (const auto& a : af.arguments())
        if (defends(af, s, a)) result.push_back(a);
    return result;
}

/// All extensions of `af` under `sem`, canonically ordered (size, then
/// lexicographic members). Grounded always yields exactly one extension;
/// stable may yield none.
inline std::vector<extension> extensions(const argumentation_framework& af, semantics sem) {
    detail::framework_index idx(af);

    if (sem == semantics::grounded) {
        std::vector<extension> result{idx.to_extension(detail::grounded_indices(idx))};
        return result;
    }

    detail::complete_enumerator enumerator(idx);
    std::vector<std::vector<int>> complete = enumerator.run();

    std::vector<std::vector<int>> keep;
    switch (sem) {
        case semantics::complete:
            keep = std::move(complete);
            break;
        case semantics::stable:
            // stable = complete with nothing left undecided
            for (auto& members : complete) {
                std::vector<char> covered(idx.n, 0);
                for (int x : members) {
                    covered[x] = 1;
                    for (int z : idx.attackees[x]) covered[z] = 1;
                }
                if (std::find(covered.begin(), covered.end(), 0) == covered.end())
                    keep.push_back(std::move(members));
            }
            break;
        case semantics::preferred:
            for (std::size_t i = 0; i < complete.size(); ++i) {
                bool maximal = true;
                for (std::size_t j = 0; j < complete.size(); ++j) {
                    if (i == j) continue;
                    if (complete[i].size() < complete[j].size() &&
                        std::includes(complete[j].begin(), complete[j].end(),
                                      complete[i].begin(), complete[i].end())) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) keep.push_back(complete[i]);
            }
            break;
        case semantics::grounded:
            break; // handled above
    }

    std::vector<extension> result;
    result.reserve(keep.size());
    for (const auto& members : keep) result.push_back(idx.to_extension(members));
    detail::canonicalize(result);
    return result;
}

/// Guard for power-set style enumeration.
inline constexpr std::size_t enumeration_guard = 25;

/// Brute-force reference: walks all 2^n subsets and tests the defining
/// conditions of each semantics directly. Rejects frameworks with more than
/// `enumeration_guard` arguments.
inline std::vector<extension> extensions_oracle(const argumentation_framework& af, semantics sem) {
    const std::size_t n = af.arguments().size();
    if (n > enumeration_guard) throw enumeration_limit_error(n, enumeration_guard);

    detail::framework_index idx(af);
    std::vector<std::uint32_t> attacker_mask(n, 0), attackee_mask(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (int y : idx.attackers[x]) attacker_mask[x] |= std::uint32_t{1} << y;
        for (int z : idx.attackees[x]) attackee_mask[x] |= std::uint32_t{1} << z;
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << n) - 1);

    std::vector<std::uint32_t> complete_masks;
    std::vector<std::uint32_t> stable_masks;
    for (std::uint32_t s = 0;; ++s) {
        std::uint32_t attacked = 0, attackers_of_s = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (s & (std::uint32_t{1} << x)) {
                attacked |= attackee_mask[x];
                attackers_of_s |= attacker_mask[x];
            }
        }
        bool cf = (attacked & s) == 0;
        bool admissible = cf && (attackers_of_s & ~attacked) == 0;
        if (cf && (s | attacked) == full) stable_masks.push_back(s);
        if (admissible) {
            std::uint32_t defended = 0;
            for (std::size_t x = 0; x < n; ++x)
                if ((attacker_mask[x] & ~attacked) == 0) defended |= std::uint32_t{1} << x;
            if (defended == s) complete_masks.push_back(s);
        }
        if (s == full) break;
    }

    std::vector<std::uint32_t> chosen;
    switch (sem) {
        case semantics::complete:
            chosen = complete_masks;
            break;
        case semantics::stable:
            chosen = stable_masks;
            break;
        case semantics::grounded: {
            // unique subset-minimal complete extension
            std::uint32_t best = complete_masks.empty() ? 0 : complete_masks.front();
            for (std::uint32_t m : complete_masks)
                if ((m & best) == m) best = m;
            chosen = {best};
            break;
        }
        case semantics::preferred:
            for (std::uint32_t m : complete_masks) {
                bool maximal = true;
                for (std::uint32_t other : complete_masks)
                    if (other != m && (m & other) == m) { maximal = false; break; }
                if (maximal) chosen.push_back(m);
            }
            break;
    }

    std::vector<extension> result;
    result.reserve(chosen.size());
    for (std::uint32_t m : chosen) {
        std::vector<int> members;
        for (std::size_t x = 0; x < n; ++x)
            if (m & (std::uint32_t{1} << x)) members.push_back(static_cast<int>(x));
        result.push_back(idx.to_extension(members));
    }
    detail::canonicalize(result);
    return result;
}

/// Credulous: member of some extension. Skeptical: member of every extension;
/// vacuously true when there is no extension (possible only for stable).
inline bool accepted(const argumentation_framework& af, const argument_id& a, semantics sem,
                     acceptance_mode mode) {
    if (!af.contains(a)) throw unknown_argument_error(a.name());
    const auto exts = extensions(af, sem);
    if (mode == acceptance_mode::credulous) {
        for (const auto& e : exts)
            if (std::binary_search(e.begin(), e.end(), a)) return true;
        return false;
    }
    for (const auto& e : exts)
        if (!std::binary_search(e.begin(), e.end(), a)) return false;
    return true;
}

} // namespace argstab

#endif
