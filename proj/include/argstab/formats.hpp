#ifndef ARGSTAB_FORMATS_HPP
#define ARGSTAB_FORMATS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argstab/af.hpp"
#include "argstab/errors.hpp"
#include "argstab/iaf.hpp"
#include "argstab/stability.hpp"

namespace argstab {

/// Either a plain AF (no `?arg` statements in the source) or an IAF.
using apx_value = std::variant<argumentation_framework, incomplete_af>;

namespace detail {

struct apx_statement {
    enum class kind { arg, uncertain_arg, att };
    kind what;
    std::size_t line;
    std::string first;
    std::string second; // attacks only
};

// One line, comments and surrounding whitespace already stripped.
inline apx_statement parse_apx_statement(std::string_view text, std::size_t line) {
    auto fail = [&](const std::string& msg) -> apx_statement { throw parse_error(line, msg); };

    apx_statement st;
    st.line = line;
    if (text.starts_with("?arg")) {
        st.what = apx_statement::kind::uncertain_arg;
        text.remove_prefix(4);
    } else if (text.starts_with("arg")) {
        st.what = apx_statement::kind::arg;
        text.remove_prefix(3);
    } else if (text.starts_with("att")) {
        st.what = apx_statement::kind::att;
        text.remove_prefix(3);
    } else {
        return fail("expected arg(...), ?arg(...) or att(...,...)");
    }

    auto skip_space = [&] {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
            text.remove_prefix(1);
    };
    auto expect = [&](char c, const std::string& what) {
        skip_space();
        if (text.empty() || text.front() != c) fail("expected '" + std::string(1, c) + "' " + what);
        text.remove_prefix(1);
    };
    auto read_token = [&]() -> std::string {
        skip_space();
        std::size_t len = 0;
        while (len < text.size() && text[len] != '(' && text[len] != ')' && text[len] != ',' &&
               text[len] != ' ' && text[len] != '\t')
            ++len;
        if (len == 0) fail("expected an argument name");
        std::string token(text.substr(0, len));
        text.remove_prefix(len);
        return token;
    };

    expect('(', "after the statement keyword");
    st.first = read_token();
    if (st.what == apx_statement::kind::att) {
        expect(',', "between attack endpoints");
        st.second = read_token();
    }
    expect(')', "to close the statement");
    expect('.', "to end the statement");
    skip_space();
    if (!text.empty()) fail("unexpected trailing text");
    return st;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Splits into lines; accepts LF and CRLF.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t nl = text.find('\n');
        std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
        fn(trim(line), line_no);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

inline std::vector<apx_statement> parse_apx_statements(std::string_view text) {
    std::vector<apx_statement> statements;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line.empty() || line.front() == '%') return;
        statements.push_back(parse_apx_statement(line, line_no));
    });
    return statements;
}

apx_value assemble_apx(const std::vector<apx_statement>& statements);

} // namespace detail

/// Parses APX text. `arg(x).` declares a certain argument, `?arg(x).` an
/// uncertain one, `att(x,y).` an attack; `%` starts a comment line. Returns a
/// plain AF when no `?arg` statement occurs.
inline apx_value parse_apx(std::string_view text) {
    return detail::assemble_apx(detail::parse_apx_statements(text));
}

inline apx_value detail::assemble_apx(const std::vector<apx_statement>& statements) {
    std::vector<argument_id> certain, uncertain;
    std::vector<attack> attacks;
    std::vector<std::size_t> attack_lines;
    bool saw_uncertain = false;

    auto declared = [&](const argument_id& id) {
        return std::find(certain.begin(), certain.end(), id) != certain.end() ||
               std::find(uncertain.begin(), uncertain.end(), id) != uncertain.end();
    };

    for (const auto& st : statements) {
        switch (st.what) {
            case apx_statement::kind::arg:
            case apx_statement::kind::uncertain_arg: {
                argument_id id = [&] {
                    try {
                        return argument_id(st.first);
                    } catch (const error& e) {
                        throw parse_error(st.line, e.what());
                    }
                }();
                if (declared(id)) throw duplicate_declaration_error(st.line, id.name());
                if (st.what == apx_statement::kind::uncertain_arg) {
                    uncertain.push_back(id);
                    saw_uncertain = true;
                } else {
                    certain.push_back(id);
                }
                break;
            }
            case apx_statement::kind::att: {
                attacks.emplace_back(argument_id(st.first), argument_id(st.second));
                attack_lines.push_back(st.line);
                break;
            }
        }
    }

    for (std::size_t i = 0; i < attacks.size(); ++i) {
        if (!declared(attacks[i].first))
            throw undeclared_endpoint_error(attack_lines[i], attacks[i].first.name());
        if (!declared(attacks[i].second))
            throw undeclared_endpoint_error(attack_lines[i], attacks[i].second.name());
    }

    if (saw_uncertain)
        return incomplete_af(std::move(certain), std::move(uncertain), std::move(attacks));
    return argumentation_framework(std::move(certain), std::move(attacks));
}

/// Canonical APX text: sorted `arg` lines, then sorted `?arg` lines, then
/// attacks sorted by (source, target). Empty frameworks serialize to empty
/// text. parse_apx(serialize_apx(v)) reproduces v structurally.
inline std::string serialize_apx(const argumentation_framework& af) {
    std::string out;
    for (const auto& a : af.arguments()) out += "arg(" + a.name() + ").\n";
    for (const auto& [src, dst] : af.attacks())
        out += "att(" + src.name() + "," + dst.name() + ").\n";
    return out;
}

inline std::string serialize_apx(const incomplete_af& iaf) {
    std::string out;
    for (const auto& a : iaf.certain()) out += "arg(" + a.name() + ").\n";
    for (const auto& a : iaf.uncertain()) out += "?arg(" + a.name() + ").\n";
    for (const auto& [src, dst] : iaf.attacks())
        out += "att(" + src.name() + "," + dst.name() + ").\n";
    return out;
}

inline std::string serialize_apx(const apx_value& value) {
    if (const auto* af = std::get_if<argumentation_framework>(&value)) return serialize_apx(*af);
    return serialize_apx(std::get<incomplete_af>(value));
}

/// Parses trivial-graph-format text: node names one per line, a single `#`
/// separator, then `source target` edge lines.
inline argumentation_framework parse_tgf(std::string_view text) {
    std::vector<argument_id> args;
    std::vector<attack> attacks;
    bool seen_separator = false;
    std::size_t last_line = 0;

    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        last_line = line_no;
        if (line.empty()) return;
        if (line == "#") {
            if (seen_separator) throw parse_error(line_no, "second '#' separator");
            seen_separator = true;
            return;
        }
        if (!seen_separator) {
            try {
                args.emplace_back(std::string(line));
            } catch (const error& e) {
                throw parse_error(line_no, e.what());
            }
            return;
        }
        std::size_t space = line.find_first_of(" \t");
        if (space == std::string_view::npos)
            throw parse_error(line_no, "expected 'source target' edge");
        std::string_view src = detail::trim(line.substr(0, space));
        std::string_view dst = detail::trim(line.substr(space));
        if (src.empty() || dst.empty() || dst.find_first_of(" \t") != std::string_view::npos)
            throw parse_error(line_no, "expected 'source target' edge");
        argument_id s{std::string(src)}, d{std::string(dst)};
        if (std::find(args.begin(), args.end(), s) == args.end())
            throw undeclared_endpoint_error(line_no, s.name());
        if (std::find(args.begin(), args.end(), d) == args.end())
            throw undeclared_endpoint_error(line_no, d.name());
        attacks.emplace_back(std::move(s), std::move(d));
    });

    if (!seen_separator) throw parse_error(last_line, "missing '#' separator");
    return argumentation_framework(std::move(args), std::move(attacks));
}

/// Canonical TGF text: sorted nodes, `#`, edges sorted by (source, target).
inline std::string serialize_tgf(const argumentation_framework& af) {
    std::string out;
    for (const auto& a : af.arguments()) out += a.name() + "\n";
    out += "#\n";
    for (const auto& [src, dst] : af.attacks()) out += src.name() + " " + dst.name() + "\n";
    return out;
}

/// Builds a validated stability problem from APX texts. The current AF may
/// omit its attack lines entirely, in which case they are induced from the
/// universe.
inline stability_problem load_stability_problem(std::string_view universe_text,
                                                std::string_view current_text,
                                                const argument_id& target, semantics sem,
                                                acceptance_mode mode) {
    auto as_plain_af = [](std::string_view text, const char* role) {
        apx_value value = parse_apx(text);
        if (std::holds_alternative<incomplete_af>(value))
            throw invalid_problem_error(std::string(role) +
                                        " must be a plain AF without ?arg statements");
        return std::get<argumentation_framework>(std::move(value));
    };

    argumentation_framework uni = as_plain_af(universe_text, "the universe");
    argumentation_framework current = as_plain_af(current_text, "the current AF");
    if (current.attacks().empty() && !current.arguments().empty()) {
        for (const auto& a : current.arguments())
            if (!uni.contains(a))
                throw invalid_problem_error("argument '" + a.name() + "' is not in the universe");
        current = uni.restricted_to(current.arguments());
    }

    stability_problem p{universe{std::move(uni)}, std::move(current), target, sem, mode};
    validate_problem(p);
    return p;
}

} // namespace argstab

#endif
