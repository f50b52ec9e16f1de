#ifndef ARGSTAB_ERRORS_HPP
#define ARGSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argstab {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An argument id was used that the framework does not contain.
class unknown_argument_error : public error {
public:
    explicit unknown_argument_error(const std::string& name)
        : error("unknown argument: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Exact enumeration was asked to walk more subsets than the guard allows.
class enumeration_limit_error : public error {
public:
    enumeration_limit_error(std::size_t count, std::size_t limit)
        : error("enumeration over " + std::to_string(count) +
                " elements exceeds the limit of " + std::to_string(limit)) {}
};

// Text input could not be parsed; carries a 1-based line number.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& message)
        : error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class duplicate_declaration_error : public parse_error {
public:
    duplicate_declaration_error(std::size_t line, const std::string& name)
        : parse_error(line, "duplicate declaration of '" + name + "'") {}
};

class undeclared_endpoint_error : public parse_error {
public:
    undeclared_endpoint_error(std::size_t line, const std::string& name)
        : parse_error(line, "attack endpoint '" + name + "' is not declared") {}
};

// A stability problem whose current AF is not a valid sub-framework of the
// universe, or whose target argument is missing.
class invalid_problem_error : public error {
public:
    explicit invalid_problem_error(const std::string& what) : error(what) {}
};

// An IAF acceptance query about an uncertain argument.
class uncertain_argument_error : public error {
public:
    explicit uncertain_argument_error(const std::string& name)
        : error("argument '" + name + "' is uncertain; acceptance queries require a certain argument") {}
};

// The debate is not a valid sub-framework of an agent's model universe.
class model_inconsistency_error : public error {
public:
    explicit model_inconsistency_error(const std::string& what) : error(what) {}
};

// A negotiation scenario that parses but violates a structural requirement.
class invalid_scenario_error : public error {
public:
    explicit invalid_scenario_error(const std::string& what) : error(what) {}
};

} // namespace argstab

#endif
