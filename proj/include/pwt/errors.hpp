#pragma once

#include <stdexcept>
#include <string>

namespace pwt {

// Malformed input: bad spec fields, unparsable rationals, inconsistent geometry.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's stated domain (e.g. K not contained in omega).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A checked internal invariant failed; indicates an engine bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pwt
