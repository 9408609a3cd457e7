#pragma once

#include <stdexcept>
#include <string>

namespace corank {

// Malformed user input: bad DSL text, bad JSON, bad CLI arguments.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A well-formed computation whose mathematical premise fails (non-unimodular
// basis request, torsion where freeness is required, invalid certificate...).
// The CLI maps this to exit code 1.
struct premise_error : std::runtime_error {
    explicit premise_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require_input(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void require_premise(bool ok, const std::string& msg) {
    if (!ok) throw premise_error(msg);
}

// Internal consistency checks (e.g. two independent computations of the same
// value disagree). Never triggered by user input alone.
inline void require_internal(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("internal check failed: " + msg);
}

} // namespace corank
