#pragma once

#include <stdexcept>
#include <string>

namespace hfg {

// Malformed specs, files, or arguments that violate an operation's
// preconditions. Maps to exit code 2 at the CLI.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a configured enumeration cap. Also exit code 2;
// the message names the cap and how to raise it.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hfg
