#pragma once

#include <stdexcept>
#include <string>

namespace streetlink {

// bad or inconsistent configuration (CLI exit code 2)
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// file / stream problem (CLI exit code 3)
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// transmitter and receiver closer than the geometric tolerance
class DegenerateLink : public std::runtime_error {
public:
    explicit DegenerateLink(const std::string& what) : std::runtime_error(what) {}
};

// search asked to visit more configurations than its budget allows
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace streetlink
