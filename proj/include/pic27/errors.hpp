#pragma once

#include <stdexcept>
#include <string>

namespace pic27 {

// Enumeration blew past a hard size limit (e.g. group closure cap).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural fact that the library certifies failed to hold
// (no normal Sylow-3, ambiguous transversal, marking mismatch, ...).
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pic27
