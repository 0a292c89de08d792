#pragma once

#include <stdexcept>
#include <string>

namespace fanocone {

/// Bad input at the interface level (malformed class strings, unknown spaces).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated mathematical contract (codimension mismatch, invalid index, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_index_error : domain_error {
    explicit invalid_index_error(const std::string& what) : domain_error(what) {}
};

struct underdetermined_error : domain_error {
    explicit underdetermined_error(const std::string& what) : domain_error(what) {}
};

struct no_solution_error : domain_error {
    explicit no_solution_error(const std::string& what) : domain_error(what) {}
};

struct missing_input_error : domain_error {
    explicit missing_input_error(const std::string& what) : domain_error(what) {}
};

struct inconsistency_error : domain_error {
    explicit inconsistency_error(const std::string& what) : domain_error(what) {}
};

struct not_implemented_error : domain_error {
    explicit not_implemented_error(const std::string& what) : domain_error(what) {}
};

}  // namespace fanocone
