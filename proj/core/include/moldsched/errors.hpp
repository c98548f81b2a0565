#pragma once

#include <stdexcept>
#include <string>

namespace moldsched {

/// Structurally invalid document: wrong shape, unknown field, bad numeral.
/// `where` names the offending position ("tasks[2].profile.workloads").
struct SchemaError : std::runtime_error {
    std::string where;
    SchemaError(std::string where_, const std::string& what_)
        : std::runtime_error(where_.empty() ? what_ : where_ + ": " + what_),
          where(std::move(where_)) {}
};

/// Well-formed input that no schedule can satisfy.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what_) : std::runtime_error(what_) {}
};

} // namespace moldsched
