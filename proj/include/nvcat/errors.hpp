#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nvcat {

// Malformed or inconsistent input. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what, std::vector<std::string> details = {})
        : std::runtime_error(what), details_(std::move(details)) {}

    const std::vector<std::string>& details() const { return details_; }

private:
    std::vector<std::string> details_;
};

// An operation was called outside its documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured or built-in size limit was hit (exit code 3).
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nvcat
