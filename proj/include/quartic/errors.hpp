#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    Success = 0,
    Usage = 1,
    HypothesisViolation = 2,
    UnknownClassNumber = 3,
    SearchExhausted = 4,
    InternalError = 5,
};

class HypothesisViolation : public std::runtime_error {
public:
    explicit HypothesisViolation(std::vector<std::string> failures)
        : std::runtime_error(join(failures)), failures_(std::move(failures)) {}

    const std::vector<std::string>& failures() const noexcept { return failures_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out = "hypothesis violation:";
        for (const auto& s : items) out += " [" + s + "]";
        return out;
    }

    std::vector<std::string> failures_;
};

class UnknownClassNumber : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A witness that should satisfy the three witness conditions does not.
class ConditionFailure : public std::runtime_error {
public:
    ConditionFailure(std::string condition, const std::string& detail)
        : std::runtime_error("condition " + condition + " failed: " + detail),
          condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// An internal consistency check failed (e.g. a non-integral class number).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace quartic
