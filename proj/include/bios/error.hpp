#pragma once

#include <stdexcept>
#include <string>

namespace bios {

// Base error for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input or schema problems: bad config, malformed files, integrity violations.
// The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A pipeline stage failed mid-run. The CLI maps these to exit code 2.
class StageError : public Error {
public:
    StageError(const std::string& stage, const std::string& msg)
        : Error("stage " + stage + ": " + msg), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace bios
