// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bredon {

enum class ErrorKind {
    Parse,        // malformed descriptor or input file
    Domain,       // well-formed input outside the supported domain
    Hypothesis,   // representation fails the strict fixed-dimension drop
    CapExceeded,  // group order above the configured cap
    Io,           // file could not be read
    Internal,     // consistency assertion failed; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::Internal, what);
}

}  // namespace bredon
