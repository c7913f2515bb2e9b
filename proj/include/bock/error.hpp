#pragma once

#include <stdexcept>
#include <string>

namespace bock {

enum class ErrorKind {
    InvalidInput,        // malformed value, bad parameter, failed table check
    Parse,               // unreadable file or JSON shape
    NotNilpotent,        // lower central series stabilizes above 1
    NotNormal,           // quotient by a non-normal subgroup
    Unwitnessed,         // tower stage lacks a nilpotent-extension witness
    NotFinitelyGenerated,
    OutOfScope,          // result not expressible in the atom vocabulary
    UnknownName,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bock
