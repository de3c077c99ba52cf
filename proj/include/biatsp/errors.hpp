#pragma once

#include <stdexcept>
#include <string>

namespace biatsp {

// Malformed or unreadable input data (files, streams, CSV/JSON payloads).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Refusal to run a computation whose cost guard is exceeded
// (e.g. factorial enumeration above the size limit).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biatsp
