#pragma once

#include <stdexcept>
#include <string>

namespace resnet {

// Bad user-supplied data (files, configs, CLI values). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Internal failure (non-convergence, inconsistent state). Maps to exit code 1.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resnet
