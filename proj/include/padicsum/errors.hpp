#pragma once

#include <stdexcept>
#include <string>

namespace padicsum {

/// Two independent computations of the same quantity disagreed.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace padicsum
