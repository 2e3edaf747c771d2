#pragma once

#include <stdexcept>
#include <string>

namespace kk {

/// Raised when a construction is asked to run on a configuration that does
/// not satisfy its hypotheses. The message names the failing condition.
class PreconditionError : public std::invalid_argument
{
public:
    explicit PreconditionError(const std::string & condition) :
        std::invalid_argument("precondition violated: " + condition)
    {
    }
};

}
