#pragma once
// Serialized derivation trees (`.deriv` files): JSON records with a stable
// field order so identical inputs produce byte-identical output. Expressions
// are stored in concrete syntax; values and environments as structured
// records, since the display form of a closure omits its captured
// environment and the validator needs it back intact.

#include <string>

#include "cerl/eval.hpp"

namespace cerl {

std::string serialize_derivation(const DerivationNode& d);

struct DerivLoadError {
    std::string message;
};
using DerivLoadResult = std::variant<DerivPtr, DerivLoadError>;

DerivLoadResult parse_derivation(const std::string& text);

}  // namespace cerl
