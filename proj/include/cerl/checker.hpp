#pragma once
// Independent validator for derivation trees. Each node must be a legal
// instance of its rule: premise shapes are checked and every side condition
// is recomputed from scratch instead of trusting the recorded payloads.

#include "cerl/eval.hpp"

namespace cerl {

struct Violation {
    std::string path;  // node position, e.g. "/premises[1]"
    int rule = 0;
    std::string reason;
};

struct CheckReport {
    bool valid = true;
    std::vector<Violation> violations;
};

CheckReport validate(const DerivationNode& d);

}  // namespace cerl
