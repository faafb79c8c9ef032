#pragma once
// Systematic single-field mutations of derivation trees. Each mutant alters
// exactly one field of one node; the construction avoids edits that could
// rebuild a genuinely valid derivation (environment and closure-environment
// edits are only applied below the root, where the parent cross-checks them,
// and the chosen-clause index is pushed out of range rather than shifted).

#include <functional>
#include <vector>

#include "cerl/eval.hpp"

namespace testutil {

namespace detail {

// A location is the premise-index path from the root; index 100+k descends
// into the k-th guard_false evidence node.
using NodePath = std::vector<std::size_t>;
using Mutator = std::function<void(cerl::DerivationNode&)>;

inline cerl::DerivPtr rebuild(const cerl::DerivationNode& node,
                              const NodePath& path, std::size_t depth,
                              const Mutator& mutate) {
    cerl::DerivationNode copy = node;
    if (depth == path.size()) {
        mutate(copy);
    } else {
        const std::size_t step = path[depth];
        if (step >= 100) {
            auto ev = *copy.case_evidence;
            const auto& child = ev.skipped[step - 100].guard_false;
            ev.skipped[step - 100].guard_false =
                rebuild(*child, path, depth + 1, mutate);
            copy.case_evidence = std::move(ev);
        } else {
            copy.premises[step] =
                rebuild(*copy.premises[step], path, depth + 1, mutate);
        }
    }
    return std::make_shared<const cerl::DerivationNode>(std::move(copy));
}

inline void collect(const cerl::DerivationNode& node, const NodePath& path,
                    const cerl::DerivPtr& root,
                    std::vector<cerl::DerivPtr>& out) {
    const bool is_root = path.empty();
    auto emit = [&](const Mutator& m) {
        out.push_back(rebuild(*root, path, 0, m));
    };

    // Result and rule edits are cross-checked at every node.
    if (!cerl::value_eq(node.result, cerl::vint(987654321)))
        emit([](cerl::DerivationNode& n) { n.result = cerl::vint(987654321); });
    if (!cerl::value_eq(node.result, cerl::tt()))
        emit([](cerl::DerivationNode& n) { n.result = cerl::tt(); });
    emit([](cerl::DerivationNode& n) {
        n.rule = n.rule == cerl::kRuleVar ? cerl::kRuleLiteral : cerl::kRuleVar;
    });
    emit([](cerl::DerivationNode& n) { n.expr = cerl::eint(31337); });

    if (!is_root) {
        emit([](cerl::DerivationNode& n) {
            n.env = cerl::insert_value(std::move(n.env),
                                       cerl::EnvKey{"ZzMutant"},
                                       cerl::vint(77));
        });
        emit([](cerl::DerivationNode& n) {
            n.clos = cerl::set_closure(std::move(n.clos),
                                       cerl::FunctionIdentifier{"zz", 9},
                                       cerl::Environment{});
        });
    }

    if (!node.premises.empty())
        emit([](cerl::DerivationNode& n) { n.premises.pop_back(); });
    if (node.premises.size() >= 2 &&
        !(*node.premises[0]->expr == *node.premises[1]->expr))
        emit([](cerl::DerivationNode& n) {
            std::swap(n.premises[0], n.premises[1]);
        });

    if (node.case_evidence) {
        emit([](cerl::DerivationNode& n) {
            auto ev = *n.case_evidence;
            ev.chosen = 1000;
            n.case_evidence = std::move(ev);
        });
        if (!node.case_evidence->skipped.empty()) {
            emit([](cerl::DerivationNode& n) {
                auto ev = *n.case_evidence;
                ev.skipped.pop_back();
                n.case_evidence = std::move(ev);
            });
            for (std::size_t k = 0; k < node.case_evidence->skipped.size();
                 ++k) {
                if (node.case_evidence->skipped[k].guard_false) {
                    emit([k](cerl::DerivationNode& n) {
                        auto ev = *n.case_evidence;
                        ev.skipped[k].guard_false = nullptr;
                        n.case_evidence = std::move(ev);
                    });
                }
            }
        }
    }

    for (std::size_t i = 0; i < node.premises.size(); ++i) {
        NodePath next = path;
        next.push_back(i);
        collect(*node.premises[i], next, root, out);
    }
    if (node.case_evidence) {
        for (std::size_t k = 0; k < node.case_evidence->skipped.size(); ++k) {
            if (!node.case_evidence->skipped[k].guard_false) continue;
            NodePath next = path;
            next.push_back(100 + k);
            collect(*node.case_evidence->skipped[k].guard_false, next, root,
                    out);
        }
    }
}

}  // namespace detail

inline std::vector<cerl::DerivPtr> all_single_mutations(
    const cerl::DerivPtr& root) {
    std::vector<cerl::DerivPtr> out;
    detail::collect(*root, {}, root, out);
    return out;
}

}  // namespace testutil
