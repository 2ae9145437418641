#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "llk/proof.hpp"

namespace llk {

enum class RedexKind { AxiomCutLeft, AxiomCutRight, PrincipalPair, CommutativeLeft, CommutativeRight };

struct Redex {
    Path path;
    RedexKind kind;
    std::string rule_l, rule_r;  // last rules of the two subproofs (exchanges skipped on the right)
    // The strategies skip a cut whose left subproof or right core is itself a cut;
    // the inner cut is reduced first. step() still accepts it.
    bool blocked = false;

    std::string kind_str() const;
};

class StepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cut nodes in pre-order (node, then premises left to right).
std::vector<Redex> find_redexes(const P& p, System sys);
Redex classify_cut(const P& cut, System sys, Path path = {});
P step(const P& p, const Redex& r, System sys);

enum class Strategy { LeftmostInnermost, LeftmostOutermost };
const char* strategy_name(Strategy s);

struct TraceEntry {
    Redex redex;
    int cuts_before, cuts_after;
    int size_before, size_after;
    int promoted_before, promoted_after;
};

struct NormalizeResult {
    P proof;
    std::vector<TraceEntry> trace;
    std::vector<P> steps;  // intermediate trees after each step, when requested
    bool complete = false;
};

NormalizeResult normalize(const P& p, System sys, Strategy strategy, int fuel, bool keep_steps = false);

// For each cut whose left premise is a promotion: the number of contractions
// applied to (descendants of) the cut occurrence in the right premise, summed.
int promoted_cut_measure(const P& p);

// Maps premise k's context positions to conclusion positions; -1 marks a
// formula consumed by the rule.
std::vector<int> origins(const Proof& node, int k, System sys);

}  // namespace llk
