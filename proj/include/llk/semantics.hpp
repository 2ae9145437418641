#pragma once

#include <map>
#include <optional>
#include <set>

#include "llk/cutelim.hpp"
#include "llk/diagram.hpp"
#include "llk/env.hpp"

namespace llk {

using Assignment = std::map<std::string, Obj>;

class MissingVariable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Obj interpret_formula(const Env& e, const F& f, const Assignment& a);
// [] ↦ unit, [A] ↦ A, [A1, ..., An] ↦ (...(A1 ∘ A2) ∘ ...) ∘ An with ∘ the
// product for LJ and the tensor otherwise.
Obj interpret_context(const Env& e, System s, const std::vector<F>& ctx, const Assignment& a);
// A morphism ⟦Γ⟧ → ⟦B⟧; every node's type is checked against its sequent.
Mor interpret_proof(const Env& e, const P& p, System s, const Assignment& a);

std::vector<std::string> proof_vars(const P& p);
// Every map from vars to objects, in lexicographic order of object index.
std::vector<Assignment> all_assignments(const std::vector<std::string>& vars, const std::vector<Obj>& objects);

struct InvarianceOptions {
    std::vector<Obj> objects;  // values for variables
    int fuel = 10000;
    std::vector<Strategy> strategies{Strategy::LeftmostInnermost, Strategy::LeftmostOutermost};
    bool all_root_redexes = true;  // also every single step from the input proof
    std::set<std::string> mutated;  // perturbs the model, for testing the check itself
};

struct InvarianceReport {
    bool ok = true;
    int steps = 0;
    long comparisons = 0;
    int assignments = 0;
    std::string error;
    nlohmann::json failure;  // null unless a step changed the denotation

    nlohmann::json to_json() const;
};

InvarianceReport check_invariance(const Model& m, const P& p, System s, const InvarianceOptions& o);

}  // namespace llk
