#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "llk/formula.hpp"

namespace llk {

enum class Rule {
    Ax, Cut, Weak, Contr, Ex,
    AndLeft1, AndLeft2, AndRight, TopRight, ImplLeft, ImplRight,
    WithLeft1, WithLeft2, WithRight, LolliLeft, LolliRight,
    TensorLeft, TensorRight, OneLeft, OneRight,
    Der, Prom, BangWeak, BangContr,
    CoWeak, CoContr, CoDer, Zero, Sum,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& s);
int rule_arity(Rule r);
// Rules whose proof node carries a :split annotation.
bool rule_has_split(Rule r);

enum class System { LJ, IMALL, ILL, DILL };

const char* system_name(System s);
std::optional<System> system_from_name(const std::string& s);
bool is_linear(System s);

struct Proof;
using P = std::shared_ptr<const Proof>;

struct Proof {
    Rule rule;
    Sequent concl;
    std::vector<P> prem;
    int split = -1;  // |Γ1| of the first premise for multiplicative rules
    int pos = -1;    // ex: index of the swapped pair

    static P make(Rule r, Sequent s, std::vector<P> prem = {}, int split = -1, int pos = -1);
};

bool proof_eq(const P& a, const P& b);
int proof_size(const P& p);
int proof_height(const P& p);
int count_cuts(const P& p);

P parse_proof(const std::string& text);
P proof_from_sexpr(const Sexpr& s);
// One canonical line.
std::string print_proof(const P& p);

// Node addresses are premise indices from the root; printed as "root" or "0.1".
using Path = std::vector<int>;
std::string path_str(const Path& p);
P subproof_at(const P& root, const Path& path);
P replace_at(const P& root, const Path& path, P repl);

struct Violation {
    Path path;
    std::string rule;
    std::string message;
};

struct ValidationReport {
    bool valid() const { return violations.empty(); }
    std::vector<Violation> violations;
};

ValidationReport validate_proof(const P& p, System sys);

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    int max_depth = 4;
    size_t node_budget = 2000000;
};

// All cut-free proofs of s of height at most max_depth.
std::vector<P> enumerate_proofs(const Sequent& s, System sys, const EnumerateOptions& opt);

}  // namespace llk
