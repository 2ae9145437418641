#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "llk/object.hpp"

namespace llk {

struct MorBase {
    Obj dom = nullptr, cod = nullptr;
    virtual ~MorBase() = default;
};
using Mor = std::shared_ptr<const MorBase>;

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TypeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite model: objects, enumerable hom-sets with decidable equality, and
// whichever structural primitives it carries. Missing structure throws
// Unsupported. Types are checked by Env, not here.
class Model {
public:
    virtual ~Model() = default;
    virtual std::string name() const = 0;
    // Hom-sets are powersets closed under unions (relations, cliques): a law
    // that is union-preserving in each variable can be checked on atoms.
    virtual bool relational() const { return false; }
    // Every relation between the enumerated webs is a morphism (Rel, not FinCoh).
    virtual bool full_powerset() const { return false; }
    // Whether op is union-preserving in argument i.
    virtual bool linear(const std::string& op, int arg) const;
    virtual std::vector<Obj> objects() const = 0;
    // The model whose morphisms κ embeds, for Kleisli categories.
    virtual const Model* base() const { return nullptr; }

    virtual Obj one() const { throw Unsupported(name() + ": no unit object"); }
    virtual Obj top() const { throw Unsupported(name() + ": no terminal object"); }
    virtual Obj tensor(Obj, Obj) const { throw Unsupported(name() + ": no tensor"); }
    virtual Obj with(Obj, Obj) const { throw Unsupported(name() + ": no product"); }
    virtual Obj lolli(Obj, Obj) const { throw Unsupported(name() + ": not closed"); }
    virtual Obj bang(Obj) const { throw Unsupported(name() + ": no exponential"); }

    // Number of morphisms a→b, or nullopt when beyond enumeration budget.
    virtual std::optional<double> hom_count(Obj a, Obj b) const = 0;
    virtual std::vector<Mor> homs(Obj a, Obj b) const = 0;
    virtual Mor random_hom(Obj a, Obj b, std::mt19937_64& rng) const = 0;
    // Relational models: the empty relation first, then every singleton.
    virtual std::vector<Mor> atoms(Obj a, Obj b) const;
    virtual bool equal(const Mor& f, const Mor& g) const = 0;
    virtual nlohmann::json to_json(const Mor& f) const = 0;
    // Removes one pair (first codomain point with a preimage, first preimage).
    virtual Mor mutate(const Mor& f) const;
    // Relational models: (point of the codomain, its preimage) pairs, for certificates.
    virtual std::vector<std::pair<std::string, std::string>> pairs(const Mor& f) const;

    virtual Mor id(Obj a) const;
    virtual Mor comp(const Mor& g, const Mor& f) const;
    virtual Mor tensor(const Mor& f, const Mor& g) const;
    virtual Mor pair(const Mor& f, const Mor& g) const;
    virtual Mor pr0(Obj a, Obj b) const;
    virtual Mor pr1(Obj a, Obj b) const;
    virtual Mor term(Obj a) const;
    virtual Mor alpha(Obj a, Obj b, Obj c) const;
    virtual Mor alpha_inv(Obj a, Obj b, Obj c) const;
    virtual Mor lambda(Obj a) const;
    virtual Mor lambda_inv(Obj a) const;
    virtual Mor rho(Obj a) const;
    virtual Mor rho_inv(Obj a) const;
    virtual Mor gamma(Obj a, Obj b) const;
    virtual Mor ev(Obj a, Obj b) const;
    virtual Mor cur(const Mor& f, Obj c, Obj a, Obj b) const;
    virtual Mor bang(const Mor& f) const;
    virtual Mor der(Obj a) const;
    virtual Mor dig(Obj a) const;
    virtual Mor m0() const;
    virtual Mor m0_inv() const;
    virtual Mor m2(Obj a, Obj b) const;
    virtual Mor m2_inv(Obj a, Obj b) const;
    virtual Mor coder(Obj a) const;
    // !A → A relating a bag to each of its elements; only used as a perturbation
    virtual Mor support(Obj a) const;
    virtual Mor coweak(Obj a) const;
    virtual Mor cocontr(Obj a) const;
    virtual Mor zero(Obj a, Obj b) const;
    virtual Mor sum(const Mor& f, const Mor& g) const;
    // Kleisli categories: the embedding of a base morphism.
    virtual Mor kappa(const Mor& f) const;

protected:
    [[noreturn]] void missing(const char* op) const;
};

// Stand-in morphism for linearity analysis: which variables occur and whether
// every occurrence sits in union-preserving position.
struct TrackMor : MorBase {
    std::map<std::string, std::pair<int, bool>> vars;  // name -> (occurrences, linear)
};

}  // namespace llk
