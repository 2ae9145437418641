#pragma once

#include "llk/model.hpp"

namespace llk {

struct FinFun : MorBase {
    std::vector<int> t;  // t[x] = image of x
};

// Finite sets and total functions: a cartesian closed category. The tensor is
// the product, the unit is the one-point set and ! is the identity comonad
// (so linear proofs can be read here as in any cartesian closed category).
class FinSet : public Model {
public:
    explicit FinSet(int max_size = 3, double budget = 1e6) : max_(max_size), budget_(budget) {}

    std::string name() const override { return "finset"; }
    std::vector<Obj> objects() const override;
    static int size(Obj o);
    static Mor fun(Obj dom, Obj cod, std::vector<int> t);

    Obj one() const override;
    Obj top() const override;
    Obj tensor(Obj a, Obj b) const override { return with(a, b); }
    Obj with(Obj a, Obj b) const override;
    Obj lolli(Obj a, Obj b) const override;
    Obj bang(Obj a) const override { return a; }

    std::optional<double> hom_count(Obj a, Obj b) const override;
    std::vector<Mor> homs(Obj a, Obj b) const override;
    Mor random_hom(Obj a, Obj b, std::mt19937_64& rng) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    nlohmann::json to_json(const Mor& f) const override;

    Mor id(Obj a) const override;
    Mor comp(const Mor& g, const Mor& f) const override;
    Mor tensor(const Mor& f, const Mor& g) const override;
    Mor pair(const Mor& f, const Mor& g) const override;
    Mor pr0(Obj a, Obj b) const override;
    Mor pr1(Obj a, Obj b) const override;
    Mor term(Obj a) const override;
    Mor alpha(Obj a, Obj b, Obj c) const override;
    Mor alpha_inv(Obj a, Obj b, Obj c) const override;
    Mor lambda(Obj a) const override;
    Mor lambda_inv(Obj a) const override;
    Mor rho(Obj a) const override;
    Mor rho_inv(Obj a) const override;
    Mor gamma(Obj a, Obj b) const override;
    Mor ev(Obj a, Obj b) const override;
    Mor cur(const Mor& f, Obj c, Obj a, Obj b) const override;
    Mor bang(const Mor& f) const override { return f; }
    Mor der(Obj a) const override { return id(a); }
    Mor dig(Obj a) const override { return id(a); }
    Mor m0() const override { return id(one()); }
    Mor m0_inv() const override { return id(one()); }
    Mor m2(Obj a, Obj b) const override { return id(with(a, b)); }
    Mor m2_inv(Obj a, Obj b) const override { return id(with(a, b)); }

private:
    int max_;
    double budget_;
};

}  // namespace llk
