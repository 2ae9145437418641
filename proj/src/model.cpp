#include "llk/model.hpp"

namespace llk {

void Model::missing(const char* op) const { throw Unsupported(name() + ": no " + op); }

bool Model::linear(const std::string&, int) const { return false; }
std::vector<Mor> Model::atoms(Obj, Obj) const { missing("atoms"); }
Mor Model::mutate(const Mor&) const { missing("mutation"); }
std::vector<std::pair<std::string, std::string>> Model::pairs(const Mor&) const { missing("pair listing"); }

Mor Model::id(Obj) const { missing("identity"); }
Mor Model::comp(const Mor&, const Mor&) const { missing("composition"); }
Mor Model::tensor(const Mor&, const Mor&) const { missing("tensor"); }
Mor Model::pair(const Mor&, const Mor&) const { missing("pairing"); }
Mor Model::pr0(Obj, Obj) const { missing("projection"); }
Mor Model::pr1(Obj, Obj) const { missing("projection"); }
Mor Model::term(Obj) const { missing("terminal map"); }
Mor Model::alpha(Obj, Obj, Obj) const { missing("associator"); }
Mor Model::alpha_inv(Obj, Obj, Obj) const { missing("associator"); }
Mor Model::lambda(Obj) const { missing("left unitor"); }
Mor Model::lambda_inv(Obj) const { missing("left unitor"); }
Mor Model::rho(Obj) const { missing("right unitor"); }
Mor Model::rho_inv(Obj) const { missing("right unitor"); }
Mor Model::gamma(Obj, Obj) const { missing("symmetry"); }
Mor Model::ev(Obj, Obj) const { missing("evaluation"); }
Mor Model::cur(const Mor&, Obj, Obj, Obj) const { missing("currying"); }
Mor Model::bang(const Mor&) const { missing("exponential"); }
Mor Model::der(Obj) const { missing("dereliction"); }
Mor Model::dig(Obj) const { missing("digging"); }
Mor Model::m0() const { missing("Seely m0"); }
Mor Model::m0_inv() const { missing("Seely m0"); }
Mor Model::m2(Obj, Obj) const { missing("Seely m2"); }
Mor Model::m2_inv(Obj, Obj) const { missing("Seely m2"); }
Mor Model::coder(Obj) const { missing("codereliction"); }
Mor Model::support(Obj) const { missing("support"); }
Mor Model::coweak(Obj) const { missing("coweakening"); }
Mor Model::cocontr(Obj) const { missing("cocontraction"); }
Mor Model::zero(Obj, Obj) const { missing("zero morphisms"); }
Mor Model::sum(const Mor&, const Mor&) const { missing("sums"); }
Mor Model::kappa(const Mor&) const { missing("Kleisli embedding"); }

}  // namespace llk
