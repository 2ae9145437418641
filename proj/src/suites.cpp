#include "llk/suites.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace llk {

namespace {

const char* const kCategory = R"(
(suite category
  (diagram id-left (objects A B) (morphisms (f A B))
    (eq (comp (id B) f) f))
  (diagram id-right (objects A B) (morphisms (f A B))
    (eq (comp f (id A)) f))
  (diagram assoc (objects A B C D) (morphisms (f A B) (g B C) (h C D))
    (eq (comp h (comp g f)) (comp (comp h g) f))))
)";

const char* const kMonoidal = R"(
(suite monoidal
  (diagram tensor-id (objects A B)
    (eq (tensor (id A) (id B)) (id (tensor A B))))
  (diagram alpha-iso (objects A B C)
    (eq (comp (alpha-inv A B C) (alpha A B C)) (id (tensor (tensor A B) C))))
  (diagram alpha-inv-iso (objects A B C)
    (eq (comp (alpha A B C) (alpha-inv A B C)) (id (tensor A (tensor B C)))))
  (diagram lambda-iso (objects A)
    (eq (comp (lambda-inv A) (lambda A)) (id (tensor one A))))
  (diagram rho-iso (objects A)
    (eq (comp (rho-inv A) (rho A)) (id (tensor A one))))
  (diagram pentagon (objects A B C D)
    (eq (comp (alpha A B (tensor C D)) (alpha (tensor A B) C D))
        (comp (tensor (id A) (alpha B C D)) (alpha A (tensor B C) D) (tensor (alpha A B C) (id D)))))
  (diagram triangle (objects A B)
    (eq (comp (tensor (id A) (lambda B)) (alpha A one B))
        (tensor (rho A) (id B))))
  (diagram gamma-involution (objects A B)
    (eq (comp (gamma B A) (gamma A B)) (id (tensor A B))))
  (diagram gamma-unit (objects A)
    (eq (comp (rho A) (gamma one A)) (lambda A)))
  (diagram hexagon (objects A B C)
    (eq (comp (alpha B C A) (gamma A (tensor B C)) (alpha A B C))
        (comp (tensor (id B) (gamma A C)) (alpha B A C) (tensor (gamma A B) (id C)))))
  (diagram gamma-natural (objects A B C D) (morphisms (f A C) (g B D))
    (eq (comp (gamma C D) (tensor f g)) (comp (tensor g f) (gamma A B)))))
)";

const char* const kCartesian = R"(
(suite cartesian
  (diagram pr0-pair (objects A B C) (morphisms (f C A) (g C B))
    (eq (comp (pr0 A B) (pair f g)) f))
  (diagram pr1-pair (objects A B C) (morphisms (f C A) (g C B))
    (eq (comp (pr1 A B) (pair f g)) g))
  (unique pair-unique (objects A B C) (map h C (with A B))
    (keys (comp (pr0 A B) h) (comp (pr1 A B) h)))
  (diagram term-unique (objects A) (morphisms (h A top))
    (eq h (term A))))
)";

const char* const kClosed = R"(
(suite closed
  (diagram ev-cur (objects A B C) (morphisms (f (tensor C A) B))
    (eq (comp (ev A B) (tensor (cur f) (id A))) f))
  (unique cur-unique (objects A B C) (map h C (lolli A B))
    (keys (comp (ev A B) (tensor h (id A))))))
)";

const char* const kComonad = R"(
(suite comonad
  (diagram bang-id (objects A)
    (eq (bang (id A)) (id (bang A))))
  (diagram bang-comp (objects A B C) (morphisms (f A B) (g B C))
    (eq (bang (comp g f)) (comp (bang g) (bang f))))
  (diagram dig-square (objects A)
    (eq (comp (dig (bang A)) (dig A)) (comp (bang (dig A)) (dig A))))
  (diagram der-triangle-left (objects A)
    (eq (comp (der (bang A)) (dig A)) (id (bang A))))
  (diagram der-triangle-right (objects A)
    (eq (comp (bang (der A)) (dig A)) (id (bang A))))
  (diagram der-natural (objects A B) (morphisms (f A B))
    (eq (comp (der B) (bang f)) (comp f (der A))))
  (diagram dig-natural (objects A B) (morphisms (f A B))
    (eq (comp (dig B) (bang f)) (comp (bang (bang f)) (dig A)))))
)";

const char* const kSeely = R"(
(suite seely
  (diagram m0-iso
    (eq (comp m0-inv m0) (id one)))
  (diagram m0-inv-iso
    (eq (comp m0 m0-inv) (id (bang top))))
  (diagram m2-iso (objects A B)
    (eq (comp (m2-inv A B) (m2 A B)) (id (tensor (bang A) (bang B)))))
  (diagram m2-inv-iso (objects A B)
    (eq (comp (m2 A B) (m2-inv A B)) (id (bang (with A B)))))
  (diagram seely-assoc (objects A B C)
    (eq (comp (bang (alpha-with A B C)) (m2 (with A B) C) (tensor (m2 A B) (id (bang C))))
        (comp (m2 A (with B C)) (tensor (id (bang A)) (m2 B C)) (alpha (bang A) (bang B) (bang C)))))
  (diagram seely-sym (objects A B)
    (eq (comp (bang (gamma-with B A)) (m2 B A) (gamma (bang A) (bang B)))
        (m2 A B)))
  (diagram seely-unit-right (objects A)
    (eq (rho (bang A))
        (comp (bang (pr0 A top)) (m2 A top) (tensor (id (bang A)) m0))))
  (diagram seely-unit-left (objects A)
    (eq (lambda (bang A))
        (comp (bang (pr1 top A)) (m2 top A) (tensor m0 (id (bang A))))))
  (diagram m2-natural (objects A B C D) (morphisms (f A C) (g B D))
    (eq (comp (m2 C D) (tensor (bang f) (bang g)))
        (comp (bang (with f g)) (m2 A B))))
  (diagram m2-dig (objects A B)
    (eq (comp (bang (pair (bang (pr0 A B)) (bang (pr1 A B)))) (dig (with A B)) (m2 A B))
        (comp (m2 (bang A) (bang B)) (tensor (dig A) (dig B))))))
)";

const char* const kDifferential = R"(
(suite differential
  (diagram d-constant (objects A)
    (eq (comp (weak A) (dbar A)) (zero (tensor (bang A) A) one)))
  (diagram d-linear (objects A)
    (eq (comp (der A) (dbar A)) (comp (lambda A) (tensor (weak A) (id A)))))
  (diagram d-Leibniz (objects A)
    (eq (comp (contr A) (dbar A))
        (sum (comp (tensor (id (bang A)) (dbar A)) (alpha (bang A) (bang A) A) (tensor (contr A) (id A)))
             (comp (tensor (dbar A) (id (bang A))) (alpha-inv (bang A) A (bang A))
                   (tensor (id (bang A)) (gamma (bang A) A)) (alpha (bang A) (bang A) A)
                   (tensor (contr A) (id A))))))
  (diagram d-chain (objects A)
    (eq (comp (dig A) (dbar A))
        (comp (dbar (bang A)) (tensor (dig A) (dbar A)) (alpha (bang A) (bang A) A) (tensor (contr A) (id A)))))
  (diagram d-Schwarz (objects A)
    (eq (comp (dbar A) (tensor (dbar A) (id A)))
        (comp (dbar A) (tensor (dbar A) (id A)) (alpha-inv (bang A) A A)
              (tensor (id (bang A)) (gamma A A)) (alpha (bang A) A A))))
  (diagram d-natural (objects A B) (morphisms (f A B))
    (eq (comp (bang f) (dbar A)) (comp (dbar B) (tensor (bang f) f)))))
)";

const char* const kSummability = R"(
(suite summability
  (unique joint-monic (objects A X) (map h A (S X))
    (keys (comp (pi0 X) h) (comp (pi1 X) h)))
  (diagram pairing-id (objects X)
    (eq (pair (pi0 X) (pi1 X)) (id (S X))))
  (diagram S-zero (objects A B)
    (eq (S (zero A B)) (zero (S A) (S B))))
  (diagram sum-witness (objects A X) (morphisms (f A X) (g A X))
    (eq (comp (sigma X) (pair f g)) (sum f g)))
  (diagram neutral-left (objects A X) (morphisms (f A X))
    (eq (comp (sigma X) (pair (zero A X) f)) f))
  (diagram neutral-right (objects A X) (morphisms (f A X))
    (eq (comp (sigma X) (pair f (zero A X))) f))
  (diagram commutative (objects A X) (morphisms (f A X) (g A X))
    (eq (comp (sigma X) (pair f g)) (comp (sigma X) (pair g f))))
  (diagram sigma-swap (objects X)
    (eq (comp (sigma X) (swap X)) (sigma X)))
  (diagram S-witness (objects A X) (morphisms (f A X) (g A X) (h A X))
    (eq (comp (sigma X) (pair (comp (sigma X) (pair f g)) h))
        (comp (sigma X) (pair f (comp (sigma X) (pair g h))))))
  (diagram S-assoc (objects A X) (morphisms (f0 A X) (f1 A X) (g0 A X) (g1 A X))
    (eq (comp (sigma (S X)) (pair (pair f0 f1) (pair g0 g1)))
        (pair (comp (sigma X) (pair f0 g0)) (comp (sigma X) (pair f1 g1)))))
  (diagram sum-compatible (objects A X Y) (morphisms (f A X) (g A X) (k X Y))
    (eq (comp k (sum f g)) (sum (comp k f) (comp k g))))
  (diagram pi0-natural (objects A B) (morphisms (f A B))
    (eq (comp (pi0 B) (S f)) (comp f (pi0 A))))
  (diagram pi1-natural (objects A B) (morphisms (f A B))
    (eq (comp (pi1 B) (S f)) (comp f (pi1 A))))
  (diagram sigma-natural (objects A B) (morphisms (f A B))
    (eq (comp (sigma B) (S f)) (comp f (sigma A)))))
)";

const char* const kMonad = R"(
(suite monad
  (diagram unit-left (objects A)
    (eq (comp (theta A) (iota0 (S A))) (id (S A))))
  (diagram unit-right (objects A)
    (eq (comp (theta A) (S (iota0 A))) (id (S A))))
  (diagram mult-assoc (objects A)
    (eq (comp (theta A) (theta (S A))) (comp (theta A) (S (theta A)))))
  (diagram iota0-natural (objects A B) (morphisms (f A B))
    (eq (comp (S f) (iota0 A)) (comp (iota0 B) f)))
  (diagram theta-natural (objects A B) (morphisms (f A B))
    (eq (comp (S f) (theta A)) (comp (theta B) (S (S f)))))
  (diagram swap-involution (objects A)
    (eq (comp (swap A) (swap A)) (id (S A))))
  (diagram L-symmetric (objects A B)
    (eq (L A B) (L-alt A B))))
)";

const char* const kSmf = R"(
(suite smf
  (diagram L-assoc (objects A B C)
    (eq (comp (S (alpha A B C)) (L (tensor A B) C) (tensor (L A B) (id (S C))))
        (comp (L A (tensor B C)) (tensor (id (S A)) (L B C)) (alpha (S A) (S B) (S C)))))
  (diagram L-unit-left (objects A)
    (eq (comp (S (lambda A)) (L one A) (tensor (iota0 one) (id (S A))))
        (lambda (S A))))
  (diagram L-unit-right (objects A)
    (eq (comp (S (rho A)) (L A one) (tensor (id (S A)) (iota0 one)))
        (rho (S A))))
  (diagram L-sym (objects A B)
    (eq (comp (S (gamma A B)) (L A B))
        (comp (L B A) (gamma (S A) (S B)))))
  (diagram L-natural (objects A B C D) (morphisms (f A C) (g B D))
    (eq (comp (S (tensor f g)) (L A B)) (comp (L C D) (tensor (S f) (S g)))))
  (diagram L-iota0 (objects A B)
    (eq (comp (L A B) (tensor (iota0 A) (iota0 B))) (iota0 (tensor A B))))
  (diagram L-theta (objects A B)
    (eq (comp (L A B) (tensor (theta A) (theta B)))
        (comp (theta (tensor A B)) (S (L A B)) (L (S A) (S B))))))
)";

const char* const kCohdiff = R"(
(suite cohdiff
  (diagram ∂-local (objects X)
    (eq (comp (pi0 (bang X)) (dcoh X)) (bang (pi0 X))))
  (diagram ∂-lin-1 (objects X)
    (eq (comp (dcoh X) (bang (iota0 X))) (iota0 (bang X))))
  (diagram ∂-lin-2 (objects X)
    (eq (comp (dcoh X) (bang (theta X)))
        (comp (theta (bang X)) (S (dcoh X)) (dcoh (S X)))))
  (diagram ∂-chain-1 (objects X)
    (eq (comp (S (der X)) (dcoh X)) (der (S X))))
  (diagram ∂-chain-2 (objects X)
    (eq (comp (S (dig X)) (dcoh X))
        (comp (dcoh (bang X)) (bang (dcoh X)) (dig (S X)))))
  (diagram ∂-Leibniz-1
    (eq (comp (dcoh top) (bang (delta top)) m0)
        (comp (iota0 (bang top)) m0)))
  (diagram ∂-Leibniz-2 (objects X Y)
    (eq (comp (S (m2 X Y)) (L (bang X) (bang Y)) (tensor (dcoh X) (dcoh Y)))
        (comp (dcoh (with X Y)) (bang (psi X Y)) (m2 (S X) (S Y)))))
  (diagram ∂-Schwarz (objects X)
    (eq (comp (S (dcoh X)) (dcoh (S X)) (bang (flip X)))
        (comp (flip (bang X)) (S (dcoh X)) (dcoh (S X)))))
  (diagram ∂-natural (objects X Y) (morphisms (f X Y))
    (eq (comp (S (bang f)) (dcoh X)) (comp (dcoh Y) (bang (S f))))))
)";

// The same assertions with ∂ unfolded into its two components.
const char* const kCohdiffReduced = R"(
(suite cohdiff-reduced
  (diagram ∂-local (objects X)
    (eq (comp (pi0 (bang X)) (pair (bang (pi0 X)) (derive X))) (bang (pi0 X))))
  (diagram ∂-lin-1 (objects X)
    (eq (pair (comp (bang (pi0 X)) (bang (iota0 X))) (comp (derive X) (bang (iota0 X))))
        (pair (id (bang X)) (zero (bang X) (bang X)))))
  (diagram ∂-lin-2 (objects X)
    (eq (pair (comp (bang (pi0 X)) (bang (theta X))) (comp (derive X) (bang (theta X))))
        (pair (comp (bang (pi0 X)) (bang (pi0 (S X))))
              (sum (comp (bang (pi0 X)) (derive (S X))) (comp (derive X) (bang (pi0 (S X))))))))
  (diagram ∂-chain-1 (objects X)
    (eq (pair (comp (der X) (bang (pi0 X))) (comp (der X) (derive X)))
        (pair (comp (pi0 X) (der (S X))) (comp (der X) (bang (pi1 X))))))
  (diagram ∂-chain-2 (objects X)
    (eq (pair (comp (dig X) (bang (pi0 X))) (comp (dig X) (derive X)))
        (pair (comp (bang (bang (pi0 X))) (dig (S X)))
              (comp (derive (bang X)) (bang (dcoh X)) (dig (S X))))))
  (diagram ∂-Leibniz-1
    (eq (pair (comp (bang (pi0 top)) (bang (delta top)) m0) (comp (derive top) (bang (delta top)) m0))
        (pair m0 (zero one (bang top)))))
  (diagram ∂-Leibniz-2 (objects X Y)
    (eq (pair (comp (m2 X Y) (tensor (bang (pi0 X)) (bang (pi0 Y))))
              (comp (m2 X Y) (sum (tensor (bang (pi0 X)) (derive Y)) (tensor (derive X) (bang (pi0 Y))))))
        (pair (comp (bang (with (pi0 X) (pi0 Y))) (m2 (S X) (S Y)))
              (comp (derive (with X Y)) (bang (psi X Y)) (m2 (S X) (S Y))))))
  (diagram ∂-Schwarz (objects X)
    (eq (pair (pair (comp (bang (pi0 X)) (bang (pi0 (S X))) (bang (flip X)))
                    (comp (derive X) (bang (pi0 (S X))) (bang (flip X))))
              (pair (comp (bang (pi0 X)) (derive (S X)) (bang (flip X)))
                    (comp (derive X) (derive (S X)) (bang (flip X)))))
        (pair (pair (comp (bang (pi0 X)) (bang (pi0 (S X))))
                    (comp (bang (pi0 X)) (derive (S X))))
              (pair (comp (derive X) (bang (pi0 (S X))))
                    (comp (derive X) (derive (S X)))))))
  (diagram proj-struct-0 (objects X Y)
    (eq (bang (pr0 X Y)) (comp (rho (bang X)) (tensor (id (bang X)) (weak Y)) (m2-inv X Y))))
  (diagram proj-struct-1 (objects X Y)
    (eq (bang (pr1 X Y)) (comp (lambda (bang Y)) (tensor (weak X) (id (bang Y))) (m2-inv X Y))))
  (diagram contr-pairing (objects X Y Z) (morphisms (f X Y) (g X Z))
    (eq (comp (m2-inv Y Z) (bang (pair f g))) (comp (tensor (bang f) (bang g)) (contr X))))
  (diagram ∂-natural (objects X Y) (morphisms (f X Y))
    (eq (pair (comp (bang f) (bang (pi0 X))) (comp (bang f) (derive X)))
        (pair (comp (bang (pi0 Y)) (bang (S f))) (comp (derive Y) (bang (S f)))))))
)";

// Squares saying that structural maps are morphisms of distributive laws
// over S, with ∂ as the law on !.
const char* const kDistlaw = R"(
(suite distlaw
  (diagram lift-unit (objects X)
    (eq (comp (dcoh X) (bang (iota0 X))) (iota0 (bang X))))
  (diagram lift-mult (objects X)
    (eq (comp (dcoh X) (bang (theta X)))
        (comp (theta (bang X)) (S (dcoh X)) (dcoh (S X)))))
  (diagram law-natural (objects X Y) (morphisms (f X Y))
    (eq (comp (S (bang f)) (dcoh X)) (comp (dcoh Y) (bang (S f)))))
  (diagram der-morphism (objects X)
    (eq (comp (S (der X)) (dcoh X)) (der (S X))))
  (diagram dig-morphism (objects X)
    (eq (comp (S (dig X)) (dcoh X))
        (comp (dcoh (bang X)) (bang (dcoh X)) (dig (S X)))))
  (diagram m0-morphism
    (eq (comp (dcoh top) (bang (delta top)) m0)
        (comp (S m0) (iota0 one))))
  (diagram m2-morphism (objects X Y)
    (eq (comp (S (m2 X Y)) (L (bang X) (bang Y)) (tensor (dcoh X) (dcoh Y)))
        (comp (dcoh (with X Y)) (bang (psi X Y)) (m2 (S X) (S Y)))))
  (diagram lambda-morphism (objects X)
    (eq (comp (S (lambda X)) (L one X) (tensor (iota0 one) (id (S X))))
        (lambda (S X))))
  (diagram rho-morphism (objects X)
    (eq (comp (S (rho X)) (L X one) (tensor (id (S X)) (iota0 one)))
        (rho (S X)))))
)";

// Run in a Kleisli category over S: tensor and identities are the lifted ones.
const char* const kKleisliS = R"(
(suite kleisli-s
  (diagram kappa-id (objects A)
    (eq (kappa (base (id A))) (id A)))
  (diagram kappa-comp (objects A B C) (morphisms (f A B base) (g B C base))
    (eq (kappa (base (comp g f))) (comp (kappa g) (kappa f))))
  (diagram kappa-tensor (objects A B C D) (morphisms (f A C base) (g B D base))
    (eq (tensor (kappa f) (kappa g)) (kappa (base (tensor f g))))))
)";

const std::map<std::string, std::string>& texts() {
    static const std::map<std::string, std::string> t = {
        {"category", kCategory},   {"monoidal", kMonoidal},         {"cartesian", kCartesian},
        {"closed", kClosed},       {"comonad", kComonad},           {"seely", kSeely},
        {"differential", kDifferential}, {"summability", kSummability}, {"monad", kMonad},
        {"smf", kSmf},             {"cohdiff", kCohdiff},           {"cohdiff-reduced", kCohdiffReduced},
        {"distlaw", kDistlaw},     {"kleisli-s", kKleisliS},
    };
    return t;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> r;
    for (const auto& [k, v] : texts()) r.push_back(k);
    return r;
}

const std::string& suite_text(const std::string& name) {
    auto it = texts().find(name);
    if (it == texts().end()) throw std::out_of_range("unknown suite " + name);
    return it->second;
}

const SuiteSpec& builtin_suite(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, SuiteSpec> parsed;
    std::lock_guard<std::mutex> lock(mu);
    auto it = parsed.find(name);
    if (it == parsed.end()) it = parsed.emplace(name, parse_suite(suite_text(name))).first;
    return it->second;
}

}  // namespace llk
