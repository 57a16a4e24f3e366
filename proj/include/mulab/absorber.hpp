#pragma once

#include <map>
#include <string>
#include <vector>

#include "mulab/repcat.hpp"

namespace mulab {

// One member x of the test family of a natural-absorber candidate.  For a
// right candidate with object rho the operator is U^x on Kx (x) Krho; for a
// left candidate with object lambda it is U^x on Klambda (x) Kx.  Entries
// flagged trivial claim U^x = 1 (x absorbed invisibly).
struct AbsorberEntry {
    std::string id;
    int carrier_dim = 0;
    bool trivial = false;
    ComplexMatrix op;
};

// A morphism a: from -> to of the underlying category, recorded so that
// naturality of the family can be tested.
struct IntertwinerEdge {
    std::string from, to;
    ComplexMatrix a;  // carrier(to) x carrier(from)
};

// Declares that `product` is the tensor object left (x) right, so the
// multiplicativity condition of the family can be tested on it.
struct TensorTriple {
    std::string left, right, product;
};

struct AbsorberCandidate {
    Side side = Side::Right;
    std::string object_id;
    std::vector<AbsorberEntry> family;
    std::vector<IntertwinerEdge> intertwiners;
    std::vector<TensorTriple> tensor_pairs;

    const AbsorberEntry* find(const std::string& id) const;
    const AbsorberEntry& entry(const std::string& id) const;  // throws if absent
    int object_dim() const;
};

// Verifies the defining properties of a natural absorber on the recorded
// family: unitarity, triviality flags, naturality along each edge, and the
// multiplicativity condition on each declared tensor pair.
CheckReport verify_absorber(const AbsorberCandidate& c, double tol = kDefaultTol);

// For a verified right candidate: U^rho is a multiplicative unitary, every
// U^x is a right representation of it, and the hom-spaces between family
// images match the recorded edges (fullness on the family).
struct AbsorberMuResult {
    MultiplicativeUnitary mu;
    std::map<std::string, Representation> reps;
    CheckReport report;
};

AbsorberMuResult absorber_to_mu(const AbsorberCandidate& c, double tol = kDefaultTol);

// Two right absorbers rho (carrier H) and rho-check (carrier H^) in the same
// category, each family containing the other's object.  With
//   U = U^rho|rho on H(x)H,    U~ = U^rho-check|rho-check on H^(x)H^,
//   V = U^rho-check|rho on H^(x)H,  W = U^rho|rho-check on H(x)H^  (*)
// ((*) reading: V is the rho-candidate's operator at the object of the
// rho-check candidate, and W vice versa), the six exchange relations below
// hold and are reported individually:
//   1: U_23 V_12  = V_12 V_13 U_23      on (H^, H, H)
//   2: U~_23 W_12 = W_12 W_13 U~_23     on (H, H^, H^)
//   3: V_23 U~_12 = U~_12 V_13 V_23     on (H^, H^, H)
//   4: W_23 U_12  = U_12 W_13 W_23      on (H, H, H^)
//   5: V_23 W_12  = W_12 U_13 V_23      on (H, H^, H)
//   6: W_23 V_12  = V_12 U~_13 W_23     on (H^, H, H^)
CheckReport compare_absorbers(const AbsorberCandidate& c1, const AbsorberCandidate& c2,
                              double tol = kDefaultTol);

// A right absorber rho (carrier H) and a left absorber lambda (carrier H^)
// in the same category.  With U = U^rho|rho (multiplicative), U~ =
// U~^lambda|lambda (antimultiplicative), V = U^rho|lambda in U(H^ (x) H) and
// W = U~^lambda|rho in U(H^ (x) H), checks:
//   1: U~_12 V_13 V_23 = V_13 U~_12    on (H^, H^, H)
//   2: U~_12 W_23 = W_23 W_13 U~_12    on (H^, H^, H)
//   3: U_23 V_12  = V_12 V_13 U_23     on (H^, H, H)
//   4: U_23 W_13 W_12 = W_13 U_23      on (H^, H, H)
//   5: V_13 W_12 = W_12 V_13 U_23      on (H^, H, H)
//   6: W_13 V_23 = V_23 W_13 U~_12     on (H^, H^, H)
CheckReport mixed_system_check(const AbsorberCandidate& rho, const AbsorberCandidate& lam,
                               double tol = kDefaultTol);

// A monoidal functor between the categories of two right absorbers, given
// by its action on family ids.  V = U2^{phi(rho1)} is a bicharacter:
//   A: (U2)_23 V_12 = V_12 V_13 (U2)_23          on (H1, H2, H2)
//   B: V_23 (U1)_12 = (U1)_12 V_13 V_23          on (H1, H1, H2)
//   C: V_23 (U1^x)_12 = (U1^x)_12 (U2^{phi x})_13 V_23   on (Kx, H1, H2)
// plus carrier-dimension preservation, edge intertwining on the image, and
// tensor-pair preservation.
struct BicharacterResult {
    ComplexMatrix v;
    int d1 = 0, d2 = 0;
    CheckReport report;
};

BicharacterResult functor_bicharacter(const std::map<std::string, std::string>& phi,
                                      const AbsorberCandidate& c1, const AbsorberCandidate& c2,
                                      double tol = kDefaultTol);

// Canonical right absorber of Corep(W): the object is (H, W) itself and
// U^x is the representation operator S^x.  Family: tau(C), tau(C^2),
// rho = (H, W), rho (x) rho; edges are full hom bases between members.
AbsorberCandidate canonical_absorber(const MultiplicativeUnitary& m);

// Replaces the object by rho-check = rho (x) y (y an existing family id)
// and tensors every family operator with 1_y.  Returns the base candidate
// augmented with the new object (id `stab_id`) alongside the stabilized
// candidate, ready for compare_absorbers.
struct StabilizedPair {
    AbsorberCandidate base;
    AbsorberCandidate stabilized;
};

StabilizedPair stabilize_candidate(const AbsorberCandidate& canonical, const std::string& y_id,
                                   const std::string& stab_id = "rho_st");

}  // namespace mulab
