#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mulab/matrix.hpp"

namespace mulab {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kRoundTripTol = 1e-9;
inline constexpr double kSvRelCutoff = 1e-8;
inline constexpr double kSvGapMin = 1e4;

// An ordered list of tensor-factor ("leg") dimensions.  Flattening is
// row-major with leg 1 varying slowest: the flat index of components
// (i_1, ..., i_L) is ((i_1 d_2 + i_2) d_3 + i_3) ...
struct SpaceSignature {
    std::vector<int> dims;

    SpaceSignature() = default;
    SpaceSignature(std::initializer_list<int> d) : dims(d) { validate(); }
    explicit SpaceSignature(std::vector<int> d) : dims(std::move(d)) { validate(); }

    int legs() const { return static_cast<int>(dims.size()); }
    int dim(int leg) const { return dims[static_cast<std::size_t>(leg) - 1]; }  // 1-based
    int total() const;
    void validate() const;  // throws on non-positive dimensions
    std::string str() const;
};

// Tensor flip H1 (x) H2 -> H2 (x) H1 as a (d1*d2) x (d1*d2) permutation
// matrix: rows are indexed in the (d2, d1) order, columns in (d1, d2).
ComplexMatrix flip(int d1, int d2);

// Embeds a square operator acting on the listed legs (1-based, strictly
// increasing) into the full space described by `sig`, acting as the
// identity on the remaining legs.  The leg-subscript notation X_{13} is
// embed_legs(X, {1, 3}, sig).
ComplexMatrix embed_legs(const ComplexMatrix& op, const std::vector<int>& legs,
                         const SpaceSignature& sig);

// Unitary permutation matrix P reordering legs: row index is flattened in
// the permuted signature (leg i of the output is leg perm[i] of the input,
// perm 1-based), column index in the original one.  P x P* re-expresses an
// operator in the permuted leg order.
ComplexMatrix leg_permutation_matrix(const SpaceSignature& sig, const std::vector<int>& perm);

// Conjugates x by the leg permutation: result acts on the permuted signature.
ComplexMatrix permute_legs(const ComplexMatrix& x, const SpaceSignature& sig,
                           const std::vector<int>& perm);

// max(|X*X - I|, |XX* - I|) entrywise.
double unitarity_residual(const ComplexMatrix& x);
bool is_unitary(const ComplexMatrix& x, double tol = kDefaultTol);

struct ExtractResult {
    ComplexMatrix op;       // candidate on the remaining legs (normalized partial trace)
    double residual = 0.0;  // re-embedding residual against the input
    bool ok = false;        // residual <= tol
};

// If x acts as the identity on `leg`, returns the operator on the other
// legs.  The candidate is the partial trace over `leg` divided by its
// dimension; success is certified by re-embedding.
ExtractResult extract_trivial_leg(const ComplexMatrix& x, const SpaceSignature& sig, int leg,
                                  double tol = kDefaultTol);

// Haar-distributed unitary (Ginibre + QR with phase-fixed diagonal),
// deterministic in the seed.
ComplexMatrix random_unitary(int n, std::uint64_t seed);

}  // namespace mulab
