#pragma once

#include <optional>

#include "tek/cocycle.hpp"

namespace tek {

// H^2_m(G,T) as invariant factors with one representative cocycle per factor,
// plus the integer projection data needed to place an arbitrary cocycle's
// class in these coordinates.
struct CohomologyBasis {
    GroupPtr group;
    long long modulus = 1; // N = |G|; representatives take values in mu_N
    AbelianInvariants invariant_factors;
    std::vector<Cocycle> representatives; // one generator per invariant factor

    // Projection data. Entries of (Z/N)^m are indexed by pairs (g,h) with
    // g,h >= 1, m = (n-1)^2. Columns of `kernel_gens` generate the normalized
    // cocycles mod N; `proj` / `proj_inv` diagonalize the quotient by the
    // classes dying over T, with elementary divisors `all_factors`.
    int m = 0;
    IMat kernel_gens;
    IMat proj, proj_inv;
    IVec all_factors;          // length m, divisibility chain, 1s first
    std::vector<int> factor_index; // positions with all_factors > 1
};

CohomologyBasis schur_multiplier(const GroupPtr& g);

// Coordinates of [c] in the basis (one entry per invariant factor, reduced
// mod that factor). All-zero iff c is a T-coboundary.
IVec class_coordinates(const Cocycle& c, const CohomologyBasis& basis);

// Witness mu with a * b^{-1} = d mu over T, when [a] = [b]; empty otherwise.
// The witness modulus is lcm(N_a, N_b) * |G| and coboundary(mu) equals the
// rescaled a * b^{-1} exactly.
std::optional<CoboundaryWitness> trivialize(const Cocycle& a, const Cocycle& b);

// Canonical mu_N-valued cocycle whose class has the given coordinates.
Cocycle class_representative(const CohomologyBasis& basis, const IVec& coords);

IVec coords_reduce(const CohomologyBasis& basis, const IVec& raw);
IVec coords_add(const CohomologyBasis& basis, const IVec& a, const IVec& b);
IVec coords_neg(const CohomologyBasis& basis, const IVec& a);
bool coords_zero(const IVec& a);

// All class coordinate vectors in a fixed mixed-radix order, starting with
// the trivial class.
std::vector<IVec> all_classes(const CohomologyBasis& basis);

} // namespace tek
