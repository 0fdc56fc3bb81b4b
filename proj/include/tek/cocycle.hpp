#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tek/group.hpp"
#include "tek/snf.hpp"

namespace tek {

// A root-of-unity valued 2-cocycle stored exactly: values[g][h] is the
// exponent of lambda(g,h) = exp(2*pi*i * values[g][h] / modulus). Normalized:
// row and column of the identity are zero.
struct Cocycle {
    GroupPtr group;
    long long modulus = 1;
    std::vector<IVec> values;

    std::complex<double> value(int g, int h) const;
};

// mu: G -> roots of unity, mu[0] = 0, stored as exponents mod `modulus`.
struct CoboundaryWitness {
    GroupPtr group;
    long long modulus = 1;
    IVec mu;

    std::complex<double> value(int g) const;
};

Cocycle trivial_cocycle(GroupPtr g);

// Checks normalization and the cocycle identity; throws
// Error("InvalidCocycle", ...) with a witness triple.
void validate_cocycle(const Cocycle& c);

// d mu (g,h) = mu[g] + mu[h] - mu[gh] mod modulus.
Cocycle coboundary(const CoboundaryWitness& mu);

// Exponent tables are rescaled to lcm of the moduli, then added / negated.
Cocycle cocycle_product(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_inverse(const Cocycle& a);
Cocycle cocycle_power(const Cocycle& a, long long k);

// Same cocycle as a T-valued function (modulus-insensitive).
bool cocycle_equal(const Cocycle& a, const Cocycle& b);

// Minimal-modulus form: divides exponents and modulus by their common gcd.
Cocycle cocycle_canonical(const Cocycle& a);

// Stable identity for memo keys; equal iff cocycle_equal.
std::string cocycle_key(const Cocycle& a);

Cocycle cocycle_rescale(const Cocycle& a, long long new_modulus);

CoboundaryWitness trivial_witness(GroupPtr g, long long modulus = 1);
CoboundaryWitness witness_product(const CoboundaryWitness& a, const CoboundaryWitness& b);
CoboundaryWitness witness_inverse(const CoboundaryWitness& a);

} // namespace tek
