#include "tek/cocycle.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tek/error.hpp"

namespace tek {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }
} // namespace

std::complex<double> Cocycle::value(int g, int h) const {
    return std::polar(1.0, kTau * static_cast<double>(values[g][h]) /
                               static_cast<double>(modulus));
}

std::complex<double> CoboundaryWitness::value(int g) const {
    return std::polar(1.0, kTau * static_cast<double>(mu[g]) / static_cast<double>(modulus));
}

Cocycle trivial_cocycle(GroupPtr g) {
    Cocycle c;
    c.modulus = 1;
    c.values.assign(g->order, IVec(g->order, 0));
    c.group = std::move(g);
    return c;
}

void validate_cocycle(const Cocycle& c) {
    const auto& g = *c.group;
    const int n = g.order;
    if (c.modulus < 1) fail("InvalidCocycle", "modulus must be positive");
    if (static_cast<int>(c.values.size()) != n)
        fail("InvalidCocycle", "value table has wrong size");
    for (int a = 0; a < n; ++a)
        if (static_cast<int>(c.values[a].size()) != n)
            fail("InvalidCocycle", "value table row " + std::to_string(a) + " has wrong size");
    for (int a = 0; a < n; ++a)
        if (mod_reduce(c.values[a][0], c.modulus) != 0 ||
            mod_reduce(c.values[0][a], c.modulus) != 0)
            fail("InvalidCocycle",
                 "normalization fails at identity row/column, element " + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                long long lhs = c.values[a][b] + c.values[g.mul(a, b)][k];
                long long rhs = c.values[a][g.mul(b, k)] + c.values[b][k];
                if (mod_reduce(lhs - rhs, c.modulus) != 0) {
                    std::ostringstream os;
                    os << "cocycle identity fails at (" << a << ", " << b << ", " << k << ")";
                    fail("InvalidCocycle", os.str());
                }
            }
}

Cocycle coboundary(const CoboundaryWitness& w) {
    const auto& g = *w.group;
    const int n = g.order;
    if (w.mu.empty() || mod_reduce(w.mu[0], w.modulus) != 0)
        fail("InvalidCocycle", "coboundary witness must have mu[identity] = 0");
    Cocycle c;
    c.group = w.group;
    c.modulus = w.modulus;
    c.values.assign(n, IVec(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            c.values[a][b] = mod_reduce(w.mu[a] + w.mu[b] - w.mu[g.mul(a, b)], w.modulus);
    return c;
}

Cocycle cocycle_rescale(const Cocycle& a, long long new_modulus) {
    if (new_modulus % a.modulus != 0)
        fail("ModulusNotEmbeddable", "modulus " + std::to_string(a.modulus) +
                                         " does not divide " + std::to_string(new_modulus));
    const long long s = new_modulus / a.modulus;
    Cocycle out = a;
    out.modulus = new_modulus;
    for (auto& row : out.values)
        for (auto& v : row) v = mod_reduce(checked_mul(v, s), new_modulus);
    return out;
}

Cocycle cocycle_product(const Cocycle& a, const Cocycle& b) {
    if (!same_group(*a.group, *b.group)) fail("GroupMismatch", "cocycles over different groups");
    const long long m = lcm_ll(a.modulus, b.modulus);
    Cocycle ra = cocycle_rescale(a, m);
    Cocycle rb = cocycle_rescale(b, m);
    for (size_t i = 0; i < ra.values.size(); ++i)
        for (size_t j = 0; j < ra.values.size(); ++j)
            ra.values[i][j] = mod_reduce(ra.values[i][j] + rb.values[i][j], m);
    return ra;
}

Cocycle cocycle_inverse(const Cocycle& a) {
    Cocycle out = a;
    for (auto& row : out.values)
        for (auto& v : row) v = mod_reduce(-v, a.modulus);
    return out;
}

Cocycle cocycle_power(const Cocycle& a, long long k) {
    Cocycle out = a;
    for (auto& row : out.values)
        for (auto& v : row) v = mod_reduce(checked_mul(v, k), a.modulus);
    return out;
}

Cocycle cocycle_canonical(const Cocycle& a) {
    long long g = a.modulus;
    for (const auto& row : a.values)
        for (long long v : row) g = std::gcd(g, mod_reduce(v, a.modulus));
    if (g <= 1) {
        Cocycle out = a;
        for (auto& row : out.values)
            for (auto& v : row) v = mod_reduce(v, a.modulus);
        return out;
    }
    Cocycle out;
    out.group = a.group;
    out.modulus = a.modulus / g;
    out.values.assign(a.values.size(), IVec(a.values.size(), 0));
    for (size_t i = 0; i < a.values.size(); ++i)
        for (size_t j = 0; j < a.values.size(); ++j)
            out.values[i][j] = mod_reduce(a.values[i][j], a.modulus) / g;
    return out;
}

bool cocycle_equal(const Cocycle& a, const Cocycle& b) {
    if (!same_group(*a.group, *b.group)) return false;
    Cocycle ca = cocycle_canonical(a);
    Cocycle cb = cocycle_canonical(b);
    return ca.modulus == cb.modulus && ca.values == cb.values;
}

std::string cocycle_key(const Cocycle& a) {
    Cocycle c = cocycle_canonical(a);
    std::ostringstream os;
    os << c.modulus;
    for (const auto& row : c.values)
        for (long long v : row) os << ',' << v;
    return os.str();
}

CoboundaryWitness trivial_witness(GroupPtr g, long long modulus) {
    CoboundaryWitness w;
    w.modulus = modulus;
    w.mu.assign(g->order, 0);
    w.group = std::move(g);
    return w;
}

CoboundaryWitness witness_product(const CoboundaryWitness& a, const CoboundaryWitness& b) {
    if (!same_group(*a.group, *b.group)) fail("GroupMismatch", "witnesses over different groups");
    const long long m = lcm_ll(a.modulus, b.modulus);
    CoboundaryWitness out;
    out.group = a.group;
    out.modulus = m;
    out.mu.assign(a.mu.size(), 0);
    for (size_t i = 0; i < a.mu.size(); ++i)
        out.mu[i] = mod_reduce(checked_mul(a.mu[i], m / a.modulus) +
                                   checked_mul(b.mu[i], m / b.modulus),
                               m);
    return out;
}

CoboundaryWitness witness_inverse(const CoboundaryWitness& a) {
    CoboundaryWitness out = a;
    for (auto& v : out.mu) v = mod_reduce(-v, a.modulus);
    return out;
}

} // namespace tek
