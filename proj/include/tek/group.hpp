#pragma once

#include <memory>
#include <vector>

namespace tek {

// A finite group presented by its Cayley table. Element 0 is always the
// identity; constructors relabel if needed so that normalized cocycles have a
// zero first row and column.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> table; // table[g][h] = g*h
    std::vector<int> inverse;

    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const { return inverse[g]; }

    bool operator==(const FiniteGroup& o) const { return table == o.table; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Invariant factors d1 | d2 | ... | dr of a finite abelian group, each >= 2.
// The empty list is the trivial group.
struct AbelianInvariants {
    std::vector<long long> factors;

    long long group_order() const {
        long long n = 1;
        for (long long d : factors) n *= d;
        return n;
    }
    bool operator==(const AbelianInvariants& o) const { return factors == o.factors; }
};

// Validates identity, inverse and associativity laws, relabeling the identity
// to index 0 when needed. Throws Error("NotAGroup", ...) naming the first
// violated law with a witness. If `relabel_out` is given it receives the
// permutation applied (new index of each old element), identity when none.
GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                           std::vector<int>* relabel_out = nullptr);

GroupPtr cyclic(int n);

// Componentwise product; element index = g*|H| + h.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Invariant factors of G/[G,G].
AbelianInvariants abelianization(const FiniteGroup& g);

// Elements of the commutator subgroup [G,G], sorted ascending.
std::vector<int> commutator_subgroup(const FiniteGroup& g);

// Quotient of G by a (normal) subgroup given by its sorted element list.
// Returns the coset Cayley table; coset 0 contains the identity.
std::vector<std::vector<int>> quotient_table(const FiniteGroup& g,
                                             const std::vector<int>& normal_subgroup);

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

} // namespace tek
