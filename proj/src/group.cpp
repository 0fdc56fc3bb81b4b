#include "tek/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tek/error.hpp"
#include "tek/snf.hpp"

namespace tek {

namespace {

std::string triple(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

} // namespace

GroupPtr from_cayley_table(const std::vector<std::vector<int>>& input,
                           std::vector<int>* relabel_out) {
    const int n = static_cast<int>(input.size());
    if (n == 0) fail("NotAGroup", "empty table");
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(input[g].size()) != n)
            fail("NotAGroup", "table is not square at row " + std::to_string(g));
        for (int h = 0; h < n; ++h)
            if (input[g][h] < 0 || input[g][h] >= n)
                fail("NotAGroup", "entry out of range at (" + std::to_string(g) + ", " +
                                      std::to_string(h) + ")");
    }

    // Left identity by row scan; with two-sided inverses and associativity
    // below this forces a two-sided identity.
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int h = 0; h < n; ++h) ok = ok && input[cand][h] == h;
        if (ok) e = cand;
    }
    if (e < 0) fail("NotAGroup", "no identity element");

    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (e != 0) std::swap(sigma[0], sigma[e]); // transposition, self-inverse
    if (relabel_out) *relabel_out = sigma;

    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->table[sigma[a]][sigma[b]] = sigma[input[a][b]];

    g->inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b) {
            if (g->table[a][b] == 0) {
                if (found >= 0)
                    fail("NotAGroup", "two right inverses for element " + std::to_string(a));
                found = b;
            }
        }
        if (found < 0 || g->table[found][a] != 0)
            fail("NotAGroup", "no inverse for element " + std::to_string(a));
        g->inverse[a] = found;
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g->table[g->table[a][b]][c] != g->table[a][g->table[b][c]])
                    fail("NotAGroup", "associativity fails at " + triple(a, b, c));

    for (int a = 0; a < n; ++a)
        if (g->table[0][a] != a || g->table[a][0] != a)
            fail("NotAGroup", "identity law fails at element " + std::to_string(a));

    return g;
}

GroupPtr cyclic(int n) {
    if (n < 1) fail("NotAGroup", "cyclic order must be positive");
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table.assign(n, std::vector<int>(n, 0));
    g->inverse.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g->table[a][b] = (a + b) % n;
        g->inverse[a] = (n - a) % n;
    }
    return g;
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order * h.order;
    auto p = std::make_shared<FiniteGroup>();
    p->order = n;
    p->table.assign(n, std::vector<int>(n, 0));
    p->inverse.assign(n, 0);
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int a2 = 0; a2 < h.order; ++a2) {
            const int a = a1 * h.order + a2;
            p->inverse[a] = g.inv(a1) * h.order + h.inv(a2);
            for (int b1 = 0; b1 < g.order; ++b1)
                for (int b2 = 0; b2 < h.order; ++b2)
                    p->table[a][b1 * h.order + b2] = g.mul(a1, b1) * h.order + h.mul(a2, b2);
        }
    return p;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
    std::set<int> elems{0};
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            elems.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    // Close under products; a finite subset of a group closed under
    // multiplication and containing 1 is a subgroup.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(elems.begin(), elems.end());
        for (int a : snapshot)
            for (int b : snapshot)
                if (elems.insert(g.mul(a, b)).second) grew = true;
    }
    return {elems.begin(), elems.end()};
}

std::vector<std::vector<int>> quotient_table(const FiniteGroup& g,
                                             const std::vector<int>& normal_subgroup) {
    std::vector<int> coset_rep(g.order, -1); // minimal element of each coset
    for (int a = 0; a < g.order; ++a) {
        if (coset_rep[a] >= 0) continue;
        int rep = a;
        std::vector<int> members;
        for (int k : normal_subgroup) {
            int m = g.mul(a, k);
            members.push_back(m);
            rep = std::min(rep, m);
        }
        for (int m : members) coset_rep[m] = rep;
    }
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a)
        if (coset_rep[a] == a) reps.push_back(a);
    std::vector<int> index(g.order, -1);
    for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);

    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q, 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = index[coset_rep[g.mul(reps[i], reps[j])]];
    return table;
}

AbelianInvariants abelianization(const FiniteGroup& g) {
    auto q = quotient_table(g, commutator_subgroup(g));
    const int m = static_cast<int>(q.size());
    if (m == 1) return {};

    // Present the quotient on all m generators with relations
    // e_a + e_b - e_{ab} = 0 and read off elementary divisors.
    IMat rel;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<long long> row(m, 0);
            row[a] += 1;
            row[b] += 1;
            row[q[a][b]] -= 1;
            rel.push_back(std::move(row));
        }
    auto snf = smith_normal_form(rel, false, false);
    AbelianInvariants out;
    for (long long d : snf.diag)
        if (d > 1) out.factors.push_back(d);
    return out;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) { return a.table == b.table; }

} // namespace tek
