#include "tek/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "tek/error.hpp"

namespace tek {

namespace {

// Index of the pair (g,h), g,h >= 1, in the flattened variable space.
inline int pos(int g, int h, int n) { return (g - 1) * (n - 1) + (h - 1); }

// Rows of the cocycle-identity system over the normalized variables. Terms
// that touch the identity row/column are dropped (they are pinned to zero).
IMat cocycle_system(const FiniteGroup& g) {
    const int n = g.order;
    const int m = (n - 1) * (n - 1);
    IMat rows;
    rows.reserve(static_cast<size_t>(n - 1) * (n - 1) * (n - 1));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int k = 1; k < n; ++k) {
                IVec row(m, 0);
                row[pos(a, b, n)] += 1;
                if (int ab = g.mul(a, b); ab != 0) row[pos(ab, k, n)] += 1;
                if (int bk = g.mul(b, k); bk != 0) row[pos(a, bk, n)] -= 1;
                row[pos(b, k, n)] -= 1;
                if (std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; }))
                    rows.push_back(std::move(row));
            }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// Coboundary matrix C: (Z)^{n-1} -> tables, (C mu)_{(g,h)} = mu_g + mu_h - mu_{gh},
// with mu indexed by elements 1..n-1 and mu_0 = 0 dropped.
IMat coboundary_matrix(const FiniteGroup& g) {
    const int n = g.order;
    const int m = (n - 1) * (n - 1);
    IMat c(m, IVec(n - 1, 0));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            IVec& row = c[pos(a, b, n)];
            row[a - 1] += 1;
            row[b - 1] += 1;
            if (int ab = g.mul(a, b); ab != 0) row[ab - 1] -= 1;
        }
    return c;
}

IVec flatten(const Cocycle& c) {
    const int n = c.group->order;
    IVec out((n - 1) * (n - 1), 0);
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) out[pos(a, b, n)] = mod_reduce(c.values[a][b], c.modulus);
    return out;
}

Cocycle unflatten(GroupPtr g, const IVec& flat, long long modulus) {
    const int n = g->order;
    Cocycle c;
    c.modulus = modulus;
    c.values.assign(n, IVec(n, 0));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) c.values[a][b] = mod_reduce(flat[pos(a, b, n)], modulus);
    c.group = std::move(g);
    return c;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

// Why moduli N and N^2 suffice: H^2(G,T) is annihilated by N = |G|, and the
// long exact sequence of 1 -> mu_N -> T -> T -> 1 shows every class contains
// a mu_N-valued cocycle. If such a cocycle equals d mu over T, then mu^N is a
// homomorphism G -> T, so mu^(N^2) = 1 and the witness lives in mu_(N^2).
CohomologyBasis schur_multiplier(const GroupPtr& g) {
    const int n = g->order;
    const long long N = n;
    CohomologyBasis basis;
    basis.group = g;
    basis.modulus = N;
    basis.m = (n - 1) * (n - 1);
    if (n == 1) return basis;
    const int m = basis.m;

    // (i) Z^2(G, Z/N) as the mod-N kernel of the cocycle-identity system.
    IMat sys = cocycle_system(*g);
    IMat w = kernel_mod(sys, m, N);

    // (ii) Classes dying over T: a in Z^m is killed iff N*(W a) = C mu (mod N^2)
    // for some mu valued in Z/N^2. The a-lattice of solutions is the
    // projection of the integer kernel of [N*W | -C | -N^2 I].
    IMat cb = coboundary_matrix(*g);
    const int mu_dim = n - 1;
    IMat big(m, IVec(m + mu_dim + m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) big[i][j] = checked_mul(N, w[i][j]);
        for (int j = 0; j < mu_dim; ++j) big[i][m + j] = -cb[i][j];
        big[i][m + mu_dim + i] = -checked_mul(N, N);
    }
    IMat ker = integer_kernel(big, m + mu_dim + m);
    const int k = ker.empty() ? 0 : static_cast<int>(ker[0].size());
    IMat lattice(m, IVec(k, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) lattice[i][j] = ker[i][j];

    // Quotient Z^m / lattice via a second Smith normal form.
    auto snf = smith_normal_form(lattice, true, false);
    basis.all_factors.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        long long d = i < static_cast<int>(snf.diag.size()) ? snf.diag[i] : 0;
        if (d == 0) fail("InternalError", "cohomology quotient is not finite");
        basis.all_factors[i] = d;
    }
    basis.kernel_gens = std::move(w);
    basis.proj = std::move(snf.u);
    basis.proj_inv = std::move(snf.u_inv);
    for (int i = 0; i < m; ++i)
        if (basis.all_factors[i] > 1) {
            basis.factor_index.push_back(i);
            basis.invariant_factors.factors.push_back(basis.all_factors[i]);
        }
    for (int idx : basis.factor_index) {
        IVec a(m, 0);
        for (int i = 0; i < m; ++i) a[i] = basis.proj_inv[i][idx];
        IVec flat = mat_vec(basis.kernel_gens, a);
        basis.representatives.push_back(unflatten(g, flat, N));
    }
    for (auto& rep : basis.representatives) validate_cocycle(rep);
    return basis;
}

Cocycle class_representative(const CohomologyBasis& basis, const IVec& coords) {
    if (coords.size() != basis.factor_index.size())
        fail("ClassMismatch", "coordinate vector has wrong length");
    if (basis.group->order == 1 || coords_zero(coords)) return trivial_cocycle(basis.group);
    const int m = basis.m;
    IVec a(m, 0);
    for (size_t t = 0; t < coords.size(); ++t) {
        const int idx = basis.factor_index[t];
        const long long c = mod_reduce(coords[t], basis.all_factors[idx]);
        for (int i = 0; i < m; ++i)
            a[i] = checked_add(a[i], checked_mul(c, basis.proj_inv[i][idx]));
    }
    IVec flat = mat_vec(basis.kernel_gens, a);
    return unflatten(basis.group, flat, basis.modulus);
}

IVec class_coordinates(const Cocycle& c, const CohomologyBasis& basis) {
    if (!same_group(*c.group, *basis.group)) fail("GroupMismatch", "cocycle over another group");
    const int n = basis.group->order;
    if (n == 1) return {};
    const int m = basis.m;
    const long long N = basis.modulus;
    const long long L = lcm_ll(cocycle_canonical(c).modulus, N);
    const long long P = checked_mul(L, N);

    // Solve (P/N) * (W a) + C mu = (P/M) * c  (mod P) for a; the class of c
    // is then the class of W a, read off through the projection.
    const int mu_dim = n - 1;
    IMat sys(m, IVec(m + mu_dim, 0));
    IMat cb = coboundary_matrix(*basis.group);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            sys[i][j] = mod_reduce(checked_mul(P / N, basis.kernel_gens[i][j]), P);
        for (int j = 0; j < mu_dim; ++j) sys[i][m + j] = cb[i][j];
    }
    IVec rhs = flatten(cocycle_rescale(cocycle_canonical(c), L));
    for (auto& v : rhs) v = mod_reduce(checked_mul(P / L, v), P);
    auto sol = solve_mod(sys, m + mu_dim, rhs, P);
    if (!sol) fail("InvalidCocycle", "table does not satisfy the cocycle identity over T");
    IVec a(sol->begin(), sol->begin() + m);
    IVec pa = mat_vec(basis.proj, a);
    IVec coords;
    coords.reserve(basis.factor_index.size());
    for (int idx : basis.factor_index)
        coords.push_back(mod_reduce(pa[idx], basis.all_factors[idx]));
    return coords;
}

std::optional<CoboundaryWitness> trivialize(const Cocycle& a, const Cocycle& b) {
    if (!same_group(*a.group, *b.group)) fail("GroupMismatch", "cocycles over different groups");
    const auto& g = *a.group;
    const int n = g.order;
    Cocycle diff = cocycle_product(a, cocycle_inverse(b));
    const long long L = diff.modulus;
    const long long P = checked_mul(L, static_cast<long long>(n));
    if (n == 1) return trivial_witness(a.group, P);

    const int m = (n - 1) * (n - 1);
    IMat cb = coboundary_matrix(g);
    IVec rhs = flatten(diff);
    for (auto& v : rhs) v = mod_reduce(checked_mul(P / L, v), P);
    auto sol = solve_mod(cb, n - 1, rhs, P);
    if (!sol) return std::nullopt;
    CoboundaryWitness wit;
    wit.group = a.group;
    wit.modulus = P;
    wit.mu.assign(n, 0);
    for (int i = 1; i < n; ++i) wit.mu[i] = mod_reduce((*sol)[i - 1], P);
    // The witness reproduces the rescaled difference exactly.
    Cocycle check = coboundary(wit);
    Cocycle target = cocycle_rescale(diff, P);
    if (!(check.values == target.values)) fail("InternalError", "coboundary witness mismatch");
    (void)m;
    return wit;
}

IVec coords_reduce(const CohomologyBasis& basis, const IVec& raw) {
    IVec out(raw.size(), 0);
    for (size_t t = 0; t < raw.size(); ++t)
        out[t] = mod_reduce(raw[t], basis.all_factors[basis.factor_index[t]]);
    return out;
}

IVec coords_add(const CohomologyBasis& basis, const IVec& a, const IVec& b) {
    IVec out(a.size(), 0);
    for (size_t t = 0; t < a.size(); ++t) out[t] = a[t] + b[t];
    return coords_reduce(basis, out);
}

IVec coords_neg(const CohomologyBasis& basis, const IVec& a) {
    IVec out(a.size(), 0);
    for (size_t t = 0; t < a.size(); ++t) out[t] = -a[t];
    return coords_reduce(basis, out);
}

bool coords_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

std::vector<IVec> all_classes(const CohomologyBasis& basis) {
    std::vector<IVec> out;
    const auto& f = basis.invariant_factors.factors;
    IVec cur(f.size(), 0);
    for (;;) {
        out.push_back(cur);
        int t = static_cast<int>(f.size()) - 1;
        while (t >= 0) {
            if (++cur[t] < f[t]) break;
            cur[t] = 0;
            --t;
        }
        if (t < 0) break;
    }
    return out;
}

} // namespace tek
