#include "tek/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tek/error.hpp"

namespace tek {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail("IntegerOverflow", "multiplication overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail("IntegerOverflow", "addition overflow");
    return r;
}

long long mod_reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

IMat identity_mat(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    const int r = static_cast<int>(a.size());
    const int k = r ? static_cast<int>(a[0].size()) : 0;
    const int c = k ? static_cast<int>(b[0].size()) : 0;
    IMat out(r, IVec(c, 0));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j)
                out[i][j] = checked_add(out[i][j], checked_mul(a[i][t], b[t][j]));
        }
    return out;
}

IVec mat_vec(const IMat& a, const IVec& x) {
    IVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            out[i] = checked_add(out[i], checked_mul(a[i][j], x[j]));
    return out;
}

namespace {

struct Worker {
    IMat a;
    int rows, cols;
    bool track_u, track_v;
    IMat u, u_inv, v, v_inv;

    Worker(IMat m, bool wu, bool wv)
        : a(std::move(m)),
          rows(static_cast<int>(a.size())),
          cols(rows ? static_cast<int>(a[0].size()) : 0),
          track_u(wu),
          track_v(wv) {
        if (track_u) { u = identity_mat(rows); u_inv = identity_mat(rows); }
        if (track_v) { v = identity_mat(cols); v_inv = identity_mat(cols); }
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        std::swap(a[i], a[k]);
        if (track_u) {
            std::swap(u[i], u[k]);
            for (int t = 0; t < rows; ++t) std::swap(u_inv[t][i], u_inv[t][k]);
        }
    }
    void swap_cols(int j, int k) {
        if (j == k) return;
        for (int t = 0; t < rows; ++t) std::swap(a[t][j], a[t][k]);
        if (track_v) {
            for (int t = 0; t < cols; ++t) std::swap(v[t][j], v[t][k]);
            std::swap(v_inv[j], v_inv[k]);
        }
    }
    // row_i -= q * row_k
    void row_op(int i, int k, long long q) {
        if (q == 0) return;
        for (int t = 0; t < cols; ++t)
            a[i][t] = checked_add(a[i][t], -checked_mul(q, a[k][t]));
        if (track_u) {
            for (int t = 0; t < rows; ++t)
                u[i][t] = checked_add(u[i][t], -checked_mul(q, u[k][t]));
            for (int t = 0; t < rows; ++t)
                u_inv[t][k] = checked_add(u_inv[t][k], checked_mul(q, u_inv[t][i]));
        }
    }
    // col_j -= q * col_k
    void col_op(int j, int k, long long q) {
        if (q == 0) return;
        for (int t = 0; t < rows; ++t)
            a[t][j] = checked_add(a[t][j], -checked_mul(q, a[t][k]));
        if (track_v) {
            for (int t = 0; t < cols; ++t)
                v[t][j] = checked_add(v[t][j], -checked_mul(q, v[t][k]));
            for (int t = 0; t < cols; ++t)
                v_inv[k][t] = checked_add(v_inv[k][t], checked_mul(q, v_inv[j][t]));
        }
    }
    void negate_row(int i) {
        for (int t = 0; t < cols; ++t) a[i][t] = -a[i][t];
        if (track_u) {
            for (int t = 0; t < rows; ++t) u[i][t] = -u[i][t];
            for (int t = 0; t < rows; ++t) u_inv[t][i] = -u_inv[t][i];
        }
    }

    // Smallest |nonzero| in the trailing submatrix, or nullopt.
    std::optional<std::pair<int, int>> pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        long long best_abs = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long m = std::llabs(a[i][j]);
                if (m != 0 && (!best || m < best_abs)) {
                    best = {i, j};
                    best_abs = m;
                }
            }
        return best;
    }

    void run(SmithForm& out) {
        const int lim = std::min(rows, cols);
        int t = 0;
        for (; t < lim; ++t) {
            auto p = pivot(t);
            if (!p) break;
            swap_rows(t, p->first);
            swap_cols(t, p->second);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0) row_op(i, t, a[i][t] / a[t][t]);
                for (int i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0) { clean = false; break; }
                if (clean)
                    for (int j = t + 1; j < cols; ++j)
                        if (a[t][j] != 0) col_op(j, t, a[t][j] / a[t][t]);
                if (clean)
                    for (int j = t + 1; j < cols; ++j)
                        if (a[t][j] != 0) { clean = false; break; }
                if (clean) {
                    // Pivot must divide the rest of the submatrix for the
                    // divisibility chain; pull in an offending row and retry.
                    long long piv = a[t][t];
                    int bad_i = -1;
                    for (int i = t + 1; i < rows && bad_i < 0; ++i)
                        for (int j = t + 1; j < cols; ++j)
                            if (a[i][j] % piv != 0) { bad_i = i; break; }
                    if (bad_i < 0) break;
                    row_op(t, bad_i, -1); // row_t += row_bad
                }
                auto q = pivot(t);
                swap_rows(t, q->first);
                swap_cols(t, q->second);
            }
            if (a[t][t] < 0) negate_row(t);
        }
        out.diag.assign(lim, 0);
        for (int i = 0; i < lim; ++i) out.diag[i] = a[i][i];
        out.rank = t;
        out.rows = rows;
        out.cols = cols;
        if (track_u) { out.u = std::move(u); out.u_inv = std::move(u_inv); }
        if (track_v) { out.v = std::move(v); out.v_inv = std::move(v_inv); }
    }
};

} // namespace

SmithForm smith_normal_form(IMat a, bool want_u, bool want_v) {
    SmithForm out;
    if (a.empty()) {
        out.rows = 0;
        out.cols = 0;
        if (want_u) { out.u = {}; out.u_inv = {}; }
        return out;
    }
    Worker w(std::move(a), want_u, want_v);
    w.run(out);
    return out;
}

IMat kernel_mod(const IMat& a, int cols, long long n) {
    if (a.empty()) {
        // No constraints: all of (Z/N)^c.
        return identity_mat(cols);
    }
    auto snf = smith_normal_form(a, false, true);
    IMat w(cols, IVec(cols, 0));
    for (int j = 0; j < cols; ++j) {
        long long d = j < static_cast<int>(snf.diag.size()) ? snf.diag[j] : 0;
        long long s = n / std::gcd(d, n);
        for (int i = 0; i < cols; ++i) w[i][j] = mod_reduce(checked_mul(s, snf.v[i][j]), n);
    }
    return w;
}

IMat integer_kernel(const IMat& a, int cols) {
    if (a.empty()) return identity_mat(cols);
    auto snf = smith_normal_form(a, false, true);
    IMat basis(cols);
    int k = 0;
    for (int j = 0; j < cols; ++j) {
        long long d = j < static_cast<int>(snf.diag.size()) ? snf.diag[j] : 0;
        if (d == 0) ++k;
    }
    IMat out(cols, IVec(k, 0));
    int col = 0;
    for (int j = 0; j < cols; ++j) {
        long long d = j < static_cast<int>(snf.diag.size()) ? snf.diag[j] : 0;
        if (d != 0) continue;
        for (int i = 0; i < cols; ++i) out[i][col] = snf.v[i][j];
        ++col;
    }
    return out;
}

std::optional<IVec> solve_mod(const IMat& a, int cols, const IVec& b, long long n) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return IVec(cols, 0);
    // Augment with n*I so solutions over Z of [A | nI] z = b are exactly
    // solutions of A x = b (mod n).
    IMat aug(rows, IVec(cols + rows, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols + i] = n;
    }
    auto snf = smith_normal_form(aug, true, true);
    IVec ub = mat_vec(snf.u, b);
    IVec w(cols + rows, 0);
    for (int i = 0; i < rows; ++i) {
        long long d = i < static_cast<int>(snf.diag.size()) ? snf.diag[i] : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            w[i] = ub[i] / d;
        }
    }
    IVec z = mat_vec(snf.v, w);
    IVec x(cols, 0);
    for (int j = 0; j < cols; ++j) x[j] = mod_reduce(z[j], n);
    return x;
}

int integer_rank(const IMat& a) {
    if (a.empty()) return 0;
    return smith_normal_form(a, false, false).rank;
}

} // namespace tek
