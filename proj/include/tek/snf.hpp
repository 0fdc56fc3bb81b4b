#pragma once

#include <optional>
#include <vector>

namespace tek {

using IMat = std::vector<std::vector<long long>>;
using IVec = std::vector<long long>;

IMat identity_mat(int n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_vec(const IMat& a, const IVec& x);
long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);
long long mod_reduce(long long v, long long m); // representative in [0, m)

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
// Transform matrices (and their inverses) are tracked only on request.
struct SmithForm {
    IMat u, u_inv; // rows x rows
    IMat v, v_inv; // cols x cols
    IVec diag;     // length min(rows, cols)
    int rank = 0;
    int rows = 0, cols = 0;
};

SmithForm smith_normal_form(IMat a, bool want_u, bool want_v);

// Column generators of {x in (Z/N)^c : A x = 0 mod N}. Always returns a
// c x c matrix (columns may be redundant as generators).
IMat kernel_mod(const IMat& a, int cols, long long n);

// Integer kernel basis of A, as columns of a c x k matrix.
IMat integer_kernel(const IMat& a, int cols);

// One solution of A x = b (mod n), if any.
std::optional<IVec> solve_mod(const IMat& a, int cols, const IVec& b, long long n);

// Rank over Q of an integer matrix.
int integer_rank(const IMat& a);

} // namespace tek
