"""First and second cohomology with trivial coefficients Z^r.

For a valid presentation with layers L_1 = Z^n and L_2 = Z^m, the
commutator map c: wedge^2 L_1 -> L_2 determines everything:

    H^1(G, Z^r) = Z^{r n},
    H^2(G, Z^r) = Coker(c^*) (+) Hom((L_1 (x) L_2) / S, Z^r),

where c^* dualises c on Hom(-, Z^r) and S <= L_1 (x) L_2 is spanned by
the Jacobi elements

    x_i (x) c(x_j ^ x_k) - x_j (x) c(x_i ^ x_k) + x_k (x) c(x_i ^ x_j).

As an independent cross-check, the same group is the degree-2 cohomology
of the dual of the finite complex

    wedge^3 L_1 --A--> (L_1 (x) L_2) (+) wedge^2 L_1 --B--> L_1 (+) L_2,

with A the Jacobi map into the tensor block and B the commutator map out
of the wedge block. Both routes are computed exactly and compared.

Basis orderings are fixed here once and shared by every matrix and every
cocycle coordinate in the package: pairs (i < j) and triples (i < j < k)
lexicographic, tensor basis x_t (x) y_l row-major in (t, l).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exactlinalg import (AbelianGroupInvariants, IntMatrix,
                          smith_normal_form, subquotient_invariants,
                          quotient_invariants)
from .grouplaw import InvalidPresentationError, _bracket_matrix, validate


def ordered_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def pair_index(n, i, j):
    if not (0 <= i < j < n):
        raise IndexError("pair (%d, %d) out of range" % (i, j))
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def ordered_triples(n):
    return [(i, j, k) for i in range(n)
            for j in range(i + 1, n) for k in range(j + 1, n)]


def tensor_index(n, m, t, l):
    if not (0 <= t < n and 0 <= l < m):
        raise IndexError("tensor index (%d, %d) out of range" % (t, l))
    return t * m + l


def require_valid(P):
    report = validate(P)
    if not report.ok:
        raise InvalidPresentationError(report)


def bracket_matrix(P):
    """The m x C(n,2) matrix of c: wedge^2 L_1 -> L_2 in the fixed bases."""
    return _bracket_matrix(P)


def jacobi_s_matrix(P):
    """The (n m) x C(n,3) matrix whose columns span S inside L_1 (x) L_2."""
    n, m = P.n, P.m
    cols = []
    for (i, j, k) in ordered_triples(n):
        col = [0] * (n * m)
        for t, p, q, sign in ((i, j, k, 1), (j, i, k, -1), (k, i, j, 1)):
            vec = P.bracket.get((p, q), (0,) * m)
            for l in range(m):
                if vec[l]:
                    col[tensor_index(n, m, t, l)] += sign * vec[l]
        cols.append(col)
    return IntMatrix.from_cols(cols, rows=n * m)


@dataclass(frozen=True)
class H2Report:
    """H^2 with its summands, plus the independent complex-path value.

    hom_part_rank is the rank of Hom((L_1 (x) L_2)/S, Z^r) and ker_c_rank
    is C(n,2) - rank(c); both feed the equivalent free-rank form
    Z^{r ker_c_rank} (+) Z^{hom_part_rank} (+) ext_part.
    """

    total: AbelianGroupInvariants
    coker_cstar: AbelianGroupInvariants
    hom_part_rank: int
    ker_c_rank: int
    ext_part: AbelianGroupInvariants
    crosscheck: AbelianGroupInvariants
    agree: bool

    def to_json(self):
        return {
            "total": self.total.to_json(),
            "coker_cstar": self.coker_cstar.to_json(),
            "hom_part_rank": self.hom_part_rank,
            "ker_c_rank": self.ker_c_rank,
            "ext_part": self.ext_part.to_json(),
            "crosscheck": self.crosscheck.to_json(),
            "agree": self.agree,
        }


def h1(P, r=1):
    """H^1(G, Z^r) = Hom(L_1, Z^r), free of rank r n."""
    require_valid(P)
    if r < 0:
        raise ValueError("coefficient rank must be nonnegative")
    return AbelianGroupInvariants.free(r * P.n)


def h2(P, r=1):
    """H^2(G, Z^r) assembled from the bracket and Jacobi matrices."""
    require_valid(P)
    if r < 0:
        raise ValueError("coefficient rank must be nonnegative")
    C = bracket_matrix(P)
    S = jacobi_s_matrix(P)
    npairs = C.cols
    snf_c = smith_normal_form(C)
    rank_s = len(smith_normal_form(S).invariants)

    coker_cstar = quotient_invariants(npairs, C.transpose()).repeat(r)
    ker_c_rank = npairs - snf_c.rank
    hom_part_rank = r * (P.n * P.m - rank_s)
    ext_part = AbelianGroupInvariants(
        0, tuple(d for d in snf_c.invariants if d > 1)).repeat(r)

    total = coker_cstar.direct_sum(AbelianGroupInvariants.free(hom_part_rank))
    alt = AbelianGroupInvariants.free(
        r * ker_c_rank + hom_part_rank).direct_sum(ext_part)
    if alt != total:
        raise AssertionError("the two closed forms of H^2 disagree: %s vs %s"
                             % (total, alt))

    crosscheck = h2_via_complex(P, r)
    return H2Report(total=total, coker_cstar=coker_cstar,
                    hom_part_rank=hom_part_rank, ker_c_rank=ker_c_rank,
                    ext_part=ext_part, crosscheck=crosscheck,
                    agree=crosscheck == total)


def h2_via_complex(P, r=1):
    """H^2(G, Z^r) as degree-2 cohomology of the dualised finite complex.

    This path never looks at the closed-form decomposition: it builds the
    two boundary maps, dualises them with r coefficient copies, and takes
    invariants of kernel mod image.
    """
    require_valid(P)
    if r < 0:
        raise ValueError("coefficient rank must be nonnegative")
    n, m = P.n, P.m
    npairs = comb(n, 2)
    S = jacobi_s_matrix(P)
    C = bracket_matrix(P)

    # A: wedge^3 -> tensor block (Jacobi), zero into the wedge block
    A = S.vstack(IntMatrix.zeros(npairs, S.cols))
    # B: zero on the tensor block, c out of the wedge block into L_2
    B_top = IntMatrix.zeros(n, n * m + npairs)
    B_bot = IntMatrix.zeros(m, n * m).hstack(C)
    B = B_top.vstack(B_bot)
    if not (B @ A).is_zero():
        raise AssertionError("boundary maps fail B @ A = 0")

    out_map = A.transpose().kron_identity(r)
    in_map = B.transpose().kron_identity(r)
    return subquotient_invariants(out_map, in_map)


def second_homology_rank(P):
    """Free rank of the second integral homology.

    Equals ker_c_rank plus the rank of (L_1 (x) L_2)/S, i.e. the free
    rank of H^2(G, Z) by universal coefficients.
    """
    require_valid(P)
    C = bracket_matrix(P)
    S = jacobi_s_matrix(P)
    rank_c = len(smith_normal_form(C).invariants)
    rank_s = len(smith_normal_form(S).invariants)
    return (C.cols - rank_c) + (P.n * P.m - rank_s)
