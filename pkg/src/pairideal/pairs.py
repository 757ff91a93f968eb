"""The ideal of pairs of a realization.

From a realization W the construction permutes the ground set so the first
r columns are a basis, pins bases with M = [I | M'] and D = [-M'^T | I],
and forms the linear forms f_i (in the x-variables) and g_i (in the
y-variables) together with the generators f_i * g_i of the ideal of pairs.
The pinned bases make every downstream number reproducible; the ground-set
permutation is recorded and inverted in reports.
"""

from __future__ import annotations

from .linalg import ExactMatrix, rref
from .matroid import ColoopError, LoopError, Realization, labels
from .ring import pair_ring
from .spans import Echelon


class PairsIdeal:
    """The ideal (f_1 g_1, ..., f_n g_n) in S = R (x) R_perp, with context.

    Attributes use the *permuted* ground-set order (basis columns first);
    `to_original` maps internal indices back to the input labels.
    """

    def __init__(self, realization: Realization, drop_loops=False):
        field = realization.field
        loops = realization.matroid().loops
        if loops and not drop_loops:
            raise LoopError(
                f"realization has loops at columns {labels(loops)}; "
                "pass drop_loops to delete them"
            )
        base = realization
        dropped = []
        if loops:
            dropped = sorted(loops)
            base = realization.delete_columns(loops)

        self.input_realization = realization
        self.dropped_loops = dropped
        self.field = field
        n = base.n
        r = base.rank

        # greedy leftmost basis among the columns
        ech = Echelon(field)
        basis_cols = []
        for e in range(n):
            col = {i: c for i, c in enumerate(base.basis_matrix.column(e))}
            if ech.insert(col):
                basis_cols.append(e)
        nonbasis = [e for e in range(n) if e not in set(basis_cols)]
        self.perm = basis_cols + nonbasis  # internal position -> base column
        permuted_matrix = base.basis_matrix.submatrix_columns(self.perm)
        normal, pivots, rk = rref(permuted_matrix)
        assert pivots == list(range(r)), "pinned basis normalization failed"
        self.realization = Realization(realization.name, field, normal)
        self.matroid = self.realization.matroid()

        self.n = n
        self.r = r
        self.s = n - r  # number of y-variables
        # M' is r x (n-r); D = [-M'^T | I]
        self.mprime = [[normal[i, r + u] for u in range(self.s)] for i in range(r)]
        dual_rows = [
            [field.neg(self.mprime[i][u]) for i in range(r)]
            + [field.one if v == u else field.zero for v in range(self.s)]
            for u in range(self.s)
        ]
        self.dual_normal = ExactMatrix(field, dual_rows, ncols=n)

        self.ring = pair_ring(field, r, self.s)
        S = self.ring
        self.f = []
        self.g = []
        for i in range(n):
            if i < r:
                fi = S.var(i)
                gi = S.from_terms(
                    (self._y_exp(u), field.neg(self.mprime[i][u])) for u in range(self.s)
                )
            else:
                u = i - r
                fi = S.from_terms(
                    (self._x_exp(t), self.mprime[t][u]) for t in range(r)
                )
                gi = S.var(r + u)
            self.f.append(fi)
            self.g.append(gi)
        self.generators = [self.f[i] * self.g[i] for i in range(n)]
        self.zero_generator_indices = [i for i, p in enumerate(self.generators) if p.is_zero()]
        self.coloops = sorted(self.matroid.coloops)
        assert self.zero_generator_indices == self.coloops

        self.components = self.matroid.components()
        self.kappa = len(self.components)
        self.char_warning = field.char != 0

        self._swap = None

    def _x_exp(self, t):
        exp = [0] * self.ring.nvars
        exp[t] = 1
        return tuple(exp)

    def _y_exp(self, u):
        exp = [0] * self.ring.nvars
        exp[self.r + u] = 1
        return tuple(exp)

    def __repr__(self):
        return (
            f"PairsIdeal({self.input_realization.name!r}, n={self.n}, r={self.r}, "
            f"kappa={self.kappa})"
        )

    # -- label bookkeeping ----------------------------------------------------
    def to_original(self, internal_index: int) -> int:
        """Map an internal position to the 1-based label of the input matrix."""
        base_col = self.perm[internal_index]
        if self.dropped_loops:
            kept = [j for j in range(self.input_realization.n) if j not in self.dropped_loops]
            base_col = kept[base_col]
        return base_col + 1

    def original_labels(self, subset) -> list:
        return sorted(self.to_original(i) for i in subset)

    # -- the Euler data ----------------------------------------------------------
    def euler_vectors(self):
        """One 0/1 indicator vector per connected component, internal order."""
        out = []
        for comp in self.components:
            out.append(tuple(1 if i in comp else 0 for i in range(self.n)))
        return out

    def euler_relation_holds(self) -> bool:
        """Expand sum(f_i g_i) over each component and compare with zero."""
        for comp in self.components:
            total = self.ring.zero()
            for i in comp:
                total = total + self.generators[i]
            if not total.is_zero():
                return False
        return True

    def nonzero_generators(self):
        return [(i, self.generators[i]) for i in range(self.n) if self.generators[i]]

    # -- duality ----------------------------------------------------------------------
    def require_no_coloops(self, context: str):
        if self.coloops:
            raise ColoopError(
                f"{context} requires no coloops; coloops at "
                f"{[self.to_original(i) for i in self.coloops]}"
            )

    def swap_roles(self) -> "PairsIdeal":
        """The pairs ideal of the dual realization (grading transposed)."""
        if self._swap is None:
            dual = Realization(
                self.input_realization.name + "^perp", self.field, self.dual_normal
            )
            self._swap = PairsIdeal(dual)
        return self._swap
