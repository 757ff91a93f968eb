"""Logarithmic derivations, freeness data, pdim bounds, and realization
comparison.

The module of logarithmic derivations is computed as the y-degree-one
syzygy module of the pair generators over the x-subring (certified via
tracked Groebner syzygies), then minimalized and resolved.  Every emitted
generator is re-verified against the defining identity theta(f_j) in (f_j).
"""

from __future__ import annotations

from .graded import GradedEngine
from .groebner import ModuleContext, module_syzygies
from .matroid import LoopError, MatroidError, Realization
from .pairs import PairsIdeal
from .ring import Poly, RingError, x_ring, xa_ring
from .resolution import minimal_generators, raw_grade, resolve_submodule
from .spans import integerize


class DerivationModule:
    """Minimal generators, freeness and resolution data for der(A).

    Degrees follow the derivation grading (the Euler derivation sits in
    degree 0); classical coexponents are the degrees plus one.
    """

    def __init__(self, pairs: PairsIdeal):
        self.pairs = pairs
        self.ring = x_ring(pairs.field, pairs.r)
        self._build()

    def _build(self):
        pairs = self.pairs
        R = self.ring
        F = pairs.field
        r, n, s = pairs.r, pairs.n, pairs.s
        # columns of the presentation: f_k times the y-coordinates of g_k
        cols = []
        scales = []
        for k in range(n):
            raw = {}
            fk, gk = pairs.f[k], pairs.g[k]
            for eg, cg in gk.terms.items():
                u = next(i for i, v in enumerate(eg) if v) - r
                for ef, cf in fk.terms.items():
                    key = (u, ef[:r])
                    acc = F.add(raw.get(key, F.zero), F.mul(cf, cg))
                    raw[key] = acc
            raw = {k2: v for k2, v in raw.items() if not F.is_zero(v)}
            if F.char:
                cols.append({k2: int(v) % F.char for k2, v in raw.items()})
                scales.append(1)
            else:
                iv, lam = integerize(raw)
                cols.append(iv)
                scales.append(lam)
        ctx = ModuleContext(R, shifts={u: 0 for u in range(max(s, 1))})
        syz = module_syzygies(ctx, cols)
        fixed = []
        for sz in syz:
            f2 = {}
            for (k, e), v in sz.items():
                f2[(k, e)] = v * scales[k] if not F.char else (v * scales[k]) % F.char
            fixed.append(f2)
        syz = fixed
        shifts = [(1,)] * n  # a c-vector of x-degree d-1 sits in degree d
        self.kernel_generators = minimal_generators(R, syz, shifts)
        self.kernel_generators.sort(
            key=lambda rawv: raw_grade(R, rawv, shifts)
        )
        self.resolution = resolve_submodule(R, self.kernel_generators, shifts)
        self.generator_degrees = sorted(
            sum(g) - 1 for g in self.resolution.steps[0]["grades"]
        )
        self.pdim = self.resolution.length - 1
        self.free = self.pdim == 0
        self.exponents = self.generator_degrees if self.free else None
        engine = GradedEngine(pairs)
        self.thetas = []
        self.c_vectors = []
        for rawv in self.resolution.steps[0]["matrix"]:
            cvec = {}
            for (k, e), v in rawv.items():
                cvec[(k, e + (0,) * s)] = v
            self.c_vectors.append(cvec)
            self.thetas.append(engine.theta_from_syzygy(cvec))
        if self.free:
            self._saito_check()

    def _saito_check(self):
        """det[theta_j(x_i)] must be a nonzero scalar times the reduced product.

        The reduced defining polynomial takes one form per distinct
        hyperplane (one representative per rank-one flat), so the check is
        valid for non-simple inputs as well.
        """
        pairs = self.pairs
        S = pairs.ring
        r = pairs.r
        if len(self.thetas) != r:
            raise RingError("free module with generator count != rank")
        det = _poly_det([[self.thetas[j][i] for j in range(r)] for i in range(r)])
        prod = S.one()
        for F in pairs.matroid.flats_of_rank(1):
            prod = prod * pairs.f[min(F)]
        if det.is_zero():
            raise RingError("degenerate coefficient determinant on a free module")
        ok = _is_scalar_multiple(det, prod)
        if not ok:
            raise RingError("coefficient determinant is not the reduced form product")
        self.saito_verified = True

    def hilbert_consistent(self, engine: GradedEngine, window: int) -> bool:
        """If free: dim of the degree-d syzygy slice matches the free model."""
        if not self.free:
            return True
        from math import comb

        r = self.pairs.r
        for d in range(1, window + 1):
            expected = sum(
                comb(d - 1 - e + r - 1, r - 1) for e in self.exponents if d - 1 - e >= 0
            )
            if engine.derivation_slice_dim(d) != expected:
                return False
        return True

    def tor_dims(self):
        """(p, degree) -> dim Tor_p over the x-ring, derivation grading."""
        out = {}
        for p, step in enumerate(self.resolution.steps):
            for g in step["grades"]:
                key = (p, g[0] - 1)
                out[key] = out.get(key, 0) + 1
        return out

    def minimal_generator_histogram(self):
        out = {}
        for d in self.generator_degrees:
            out[d] = out.get(d, 0) + 1
        return out


def der_module(pairs: PairsIdeal) -> DerivationModule:
    return DerivationModule(pairs)


def _poly_det(m):
    """Exact determinant by cofactor expansion (matrices up to ~5x5)."""
    k = len(m)
    if k == 0:
        raise RingError("empty determinant")
    if k == 1:
        return m[0][0]
    ring = m[0][0].ring
    total = ring.zero()
    for j in range(k):
        entry = m[0][j]
        if entry.is_zero():
            continue
        minor = [[m[i][jj] for jj in range(k) if jj != j] for i in range(1, k)]
        term = entry * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _is_scalar_multiple(p: Poly, q: Poly) -> bool:
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if set(p.terms) != set(q.terms):
        return False
    F = p.ring.field
    exp0 = next(iter(p.terms))
    ratio = F.div(p.terms[exp0], q.terms[exp0])
    return all(
        F.is_zero(F.sub(c, F.mul(ratio, q.terms[e]))) for e, c in p.terms.items()
    )


# ---------------------------------------------------------------------------
# bounds and obstructions


def pdim_bounds(pairs: PairsIdeal):
    """Combinatorial lower bounds and freeness obstructions from cyclic flats."""
    M = pairs.matroid
    n, r = pairs.n, pairs.r
    cyc = M.cyclic_flats()
    cyclic_flat_bound = max(
        (2 * M.rank_of(F) - len(F) + n - r for F in cyc), default=0
    )
    minimal = M.minimal_nonempty_cyclic_flats()
    ks = max((M.rank_of(F) - 2 for F in minimal), default=0)
    kung_schenck_bound = max(ks, 0)
    rank2 = [F for F in M.flats() if M.rank_of(F) == 2]
    ziegler_flag = M.is_simple() and all(len(F) == 2 for F in rank2)
    free_obstruction = any(M.rank_of(F) >= 3 for F in minimal)
    return {
        "cyclic_flat_bound": cyclic_flat_bound,
        "kung_schenck_bound": kung_schenck_bound,
        "ziegler_flag": ziegler_flag,
        "free_obstruction": free_obstruction,
        "minimal_nonempty_cyclic_flats": [pairs.original_labels(F) for F in minimal],
    }


# ---------------------------------------------------------------------------
# the non-isomorphic-derivations comparison


def recipe_check(re_a: Realization, re_b: Realization):
    """Search for a rank>=3 minimal cyclic flat separating two realizations.

    Both realizations must be loopless with identical matroids (full
    rank-oracle comparison).  Returns None when no certificate exists, else
    a dict with the flat, the two column-span row-echelon forms, and the
    non-isomorphism verdict for the derivation modules.
    """
    ma, mb = re_a.matroid(), re_b.matroid()
    if ma.loops or mb.loops:
        raise LoopError("recipe comparison needs loopless realizations")
    if not ma.rank_function_equal(mb):
        raise MatroidError("realizations have different matroids")
    for F in sorted(ma.minimal_nonempty_cyclic_flats(), key=sorted):
        if ma.rank_of(F) < 3:
            continue
        span_a = _column_span_rref(re_a, F)
        span_b = _column_span_rref(re_b, F)
        if span_a != span_b:
            return {
                "flat": sorted(e + 1 for e in F),
                "rank": ma.rank_of(F),
                "span_a": span_a,
                "span_b": span_b,
                "verdict": "derivation modules are not isomorphic",
            }
    return None


def _column_span_rref(re: Realization, cols):
    from .linalg import rref

    sub = re.matrix.submatrix_columns(sorted(cols))
    red, _, rank = rref(sub.transpose())
    return tuple(tuple(red.row(i)) for i in range(rank))


# ---------------------------------------------------------------------------
# logarithmic generators of the critical-set ideal


def ilog_generators(pairs: PairsIdeal, dermod: DerivationModule):
    """The elements sum_k a_k theta(f_k)/f_k in the x-a ring, one per theta.

    Exact division is re-run here; a failure signals an invalid derivation.
    """
    RA = xa_ring(pairs.field, pairs.r, pairs.n)
    S = pairs.ring
    out = []
    for theta in dermod.thetas:
        terms = []
        for k in range(pairs.n):
            fk = pairs.f[k]
            applied = S.zero()
            for i in range(pairs.r):
                applied = applied + theta[i] * _dx(fk, i)
            quot = _exact_div(applied, fk)
            for e, c in quot.terms.items():
                exp = e[: pairs.r] + _unit_exp(pairs.n, k)
                terms.append((exp, c))
        out.append(RA.from_terms(terms))
    return out


def _unit_exp(n, k):
    return tuple(1 if i == k else 0 for i in range(n))


def _dx(p: Poly, i: int) -> Poly:
    ring = p.ring
    F = ring.field
    terms = []
    for e, c in p.terms.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            terms.append((tuple(e2), F.mul(c, F.of(e[i]))))
    return ring.from_terms(terms)


def _exact_div(p: Poly, q: Poly) -> Poly:
    """Exact polynomial division; raises RingError when not divisible."""
    ring = p.ring
    if q.is_zero():
        raise RingError("division by zero polynomial")
    out = ring.zero()
    rem = p
    key = ring.order.key
    qle = q.leading_exp()
    qlc = q.leading_coeff()
    F = ring.field
    while not rem.is_zero():
        rle = rem.leading_exp()
        diff = tuple(a - b for a, b in zip(rle, qle))
        if any(d < 0 for d in diff):
            raise RingError("inexact polynomial division")
        c = F.div(rem.terms[rle], qlc)
        mono = ring.monomial(diff, c)
        out = out + mono
        rem = rem - mono * q
    return out
