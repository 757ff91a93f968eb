"""Minimal multigraded free resolutions via iterated certified syzygies.

Each step computes a generating set of the syzygy module of the current
minimal generators (tracked Buchberger: exact, no window), then extracts a
minimal generating set degreewise by exact linear algebra.  The resulting
differentials have entries in the irrelevant maximal ideal by construction;
minimality and the complex property are re-checked explicitly.
"""

from __future__ import annotations

from .groebner import ModuleContext, module_syzygies
from .ring import PolyRing
from .spans import Echelon


class ResolutionError(ValueError):
    pass


def raw_grade(ring: PolyRing, raw, shifts):
    """Common multigrade of a homogeneous raw module element."""
    grade = None
    for (pos, exp), _c in raw.items():
        g = ring.exp_grade(exp)
        s = shifts[pos]
        total = tuple(a + b for a, b in zip(g, s))
        if grade is None:
            grade = total
        elif grade != total:
            raise ResolutionError("inhomogeneous module element")
    return grade


class ModulePieces:
    """Multigrade pieces of a submodule of a shifted free module.

    Generators must be registered in weakly increasing total degree; pieces
    are grown lazily from variable multiples of lower pieces plus the
    generators sitting in the exact grade.
    """

    def __init__(self, ring: PolyRing, shifts):
        self.ring = ring
        self.field = ring.field
        self.shifts = shifts
        self.gens_by_grade = {}
        self._pieces = {}

    def register(self, raw, grade=None):
        g = grade if grade is not None else raw_grade(self.ring, raw, self.shifts)
        if any(sum(k) > sum(g) for k in self._pieces):
            raise ResolutionError("generators must be registered in degree order")
        self.gens_by_grade.setdefault(g, []).append(raw)
        self._pieces.pop(g, None)

    def lower_span(self, grade) -> Echelon:
        """Span of all variable multiples of strictly lower pieces."""
        ech = Echelon(self.field)
        ring = self.ring
        for t in range(ring.nvars):
            gt = ring.grades[t]
            prev = tuple(a - b for a, b in zip(grade, gt))
            if any(x < 0 for x in prev):
                continue
            sub = self.piece(prev)
            for row in sub.rows.values():
                vec = {}
                for (pos, e), v in row.items():
                    e2 = list(e)
                    e2[t] += 1
                    vec[(pos, tuple(e2))] = v
                ech.insert(vec)
        return ech

    def piece(self, grade) -> Echelon:
        got = self._pieces.get(grade)
        if got is not None:
            return got
        ech = self.lower_span(grade)
        for raw in self.gens_by_grade.get(grade, []):
            ech.insert(raw)
        self._pieces[grade] = ech
        return ech


def minimal_generators(ring: PolyRing, elements, shifts):
    """A minimal generating subset of homogeneous module elements.

    Elements are processed in increasing total degree; one is kept exactly
    when it is independent of the submodule generated by those already kept
    in its own multigrade (Nakayama degreewise).
    """
    graded = []
    for raw in elements:
        if raw:
            graded.append((raw_grade(ring, raw, shifts), raw))
    graded.sort(key=lambda t: (sum(t[0]), t[0]))
    pieces = ModulePieces(ring, shifts)
    kept = []
    idx = 0
    while idx < len(graded):
        grade = graded[idx][0]
        batch = []
        while idx < len(graded) and graded[idx][0] == grade:
            batch.append(graded[idx][1])
            idx += 1
        ech = pieces.lower_span(grade)
        for raw in batch:
            if ech.insert(dict(raw)):
                kept.append(raw)
                pieces.register(raw, grade)
    return kept


class FreeResolution:
    """A minimal free resolution presented by raw differential matrices.

    steps[p] holds the grades of the rank-beta_{p+1} free module and the
    matrix whose columns express its generators inside the previous free
    module (terms (row index, exponent)).  For the resolution of a quotient
    F0/N, steps[0] presents the minimal generators of N inside F0.
    """

    def __init__(self, ring, ambient_shifts, steps):
        self.ring = ring
        self.ambient_shifts = ambient_shifts
        self.steps = steps

    @property
    def length(self):
        return len(self.steps)

    def betti(self):
        """Map (step, grade) -> count of generators (step 0 = the module)."""
        out = {}
        for p, step in enumerate(self.steps):
            for g in step["grades"]:
                out[(p, g)] = out.get((p, g), 0) + 1
        return out

    def is_minimal(self, include_first=False) -> bool:
        """No unit entries in the differentials.

        The first matrix presents generators inside the ambient module; it
        is a differential only when resolving a quotient (include_first).
        """
        zero = (0,) * self.ring.nvars
        start = 0 if include_first else 1
        for step in self.steps[start:]:
            for raw in step["matrix"]:
                for (pos, e) in raw:
                    if e == zero:
                        return False
        return True

    def verify_complex(self) -> bool:
        """Consecutive differentials compose to zero (exact raw arithmetic)."""
        for p in range(1, len(self.steps)):
            prev = self.steps[p - 1]["matrix"]
            for raw in self.steps[p]["matrix"]:
                acc = {}
                for (idx, e), c in raw.items():
                    for (pos, e2), c2 in prev[idx].items():
                        key = (pos, tuple(a + b for a, b in zip(e, e2)))
                        v = acc.get(key, 0) + c * c2
                        if self.ring.field.char:
                            v %= self.ring.field.char
                        if v:
                            acc[key] = v
                        else:
                            acc.pop(key, None)
                if acc:
                    return False
        return True


def resolve_submodule(
    ring: PolyRing, gens, shifts, max_steps=None, first_is_differential=False
) -> FreeResolution:
    """Minimal free resolution of the submodule generated by `gens`.

    gens: raw dicts over (position, exponent) inside the free module with
    the given grade shifts.  steps[0] lists the minimal generators.
    """
    steps = []
    current = [dict(g) for g in gens if g]
    cur_shifts = list(shifts)
    while current:
        mins = minimal_generators(ring, current, cur_shifts)
        if not mins:
            break
        grades = [raw_grade(ring, m, cur_shifts) for m in mins]
        order = sorted(range(len(mins)), key=lambda i: (sum(grades[i]), grades[i]))
        mins = [mins[i] for i in order]
        grades = [grades[i] for i in order]
        steps.append({"grades": grades, "matrix": mins})
        if max_steps is not None and len(steps) >= max_steps:
            break
        ctx = ModuleContext(ring, shifts={i: sum(g) for i, g in enumerate(grades)})
        syz = module_syzygies(ctx, mins)
        current = [s for s in syz if s]
        cur_shifts = grades
    res = FreeResolution(ring, list(shifts), steps)
    if not res.is_minimal(include_first=first_is_differential):
        raise ResolutionError("resolution has a unit entry (minimality bug)")
    if not res.verify_complex():
        raise ResolutionError("differentials do not compose to zero")
    return res


def resolve_quotient_by_ideal(ring: PolyRing, ideal_gens, max_steps=None) -> FreeResolution:
    """Minimal resolution data for ring/(ideal): steps[0] = minimal ideal gens."""
    raws = []
    from .groebner import poly_to_raw

    for g in ideal_gens:
        if not g.is_zero():
            raws.append(poly_to_raw(g))
    zero_grade = (0,) * ring.ngrades
    return resolve_submodule(
        ring, raws, [zero_grade], max_steps=max_steps, first_is_differential=True
    )


def quotient_betti_entries(res: FreeResolution):
    """Betti numbers of F0/N from the resolution of N: Tor_0 = the ambient."""
    entries = {(0, tuple(s)): 1 for s in res.ambient_shifts}
    for (p, g), v in res.betti().items():
        key = (p + 1, g)
        entries[key] = entries.get(key, 0) + v
    return entries


# ---------------------------------------------------------------------------
# Schreyer resolutions: non-minimal but cheap to extend, with minimal Betti
# numbers read off the scalarized complex


class SchreyerResolution:
    """An exact complex of free modules built from iterated syzygy bases.

    Level p stores raw elements over the basis of level p-1 (level 0 raw
    elements live in the ambient free module).  Each level is a Groebner
    basis of the kernel of the previous differential for the induced order,
    so the complex is exact; it is generally non-minimal, and the minimal
    Betti numbers are the homology of the complex with all variables set to
    zero, computed gradewise.
    """

    def __init__(self, ring, ambient_shifts, levels, level_grades):
        self.ring = ring
        self.ambient_shifts = ambient_shifts
        self.levels = levels  # levels[p] = list of raw dicts
        self.level_grades = level_grades  # grades per element, per level

    @property
    def length(self):
        return len(self.levels)

    def scalar_columns(self, p):
        """Constant-coefficient part of differential p (level index p)."""
        zero = (0,) * self.ring.nvars
        cols = []
        for raw in self.levels[p]:
            col = {}
            for (pos, e), c in raw.items():
                if e == zero:
                    col[pos] = c
            cols.append(col)
        return cols

    def minimal_betti(self, ambient_grades=None):
        """Minimal Betti numbers {(p, grade): dim} of the resolved module.

        Index p=0 refers to the ambient free module's contribution (for a
        quotient resolution this is the module itself).
        """
        from .spans import Echelon

        grades_by_level = [list(ambient_grades or self.ambient_shifts)]
        grades_by_level += [list(g) for g in self.level_grades]
        scalars = [self.scalar_columns(p) for p in range(len(self.levels))]
        all_grades = sorted({g for lv in grades_by_level for g in lv})
        entries = {}
        for g in all_grades:
            idx_sets = [
                [i for i, gg in enumerate(lv) if gg == g] for lv in grades_by_level
            ]
            dims = [len(s) for s in idx_sets]
            if not any(dims):
                continue
            ranks = [0] * (len(self.levels) + 1)
            for p in range(len(self.levels)):
                if not dims[p + 1] or not dims[p]:
                    continue
                rows = {pos: r for r, pos in enumerate(idx_sets[p])}
                ech = Echelon(self.ring.field)
                for i in idx_sets[p + 1]:
                    col = scalars[p][i]
                    vec = {rows[pos]: c for pos, c in col.items() if pos in rows}
                    if vec:
                        ech.insert(vec)
                ranks[p + 1] = ech.dim
            for p in range(len(grades_by_level)):
                h = dims[p] - ranks[p] - (ranks[p + 1] if p + 1 < len(ranks) else 0)
                if h:
                    entries[(p, g)] = h
        return entries


def schreyer_resolution(ring: PolyRing, inputs, shifts, order=None) -> SchreyerResolution:
    """Exact free complex over the input module via induced-order syzygies.

    inputs: raw elements of the ambient free module (grade shifts given).
    Level 1 is the reduced Groebner basis of the input module; level p+1 is
    a minimal-lead Groebner basis of the syzygies of level p with respect
    to the induced order.
    """
    from .groebner import buchberger, interreduce

    base_ctx = ModuleContext(ring, shifts={i: sum(s) for i, s in enumerate(shifts)}, order=order)
    basis0, _ = buchberger(base_ctx, [dict(r) for r in inputs if r], track=False)
    red0 = interreduce(base_ctx, basis0)
    levels = []
    level_grades = []
    cur_elements = [g.raw for g in red0]
    cur_key = base_ctx.term_key
    cur_shift_grades = list(shifts)
    while cur_elements:
        grades = [
            _grade_of(ring, raw, cur_shift_grades if not levels else level_grades[-1])
            for raw in cur_elements
        ]
        levels.append(cur_elements)
        level_grades.append(grades)
        leads = [max(raw, key=cur_key) for raw in cur_elements]

        def next_key(term, _leads=leads, _prev_key=cur_key):
            pos, exp = term
            lp, le = _leads[pos]
            return (_prev_key((lp, tuple(a + b for a, b in zip(le, exp)))), -pos)

        ctx = ModuleContext(
            ring,
            shifts={i: sum(g) for i, g in enumerate(grades)},
            key_fn=cur_key,
        )
        n_in = len(cur_elements)
        basis, syz = buchberger(ctx, cur_elements, track=True)
        if len(basis) != n_in:
            raise ResolutionError("induced-order basis grew (syzygy level not a GB)")
        # minimal-lead subset stays a Groebner basis of the syzygy module
        syz = [s for s in syz if s]
        with_leads = [(max(s, key=next_key), s) for s in syz]
        # ascending degree so divisors are kept before their multiples
        with_leads.sort(key=lambda t: (sum(t[0][1]), next_key(t[0])))
        kept = []
        kept_leads = []
        for lt, s in with_leads:
            pos, exp = lt
            redundant = any(
                p2 == pos and all(a <= b for a, b in zip(e2, exp))
                for (p2, e2) in kept_leads
            )
            if not redundant:
                kept.append(s)
                kept_leads.append(lt)
        cur_elements = kept
        cur_key = next_key
    return SchreyerResolution(ring, list(shifts), levels, level_grades)


def _grade_of(ring, raw, shifts):
    grade = None
    for (pos, exp), _c in raw.items():
        g = ring.exp_grade(exp)
        s = shifts[pos]
        tot = tuple(a + b for a, b in zip(g, s))
        if grade is None:
            grade = tot
        elif grade != tot:
            raise ResolutionError("inhomogeneous element in resolution")
    return grade


def schreyer_quotient_betti(ring: PolyRing, ideal_gens, order=None):
    """Minimal Betti numbers of ring/(ideal) via the induced-order complex."""
    from .groebner import poly_to_raw

    raws = [poly_to_raw(g) for g in ideal_gens if not g.is_zero()]
    zero_grade = (0,) * ring.ngrades
    res = schreyer_resolution(ring, raws, [zero_grade], order=order)
    return res.minimal_betti()

