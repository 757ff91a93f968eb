"""Buchberger engine for ideals and submodules of free modules.

Internals run on raw sparse data: a module term is (position, exponent
tuple) and an element is a dict of such terms with integer coefficients
(primitive over QQ, residues over GF(p)).  Ideals are rank-one modules.
The engine optionally tracks each basis element as a combination of the
input generators; in tracked runs the zero-reduction combinations form a
generating set of the syzygy module of the inputs (the coprime-lead pair
skip is disabled there, and chain-skipped pairs are covered by retained
ones).

Derived operations: reduced bases, normal forms, membership, colon by an
element or ideal, saturation, intersection and radical membership via one
auxiliary variable, Krull dimension from the initial ideal, and the exact
associated-prime test for linear primes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .ring import MonomialOrder, Poly, PolyRing


class GroebnerError(ValueError):
    pass


TRACE = None  # optional (processed, pending, basis) callback for diagnostics
TRACE_EVERY = 1000


# ---------------------------------------------------------------------------
# raw element helpers


def poly_to_raw(p: Poly, pos=0):
    """Poly -> {(pos, exp): int coeff}, denominators cleared, content stripped."""
    if p.ring.field.char == 0:
        den = 1
        for c in p.terms.values():
            f = Fraction(c)
            den = den * f.denominator // gcd(den, f.denominator)
        out = {}
        g = 0
        for e, c in p.terms.items():
            v = int(Fraction(c) * den)
            out[(pos, e)] = v
            g = gcd(g, v)
        if g > 1:
            for k in out:
                out[k] //= g
        return out
    p_ = p.ring.field.p
    return {(pos, e): int(c) % p_ for e, c in p.terms.items() if int(c) % p_}


def raw_to_poly(ring: PolyRing, raw, pos=0):
    F = ring.field
    terms = [(e, F.of(c)) for (q, e), c in raw.items() if q == pos]
    return ring.from_terms(terms)


def _strip(raw):
    g = 0
    for v in raw.values():
        g = gcd(g, v)
        if g == 1:
            return raw
    if g > 1:
        for k in raw:
            raw[k] //= g
    return raw


def _strip_pair(raw, track):
    g = 0
    for v in raw.values():
        g = gcd(g, v)
        if g == 1:
            return
    for v in track.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in raw:
            raw[k] //= g
        for k in track:
            track[k] //= g


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _sub(e2, e1):
    return tuple(b - a for a, b in zip(e1, e2))


def _addexp(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


class ModuleContext:
    """Ring + module order data shared by one Buchberger run."""

    def __init__(self, ring: PolyRing, shifts=None, order=None, top=True, key_fn=None):
        self.ring = ring
        self.char = ring.field.char
        self.okey = (order or ring.order).key
        self.shifts = shifts or {}
        self.top = top  # term-over-position; position breaks ties
        if key_fn is not None:
            self.term_key = key_fn

    def term_key(self, term):
        pos, exp = term
        deg = sum(exp) + self.shifts.get(pos, 0)
        if self.top:
            return (deg, self.okey(exp), -pos)
        return (-pos, deg, self.okey(exp))

    def lead(self, raw):
        return max(raw, key=self.term_key)

    def zero_exp(self):
        return (0,) * self.ring.nvars


class GBElement:
    __slots__ = ("raw", "lead", "lc", "track", "sugar", "inert", "solo")

    def __init__(self, ctx, raw, track=None, sugar=None, inert=None):
        self.raw = raw
        self.lead = ctx.lead(raw)
        self.lc = raw[self.lead]
        self.track = track
        self.sugar = sugar if sugar is not None else sum(self.lead[1])
        self.inert = inert
        # single-component elements behave like ring elements: only for
        # these is the coprime-lead pair criterion valid
        pos = self.lead[0]
        self.solo = pos if all(q == pos for (q, _e) in raw) else None


def _reduce(ctx, raw, track, basis, full=True):
    """Normal form of raw against basis (list of GBElement), destructive.

    Over QQ the result equals a positive multiple of the input modulo the
    span; exact for membership, span and syzygy purposes.
    """
    p = ctx.char
    out = {}
    while raw:
        lt = max(raw, key=ctx.term_key)
        pos, exp = lt
        red = None
        for g in basis:
            gp, ge = g.lead
            if gp == pos and _divides(ge, exp):
                red = g
                break
        if red is None:
            if not full:
                out.update(raw)
                return out, track
            out[lt] = raw.pop(lt)
            continue
        m = _sub(exp, red.lead[1])
        a = raw[lt]
        b = red.lc
        if p:
            factor = (a * pow(b, p - 2, p)) % p
            for (q, e), v in red.raw.items():
                key = (q, _addexp(e, m))
                acc = (raw.get(key, 0) - factor * v) % p
                if acc:
                    raw[key] = acc
                else:
                    raw.pop(key, None)
            if track is not None and red.track is not None:
                for k, v in red.track.items():
                    key = (k[0], _addexp(k[1], m))
                    acc = (track.get(key, 0) - factor * v) % p
                    if acc:
                        track[key] = acc
                    else:
                        track.pop(key, None)
        else:
            g = gcd(a, b)
            alpha, beta = b // g, a // g
            if alpha < 0:
                alpha, beta = -alpha, -beta
            if alpha != 1:
                for k in raw:
                    raw[k] *= alpha
                for k in out:
                    out[k] *= alpha
                if track is not None:
                    for k in track:
                        track[k] *= alpha
            for (q, e), v in red.raw.items():
                key = (q, _addexp(e, m))
                acc = raw.get(key, 0) - beta * v
                if acc:
                    raw[key] = acc
                else:
                    raw.pop(key, None)
            if track is not None and red.track is not None:
                for k, v in red.track.items():
                    key = (k[0], _addexp(k[1], m))
                    acc = track.get(key, 0) - beta * v
                    if acc:
                        track[key] = acc
                    else:
                        track.pop(key, None)
            # joint content strip keeps the integers small and the
            # combination bookkeeping consistent
            if track is not None:
                _strip_joint3(raw, out, track)
            else:
                _strip_joint3(raw, out, None)
    return out, track


def _strip_joint3(a, b, c):
    g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            return
    for v in b.values():
        g = gcd(g, v)
        if g == 1:
            return
    if c is not None:
        for v in c.values():
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for k in a:
            a[k] //= g
        for k in b:
            b[k] //= g
        if c is not None:
            for k in c:
                c[k] //= g


def _scaled_combination(ctx, gi, gj):
    """S-pair combination data for two elements with equal lead position."""
    lcm = tuple(max(a, b) for a, b in zip(gi.lead[1], gj.lead[1]))
    mi, mj = _sub(lcm, gi.lead[1]), _sub(lcm, gj.lead[1])
    if ctx.char:
        ci, cj = gj.lc, gi.lc
    else:
        l = gi.lc * gj.lc // gcd(gi.lc, gj.lc)
        ci, cj = l // gi.lc, l // gj.lc
    return lcm, mi, mj, ci, cj


def buchberger(ctx: ModuleContext, inputs, track=False, inert_groups=None):
    """Groebner basis of the module generated by `inputs` (raw dicts).

    Returns (basis, syzygies): basis is a list of GBElement; when track is
    set, each carries its combination over the input indices ({(i, exp):
    coeff}) and `syzygies` is a generating set of the syzygy module of the
    inputs.

    inert_groups (parallel to inputs) marks inputs that are known Groebner
    bases of their spans: pairs within one group are skipped.  Their
    S-polynomials reduce to zero by assumption, and in tracked runs the
    skipped syzygies have zero coefficients on all inputs outside the
    group, so any projection of the syzygy module away from a group is
    still generated by the recorded combinations.
    """
    p = ctx.char
    basis = []
    syzygies = []
    pairs = set()

    def add_element(raw, t, sugar=None, inert=None):
        if track:
            _strip_pair(raw, t)
        else:
            _strip(raw)
        basis.append(GBElement(ctx, raw, t, sugar, inert))
        new = len(basis) - 1
        gnew = basis[new]
        for i in range(new):
            gi = basis[i]
            if gi.lead[0] != gnew.lead[0]:
                continue
            if gi.inert is not None and gi.inert == gnew.inert:
                continue  # both in one inert group: S-pair reduces to zero
            if (
                not track
                and gi.solo is not None
                and gi.solo == gnew.solo
                and all(min(a, b) == 0 for a, b in zip(gi.lead[1], gnew.lead[1]))
            ):
                continue  # product criterion (single-component elements only)
            pairs.add((i, new))
        # chain criterion: drop older pairs whose lcm the new lead divides strictly
        lt = gnew.lead
        drop = set()
        for (a, b) in pairs:
            if b == new:
                continue
            ga, gb = basis[a], basis[b]
            if ga.lead[0] != lt[0]:
                continue
            lcm_ab = tuple(max(x, y) for x, y in zip(ga.lead[1], gb.lead[1]))
            if not _divides(lt[1], lcm_ab):
                continue
            lcm_an = tuple(max(x, y) for x, y in zip(ga.lead[1], lt[1]))
            lcm_bn = tuple(max(x, y) for x, y in zip(gb.lead[1], lt[1]))
            if lcm_ab != lcm_an and lcm_ab != lcm_bn:
                drop.add((a, b))
        pairs.difference_update(drop)

    for i, raw in enumerate(inputs):
        raw = dict(raw)
        t = {(i, ctx.zero_exp()): 1} if track else None
        group = inert_groups[i] if inert_groups else None
        if not raw:
            if track:
                syzygies.append(t)
            continue
        if group is not None:
            # trusted Groebner elements enter unreduced to stay inert
            add_element(raw, t, inert=group)
            continue
        res, t = _reduce(ctx, raw, t, basis, full=False)
        if not res:
            if track and t:
                syzygies.append(_strip(t) if not p else t)
            continue
        add_element(res, t)

    def pair_key(ij):
        i, j = ij
        pos = basis[i].lead[0]
        lcm = tuple(max(a, b) for a, b in zip(basis[i].lead[1], basis[j].lead[1]))
        return (
            sum(lcm) + ctx.shifts.get(pos, 0),
            ctx.term_key((pos, lcm)),
            i,
            j,
        )

    processed = 0
    while pairs:
        best = min(pairs, key=pair_key)
        pairs.discard(best)
        processed += 1
        if TRACE is not None and processed % TRACE_EVERY == 0:
            TRACE(processed, len(pairs), basis)
        i, j = best
        gi, gj = basis[i], basis[j]
        lcm, mi, mj, ci, cj = _scaled_combination(ctx, gi, gj)
        raw = {}
        for (q, e), v in gi.raw.items():
            raw[(q, _addexp(e, mi))] = (ci * v) % p if p else ci * v
        for (q, e), v in gj.raw.items():
            key = (q, _addexp(e, mj))
            acc = raw.get(key, 0) - cj * v
            if p:
                acc %= p
            if acc:
                raw[key] = acc
            else:
                raw.pop(key, None)
        t = None
        if track:
            t = {}
            for k, v in (gi.track or {}).items():
                val = (ci * v) % p if p else ci * v
                t[(k[0], _addexp(k[1], mi))] = val
            for k, v in (gj.track or {}).items():
                key = (k[0], _addexp(k[1], mj))
                acc = t.get(key, 0) - cj * v
                if p:
                    acc %= p
                if acc:
                    t[key] = acc
                else:
                    t.pop(key, None)
        sugar = sum(lcm) + max(
            gi.sugar - sum(gi.lead[1]), gj.sugar - sum(gj.lead[1])
        )
        res, t = _reduce(ctx, raw, t, basis, full=False)
        if not res:
            if track and t:
                syzygies.append(_strip(t) if not p else t)
            continue
        add_element(res, t, sugar)
    return basis, syzygies


def interreduce(ctx: ModuleContext, basis):
    """Reduced basis: minimal leads, tails fully reduced, canonical scaling."""
    keep = []
    for i, g in enumerate(basis):
        lt = g.lead
        redundant = False
        for j, h in enumerate(basis):
            if j == i or h.lead[0] != lt[0]:
                continue
            if _divides(h.lead[1], lt[1]) and (h.lead != lt or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for g in keep:
        others = [h for h in keep if h is not g]
        raw, _ = _reduce(ctx, dict(g.raw), None, others, full=True)
        if not raw:
            continue
        raw = _strip(raw)
        lt = max(raw, key=ctx.term_key)
        if ctx.char:
            inv = pow(raw[lt], ctx.char - 2, ctx.char)
            if inv != 1:
                raw = {k: (v * inv) % ctx.char for k, v in raw.items()}
        elif raw[lt] < 0:
            raw = {k: -v for k, v in raw.items()}
        out.append(GBElement(ctx, raw))
    out.sort(key=lambda g: ctx.term_key(g.lead))
    return out


def module_syzygies(ctx: ModuleContext, inputs):
    """A generating set for the syzygy module of the input raw elements.

    Output syzygies are raw dicts over terms ((input index, exponent)).
    """
    _, syz = buchberger(ctx, inputs, track=True)
    return syz


# ---------------------------------------------------------------------------
# ideal-level API


class Ideal:
    """An ideal of a PolyRing with a cached reduced Groebner basis."""

    def __init__(self, ring: PolyRing, gens, order=None):
        self.ring = ring
        self.gens = list(gens)
        self.order = order or ring.order
        self._gb = None

    def __repr__(self):
        return f"Ideal({self.ring}, {len(self.gens)} gens)"

    def _context(self):
        return ModuleContext(self.ring, order=self.order)

    def groebner(self):
        """The reduced Groebner basis as canonical Polys (cached)."""
        if self._gb is None:
            ctx = self._context()
            inputs = [poly_to_raw(g) for g in self.gens if not g.is_zero()]
            basis, _ = buchberger(ctx, inputs, track=False)
            red = interreduce(ctx, basis)
            self._gb = [raw_to_poly(self.ring, g.raw) for g in red]
            self._gb_raw = red
            self._gb_ctx = ctx
        return self._gb

    def _gb_elements(self):
        self.groebner()
        return self._gb_ctx, self._gb_raw

    def normal_form(self, p: Poly) -> Poly:
        """Canonical normal form (primitive, positive lead over QQ)."""
        ctx, basis = self._gb_elements()
        raw, _ = _reduce(ctx, dict(poly_to_raw(p)), None, basis, full=True)
        raw = _strip(raw)
        if raw and ctx.char == 0:
            lt = max(raw, key=ctx.term_key)
            if raw[lt] < 0:
                raw = {k: -v for k, v in raw.items()}
        return raw_to_poly(self.ring, raw)

    def member(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero()

    def is_zero_ideal(self) -> bool:
        return not self.groebner()

    def is_whole_ring(self) -> bool:
        gb = self.groebner()
        return any(set(g.terms) == {self.ring.zero_exp} for g in gb)

    def leading_exponents(self):
        ctx, basis = self._gb_elements()
        return [g.lead[1] for g in basis]

    # -- colon / saturation / intersection ------------------------------------
    def colon_element(self, h: Poly) -> "Ideal":
        """(I : h) via tracked syzygies of [gens, h].

        The cached Groebner basis enters as an inert block: its internal
        syzygies have no h-coefficient, so the recorded combinations still
        generate the colon.
        """
        if h.is_zero():
            return Ideal(self.ring, [self.ring.one()], self.order)
        ctx, gb = self._gb_elements()
        if not gb:
            return Ideal(self.ring, [self.ring.zero()], self.order)
        inputs = [g.raw for g in gb] + [poly_to_raw(h)]
        groups = [0] * len(gb) + [None]
        _, syz = buchberger(ctx, inputs, track=True, inert_groups=groups)
        hidx = len(gb)
        out = []
        seen = set()
        for s in syz:
            q = _track_component(self.ring, s, hidx)
            if not q.is_zero():
                key = str(q)
                if key not in seen:
                    seen.add(key)
                    out.append(q)
        return Ideal(self.ring, out or [self.ring.zero()], self.order)

    def colon_linear_ideal_gens(self, forms):
        """A generating set of (I : (forms)) via one tracked module run.

        Correct for any ideal generated by `forms`; kept separate from the
        elimination-based colon_ideal as the fast path for the
        associated-prime tests.
        """
        forms = [f for f in forms if not f.is_zero()]
        if not forms:
            return [self.ring.one()]
        ctx0, gb = self._gb_elements()
        c = len(forms)
        ctx = ModuleContext(self.ring, order=self.order)
        inputs = []
        groups = []
        for t in range(c):
            for g in gb:
                inputs.append({(t, e): v for ((_z, e), v) in g.raw.items()})
                groups.append(t)
        v0 = {}
        for t, f in enumerate(forms):
            for (_z, e), v in poly_to_raw(f).items():
                v0[(t, e)] = v
        inputs.append(v0)
        groups.append(None)
        _, syz = buchberger(ctx, inputs, track=True, inert_groups=groups)
        vidx = len(inputs) - 1
        out = []
        seen = set()
        for s in syz:
            q = _track_component(self.ring, s, vidx)
            if not q.is_zero():
                key = str(q)
                if key not in seen:
                    seen.add(key)
                    out.append(q)
        return out or [self.ring.zero()]

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        """(I : J) as the intersection of the single-element colons."""
        hs = [h for h in other.gens if not h.is_zero()]
        if not hs:
            return Ideal(self.ring, [self.ring.one()], self.order)
        acc = self.colon_element(hs[0])
        for h in hs[1:]:
            acc = acc.intersect(self.colon_element(h))
        return acc

    def saturation(self, other: "Ideal") -> "Ideal":
        """(I : J^infinity) by iterated colon with certified stabilization."""
        cur = self
        cur_key = tuple(str(g) for g in cur.groebner())
        while True:
            nxt = cur.colon_ideal(other)
            nxt_key = tuple(str(g) for g in nxt.groebner())
            if nxt_key == cur_key:
                return cur
            cur, cur_key = nxt, nxt_key

    def intersect(self, other: "Ideal") -> "Ideal":
        """Intersection via one auxiliary elimination variable."""
        ring = self.ring
        ext, lift, drop = _extend_ring(ring)
        t = ext.var(0)
        one_minus_t = ext.one() - t
        gens = [t * lift(g) for g in self.gens if not g.is_zero()]
        gens += [one_minus_t * lift(g) for g in other.gens if not g.is_zero()]
        elim = Ideal(
            ext,
            gens,
            order=MonomialOrder("block", ext.nvars, [(0,), tuple(range(1, ext.nvars))]),
        )
        out = []
        for g in elim.groebner():
            q = drop(g)
            if q is not None:
                out.append(q)
        return Ideal(ring, out or [ring.zero()], self.order)

    def radical_member(self, h: Poly) -> bool:
        """h in sqrt(I) by the auxiliary-variable trick: 1 in I + (1 - t*h)."""
        if h.is_zero():
            return True
        ring = self.ring
        ext, lift, _ = _extend_ring(ring)
        t = ext.var(0)
        gens = [lift(g) for g in self.gens if not g.is_zero()]
        gens.append(ext.one() - t * lift(h))
        return Ideal(ext, gens).is_whole_ring()

    def standard_monomial_count(self, grade) -> int:
        """dim of (ring/I) in one multigrade, via the initial ideal."""
        leads = self.leading_exponents()
        count = 0
        for mono in self.ring.monomial_basis(grade):
            if not any(_divides(lt, mono) for lt in leads):
                count += 1
        return count

    def quotient_dimension(self) -> int:
        """Krull dimension of ring/I from the initial-ideal staircase."""
        if self.is_whole_ring():
            return -1
        leads = self.leading_exponents()
        n = self.ring.nvars
        for size in range(n, -1, -1):
            for T in combinations(range(n), size):
                Tset = set(T)
                if all(any(e[i] for i in range(n) if i not in Tset) for e in leads):
                    return size
        return 0


def _track_component(ring, syz, index):
    F = ring.field
    terms = [(e, F.of(c)) for (i, e), c in syz.items() if i == index]
    return ring.from_terms(terms)


def _extend_ring(ring: PolyRing):
    """Ring with one fresh elimination variable t0 in front; lift/drop maps."""
    names = ("t0",) + ring.names
    grades = ((0,) * ring.ngrades,) + ring.grades
    ext = PolyRing(ring.field, names, grades)

    def lift(p: Poly) -> Poly:
        return Poly(ext, {(0,) + e: c for e, c in p.terms.items()})

    def drop(p: Poly):
        for e in p.terms:
            if e[0]:
                return None
        return Poly(ring, {e[1:]: c for e, c in p.terms.items()})

    return ext, lift, drop


# ---------------------------------------------------------------------------
# associated-prime test for linear primes


def is_associated(I: Ideal, prime_gens):
    """Whether the prime generated by the linear forms is associated to ring/I.

    Exact criterion: p is associated iff (I : (I : p)) <= p; by primeness
    this holds iff (I : h) <= p for some generator h of (I : p).  Returns
    (verdict, witness) with the successful h when associated.
    """
    ring = I.ring
    forms = [f for f in prime_gens if not f.is_zero()]
    if not forms:
        # the zero ideal: associated exactly to the zero ideal
        return (I.is_zero_ideal(), None)
    prime = Ideal(ring, forms)
    for g in I.gens:
        if not g.is_zero() and not prime.member(g):
            raise GroebnerError("candidate prime does not contain the ideal")
    colon_gens = I.colon_linear_ideal_gens(forms)
    cands = []
    seen = set()
    for h in colon_gens:
        h = I.normal_form(h)
        if not h.is_zero() and str(h) not in seen:
            seen.add(str(h))
            cands.append(h)
    if not cands:
        return (False, None)
    cands.sort(key=lambda h: (sum(h.leading_exp()), len(h.terms)))
    for h in cands:
        back = I.colon_element(h)
        if all(prime.member(g) for g in back.groebner()):
            return (True, h)
    return (False, None)
