"""Prime structure of the ideal of pairs: minimal primes from cyclic flats,
certified associated primes over biflat candidates, slice associated primes,
and the uniform-matroid membership checks.

Absence of an embedded prime is only ever asserted through the exact
colon-based test; degreewise scans may only report presence.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .graded import GradedEngine
from .groebner import Ideal, is_associated
from .matroid import biflats
from .pairs import PairsIdeal
from .ring import x_ring, y_ring
from .spans import Echelon, integerize


class LinearPrime:
    """The linear ideal generated by the forms f_i (i in I) and g_j (j in J).

    Index sets are internal (pinned order); reports use 1-based input
    labels.  The codimension is rank(I) + dual-rank(J), cross-checked
    against the rank of the generating forms.
    """

    def __init__(self, pairs: PairsIdeal, I, J, tag="candidate"):
        self.pairs = pairs
        self.I = frozenset(I)
        self.J = frozenset(J)
        self.tag = tag
        M = pairs.matroid
        self.codim = M.rank_of(self.I) + M.dual().rank_of(self.J)
        self.forms = [pairs.f[i] for i in sorted(self.I)] + [
            pairs.g[j] for j in sorted(self.J)
        ]
        self.forms = [f for f in self.forms if not f.is_zero()]
        if linear_span_rank(pairs.ring, self.forms) != self.codim:
            raise ValueError("codimension mismatch against exact linear algebra")

    def reduced_forms(self):
        """An independent generating set of forms (echelon rows)."""
        ring = self.pairs.ring
        ech = Echelon(ring.field)
        nvars = ring.nvars
        unit = [tuple(1 if t == i else 0 for t in range(nvars)) for i in range(nvars)]
        for f in self.forms:
            ech.insert({e.index(1): c for e, c in f.terms.items()})
        out = []
        for piv, row in sorted(ech.rows.items()):
            out.append(ring.from_terms((unit[i], c) for i, c in row.items()))
        return out

    def key(self):
        return (self.codim, tuple(sorted(self.I)), tuple(sorted(self.J)))

    def labels(self):
        out = {
            "I": self.pairs.original_labels(self.I),
            "J": self.pairs.original_labels(self.J),
            "codim": self.codim,
            "tag": self.tag,
        }
        witness = getattr(self, "witness", None)
        if witness is not None:
            out["certificate"] = f"colon witness {witness}"
        elif self.tag == "minimal":
            out["certificate"] = "cyclic flat (combinatorial)"
        return out

    def __repr__(self):
        return (
            f"p(I={self.pairs.original_labels(self.I)}, "
            f"J={self.pairs.original_labels(self.J)}, {self.tag})"
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearPrime)
            and other.I == self.I
            and other.J == self.J
        )

    def __hash__(self):
        return hash((self.I, self.J))


def linear_span_rank(ring, forms):
    ech = Echelon(ring.field)
    for f in forms:
        ech.insert({e.index(1): c for e, c in f.terms.items()})
    return ech.dim


def pairs_ideal_object(pairs: PairsIdeal) -> Ideal:
    if not hasattr(pairs, "_ideal_object"):
        gens = [g for _, g in pairs.nonzero_generators()]
        pairs._ideal_object = Ideal(pairs.ring, gens)
    return pairs._ideal_object


# ---------------------------------------------------------------------------
# minimal primes


def minimal_primes(pairs: PairsIdeal):
    """p_{F, F-complement} over the cyclic flats, purely combinatorial."""
    M = pairs.matroid
    full = frozenset(range(pairs.n))
    out = [
        LinearPrime(pairs, F, full - F, tag="minimal") for F in M.cyclic_flats()
    ]
    out.sort(key=lambda p: p.key())
    return out


def verify_min_primes(pairs: PairsIdeal):
    """Certify that the zero set of the pairs ideal is the cyclic-flat union.

    Containment of the ideal in each candidate prime is syntactic (each
    index lies in F or in its complement); the reverse inclusion is
    certified by radical membership of every generator of the intersection
    of the candidate primes.  Returns a machine-checkable certificate.
    """
    mins = minimal_primes(pairs)
    containment = []
    for p in mins:
        for i, gen in pairs.nonzero_generators():
            side = "F" if i in p.I else "complement"
            if i not in p.I and i not in p.J:
                raise AssertionError("biflat does not cover the ground set")
            containment.append(
                {"prime": p.labels(), "generator": pairs.to_original(i), "side": side}
            )
    ideal = pairs_ideal_object(pairs)
    inter = _intersect_all([_prime_ideal(p) for p in mins], pairs.ring)
    memberships = []
    for h in inter.groebner():
        record = {"element": str(h)}
        power = _power_membership(ideal, h)
        if power is not None:
            record["power_in_ideal"] = power
        else:
            if not ideal.radical_member(h):
                return {
                    "verified": False,
                    "failed_element": str(h),
                    "containment": containment,
                }
            record["radical_membership"] = "auxiliary-variable certificate"
        memberships.append(record)
    return {
        "verified": True,
        "minimal_primes": [p.labels() for p in mins],
        "containment_witnesses": len(containment),
        "radical_memberships": memberships,
    }


def _prime_ideal(p: LinearPrime) -> Ideal:
    ring = p.pairs.ring
    forms = p.reduced_forms()
    return Ideal(ring, forms or [ring.zero()])


def _intersect_all(ideals, ring):
    """Balanced pairwise intersections (fewer giant elimination steps)."""
    items = [I for I in ideals]
    if not items:
        return Ideal(ring, [ring.one()])
    while len(items) > 1:
        nxt = []
        for a in range(0, len(items) - 1, 2):
            nxt.append(items[a].intersect(items[a + 1]))
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def _power_membership(ideal: Ideal, h, max_power=8):
    """Smallest k <= max_power with h^k in the ideal, else None."""
    power = h
    k = 1
    while k <= max_power:
        if ideal.member(power):
            return k
        power = power * h
        k += 1
    return None


# ---------------------------------------------------------------------------
# associated primes of the quotient


def associated_primes(pairs: PairsIdeal, progress=None):
    """The full associated-prime list of S/pairs-ideal, each tagged.

    Candidates are the biflats (complete by the structure theory); each is
    decided by the exact colon criterion.  Minimal primes are recognized
    combinatorially and re-certified like every other candidate.
    """
    ideal = pairs_ideal_object(pairs)
    if ideal.is_zero_ideal():
        full = frozenset(range(pairs.n))
        p = LinearPrime(pairs, frozenset(), full, tag="minimal")
        return [p]
    M = pairs.matroid
    minimal_keys = {
        (F, frozenset(range(pairs.n)) - F) for F in M.cyclic_flats()
    }
    out = []
    for F, G in biflats(M):
        cand = LinearPrime(pairs, F, G)
        verdict, witness = is_associated(ideal, cand.reduced_forms())
        if progress is not None:
            progress(cand, verdict)
        if verdict:
            cand.tag = "minimal" if (F, G) in minimal_keys else "embedded"
            cand.witness = witness
            out.append(cand)
    out.sort(key=lambda p: p.key())
    return out


# ---------------------------------------------------------------------------
# slice associated primes


def _slice_presentation(pairs: PairsIdeal, side):
    """(ring, ambient rank, columns) for the degree-one slice as a module.

    side "x": the y-degree-one slice over the x-ring (ambient rank n-r,
    columns f_k * g_k-coordinates); side "y": roles exchanged.
    """
    if side == "x":
        ring = x_ring(pairs.field, pairs.r)
        m = pairs.s
        first, second, offset, width = pairs.f, pairs.g, pairs.r, pairs.r
    else:
        ring = y_ring(pairs.field, pairs.s)
        m = pairs.r
        first, second, offset, width = pairs.g, pairs.f, 0, pairs.s
    cols = []
    F = pairs.field
    for k in range(pairs.n):
        raw = {}
        for e2, c2 in second[k].terms.items():
            u = next(i for i, v in enumerate(e2) if v)
            u = u - pairs.r if side == "x" else u
            for e1, c1 in first[k].terms.items():
                exp = e1[pairs.r :] if side == "y" else e1[: pairs.r]
                key = (u, exp)
                raw[key] = F.add(raw.get(key, F.zero), F.mul(c1, c2))
        raw = {kk: v for kk, v in raw.items() if not F.is_zero(v)}
        # generator scaling leaves the submodule unchanged
        if F.char:
            raw = {kk: int(v) % F.char for kk, v in raw.items()}
        else:
            raw, _ = integerize(raw)
        cols.append(raw)
    return ring, m, cols


def _linear_forms_in_slice_ring(pairs: PairsIdeal, ring, side, index_set):
    forms = []
    source = pairs.f if side == "x" else pairs.g
    for i in sorted(index_set):
        p = source[i]
        if p.is_zero():
            continue
        terms = []
        for e, c in p.terms.items():
            exp = e[: pairs.r] if side == "x" else e[pairs.r :]
            terms.append((exp, c))
        forms.append(ring.from_terms(terms))
    return forms


def slice_associated_primes(pairs: PairsIdeal, side="x", progress=None):
    """Associated primes of the degree-one slice of the quotient.

    side "x" is the (., 1) slice (a module over the x-ring, candidates
    P_F over nonempty flats); side "y" is the (1, .) slice over the y-ring
    with dual flats.  Requires no loops or coloops.
    """
    pairs.require_no_coloops("slice associated primes")
    ring, m, cols = _slice_presentation(pairs, side)
    M = pairs.matroid
    flats = M.flats() if side == "x" else M.dual().flats()
    minimal_cyc = (
        M.minimal_nonempty_cyclic_flats()
        if side == "x"
        else [frozenset(range(pairs.n)) - F for F in _maximal_proper_cyclic(M)]
    )
    out = []
    for F in flats:
        if not F:
            continue
        if not any(C <= F for C in minimal_cyc):
            continue  # associated primes contain a minimal prime
        forms = _linear_forms_in_slice_ring(pairs, ring, side, F)
        forms = _reduce_linear(ring, forms)
        verdict = module_prime_is_associated(ring, m, cols, forms)
        if progress is not None:
            progress(F, verdict)
        if verdict:
            tag = "minimal" if frozenset(F) in {frozenset(c) for c in minimal_cyc} else "embedded"
            out.append(
                {
                    "flat": pairs.original_labels(F),
                    "rank": M.rank_of(F) if side == "x" else M.dual().rank_of(F),
                    "tag": tag,
                    "is_maximal_ideal": len(_reduce_linear(ring, forms)) == ring.nvars,
                }
            )
    out.sort(key=lambda d: (len(d["flat"]), d["flat"]))
    return out


def _maximal_proper_cyclic(M):
    cyc = [F for F in M.cyclic_flats() if F != frozenset(range(M.n))]
    return [F for F in cyc if not any(F < G for G in cyc)]


def _reduce_linear(ring, forms):
    ech = Echelon(ring.field)
    for f in forms:
        if not f.is_zero():
            ech.insert({e.index(1): c for e, c in f.terms.items()})
    nvars = ring.nvars
    unit = [tuple(1 if t == i else 0 for t in range(nvars)) for i in range(nvars)]
    out = []
    for piv, row in sorted(ech.rows.items()):
        out.append(ring.from_terms((unit[i], c) for i, c in row.items()))
    return out


def module_prime_is_associated(ring, ambient_rank, columns, prime_forms) -> bool:
    """Exact associatedness of a linear prime for the module E/N over `ring`.

    E is free of rank ambient_rank, N is generated by `columns` (raw dicts
    over (position, exponent)).  Criterion: P is associated iff the
    annihilator of some generator of (N : P) modulo N is contained in P,
    via tracked syzygy colons.
    """
    from .groebner import ModuleContext, _reduce, buchberger, interreduce, poly_to_raw

    if not prime_forms:
        return False
    c = len(prime_forms)
    m = max(ambient_rank, 1)
    ctx = ModuleContext(ring)
    # reduced GB of N: membership filter, and inert blocks below
    basisN, _ = buchberger(ctx, columns, track=False)
    basisN = interreduce(ctx, basisN)

    def in_N(raw):
        res, _ = _reduce(ctx, dict(raw), None, basisN, full=True)
        return not res

    # big module in E^c: w_b = (l_1 e_b, ..., l_c e_b) tracked, N in each slot
    big_ctx = ModuleContext(ring)
    inputs = []
    groups = []
    for t in range(c):
        for g in basisN:
            inputs.append({(t * m + pos, e): v for (pos, e), v in g.raw.items()})
            groups.append(t)
    forms_raw = [poly_to_raw(f) for f in prime_forms]
    first_tracked = len(inputs)
    for b in range(m):
        w = {}
        for t in range(c):
            for (_pos0, e), v in forms_raw[t].items():
                w[(t * m + b, e)] = v
        inputs.append(w)
        groups.append(None)
    _, syz = buchberger(big_ctx, inputs, track=True, inert_groups=groups)
    colon_elements = []
    seen = set()
    for s in syz:
        w = {}
        for (idx, e), v in s.items():
            if idx >= first_tracked:
                key = (idx - first_tracked, e)
                w[key] = w.get(key, 0) + v
        w = {k: v for k, v in w.items() if v}
        if w and not in_N(w):
            norm = tuple(sorted(w.items()))
            if norm not in seen:
                seen.add(norm)
                colon_elements.append(w)
    if not colon_elements:
        return False
    prime = Ideal(ring, prime_forms)
    colon_elements.sort(key=lambda w: (max(sum(e) for (_, e) in w), len(w)))
    for w in colon_elements:
        ann = _module_annihilator(ring, ctx, w, basisN)
        if all(prime.member(a) for a in ann):
            return True
    return False


def _module_annihilator(ring, ctx, w, basisN):
    """Generators of {a in ring : a*w in N} via tracked syzygies.

    basisN must be a Groebner basis of N (entered as one inert block)."""
    from .groebner import buchberger

    inputs = [g.raw for g in basisN] + [dict(w)]
    groups = [0] * len(basisN) + [None]
    _, syz = buchberger(ctx, inputs, track=True, inert_groups=groups)
    widx = len(basisN)
    out = []
    seen = set()
    for s in syz:
        terms = [(e, c) for (idx, e), c in s.items() if idx == widx]
        if terms:
            p = ring.from_terms(terms)
            if not p.is_zero() and str(p) not in seen:
                seen.add(str(p))
                out.append(p)
    return out


# ---------------------------------------------------------------------------
# uniform-matroid membership checks


def uniform_checks(pairs: PairsIdeal):
    """Degreewise membership of the products of dual forms times a form.

    For uniform matroids every product g_{i_1}...g_{i_r} f_a (repeats
    allowed) must lie in the ideal; for arbitrary matroids the same holds
    when the indices run over a basis.  Returns a report with any failing
    tuple (informative for non-uniform inputs, an error for uniform ones).
    """
    engine = GradedEngine(pairs)
    M = pairs.matroid
    r, n = pairs.r, pairs.n
    report = {"uniform": M.is_uniform(), "products_checked": 0, "failures": []}
    if report["uniform"]:
        for combo in combinations_with_replacement(range(n), r):
            prod = pairs.ring.one()
            for i in combo:
                prod = prod * pairs.g[i]
            for a in range(n):
                elem = prod * pairs.f[a]
                report["products_checked"] += 1
                if not elem.is_zero() and not engine.member(elem):
                    report["failures"].append(
                        {
                            "tuple": [pairs.to_original(i) for i in combo],
                            "form": pairs.to_original(a),
                        }
                    )
    basis = sorted(range(r))  # the pinned leading basis
    basis_failures = []
    prod = pairs.ring.one()
    for i in basis:
        prod = prod * pairs.g[i]
    for a in range(n):
        elem = prod * pairs.f[a]
        if not elem.is_zero() and not engine.member(elem):
            basis_failures.append(pairs.to_original(a))
    report["basis_product_failures"] = basis_failures
    return report
