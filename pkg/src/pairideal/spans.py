"""Incremental echelon spans: the workhorse for all degreewise computations.

Vectors are sparse dicts {column index: coefficient}.  Over QQ the rows are
kept as primitive integer vectors (fraction-free eliminations, exact); over
GF(p) as residues with pivot 1.  The pivot of a row is its smallest column
index, so callers index columns so that "leading" means "smallest index".

Supports plain rank/span growth, canonical reduction against the span (for
quotient bases), and tracked insertion (kernel extraction: when an inserted
vector is dependent, the exact combination over previously inserted vectors
is returned).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd


def _to_int_vec(vec):
    """Clear denominators of a Fraction/int dict into a primitive int dict."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    g = 0
    for k, v in vec.items():
        i = int(v * den) if isinstance(v, Fraction) else v * den
        if i:
            out[k] = i
            g = gcd(g, i)
    if g > 1:
        for k in out:
            out[k] //= g
    return out


def _strip_content(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        for k in vec:
            vec[k] //= g
    return vec


def _strip_joint(vec, tag):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return
    for v in tag.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in vec:
            vec[k] //= g
        for k in tag:
            tag[k] //= g


class Echelon:
    """A growing row space in echelon form over QQ (int rows) or GF(p)."""

    __slots__ = ("field", "p", "rows", "tags", "tracked")

    def __init__(self, field, tracked=False):
        self.field = field
        self.p = getattr(field, "char", 0)
        self.rows = {}  # pivot column -> row dict
        self.tags = {} if tracked else None  # pivot column -> tag dict
        self.tracked = tracked

    @property
    def dim(self):
        return len(self.rows)

    def pivot_columns(self):
        return set(self.rows)

    def _normalize_in(self, vec):
        if self.p:
            p = self.p
            return {k: v % p for k, v in vec.items() if v % p}
        if any(isinstance(v, Fraction) for v in vec.values()):
            return _to_int_vec(vec)
        return {k: v for k, v in vec.items() if v}

    def insert(self, vec) -> bool:
        """Add vec to the span; True if the dimension grew."""
        res, _ = self._forward(self._normalize_in(vec), None)
        if not res:
            return False
        self._store(_strip_content(res), None)
        return True

    def insert_tracked(self, vec, tag):
        """Insert with tag bookkeeping.

        Maintains vec == sum(tag[k] * original_k), so callers must pass
        integer vectors (use `integerize` and compensate the kernel).
        Returns None if the vector was independent (it is stored);
        otherwise returns the combination dict proving dependence, the new
        vector's tag included.
        """
        if not self.p and any(isinstance(v, Fraction) for v in vec.values()):
            raise ValueError("tracked insertion requires integer coordinates")
        vec = self._normalize_in(vec)
        res, t = self._forward(vec, dict(tag))
        if not res:
            if not self.p:
                _strip_content(t)
            return t
        self._store(res, t)
        return None

    def reduce(self, vec):
        """Canonical residual of vec against the span (no insertion).

        Returns (residual, lam) with residual == lam * vec modulo the span,
        lam a positive int (QQ) or 1 (GF(p)); the residual has no support on
        pivot columns.  Scale-free uses (membership, quotient dimensions)
        may ignore lam.
        """
        vec = self._normalize_in(vec)
        if self.p:
            res, _ = self._forward_modp(vec, None, full=True)
            return res, 1
        return self._full_qq(vec)

    def contains(self, vec) -> bool:
        res, _ = self.reduce(vec)
        return not res

    # -- internals ----------------------------------------------------------
    def _store(self, res, tag):
        piv = min(res)
        if self.p:
            inv = pow(res[piv], self.p - 2, self.p)
            if inv != 1:
                res = {k: (v * inv) % self.p for k, v in res.items()}
                if tag is not None:
                    tag = {k: (v * inv) % self.p for k, v in tag.items()}
        elif res[piv] < 0:
            res = {k: -v for k, v in res.items()}
            if tag is not None:
                tag = {k: -v for k, v in tag.items()}
        self.rows[piv] = res
        if self.tracked:
            self.tags[piv] = tag if tag is not None else {}

    def _forward(self, vec, tag):
        """Eliminate pivoted columns until the lead is free (or vec is 0)."""
        if self.p:
            return self._forward_modp(vec, tag, full=False)
        rows = self.rows
        tags = self.tags
        while vec:
            c = min(vec)
            row = rows.get(c)
            if row is None:
                return vec, tag
            a, b = vec[c], row[c]
            g = gcd(a, b)
            alpha, beta = b // g, a // g
            if alpha != 1:
                for k in vec:
                    vec[k] *= alpha
                if tag is not None:
                    for k in tag:
                        tag[k] *= alpha
            for k, x in row.items():
                y = vec.get(k, 0) - beta * x
                if y:
                    vec[k] = y
                else:
                    vec.pop(k, None)
            if tag is not None:
                rt = tags.get(c)
                if rt:
                    for k, x in rt.items():
                        y = tag.get(k, 0) - beta * x
                        if y:
                            tag[k] = y
                        else:
                            tag.pop(k, None)
                _strip_joint(vec, tag)
            else:
                _strip_content(vec)
        return vec, tag

    def _forward_modp(self, vec, tag, full):
        p = self.p
        rows = self.rows
        tags = self.tags
        out = {}
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = vec.get(c)
            if not v:
                continue
            row = rows.get(c)
            if row is None:
                if not full:
                    return vec, tag
                out[c] = vec.pop(c)
                continue
            for k, x in row.items():
                y = (vec.get(k, 0) - v * x) % p
                if y:
                    if k not in vec and k > c:
                        heapq.heappush(heap, k)
                    vec[k] = y
                else:
                    vec.pop(k, None)
            if tag is not None:
                rt = tags.get(c)
                if rt:
                    for k, x in rt.items():
                        y = (tag.get(k, 0) - v * x) % p
                        if y:
                            tag[k] = y
                        else:
                            tag.pop(k, None)
        if full:
            return out, tag
        return vec, tag

    def _full_qq(self, vec):
        lam = 1
        rows = self.rows
        out = {}
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = vec.get(c)
            if not a:
                continue
            row = rows.get(c)
            if row is None:
                out[c] = vec.pop(c)
                continue
            b = row[c]
            g = gcd(a, b)
            alpha, beta = b // g, a // g
            if alpha < 0:
                alpha, beta = -alpha, -beta
            if alpha != 1:
                lam *= alpha
                for k in vec:
                    vec[k] *= alpha
                for k in out:
                    out[k] *= alpha
            for k, x in row.items():
                y = vec.get(k, 0) - beta * x
                if y:
                    if k not in vec and k > c:
                        heapq.heappush(heap, k)
                    vec[k] = y
                else:
                    vec.pop(k, None)
        # strip a common content shared with lam to keep numbers small
        g = lam
        for v in out.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            lam //= g
            for k in out:
                out[k] //= g
        return out, lam


def integerize(vec):
    """(integer vector, positive scale lam) with result == lam * vec."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for k, v in vec.items():
        i = int(v * den) if isinstance(v, Fraction) else v * den
        if i:
            out[k] = i
    return out, den


def kernel_of_stacked_vectors(field, vectors, tags=None):
    """Kernel combinations among `vectors` (list of sparse dicts).

    Vectors may have rational entries: they are integerized internally and
    the returned combinations are compensated back to the original
    coordinates (then made primitive).  Returns (echelon, kernel) with
    kernel a list of sparse combination dicts over vector indices (or over
    the supplied single-key tags).
    """
    ech = Echelon(field, tracked=True)
    kernel = []
    scales = {}
    modp = getattr(field, "char", 0)
    for i, v in enumerate(vectors):
        tag = {i: 1} if tags is None else tags[i]
        key = next(iter(tag))
        if modp:
            iv, lam = {k: int(x) % modp for k, x in v.items()}, 1
        else:
            iv, lam = integerize(v)
        scales[key] = lam
        dep = ech.insert_tracked(iv, tag)
        if dep is not None:
            fixed = {k: c * scales[k] for k, c in dep.items()}
            if modp:
                fixed = {k: c % modp for k, c in fixed.items() if c % modp}
            else:
                _strip_content(fixed)
            kernel.append(fixed)
    return ech, kernel
