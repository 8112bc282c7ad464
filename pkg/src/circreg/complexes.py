"""Independence complexes, f-vectors, independence polynomials, the
square-free generator correspondence, and a transfer-matrix evaluator for
the cubic-ladder independence polynomials.

A complex stores its facets as vertex bitmasks.  Two degenerate states are
kept distinct: the void complex (no faces at all, facets == ()) and the
complex whose only face is the empty set (facets == (0,)).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from ._bitops import bits, mask_of
from .graphs import Graph

__all__ = [
    "IntPoly",
    "SimplicialComplex",
    "independence_complex",
    "independence_polynomial",
    "euler_via_independence",
    "stanley_reisner_nonfaces",
    "complex_from_squarefree_generators",
    "transfer_matrix_indpoly",
]

MAX_MATERIALIZED_FACES = 1 << 20


class IntPoly:
    """Univariate polynomial with integer coefficients, index = power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Index of the top nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{'-' if c < 0 else ''}{mag}x" + (f"^{k}" if k > 1 else "")
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "IntPoly":
        return cls(d["coeffs"])


class SimplicialComplex:
    """Downward-closed face family on 0..n-1, stored by its facets."""

    __slots__ = ("n", "facets")

    def __init__(self, n: int, facet_masks: Iterable[int] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        cand = sorted(set(facet_masks), key=lambda m: (m.bit_count(), m), reverse=True)
        kept: list[int] = []
        for m in cand:
            if m >> n:
                raise ValueError("facet mentions a vertex outside 0..n-1")
            if not any(m & ~f == 0 for f in kept):
                kept.append(m)
        self.n = n
        self.facets = tuple(sorted(kept))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, (mask_of(f) for f in facets))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self):
        """Top face dimension; -1 for the empty-face complex, None if void."""
        if self.is_void:
            return None
        return max(m.bit_count() for m in self.facets) - 1

    def has_face(self, face) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & ~f == 0 for f in self.facets)

    def vertices_present(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def faces_by_size(self, limit: int = MAX_MATERIALIZED_FACES) -> list[list[int]]:
        """All faces as masks, grouped by cardinality (index 0 = empty face)."""
        if self.is_void:
            return []
        seen = set()
        stack = list(self.facets)
        while stack:
            m = stack.pop()
            if m in seen:
                continue
            seen.add(m)
            if len(seen) > limit:
                raise ValueError(f"complex has more than {limit} faces")
            for v in bits(m):
                sub = m ^ (1 << v)
                if sub not in seen:
                    stack.append(sub)
        top = max(m.bit_count() for m in self.facets)
        out: list[list[int]] = [[] for _ in range(top + 1)]
        for m in seen:
            out[m.bit_count()].append(m)
        for bucket in out:
            bucket.sort()
        return out

    @property
    def face_count(self) -> int:
        return sum(len(b) for b in self.faces_by_size())

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_D); undefined (raises) for the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no f-vector")
        return tuple(len(b) for b in self.faces_by_size())

    def euler_char(self) -> int:
        """Reduced Euler characteristic: alternating f-vector sum from f_-1."""
        fv = self.f_vector()
        return sum(f if k % 2 else -f for k, f in enumerate(fv))

    def restriction(self, vertices) -> "SimplicialComplex":
        """Faces contained in the given vertex set, same ambient labels."""
        w = vertices if isinstance(vertices, int) else mask_of(vertices)
        if w >> self.n:
            raise ValueError("restriction set mentions a vertex outside 0..n-1")
        if self.is_void:
            return SimplicialComplex.void(self.n)
        return SimplicialComplex(self.n, (f & w for f in self.facets))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        return f"SimplicialComplex(n={self.n}, facets={len(self.facets)}, dim={self.dim})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "facets": sorted(sorted(bits(f)) for f in self.facets)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "SimplicialComplex":
        return cls.from_facets(d["n"], d["facets"])


# -- independence complexes ------------------------------------------------


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets of g, as masks (Bron-Kerbosch with pivot
    on the complement)."""
    n = g.n
    full = (1 << n) - 1
    cadj = [full & ~g.adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (p & cadj[u]).bit_count())
        cand = p & ~cadj[pivot]
        for v in bits(cand):
            vb = 1 << v
            bk(r | vb, p & cadj[v], x & cadj[v])
            p ^= vb
            x |= vb

    bk(0, full, 0)
    return out


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are exactly the independent vertex sets of g."""
    if g.n == 0:
        return SimplicialComplex(0, (0,))
    return SimplicialComplex(g.n, _maximal_independent_sets(g))


def independent_set_counts(g: Graph) -> list[int]:
    """counts[r] = number of independent sets of size r (counts[0] == 1)."""
    counts = [0] * (g.n + 1)
    adj = g.adj

    def rec(cand: int, size: int) -> None:
        counts[size] += 1
        c = cand
        while c:
            low = c & -c
            c ^= low
            rec(c & ~adj[low.bit_length() - 1], size + 1)

    rec(g.full_mask, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def independence_polynomial(g: Graph) -> IntPoly:
    """Generating polynomial of independent-set counts by size."""
    return IntPoly(independent_set_counts(g))


def euler_via_independence(g: Graph) -> int:
    """Reduced Euler characteristic of the independence complex, computed
    as minus the independence polynomial evaluated at -1."""
    return -independence_polynomial(g)(-1)


# -- square-free generator correspondence -----------------------------------


def stanley_reisner_nonfaces(cx: SimplicialComplex) -> list[list[int]]:
    """Minimal non-faces of the complex, sorted; these generate its ideal."""
    if cx.is_void:
        return [[]]
    faces = set()
    for bucket in cx.faces_by_size():
        faces.update(bucket)
    out = []
    for size in range(1, cx.n + 1):
        for combo in combinations(range(cx.n), size):
            m = mask_of(combo)
            if m in faces:
                continue
            if all((m ^ (1 << v)) in faces for v in combo):
                out.append(list(combo))
    return out


def complex_from_squarefree_generators(n: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex whose faces are the subsets containing no generator."""
    gen_masks = []
    for gen in generators:
        gl = list(gen)
        if len(set(gl)) != len(gl):
            raise ValueError(f"generator {gl!r} repeats a vertex")
        for v in gl:
            if not 0 <= v < n:
                raise ValueError(f"generator vertex {v} out of range")
        gen_masks.append(mask_of(gl))
    # Normalize to an antichain: drop generators containing another.
    gen_masks = sorted(set(gen_masks), key=lambda m: m.bit_count())
    minimal: list[int] = []
    for m in gen_masks:
        if not any(g & ~m == 0 for g in minimal):
            minimal.append(m)
    if any(m == 0 for m in minimal):
        return SimplicialComplex.void(n)

    full = (1 << n) - 1
    visited = set()
    found: list[int] = []

    def descend(mask: int) -> None:
        if mask in visited:
            return
        visited.add(mask)
        for g in minimal:
            if g & ~mask == 0:
                for v in bits(g):
                    descend(mask ^ (1 << v))
                return
        found.append(mask)

    descend(full)
    return SimplicialComplex(n, found)


# -- transfer matrix for cyclic ladders --------------------------------------


def _matmul(a, b):
    size = len(a)
    return [
        [sum((a[i][j] * b[j][k] for j in range(size)), IntPoly()) for k in range(size)]
        for i in range(size)
    ]


def transfer_matrix_indpoly(kind: str, n: int) -> IntPoly:
    """Independence polynomial of the cubic ladder circulants via a
    3-state-per-rung transfer matrix.

    States per rung: empty, top occupied, bottom occupied.  A rung edge
    forbids both-occupied outright; rail edges forbid equal occupied states
    on adjacent rungs.  The cycle closes with a plain step for the prism and
    with a top/bottom swap at the seam for the twisted (moebius) ladder.
    """
    x = IntPoly((0, 1))
    one = IntPoly((1,))
    zero = IntPoly()
    step = [[one, one, one], [x, zero, x], [x, x, zero]]
    twist = [[one, one, one], [x, x, zero], [x, zero, x]]
    if kind == "moebius":
        if n < 2:
            raise ValueError("moebius ladder needs n >= 2")
        closing = twist
    elif kind == "prism":
        if n < 3 or n % 2 == 0:
            raise ValueError("prism needs odd n >= 3")
        closing = step
    else:
        raise ValueError(f"unknown ladder kind {kind!r}")
    acc = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
    for _ in range(n - 1):
        acc = _matmul(acc, step)
    acc = _matmul(closing, acc)
    return acc[0][0] + acc[1][1] + acc[2][2]
