"""Reduced simplicial homology dimensions over exact fields.

The chain complex is augmented: the empty face generates degree -1, so a
single point has no reduced homology and the empty-face complex has one
dimension of homology in degree -1.  Ranks are computed by exact Gaussian
elimination: bit-packed XOR elimination over GF(2), modular elimination for
odd primes, and an integer-preserving elimination for the rationals.
"""

from __future__ import annotations

from ._bitops import bits
from .complexes import SimplicialComplex

__all__ = [
    "RATIONALS",
    "normalize_field",
    "field_name",
    "reduced_homology_dims",
    "euler_from_homology",
    "boundary_matrix",
]

RATIONALS = "Q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def normalize_field(field) -> int | str:
    """Accept a prime (int or digit string) or a rationals marker ('Q')."""
    if isinstance(field, str):
        if field.strip().upper() == "Q":
            return RATIONALS
        field = int(field)
    if not _is_prime(field):
        raise ValueError(f"field must be a prime or 'Q', got {field!r}")
    return field


def field_name(field) -> str:
    f = normalize_field(field)
    return "Q" if f == RATIONALS else str(f)


# -- exact ranks -------------------------------------------------------------


def _rank_gf2(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as column bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            top = col.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = col
                rank += 1
                break
            col ^= piv
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    """In-place modular Gaussian elimination; returns the rank."""
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            f = rows[i][col] % p
            if f:
                f = f * inv % p
                row = rows[i]
                for k in range(col, ncols):
                    row[k] = (row[k] - f * prow[k]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_int(rows: list[list[int]]) -> int:
    """Fraction-free elimination over the integers (rational rank).

    Cross-multiplication keeps every entry integral; rows are divided by
    their gcd after each update to control growth.
    """
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            a = rows[i][col]
            if a:
                row = [x * pv - a * y for x, y in zip(rows[i], prow)]
                g = 0
                for x in row:
                    g = _gcd(g, x)
                    if g == 1:
                        break
                rows[i] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == nrows:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# -- boundary construction ---------------------------------------------------


def _boundary_rank(smaller: list[int], larger: list[int], field) -> int:
    """Rank of the boundary map from the size-(k) faces in *larger* down to
    the size-(k-1) faces in *smaller*."""
    if not larger or not smaller:
        return 0
    index = {m: i for i, m in enumerate(smaller)}
    if field == 2:
        cols = []
        for face in larger:
            col = 0
            for v in bits(face):
                col |= 1 << index[face ^ (1 << v)]
            cols.append(col)
        return _rank_gf2(cols)
    rows = [[0] * len(larger) for _ in smaller]
    for cj, face in enumerate(larger):
        sign = 1
        for v in bits(face):
            rows[index[face ^ (1 << v)]][cj] = sign
            sign = -sign
    if field == RATIONALS:
        return _rank_int(rows)
    return _rank_mod_p(rows, field)


def homology_dims_from_sizes(sizes: list[list[int]], field, degree: int | None = None) -> dict[int, int]:
    """Reduced homology dimensions given faces grouped by cardinality.

    Returns {degree: dim} for degrees -1..dim; with a *degree* hint only the
    two adjoining boundary ranks are computed.
    """
    field = normalize_field(field)
    top = len(sizes) - 1
    wanted = range(-1, top) if degree is None else [degree]
    ranks: dict[int, int] = {}

    def rank_at(k: int) -> int:
        # boundary from size-k faces to size-(k-1) faces
        if k < 1 or k > top:
            return 0
        if k in ranks:
            return ranks[k]
        if k == 1:
            r = 1 if sizes[1] else 0  # all-ones row onto the empty face
        else:
            r = _boundary_rank(sizes[k - 1], sizes[k], field)
        ranks[k] = r
        return r

    dims: dict[int, int] = {}
    for d in wanted:
        if d < -1 or d >= top:
            dims[d] = 0
            continue
        dims[d] = len(sizes[d + 1]) - rank_at(d + 1) - rank_at(d + 2)
    return dims


# -- public operations --------------------------------------------------------


def reduced_homology_dims(cx: SimplicialComplex, field=2, degree: int | None = None) -> dict[int, int]:
    """dim of each reduced homology group of the complex over the field.

    Keys run from -1 up to the complex dimension (or just the requested
    degree).  The void complex has no homology and is rejected.
    """
    if cx.is_void:
        raise ValueError("the void complex has no reduced homology")
    return homology_dims_from_sizes(cx.faces_by_size(), field, degree)


def euler_from_homology(cx: SimplicialComplex, field=2) -> int:
    """Alternating sum of reduced homology dimensions, starting in degree -1."""
    dims = reduced_homology_dims(cx, field)
    return sum(dim if d % 2 == 0 else -dim for d, dim in dims.items())


def boundary_matrix(cx: SimplicialComplex, k: int, field="Q") -> tuple[list[int], list[int], list[list[int]]]:
    """Signed boundary matrix from size-k faces to size-(k-1) faces.

    Returns (row_faces, column_faces, rows); mainly for inspecting the chain
    complex and testing that consecutive boundaries compose to zero.
    """
    field = normalize_field(field)
    sizes = cx.faces_by_size()
    if k < 1 or k > len(sizes) - 1:
        return [], [], []
    smaller, larger = sizes[k - 1], sizes[k]
    index = {m: i for i, m in enumerate(smaller)}
    rows = [[0] * len(larger) for _ in smaller]
    for cj, face in enumerate(larger):
        sign = 1
        for v in bits(face):
            entry = sign if field == RATIONALS else sign % field
            rows[index[face ^ (1 << v)]][cj] = entry
            sign = -sign
    return smaller, larger, rows
