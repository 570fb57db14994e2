"""Ground-truth schemes built from explicit relation matrices.

Small named schemes (complete graphs, cycles, hypercubes, the Petersen
graph) are generated as 0/1 distance relations; their intersection numbers
are counted directly from matrix products and their eigenmatrices computed
by exact diagonalization of the (P-polynomial ordered) first intersection
matrix.  This module exists to cross-validate the parameter algebra in
:mod:`asx.scheme`: the Krein tensor obtained here from first principles
must coincide with the ladder output for the same tridiagonal data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter, NotAScheme, NotPPolynomial, UnknownName
from .linalg import Matrix
from .poly import MultiPoly, roots_low_degree
from .scheme import IntersectionTensor, KreinTensor, SchemeParams, _conjugate_grouped_desc
from .scalars import as_exact


@dataclass(frozen=True)
class RelationSet:
    """0/1 symmetric relation matrices A0..Ad on n points (A0 = I)."""

    n: int
    relations: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def d(self) -> int:
        return len(self.relations) - 1

    def validate(self) -> None:
        n = self.n
        for idx, A in enumerate(self.relations):
            if len(A) != n or any(len(r) != n for r in A):
                raise NotAScheme(f"relation {idx} is not {n}x{n}")
            for x in range(n):
                for y in range(n):
                    v = A[x][y]
                    if v not in (0, 1):
                        raise NotAScheme(f"relation {idx} has entry {v}")
                    if A[y][x] != v:
                        raise NotAScheme(f"relation {idx} is not symmetric")
                if idx == 0 and A[x][x] != 1:
                    raise NotAScheme("A0 is not the identity")
                if idx > 0 and A[x][x] != 0:
                    raise NotAScheme(f"relation {idx} has a nonzero diagonal")
        for x in range(n):
            for y in range(n):
                if sum(A[x][y] for A in self.relations) != 1:
                    raise NotAScheme(f"relations do not partition at ({x},{y})")


def _matmul(A, B, n):
    Bc = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bc] for row in A]


def _count_intersections(rels: RelationSet):
    """p^k_ij read off A_i A_j = sum_k p^k_ij A_k; NotAScheme when the
    products leave the span or the counts are position-dependent."""
    n, d = rels.n, rels.d
    rep = {}
    for k, A in enumerate(rels.relations):
        for x in range(n):
            for y in range(n):
                if A[x][y] == 1:
                    rep.setdefault(k, (x, y))
                    break
            if k in rep:
                break
    p = [[[0] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            M = _matmul(rels.relations[i], rels.relations[j], n)
            coeffs = [M[rep[k][0]][rep[k][1]] for k in range(d + 1)]
            for x in range(n):
                for y in range(n):
                    expected = sum(
                        c * rels.relations[k][x][y] for k, c in enumerate(coeffs)
                    )
                    if M[x][y] != expected:
                        raise NotAScheme(
                            f"A{i} A{j} is not in the span of the relations"
                        )
            for k, c in enumerate(coeffs):
                p[i][j][k] = Fraction(c)
    return p


def named_scheme(name: str, parameter: int | None = None) -> RelationSet:
    """Distance relations of a named graph family.

    Supported: ``complete`` (n >= 2 points), ``cycle`` (n >= 3 points),
    ``hypercube`` (dimension 1..9), ``petersen`` (no parameter).
    """
    if name == "complete":
        n = parameter if parameter is not None else 0
        if n < 2:
            raise InvalidParameter("complete graph needs n >= 2")
        ident = [[1 if x == y else 0 for y in range(n)] for x in range(n)]
        other = [[0 if x == y else 1 for y in range(n)] for x in range(n)]
        return RelationSet(n, (tuple(map(tuple, ident)), tuple(map(tuple, other))))
    if name == "cycle":
        n = parameter if parameter is not None else 0
        if n < 3:
            raise InvalidParameter("cycle needs n >= 3")
        d = n // 2
        rels = []
        for k in range(d + 1):
            A = [
                [1 if min((x - y) % n, (y - x) % n) == k else 0 for y in range(n)]
                for x in range(n)
            ]
            rels.append(tuple(map(tuple, A)))
        return RelationSet(n, tuple(rels))
    if name == "hypercube":
        dim = parameter if parameter is not None else 0
        if not 1 <= dim <= 9:
            raise InvalidParameter("hypercube dimension must be 1..9")
        n = 1 << dim
        rels = []
        for k in range(dim + 1):
            A = [
                [1 if bin(x ^ y).count("1") == k else 0 for y in range(n)]
                for x in range(n)
            ]
            rels.append(tuple(map(tuple, A)))
        return RelationSet(n, tuple(rels))
    if name == "petersen":
        verts = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        n = len(verts)
        adj = [
            [1 if not set(verts[x]) & set(verts[y]) else 0 for y in range(n)]
            for x in range(n)
        ]
        ident = [[1 if x == y else 0 for y in range(n)] for x in range(n)]
        far = [
            [1 - adj[x][y] - ident[x][y] for y in range(n)] for x in range(n)
        ]
        return RelationSet(
            n, (tuple(map(tuple, ident)), tuple(map(tuple, adj)), tuple(map(tuple, far)))
        )
    raise UnknownName(f"unknown scheme {name!r}")


def scheme_from_relations(rels: RelationSet) -> SchemeParams:
    """Exact parameters of a scheme given by relation matrices.

    The relation order must be P-polynomial (B1 irreducible tridiagonal):
    eigenvalues come from the three-term value polynomials of B1, then
    ``Q = n P^{-1}`` and the Krein numbers from the dual orthogonality sum.
    Intersection numbers are counted directly and attached to the result.
    """
    rels.validate()
    n, d = rels.n, rels.d
    p = _count_intersections(rels)
    rng = range(d + 1)
    b1 = Matrix([[p[1][j][k] for k in rng] for j in rng])
    for j in rng:
        for k in rng:
            if abs(j - k) > 1 and b1[j, k] != 0:
                raise NotPPolynomial(f"B1 entry ({j},{k}) = {b1[j, k]} is nonzero")
    c = [b1[k - 1, k] for k in range(1, d + 1)]
    a = [b1[k, k] for k in range(1, d + 1)]
    b = [b1[k + 1, k] for k in range(0, d)]
    if any(x == 0 for x in c) or any(x == 0 for x in b):
        raise NotPPolynomial("B1 is tridiagonal but not irreducible")
    x = MultiPoly.var("x")
    polys = [MultiPoly.one(), x]
    for i in range(1, d + 1):
        c_next = c[i] if i < d else Fraction(1)
        nxt = (x * polys[i] - a[i - 1] * polys[i] - b[i - 1] * polys[i - 1]) * (
            1 / Fraction(c_next)
        )
        polys.append(nxt)
    roots = roots_low_degree(polys[d + 1])
    if len(set(roots)) != d + 1:
        raise NotPPolynomial("annihilator of B1 has degree < d + 1")
    k1 = b[0]
    if k1 not in roots:
        raise NotAScheme("valency k1 is not an eigenvalue of B1")
    thetas = [Fraction(k1)] + _conjugate_grouped_desc([r for r in roots if r != k1])
    P = Matrix([[as_exact(v.eval_univariate(t)) for v in polys[: d + 1]] for t in thetas])
    valencies = tuple(as_exact(v) for v in P.row(0))
    Q = P.inverse().scale(Fraction(n))
    mults = tuple(as_exact(Q[0, i]) for i in rng)
    q = [[[None] * (d + 1) for _ in rng] for _ in rng]
    for i in rng:
        for j in rng:
            for kk in rng:
                s = sum(
                    (valencies[u] * Q[u, i] * Q[u, j] * Q[u, kk] for u in rng),
                    Fraction(0),
                )
                q[i][j][kk] = as_exact(s / (n * mults[kk]))
    kreins = KreinTensor(
        [Matrix([[q[i][j][kk] for kk in rng] for j in rng]) for i in rng]
    )
    inters = IntersectionTensor(
        [Matrix([[p[i][j][kk] for kk in rng] for j in rng]) for i in rng]
    )
    return SchemeParams(
        d=d,
        n=Fraction(n),
        multiplicities=mults,
        valencies=valencies,
        Q=Q,
        P=P,
        kreins=kreins,
        intersections=inters,
    )
