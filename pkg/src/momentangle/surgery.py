"""Predicted cohomology of the vertex-cut moment-angle manifold.

Cutting a vertex v off a simple n-polytope P with m facets changes the
moment-angle manifold Z = Z(P), of dimension d = m+n, into Z_v of dimension
d+1.  At the level of graded cohomology the new manifold decomposes as

    Z_v  =  W  #  sum over j = 1..m-n of binom(m-n, j) copies of
                  S^{j+2} x S^{m+n-j-1},

where W is the boundary of (Z minus an open d-disk) x D^2.  W's groups come
from H*(Z) alone: H^k(W) = H^k(Z) + H^{k-1}(Z) minus one free generator in
degree 1 and one in degree d, so at rank level

    P_W(t) = P_Z(t) * (1 + t) - t - t^d.

Both the prediction (RHS, built from P only) and the direct computation
(LHS, the moment-angle cohomology of the cut polytope) are implemented
independently; :func:`verify_cut_theorem` compares them degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .homology import GradedGroups
from .moment_angle import DEFAULT_MAX_VERTICES, moment_angle_cohomology
from .polytopes import SimplePolytope, cube, polygon, product, simplex_polytope


def boundary_product_groups(h_z: GradedGroups, d: int) -> GradedGroups:
    """Graded groups of W = boundary of (Z minus an open d-disk) x D^2.

    ``h_z`` must look like the cohomology of a closed connected orientable
    d-manifold: rank 1 in degrees 0 and d, no torsion in degrees 0, 1, d,
    nothing outside 0..d.  W has dimension d+1.
    """
    if d < 2:
        raise ValueError(f"manifold dimension must be >= 2, got {d}")
    if h_z.rank(0) != 1 or h_z.rank(d) != 1:
        raise ValueError(
            f"expected rank 1 in degrees 0 and {d}, got "
            f"{h_z.rank(0)} and {h_z.rank(d)}"
        )
    for deg in (0, 1, d):
        if h_z.torsion(deg):
            raise ValueError(f"torsion in degree {deg} not allowed")
    if h_z.min_degree < 0 or h_z.max_degree > d:
        raise ValueError(f"groups outside degrees 0..{d}")
    groups: dict[int, tuple[int, list[int]]] = {}
    for k in range(0, d + 2):
        rank = h_z.rank(k) + h_z.rank(k - 1)
        torsion = list(h_z.torsion(k)) + list(h_z.torsion(k - 1))
        if k == 1:
            rank -= 1  # kill 1 (x) [S^1]
        if k == d:
            rank -= 1  # kill [Z] (x) 1
        if rank or torsion:
            groups[k] = (rank, torsion)
    return GradedGroups(groups)


def sphere_product_sum_groups(m: int, n: int) -> GradedGroups:
    """Groups of # over j = 1..m-n of binom(m-n, j) copies of S^{j+2} x S^{m+n-j-1}.

    A connected sum of products of spheres, all of dimension m+n+1;
    torsion-free, rank 1 at the ends, binomial ranks in between.
    """
    if n < 1 or m <= n:
        raise ValueError(f"need m > n >= 1, got m={m}, n={n}")
    d = m + n + 1
    ranks: dict[int, int] = {0: 1, d: 1}
    for j in range(1, m - n + 1):
        c = comb(m - n, j)
        for k in (j + 2, m + n - j - 1):
            ranks[k] = ranks.get(k, 0) + c
    return GradedGroups.from_ranks(ranks)


def connected_sum_groups(parts: Sequence[GradedGroups], d: int) -> GradedGroups:
    """Cohomology of a connected sum of closed orientable d-manifolds.

    Degrees 0 and d stay rank 1; strictly intermediate degrees add up.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("connected sum needs at least one part")
    if d < 2:
        raise ValueError(f"manifold dimension must be >= 2, got {d}")
    groups: dict[int, tuple[int, list[int]]] = {0: (1, []), d: (1, [])}
    for g in parts:
        if g.rank(0) != 1 or g.rank(d) != 1:
            raise ValueError(
                f"part is not a d={d} manifold group: ranks "
                f"{g.rank(0)} at 0, {g.rank(d)} at {d}"
            )
        if g.min_degree < 0 or g.max_degree > d:
            raise ValueError(f"part has groups outside degrees 0..{d}")
        for k in g.degrees():
            if 0 < k < d:
                rank, torsion = groups.get(k, (0, []))
                groups[k] = (rank + g.rank(k), torsion + list(g.torsion(k)))
    return GradedGroups(groups)


def predict_cut_betti(
    p: SimplePolytope,
    *,
    workers: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GradedGroups:
    """Predicted graded cohomology of Z(P with one vertex cut), from P alone."""
    m, n = p.m, p.n
    if m <= n:
        raise ValueError(f"need m > n, got m={m}, n={n}")
    h_z = moment_angle_cohomology(
        p.dual_complex(), workers=workers, max_vertices=max_vertices
    )
    w = boundary_product_groups(h_z, m + n)
    spheres = sphere_product_sum_groups(m, n)
    return connected_sum_groups([w, spheres], m + n + 1)


@dataclass(frozen=True)
class TheoremReport:
    """Degree-by-degree comparison of computed vs predicted cut cohomology."""

    polytope: str
    vertex: int
    lhs: GradedGroups
    rhs: GradedGroups
    match: bool
    diff: tuple[tuple[int, tuple[int, tuple[int, ...]], tuple[int, tuple[int, ...]]], ...]

    def to_json_dict(self) -> dict:
        return {
            "polytope": self.polytope,
            "vertex": self.vertex,
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
            "match": self.match,
            "diff": {
                str(deg): {
                    "lhs": {"rank": lr, "torsion": list(lt)},
                    "rhs": {"rank": rr, "torsion": list(rt)},
                }
                for deg, (lr, lt), (rr, rt) in self.diff
            },
        }


def _compare(
    polytope: str, vertex: int, lhs: GradedGroups, rhs: GradedGroups
) -> TheoremReport:
    diff = []
    for deg in sorted(set(lhs.degrees()) | set(rhs.degrees())):
        left = (lhs.rank(deg), lhs.torsion(deg))
        right = (rhs.rank(deg), rhs.torsion(deg))
        if left != right:
            diff.append((deg, left, right))
    return TheoremReport(polytope, vertex, lhs, rhs, not diff, tuple(diff))


def verify_cut_theorem(
    p: SimplePolytope,
    v: int,
    *,
    workers: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    description: str | None = None,
) -> TheoremReport:
    """Compare both sides of the cut decomposition for one vertex of P."""
    if description is None:
        description = f"simple {p.n}-polytope with {p.m} facets"
    lhs = moment_angle_cohomology(
        p.cut_vertex(v).dual_complex(), workers=workers, max_vertices=max_vertices
    )
    rhs = predict_cut_betti(p, workers=workers, max_vertices=max_vertices)
    return _compare(description, v, lhs, rhs)


def verify_all_cuts(
    p: SimplePolytope,
    *,
    workers: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    description: str | None = None,
) -> list[TheoremReport]:
    """One report per vertex of P; the prediction is shared across vertices."""
    if description is None:
        description = f"simple {p.n}-polytope with {p.m} facets"
    rhs = predict_cut_betti(p, workers=workers, max_vertices=max_vertices)
    reports = []
    for v in range(p.vertex_count):
        lhs = moment_angle_cohomology(
            p.cut_vertex(v).dual_complex(), workers=workers, max_vertices=max_vertices
        )
        reports.append(_compare(description, v, lhs, rhs))
    return reports


def theorem_corpus() -> list[tuple[str, SimplePolytope]]:
    """The standard family of polytopes the cut decomposition is checked on.

    Polygons with 3..8 edges, simplices of dimension 2..4, the 3-cube, the
    triangular prism, and one iterated case: the hexagon obtained by cutting
    a pentagon vertex, fed back in as an input of its own.
    """
    corpus: list[tuple[str, SimplePolytope]] = []
    corpus.extend((f"polygon-{m}", polygon(m)) for m in range(3, 9))
    corpus.extend((f"simplex-{n}", simplex_polytope(n)) for n in range(2, 5))
    corpus.append(("cube-3", cube(3)))
    corpus.append(("prism", product(simplex_polytope(1), simplex_polytope(2))))
    corpus.append(("pentagon-cut-0", polygon(5).cut_vertex(0)))
    return corpus
