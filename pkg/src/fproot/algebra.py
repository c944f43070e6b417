"""Finite-dimensional bound quiver algebras kQ/(R).

A path is a tuple of arrow labels with the rightmost arrow applied first, so
the path (a, b) means "apply b, then a" and composes like functions.  The
trivial path at a vertex has an empty label tuple.

The basis of kQ/(R) is computed breadth-first in the path length: at each
length the candidate paths are arrow * (basis path of the previous length),
and the consequences r * v of the relations (r a relation, v a shorter basis
path) are row-reduced against them.  Every relation must be a rational
combination of parallel paths of a single common length >= 2; this is what
makes the length-by-length elimination exact, and it covers every algebra
that appears here.  A length cap and a size cap reject inputs that are not
finite dimensional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactlin import RatMatrix, rat, rat_str, _rref_rows
from .quiver import Quiver, QuiverError, kronecker_quiver

DEFAULT_LENGTH_CAP = 32
DEFAULT_DIM_CAP = 20000


class AlgebraError(ValueError):
    pass


class NonAdmissibleRelation(AlgebraError):
    pass


class LengthCapExceeded(AlgebraError):
    pass


@dataclass(frozen=True)
class Path:
    """A composable sequence of arrows; arrows[-1] is applied first."""

    arrows: Tuple[str, ...]
    source: str
    target: str

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(self.arrows)


def _make_path(q: Quiver, labels: Sequence[str]) -> Path:
    if not labels:
        raise AlgebraError("a nonempty label list is required")
    arrows = [q.arrow(l) for l in labels]
    for left, right in zip(arrows, arrows[1:]):
        if left.source != right.target:
            raise AlgebraError(
                f"labels {list(labels)} do not compose: {right.label} ends at "
                f"{right.target} but {left.label} starts at {left.source}")
    return Path(tuple(labels), arrows[-1].source, arrows[0].target)


Relation = Tuple[Tuple[Fraction, Path], ...]


def _normalize_relations(q: Quiver, relations) -> List[Relation]:
    out: List[Relation] = []
    for rel in relations:
        terms = []
        for coeff, labels in rel:
            c = rat(coeff)
            if not c:
                continue
            p = _make_path(q, list(labels))
            terms.append((c, p))
        if not terms:
            continue
        lengths = {len(p) for _, p in terms}
        ends = {(p.source, p.target) for _, p in terms}
        if min(lengths) < 2:
            raise NonAdmissibleRelation(
                f"relation {terms} contains a path of length < 2")
        if len(ends) != 1:
            raise NonAdmissibleRelation(
                f"relation {terms} mixes non-parallel paths")
        if len(lengths) != 1:
            raise NonAdmissibleRelation(
                f"relation {terms} mixes path lengths {sorted(lengths)}; "
                "only length-homogeneous relations are supported")
        out.append(tuple(terms))
    return out


class BoundAlgebra:
    """The quotient of a path algebra by an admissible homogeneous ideal.

    Attributes:
        quiver:     the underlying quiver
        relations:  normalized relation list
        basis:      residue classes of paths, ordered by length then creation
        dim:        total dimension over the rationals
    """

    def __init__(self, quiver: Quiver, relations,
                 length_cap: int = DEFAULT_LENGTH_CAP,
                 dim_cap: int = DEFAULT_DIM_CAP):
        self.quiver = quiver
        self.relations = _normalize_relations(quiver, relations)
        self._build(length_cap, dim_cap)

    # -- construction -------------------------------------------------
    def _build(self, length_cap: int, dim_cap: int):
        q = self.quiver
        trivial = [Path((), v, v) for v in q.vertices]
        levels: List[List[Path]] = [trivial]
        # normal form of arrow*path for every basis path, as {basis_path: coeff}
        nf: Dict[Tuple[str, Path], Dict[Path, Fraction]] = {}

        by_length_end: Dict[int, Dict[str, List[Path]]] = {0: {}}
        for p in trivial:
            by_length_end[0].setdefault(p.target, []).append(p)

        total = len(trivial)
        L = 0
        while levels[L]:
            if L + 1 > length_cap:
                raise LengthCapExceeded(
                    f"no finite basis within length cap {length_cap}; "
                    "the algebra does not look finite dimensional")
            candidates: List[Tuple[str, Path]] = []
            for p in levels[L]:
                for a in q.arrows:
                    if a.source == p.target:
                        candidates.append((a.label, p))
            cindex = {c: i for i, c in enumerate(candidates)}

            rows = []
            for rel in self.relations:
                ell = len(rel[0][1])
                if ell > L + 1:
                    continue
                src = rel[0][1].source
                for v in by_length_end.get(L + 1 - ell, {}).get(src, []):
                    vec = self._relation_consequence(rel, v, nf, cindex)
                    if vec is not None and any(vec):
                        rows.append(vec)

            pivots = _rref_rows(rows, len(candidates)) if rows else []
            pivset = set(pivots)

            new_paths: List[Path] = []
            path_of_candidate: List[Optional[Path]] = [None] * len(candidates)
            free_order: Dict[int, int] = {}
            for i, (a, p) in enumerate(candidates):
                if i in pivset:
                    continue
                arr = q.arrow(a)
                np_ = Path((a,) + p.arrows, p.source, arr.target)
                path_of_candidate[i] = np_
                free_order[i] = len(new_paths)
                new_paths.append(np_)

            for i, (a, p) in enumerate(candidates):
                if i in pivset:
                    r = pivots.index(i)
                    expansion: Dict[Path, Fraction] = {}
                    for j in range(len(candidates)):
                        if j in pivset or not rows[r][j]:
                            continue
                        expansion[path_of_candidate[j]] = -rows[r][j]
                    nf[(a, p)] = expansion
                else:
                    nf[(a, p)] = {path_of_candidate[i]: Fraction(1)}

            levels.append(new_paths)
            by_length_end[L + 1] = {}
            for p in new_paths:
                by_length_end[L + 1].setdefault(p.target, []).append(p)
            total += len(new_paths)
            if total > dim_cap:
                raise LengthCapExceeded(
                    f"basis exceeded the size cap {dim_cap}")
            L += 1

        self.levels = levels
        self.basis: Tuple[Path, ...] = tuple(p for lvl in levels for p in lvl)
        self.dim = len(self.basis)
        self._nf = nf
        self._basis_index = {p: i for i, p in enumerate(self.basis)}

    def _relation_consequence(self, rel: Relation, v: Path, nf, cindex):
        """Coordinates of rel * v on the current candidate list, or None when
        some term dies before the last arrow application."""
        vec = [Fraction(0)] * len(cindex)
        for coeff, p in rel:
            state: Dict[Path, Fraction] = {v: Fraction(1)}
            labels = p.arrows
            for a in reversed(labels[1:]):
                nxt: Dict[Path, Fraction] = {}
                for bp, c in state.items():
                    for tp, d in nf[(a, bp)].items():
                        nxt[tp] = nxt.get(tp, Fraction(0)) + c * d
                state = {k: x for k, x in nxt.items() if x}
                if not state:
                    break
            if not state:
                continue
            a = labels[0]
            for bp, c in state.items():
                vec[cindex[(a, bp)]] += coeff * c
        return vec

    # -- queries ------------------------------------------------------
    def trivial_path(self, v) -> Path:
        v = str(v)
        if v not in self.quiver.vertices:
            raise AlgebraError(f"unknown vertex {v!r}")
        return Path((), v, v)

    def left_multiply(self, arrow_label: str, p: Path) -> Dict[Path, Fraction]:
        """Normal form of arrow * basis path, as {basis_path: coeff}."""
        key = (arrow_label, p)
        if key in self._nf:
            return self._nf[key]
        arr = self.quiver.arrow(arrow_label)
        if arr.source != p.target:
            raise AlgebraError(f"{arrow_label} does not compose with {p}")
        return {}  # beyond the last level: zero

    def basis_with_source(self, v) -> List[Path]:
        v = str(v)
        return [p for p in self.basis if p.source == v]

    def __repr__(self):
        return (f"BoundAlgebra(dim={self.dim}, "
                f"vertices={len(self.quiver.vertices)}, "
                f"arrows={len(self.quiver.arrows)}, "
                f"relations={len(self.relations)})")


def build_algebra(q: Quiver, relations=(), **caps) -> BoundAlgebra:
    """Construct kQ/(R); relations are iterables of (coeff, [labels...])."""
    return BoundAlgebra(q, relations, **caps)


def path_algebra(q: Quiver, **caps) -> BoundAlgebra:
    return BoundAlgebra(q, (), **caps)


def opposite(a: BoundAlgebra) -> BoundAlgebra:
    """The opposite algebra: all arrows reversed, all relation paths reversed."""
    op_quiver = a.quiver.reversed()
    op_relations = [
        [(c, tuple(reversed(p.arrows))) for c, p in rel]
        for rel in a.relations
    ]
    return BoundAlgebra(op_quiver, op_relations)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def sqrt2_quiver() -> Quiver:
    """Two vertices with one arrow 2 -> 1 and two arrows 1 -> 2."""
    return Quiver(["1", "2"], [("a", "2", "1"), ("b", "1", "2"), ("c", "1", "2")])


def sqrt2_algebra() -> BoundAlgebra:
    """The 5-dimensional algebra whose module category has irrational
    Frobenius-Perron dimension sqrt(2).

    All four length-2 compositions vanish, so the radical squares to zero and
    the basis is the two vertex idempotents plus the three arrows.
    """
    q = sqrt2_quiver()
    rels = [
        [(1, ("b", "a"))],
        [(1, ("c", "a"))],
        [(1, ("a", "b"))],
        [(1, ("a", "c"))],
    ]
    return BoundAlgebra(q, rels)


def kronecker_algebra() -> BoundAlgebra:
    """Path algebra of the two-arrow Kronecker quiver (hereditary, dim 4)."""
    return path_algebra(kronecker_quiver(2))


def local_two_loop_algebra(m: int, n: int) -> BoundAlgebra:
    """k<x,y>/(x^m, y^n, xy) presented on a one-vertex quiver with two loops.

    Note the single mixed relation: the word yx survives, so the monomial
    basis is {y^b x^a : a < m, b < n} and the dimension is m*n.
    """
    if m < 2 or n < 2:
        raise AlgebraError("both truncation exponents must be >= 2")
    q = Quiver(["1"], [("x", "1", "1"), ("y", "1", "1")])
    rels = [
        [(1, ("x",) * m)],
        [(1, ("y",) * n)],
        [(1, ("x", "y"))],
    ]
    return BoundAlgebra(q, rels)


def dual_numbers_algebra() -> BoundAlgebra:
    """k[x]/(x^2): one vertex, one loop, loop squared to zero."""
    q = Quiver(["1"], [("x", "1", "1")])
    return BoundAlgebra(q, [[(1, ("x", "x"))]])


# ---------------------------------------------------------------------------
# JSON format
# ---------------------------------------------------------------------------

def algebra_to_json(a: BoundAlgebra) -> str:
    return json.dumps({
        "vertices": list(a.quiver.vertices),
        "arrows": [{"label": x.label, "from": x.source, "to": x.target}
                   for x in a.quiver.arrows],
        "relations": [
            [{"coeff": rat_str(c), "path": list(p.arrows)} for c, p in rel]
            for rel in a.relations
        ],
    }, indent=2, sort_keys=True)


def algebra_from_json(text: str) -> BoundAlgebra:
    """Parse the algebra JSON format: a quiver block plus relations whose
    paths list arrow labels in application order (rightmost applied first)."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraError(f"invalid JSON: {e}") from e
    try:
        q = Quiver(raw["vertices"],
                   [(x["label"], x["from"], x["to"]) for x in raw.get("arrows", [])])
    except (KeyError, TypeError, QuiverError) as e:
        raise AlgebraError(f"malformed algebra file: {e}") from e
    rels = []
    for rel in raw.get("relations", []):
        try:
            rels.append([(term["coeff"], tuple(term["path"])) for term in rel])
        except (KeyError, TypeError) as e:
            raise AlgebraError(f"malformed relation {rel!r}: {e}") from e
    return BoundAlgebra(q, rels)
