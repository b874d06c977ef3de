"""Exact chromatic number and min/max colour sums over minimum colourings.

A minimum proper colouring uses exactly chi(G) colours, every one of them.
Its colour sum is ``sum(i * theta_i)`` where ``theta_i`` counts the vertices
painted with colour ``i``. The two extremes over all such colourings are
reported as ``chi_sum_min`` and ``chi_sum_max``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ExtensionError, GcsumError, InvalidGraph
from .graph import Graph, check_size


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex, colours numbered ``1..k`` and all of them used."""

    assignment: tuple
    k: int

    def __post_init__(self):
        if self.k < 1 and self.assignment:
            raise GcsumError("a colouring of a nonempty graph needs k >= 1", "invalid_coloring")
        if set(self.assignment) != set(range(1, self.k + 1)):
            raise GcsumError(
                f"colours must be exactly 1..{self.k}, got {sorted(set(self.assignment))}",
                "invalid_coloring",
            )

    @classmethod
    def of(cls, colors: Sequence[int]) -> "Coloring":
        return cls(tuple(colors), max(colors) if colors else 0)

    def theta(self) -> list[int]:
        """Class sizes, ``theta[i-1]`` being the weight of colour ``i``."""
        counts = [0] * self.k
        for c in self.assignment:
            counts[c - 1] += 1
        return counts


def theta(c: Coloring) -> list[int]:
    return c.theta()


def color_sum(c: Coloring) -> int:
    return sum(i * t for i, t in enumerate(c.theta(), start=1))


def is_proper(g: Graph, c: Coloring) -> bool:
    return len(c.assignment) == g.n and all(c.assignment[u] != c.assignment[v] for u, v in g.edges)


# ---------------------------------------------------------------- chromatic number


def greedy_clique(g: Graph) -> int:
    """Size of the largest clique found greedily from each start vertex."""
    best = 1
    for s in range(g.n):
        cand = g.adj[s]
        size = 1
        while cand:
            v = max(
                (u for u in range(g.n) if cand >> u & 1),
                key=lambda u: bin(g.adj[u] & cand).count("1"),
            )
            size += 1
            cand &= g.adj[v]
        best = max(best, size)
    return best


def find_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper colouring with at most ``k`` colours, or ``None``.

    Vertices are coloured in index order; a vertex may only open colour
    ``used + 1``, which removes colour-permutation symmetry.
    """
    colors = [0] * g.n
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        banned = {colors[u] for u in nbrs[v] if u < v}
        for c in range(1, min(used + 1, k) + 1):
            if c in banned:
                continue
            colors[v] = c
            if rec(v + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def chromatic_coloring(g: Graph) -> Coloring:
    check_size(g.n)
    for k in range(greedy_clique(g), g.n + 1):
        found = find_coloring(g, k)
        if found is not None:
            return Coloring(tuple(found), k)
    raise AssertionError("unreachable: n colours always suffice")


def chromatic_number(g: Graph) -> int:
    return chromatic_coloring(g).k


# ---------------------------------------------------------------- colour sums


def min_weighted(sizes: Sequence[int]) -> int:
    """Smallest ``sum(i * s)`` over orderings: largest class gets colour 1."""
    return sum(i * s for i, s in enumerate(sorted(sizes, reverse=True), start=1))


def max_weighted(sizes: Sequence[int]) -> int:
    return sum(i * s for i, s in enumerate(sorted(sizes), start=1))


def _coloring_from_classes(n: int, classes: Sequence[int], descending: bool) -> Coloring:
    members = [[v for v in range(n) if mask >> v & 1] for mask in classes]
    # ties broken by smallest member so the witness is deterministic
    order = sorted(
        range(len(members)),
        key=lambda i: (-len(members[i]) if descending else len(members[i]), members[i][0]),
    )
    colors = [0] * n
    for color, idx in enumerate(order, start=1):
        for v in members[idx]:
            colors[v] = color
    return Coloring(tuple(colors), len(members))


@dataclass(frozen=True)
class SumReport:
    chi: int
    chi_sum_min: int
    chi_sum_max: int
    witness_min: Coloring
    witness_max: Coloring

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "chi_sum_min": self.chi_sum_min,
            "chi_sum_max": self.chi_sum_max,
            "witness_min": list(self.witness_min.assignment),
            "witness_max": list(self.witness_max.assignment),
            "theta_min": self.witness_min.theta(),
            "theta_max": self.witness_max.theta(),
        }


def chi_sums(g: Graph) -> SumReport:
    """Exact chi_sum_min / chi_sum_max by search over colour-class partitions.

    Every minimum colouring is, up to renaming colours, a partition of V into
    chi independent sets. For fixed class sizes the best and worst naming
    follow from sorting the sizes, so only partitions are enumerated. A branch
    is cut once neither extreme can improve: adding a vertex raises the
    min-sum by at least 1 and the max-sum by at most chi.
    """
    check_size(g.n)
    chi = chromatic_number(g)
    n = g.n
    classes: list[int] = []
    sizes: list[int] = []
    best = {"min": None, "max": None, "min_cls": None, "max_cls": None}

    def rec(v: int) -> None:
        rest = n - v
        if len(classes) + rest < chi:
            return
        if v == n:
            lo, hi = min_weighted(sizes), max_weighted(sizes)
            if best["min"] is None or lo < best["min"]:
                best["min"], best["min_cls"] = lo, list(classes)
            if best["max"] is None or hi > best["max"]:
                best["max"], best["max_cls"] = hi, list(classes)
            return
        if best["min"] is not None and sizes:
            lo_bound = min_weighted(sizes) + rest
            hi_bound = max_weighted(sizes + [0] * (chi - len(sizes))) + chi * rest
            if lo_bound >= best["min"] and hi_bound <= best["max"]:
                return
        bit = 1 << v
        for i, mask in enumerate(classes):
            if not g.adj[v] & mask:
                classes[i] = mask | bit
                sizes[i] += 1
                rec(v + 1)
                sizes[i] -= 1
                classes[i] = mask
        if len(classes) < chi:
            classes.append(bit)
            sizes.append(1)
            rec(v + 1)
            sizes.pop()
            classes.pop()

    rec(0)
    return SumReport(
        chi=chi,
        chi_sum_min=best["min"],
        chi_sum_max=best["max"],
        witness_min=_coloring_from_classes(n, best["min_cls"], descending=True),
        witness_max=_coloring_from_classes(n, best["max_cls"], descending=False),
    )


@dataclass
class ExtensionSums:
    chi_sum_min_x: int
    chi_sum_max_x: int
    argmin: int  # extension index of the min witness
    argmax: int
    witness_min: Coloring
    witness_max: Coloring
    table: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "chi_sum_min_x": self.chi_sum_min_x,
            "chi_sum_max_x": self.chi_sum_max_x,
            "argmin": self.argmin,
            "argmax": self.argmax,
            "witness_min": list(self.witness_min.assignment),
            "witness_max": list(self.witness_max.assignment),
            "table": self.table,
        }


def chi_sums_over_extensions(g: Graph, ext_set=None) -> ExtensionSums:
    """Min of chi_sum_min and max of chi_sum_max over all complete extensions.

    One representative per isomorphism class is evaluated; every table row
    carries the values of its class. ``ext_set`` may pass a precomputed
    :class:`~gcsum.extension.ExtensionSet`.
    """
    from .extension import complete_extensions

    if g.n % 2:
        raise ExtensionError(f"order {g.n} is odd", "odd_order")
    ext_set = complete_extensions(g) if ext_set is None else ext_set
    if not ext_set.extensions:
        raise ExtensionError("the complement has no perfect matching", "no_extension_exists")

    per_class = {}
    for cls_id, members in enumerate(ext_set.iso_classes):
        rep = members[0]
        per_class[cls_id] = (rep, chi_sums(ext_set.extensions[rep][1]))
    class_of = {i: c for c, members in enumerate(ext_set.iso_classes) for i in members}

    table = []
    for i, (matching, _) in enumerate(ext_set.extensions):
        rep, rpt = per_class[class_of[i]]
        table.append(
            {
                "index": i,
                "matching": [list(p) for p in matching],
                "iso_class": class_of[i],
                "chi": rpt.chi,
                "chi_sum_min": rpt.chi_sum_min,
                "chi_sum_max": rpt.chi_sum_max,
            }
        )
    lo_cls = min(per_class, key=lambda c: (per_class[c][1].chi_sum_min, c))
    hi_cls = min(per_class, key=lambda c: (-per_class[c][1].chi_sum_max, c))
    lo_rep, lo = per_class[lo_cls]
    hi_rep, hi = per_class[hi_cls]
    return ExtensionSums(
        chi_sum_min_x=lo.chi_sum_min,
        chi_sum_max_x=hi.chi_sum_max,
        argmin=lo_rep,
        argmax=hi_rep,
        witness_min=lo.witness_min,
        witness_max=hi.witness_max,
        table=table,
    )


# ---------------------------------------------------------------- closed forms


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidGraph(msg, "invalid_params")


def _predict_path(n):
    _need(n >= 1, "path needs n >= 1")
    if n == 1:
        return 1, 1
    if n % 2 == 0:
        return _num(Fraction(3 * n, 2)), _num(Fraction(3 * n, 2))
    return 3 * (n // 2) + 1, 3 * (n // 2) + 2


def _predict_cycle(n):
    _need(n >= 3, "cycle needs n >= 3")
    lo = 3 * -(-n // 2)
    hi = _num(Fraction(5 * n, 2)) if n % 2 == 0 else 5 * (n // 2) + 1
    return lo, hi


def _predict_extended_path(n):
    _need(n >= 4 and n % 2 == 0, "extended path needs even n >= 4")
    if n == 4:
        return 7, 9
    return _num(Fraction(3 * n, 2)), _num(Fraction(5 * n, 2) - 1)


def _predict_extended_cycle(n):
    _need(n >= 4 and n % 2 == 0, "extended cycle needs even n >= 4")
    if n == 4:
        return 10, 10
    t = n // 2
    hi = Fraction(5 * n, 2) - (1 if t % 2 == 0 else 3)
    return _num(Fraction(3 * n, 2)), _num(hi)


def _bipartite_short(n, m, ell):
    return Fraction(3 * (n - ell), 2) + Fraction(7 * (m - ell), 2) + 3 * ell


def _bipartite_long(n, m, ell):
    return (n - ell) // 2 + 2 * -(-(n - ell) // 2) + Fraction(7 * (m - ell + 1), 2) + 3 * ell


def _check_bipartite_params(n, m, ell, parity):
    _need(n >= m >= 1, "bipartite formulas need n >= m >= 1")
    _need(n % 2 == parity and m % 2 == parity, "side sizes have the wrong parity for this family")
    _need(0 <= ell <= m, "ell must lie in [0, m]")


def _predict_bipartite_even(n, m, ell):
    _check_bipartite_params(n, m, ell, 0)
    f = _bipartite_short if ell % 2 == 0 else _bipartite_long
    return _num(f(n, m, ell)), None


def _predict_bipartite_odd(n, m, ell):
    _check_bipartite_params(n, m, ell, 1)
    f = _bipartite_long if ell % 2 == 0 else _bipartite_short
    return _num(f(n, m, ell)), None


def _predict_hall(n):
    _need(n >= 2 and n % 2 == 0, "needs even order n >= 2")
    return _num(Fraction(3 * n, 2)), _num(Fraction(5 * n, 2) - 3)


PREDICTORS = {
    "path": _predict_path,
    "cycle": _predict_cycle,
    "extended_path": _predict_extended_path,
    "extended_cycle": _predict_extended_cycle,
    "bipartite_ext_even": _predict_bipartite_even,
    "bipartite_ext_odd": _predict_bipartite_odd,
    "hall_bipartite": _predict_hall,
}


def predict(family: str, **params) -> dict:
    """Published closed-form values for a family, uncorrected.

    ``chi_sum_max`` is ``None`` where only the minimum has a formula.
    Values that are not whole numbers come back as ``Fraction``.
    """
    try:
        fn = PREDICTORS[family]
    except KeyError:
        raise GcsumError(f"unknown family {family!r}", "unknown_family")
    try:
        lo, hi = fn(**params)
    except TypeError as exc:
        raise InvalidGraph(f"bad parameters for {family}: {exc}", "invalid_params")
    return {"chi_sum_min": lo, "chi_sum_max": hi}
