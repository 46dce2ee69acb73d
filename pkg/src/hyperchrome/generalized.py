"""Pruned sums of alternating functions over edge subsets.

A function ``f(G, A)`` into an abelian group is *alternating* when adding an
edge that keeps the component count of the spanning subgraph flips its sign:
``f(G, A) = -f(G, A + e)`` whenever ``k(V, A) = k(V, A + e)``. For such
``f`` the sum over all edge subsets equals the sum over subsets avoiding any
chosen family of broken cycles. The chromatic polynomial is the instance
``f(G, A) = (-1)^|A| x^k(V, A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, NamedTuple, Optional, Sequence

from .cycles import broken_cycle_free, broken_cycles, max_closing_edge
from .hypergraph import (
    EdgeOrder,
    Hypergraph,
    is_subset,
    popcount,
    require_within_cap,
    resolve_order,
    spanning_component_count,
)
from .polynomial import Polynomial

GroupValuedFunction = Callable[[Hypergraph, int], Any]


@dataclass(frozen=True)
class AbelianGroup:
    """An additive abelian group given by its operations.

    The axioms are the caller's contract; :func:`spot_check_axioms` samples them.
    """

    name: str
    zero: Any
    add: Callable[[Any, Any], Any]
    negate: Callable[[Any], Any]
    equals: Callable[[Any, Any], bool]

    def sum(self, items: Iterable[Any]) -> Any:
        acc = self.zero
        for a in items:
            acc = self.add(acc, a)
        return acc


INTEGERS = AbelianGroup("integers", 0, lambda a, b: a + b, lambda a: -a, lambda a, b: a == b)
POLYNOMIALS = AbelianGroup(
    "integer polynomials",
    Polynomial.zero(),
    lambda a, b: a + b,
    lambda a: -a,
    lambda a, b: a == b,
)


def spot_check_axioms(grp: AbelianGroup, samples: Sequence[Any]) -> list[str]:
    """Check the group axioms on all pairs/triples of ``samples``; return failures."""
    failures = []
    add, eq = grp.add, grp.equals
    for a in samples:
        if not eq(add(a, grp.zero), a):
            failures.append(f"{a!r} + 0 != {a!r}")
        if not eq(add(a, grp.negate(a)), grp.zero):
            failures.append(f"{a!r} + (-{a!r}) != 0")
        for b in samples:
            if not eq(add(a, b), add(b, a)):
                failures.append(f"{a!r} + {b!r} not commutative")
            for c in samples:
                if not eq(add(add(a, b), c), add(a, add(b, c))):
                    failures.append(f"({a!r}, {b!r}, {c!r}) not associative")
    return failures


# -- alternating functions -----------------------------------------------------

def chromatic_term(G: Hypergraph, A: int) -> Polynomial:
    """``(-1)^|A| x^k(V, A)``, the chromatic polynomial's summand."""
    return Polynomial.monomial(spanning_component_count(G, A), -1 if popcount(A) & 1 else 1)


def signed_table_function(table: Sequence[Any], grp: AbelianGroup = INTEGERS) -> GroupValuedFunction:
    """``f(G, A) = (-1)^|A| * table[k(V, A)]``; alternating for any table."""

    def f(G: Hypergraph, A: int):
        value = table[spanning_component_count(G, A)]
        return grp.negate(value) if popcount(A) & 1 else value

    return f


class Violation(NamedTuple):
    subset: int
    edge: int


def check_alternating_condition(G: Hypergraph, grp: AbelianGroup,
                                f: GroupValuedFunction) -> Optional[Violation]:
    """First ``(A, e)`` breaking the alternating condition, or ``None``.

    Pairs are visited by ascending mask ``A`` then ascending edge id ``e``.
    """
    require_within_cap(G)
    m = G.edge_count
    ks = [spanning_component_count(G, A) for A in G.subsets()]
    values = [f(G, A) for A in G.subsets()]
    for A in G.subsets():
        for e in range(m):
            if (A >> e) & 1:
                continue
            Ae = A | (1 << e)
            if ks[A] == ks[Ae] and not grp.equals(values[A], grp.negate(values[Ae])):
                return Violation(A, e)
    return None


def full_sum(G: Hypergraph, grp: AbelianGroup, f: GroupValuedFunction) -> Any:
    require_within_cap(G)
    return grp.sum(f(G, A) for A in G.subsets())


def _check_selection(G: Hypergraph, order: EdgeOrder, sel: Iterable[int]) -> list[int]:
    sel = sorted(set(sel))
    allowed = set(broken_cycles(G, order))
    extra = [B for B in sel if B not in allowed]
    if extra:
        raise ValueError(f"selection contains non-broken cycles {extra}")
    return sel


def pruned_sum(G: Hypergraph, grp: AbelianGroup, f: GroupValuedFunction,
               sel: Iterable[int], order: Optional[EdgeOrder] = None) -> Any:
    """Sum of ``f`` over subsets containing no member of ``sel``.

    ``sel`` must be a subset of the broken cycles under ``order``.
    """
    return _pruned(G, grp, f, sel, order)[0]


def _pruned(G, grp, f, sel, order):
    order = resolve_order(G, order)
    require_within_cap(G)
    sel = _check_selection(G, order, sel)
    acc, terms = grp.zero, 0
    for A in G.subsets():
        if broken_cycle_free(A, sel):
            acc = grp.add(acc, f(G, A))
            terms += 1
    return acc, terms


@dataclass
class TheoremReport:
    holds: bool
    hypothesis_ok: bool
    violation: Optional[Violation]
    full: Any = None
    pruned: Any = None
    total_terms: int = 0
    admissible_terms: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def summary(self) -> str:
        if not self.hypothesis_ok:
            v = self.violation
            return f"hypothesis violated at subset {v.subset:#b}, edge {v.edge}"
        verdict = "holds" if self.holds else "FAILS"
        return (f"{verdict}: full sum {self.full} over {self.total_terms} terms, "
                f"pruned sum {self.pruned} over {self.admissible_terms} terms")


def verify_generalized_theorem(G: Hypergraph, order: Optional[EdgeOrder], grp: AbelianGroup,
                               f: GroupValuedFunction, sel: Iterable[int]) -> TheoremReport:
    """Compare the full and pruned sums of an alternating ``f``.

    When ``f`` is not alternating the report has ``hypothesis_ok=False``
    and ``holds=False``; no sums are computed.
    """
    violation = check_alternating_condition(G, grp, f)
    if violation is not None:
        return TheoremReport(False, False, violation)
    full = full_sum(G, grp, f)
    pruned, terms = _pruned(G, grp, f, sel, order)
    return TheoremReport(grp.equals(full, pruned), True, None, full, pruned,
                         1 << G.edge_count, terms)


@dataclass(frozen=True)
class CancellingFamily:
    """Subsets removed when one more broken cycle joins the selection.

    ``broken`` is the selected broken cycle with the largest maximal closing
    edge ``closer``; ``family`` holds the subsets containing ``broken`` but
    no other selected broken cycle.
    """

    broken: int
    closer: int
    family: frozenset[int]

    def partner(self, A: int) -> int:
        return A ^ (1 << self.closer)

    def is_involution(self) -> bool:
        return all(self.partner(A) in self.family for A in self.family)


def cancelling_family(G: Hypergraph, order: Optional[EdgeOrder], sel: Iterable[int]) -> CancellingFamily:
    order = resolve_order(G, order)
    sel = _check_selection(G, order, sel)
    if not sel:
        raise ValueError("selection is empty")
    closers = {B: max_closing_edge(G, order, B) for B in sel}
    B = max(sel, key=lambda b: (order.rank(closers[b]), b))
    rest = [b for b in sel if b != B]
    family = frozenset(
        A for A in G.subsets() if is_subset(B, A) and broken_cycle_free(A, rest)
    )
    return CancellingFamily(B, closers[B], family)
