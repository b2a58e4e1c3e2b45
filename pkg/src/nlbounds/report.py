"""Per-graph evaluation of every bound against the exact indices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import bounds as B
from .errors import NLBoundsError, NotApplicable, SoundnessViolation
from .graph import Graph, degree_sequence, is_bipartite
from .indices import IndexValues, compute_indices
from .randic import randic_bounds_classical, randic_extremals
from .spectra import Spectrum, graph_spectrum

__all__ = ["BoundEntry", "BoundReport", "evaluate_bounds", "BOUND_IDS", "SOUNDNESS_SLACK"]

SOUNDNESS_SLACK = 1e-8


@dataclass(frozen=True)
class BoundEntry:
    """One bound evaluated on one graph.

    ``value`` may be set while ``applicable`` is False: that is a reference
    value computed outside the bound's ordering assumption. Only applicable
    entries are held to soundness.
    """

    name: str
    index: str
    side: str
    value: float | None
    applicable: bool
    reason: str = ""
    inputs: dict[str, Any] = field(default_factory=dict)

    @property
    def overflow(self) -> bool:
        return self.value is not None and self.value == float("inf")


@dataclass(frozen=True)
class BoundReport:
    label: str
    n: int
    m: int
    bipartite: bool
    degrees: tuple[int, ...]
    exact: IndexValues
    spectrum: tuple[float, ...]
    Q: float | None
    R: float | None
    entries: tuple[BoundEntry, ...]

    def exact_value(self, index: str) -> float:
        return {"nee": self.exact.nee, "lee": self.exact.lee,
                "ne": self.exact.ne, "randic": self.exact.randic}[index]

    def get(self, name: str, side: str | None = None) -> BoundEntry:
        for e in self.entries:
            if e.name == name and (side is None or e.side == side):
                return e
        raise KeyError((name, side))

    def relative_errors(self) -> dict[tuple[str, str], float]:
        return {
            (e.name, e.side): B.relative_error(e.value, self.exact_value(e.index))
            for e in self.entries
            if e.applicable and e.value is not None and e.value != float("inf")
        }

    def violations(self, slack: float = SOUNDNESS_SLACK) -> list[BoundEntry]:
        bad = []
        for e in self.entries:
            if not e.applicable or e.value is None:
                continue
            exact = self.exact_value(e.index)
            if e.side == "lower" and e.value > exact + slack:
                bad.append(e)
            elif e.side == "upper" and e.value < exact - slack:
                bad.append(e)
        return bad

    def assert_sound(self, slack: float = SOUNDNESS_SLACK) -> None:
        bad = self.violations(slack)
        if bad:
            desc = ", ".join(f"{e.name}/{e.side}={e.value!r} vs {self.exact_value(e.index)!r}"
                             for e in bad)
            raise SoundnessViolation(f"{self.label}: {desc}")


# (name, index, side) in report order
BOUND_IDS: tuple[tuple[str, str, str], ...] = (
    ("nee_li", "nee", "lower"),
    ("nee_q", "nee", "lower"),
    ("nee_qr", "nee", "lower"),
    ("nee_bip", "nee", "lower"),
    ("nee_bip_r", "nee", "lower"),
    ("nee_randic_d1", "nee", "lower"),
    ("nee_randic_l1", "nee", "lower"),
    ("nee_randic_r", "nee", "lower"),
    ("nee_randic_dn", "nee", "upper"),
    ("nee_randic_u1", "nee", "upper"),
    ("nee_randic_r", "nee", "upper"),
    ("lee_q", "lee", "lower"),
    ("lee_qr", "lee", "lower"),
    ("lee_randic_l1", "lee", "lower"),
    ("lee_hakimi1", "lee", "lower"),
    ("lee_hakimi2", "lee", "lower"),
    ("lee_hakimi3", "lee", "lower"),
    ("lee_randic_u1", "lee", "upper"),
    ("lee_hakimi4", "lee", "upper"),
    ("ne_q", "ne", "upper"),
    ("ne_qr", "ne", "upper"),
    ("ne_bip", "ne", "upper"),
    ("ne_bip_r", "ne", "upper"),
    ("ne_cavers1", "ne", "upper"),
    ("ne_cavers2", "ne", "upper"),
    ("randic_classical", "randic", "lower"),
    ("randic_classical", "randic", "upper"),
    ("randic_maj", "randic", "lower"),
    ("randic_maj", "randic", "upper"),
)


class _NA(NLBoundsError):
    pass


def _entry(name: str, index: str, side: str, fn: Callable[[], float],
           inputs: dict[str, Any], reference: Callable[[], float] | None = None) -> BoundEntry:
    try:
        return BoundEntry(name, index, side, float(fn()), True, "", inputs)
    except NotApplicable as exc:
        reason = f"{type(exc).__name__}: {exc}"
    except _NA as exc:
        reason = str(exc)
    value = None
    if reference is not None:
        try:
            value = float(reference())
            reason += " (value shown outside assumption)"
        except NLBoundsError:
            pass
    return BoundEntry(name, index, side, value, False, reason, inputs)


def evaluate_bounds(g: Graph, s: Spectrum | None = None, *, label: str = "") -> BoundReport:
    """Exact indices of ``g`` plus every bound, tagged with applicability."""
    if s is None:
        s = graph_spectrum(g)
    exact = compute_indices(g, s)
    n, bip = g.n, is_bipartite(g)
    loc = B.eigen_localizers(g)
    Q, R = loc.Q, loc.R
    randic = exact.randic
    ds = degree_sequence(g)
    lo_cls, hi_cls = randic_bounds_classical(ds)
    try:
        ext = randic_extremals(ds)
        L1, U1, ext_reason = ext.L1, ext.U1, ""
    except NLBoundsError as exc:
        L1 = U1 = None
        ext_reason = f"{type(exc).__name__}: {exc}"

    def need(cond, msg):
        if not cond:
            raise _NA(msg)

    def with_q():
        need(Q is not None, "Q undefined")
        return Q

    def with_qr():
        need(Q is not None and R is not None, "Q or R undefined")
        return Q, R

    def l1():
        need(L1 is not None, ext_reason)
        return L1

    def u1():
        need(U1 is not None, ext_reason)
        return U1

    def bip_only():
        need(bip, "graph is not bipartite")

    def nonbip_only():
        need(not bip, "graph is bipartite")

    a_gen = 2 * randic - 1
    a_bip = 2 * randic - 2

    def k2_from_r():
        need(R is not None, "R undefined")
        need(R >= 1, f"R = {R} < 1, so (R-1)^2 does not bound the second term")
        return (R - 1) ** 2

    def ne_qr(enforce):
        q, _ = with_qr()
        return B.ne_upper_k1_k2(n, a_gen, (q - 1) ** 2, k2_from_r(), enforce_guard=enforce)

    def ne_bip_r(enforce):
        bip_only()
        return B.ne_upper_bipartite_k2(n, a_bip, k2_from_r(), enforce_guard=enforce)

    qr = {"Q": Q, "R": R}
    e = []
    add = e.append
    add(_entry("nee_li", "nee", "lower", lambda: B.nee_lower_li(n), {"n": n}))
    add(_entry("nee_q", "nee", "lower", lambda: B.nee_lower_alpha(n, with_q()), {"alpha": Q}))
    add(_entry("nee_qr", "nee", "lower",
               lambda: B.nee_lower_alpha_beta(n, *with_qr()), qr,
               reference=lambda: B.nee_lower_alpha_beta(n, *with_qr(), enforce_guard=False)))
    add(_entry("nee_bip", "nee", "lower",
               lambda: (bip_only(), B.nee_lower_bipartite(n))[1], {"n": n}))
    add(_entry("nee_bip_r", "nee", "lower",
               lambda: (bip_only(), B.nee_lower_bipartite_beta(n, with_qr()[1]))[1], {"beta": R}))
    add(_entry("nee_randic_d1", "nee", "lower",
               lambda: B.nee_randic_lower(n, lo_cls, bip), {"L": lo_cls}))
    add(_entry("nee_randic_l1", "nee", "lower",
               lambda: B.nee_randic_lower(n, l1(), bip), {"L": L1}))
    add(_entry("nee_randic_r", "nee", "lower",
               lambda: B.nee_randic_lower(n, randic, bip), {"L": randic}))
    add(_entry("nee_randic_dn", "nee", "upper",
               lambda: B.nee_randic_upper(n, hi_cls, bip), {"U": hi_cls}))
    add(_entry("nee_randic_u1", "nee", "upper",
               lambda: B.nee_randic_upper(n, u1(), bip), {"U": U1}))
    add(_entry("nee_randic_r", "nee", "upper",
               lambda: B.nee_randic_upper(n, randic, bip), {"U": randic}))
    add(_entry("lee_q", "lee", "lower", lambda: B.lee_lower_alpha(n, with_q()), {"alpha": Q}))
    add(_entry("lee_qr", "lee", "lower",
               lambda: B.lee_lower_alpha_beta(n, *with_qr()), qr,
               reference=lambda: B.lee_lower_alpha_beta(n, *with_qr(), enforce_guard=False)))
    add(_entry("lee_randic_l1", "lee", "lower",
               lambda: (nonbip_only(), B.lee_randic_lower(n, l1()))[1], {"L": L1}))
    add(_entry("lee_hakimi1", "lee", "lower", lambda: B.hakimi1(n), {"n": n}))
    add(_entry("lee_hakimi2", "lee", "lower", lambda: B.hakimi2(n), {"n": n}))
    add(_entry("lee_hakimi3", "lee", "lower", lambda: B.hakimi3(n, randic), {"randic": randic}))
    add(_entry("lee_randic_u1", "lee", "upper",
               lambda: (nonbip_only(), B.lee_randic_upper(n, u1()))[1], {"U": U1}))
    add(_entry("lee_hakimi4", "lee", "upper", lambda: B.hakimi4(n, randic), {"randic": randic}))
    add(_entry("ne_q", "ne", "upper",
               lambda: B.ne_upper_k1(n, a_gen, (with_q() - 1) ** 2), {"a": a_gen, "Q": Q}))
    add(_entry("ne_qr", "ne", "upper", lambda: ne_qr(True), {"a": a_gen, **qr},
               reference=lambda: ne_qr(False)))
    add(_entry("ne_bip", "ne", "upper",
               lambda: (bip_only(), B.ne_upper_bipartite(n, a_bip))[1], {"a": a_bip}))
    add(_entry("ne_bip_r", "ne", "upper", lambda: ne_bip_r(True), {"a": a_bip, "R": R},
               reference=lambda: ne_bip_r(False)))
    add(_entry("ne_cavers1", "ne", "upper", lambda: B.ne_upper_cavers1(n), {"n": n}))
    add(_entry("ne_cavers2", "ne", "upper", lambda: B.ne_upper_cavers2(n), {"n": n}))
    add(_entry("randic_classical", "randic", "lower", lambda: lo_cls, {"d1": ds[1]}))
    add(_entry("randic_classical", "randic", "upper", lambda: hi_cls, {"dn": ds[n]}))
    add(_entry("randic_maj", "randic", "lower", l1, {}))
    add(_entry("randic_maj", "randic", "upper", u1, {}))

    return BoundReport(
        label=label, n=n, m=g.m, bipartite=bip, degrees=ds.values, exact=exact,
        spectrum=s.values, Q=Q, R=R, entries=tuple(e),
    )
