"""Reference configurations with the properties each one must re-verify."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import figures
from .blocking import is_k_color_blocked, split_target
from .coloring import chromatic_number, is_properly_colored
from .errors import VerificationFailed
from .visibility import ColoredPointSet, max_collinear, visibility_graph


@dataclass(frozen=True)
class Expected:
    proper: Optional[bool] = True
    max_collinear: Optional[int] = None
    chi: Optional[int] = None
    # (indices of the unicolored target, number of blocker colors)
    blocking: Optional[tuple[tuple[int, ...], int]] = None


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    pointset: ColoredPointSet
    provenance: str
    expected: Expected = field(default_factory=Expected)
    schematic: bool = False  # rounded drawing coordinates, not checked exactly


@dataclass(frozen=True)
class EntryResult:
    id: str
    ok: bool
    skipped: bool = False
    failures: tuple[str, ...] = ()
    observed: dict = field(default_factory=dict, compare=False)


def _entries() -> list[CorpusEntry]:
    tri = (0, 1, 2)
    out = [
        CorpusEntry("twelve-integer", figures.twelve_integer(),
                    "integer 12-point set properly colored with 4 colors (extremal for 3 collinear)",
                    Expected(True, 3, 4)),
        CorpusEntry("twelve-decimal", figures.twelve_decimal(),
                    "decimal drawing of a properly 4-colored 12-point set; rounded coordinates",
                    Expected(None), schematic=True),
        CorpusEntry("six-point", figures.six_point(),
                    "unique 6-point set properly colored with 3 colors, exact realization",
                    Expected(True, 3, 3)),
    ]
    for i in range(1, 6):
        out.append(CorpusEntry(
            f"triangle-instance-{i}", figures.triangle_instance(i),
            f"triangle blocked with 3 colors, instance {i}, exact realization",
            Expected(True, 3, None, (tri, 3))))
    out += [
        CorpusEntry("nine-point", figures.nine_point(),
                    "square with its 3-color blocking set (four side blockers and the center)",
                    Expected(True, 3, None, ((0, 1, 2, 3), 3))),
        CorpusEntry("ten-point", figures.ten_point(),
                    "concave red quadruple with its 3-color blocking set, exact realization",
                    Expected(True, 3, None, ((0, 1, 2, 3), 3))),
        CorpusEntry("ten-point-case1-printed", figures.ten_point_case1_printed(),
                    "concave quadruple with blockers at segment midpoints; four of them collinear",
                    Expected(None), schematic=True),
    ]
    return out


def corpus() -> list[CorpusEntry]:
    return _entries()


def entry(entry_id: str) -> CorpusEntry:
    for e in _entries():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def verify_entry(e: CorpusEntry) -> EntryResult:
    if e.schematic:
        return EntryResult(e.id, True, skipped=True)
    X, exp = e.pointset, e.expected
    bad, seen = [], {}
    if exp.proper is not None:
        seen["proper"] = is_properly_colored(X).proper
        if seen["proper"] != exp.proper:
            bad.append(f"proper={seen['proper']}, expected {exp.proper}")
    if exp.max_collinear is not None:
        seen["max_collinear"] = max_collinear(X)
        if seen["max_collinear"] != exp.max_collinear:
            bad.append(f"max_collinear={seen['max_collinear']}, expected {exp.max_collinear}")
    if exp.chi is not None:
        seen["chi"] = chromatic_number(visibility_graph(X)).chi
        if seen["chi"] != exp.chi:
            bad.append(f"chi={seen['chi']}, expected {exp.chi}")
    if exp.blocking is not None:
        idx, k = exp.blocking
        target, B = split_target(X, idx)
        r = is_k_color_blocked(target, B, k)
        seen["blocking"] = r.reason.value
        if not r.valid:
            bad.append(f"blocking check failed: {r.reason.value}")
    return EntryResult(e.id, not bad, False, tuple(bad), seen)


def verify_all(strict: bool = True) -> list[EntryResult]:
    """Re-verify every entry. With ``strict`` the first failure raises,
    naming the entry."""
    results = []
    for e in _entries():
        r = verify_entry(e)
        if strict and not r.ok:
            raise VerificationFailed(f"corpus entry {e.id}: " + "; ".join(r.failures))
        results.append(r)
    return results
