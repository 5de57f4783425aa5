"""Named cross-check suites over everything the package computes.

Each check walks every (m, w) cell up to a size bound, recomputes the
same quantity along two independent routes, and records one line per
cell.  The CLI's ``verify`` subcommand prints these records and fails
loudly on the first lie.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    CHAINS,
    avoids,
    base,
    chain,
    mirror,
    mirror_word,
    permutational,
)
from .dyckbij import (
    avoids231_by_split,
    count_noncrossing,
    enumerate_noncrossing,
    matching_from_pair,
    path_from_matching,
)
from .enumeration import a005700, count_table, enumerate_bases, enumerate_matchings
from .ferrers import base_word_for_shape, matching_to_transversal, shape_from_base, transversal_to_matching
from .gentree import TreeKind, leaf_count, phi

__all__ = ["Cell", "CheckReport", "CHECK_NAMES", "run_check", "run_checks"]

_M132 = permutational("132")
_M231 = permutational("231")


@dataclass(frozen=True)
class Cell:
    check: str
    m: int
    w: str  # base word, or "*" for a per-size aggregate
    ok: bool
    detail: str

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        return f"{status} [{self.check}] m={self.m} w={self.w} {self.detail}"


@dataclass
class CheckReport:
    name: str
    max_size: int
    cells: list[Cell] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cells)

    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.ok]

    def add(self, m: int, w: str, ok: bool, detail: str) -> None:
        self.cells.append(Cell(self.name, m, w, ok, detail))

    def summary(self) -> str:
        bad = len(self.failures())
        verdict = "PASS" if not bad else f"FAIL ({bad} bad cells)"
        return f"verify {self.name} (max size {self.max_size}): {verdict}, {len(self.cells)} cells"


def check_mirror(max_size: int) -> CheckReport:
    """Mirroring is an involution and swaps the 132/213 counts cell-wise."""
    rep = CheckReport("mirror", max_size)
    for k in range(3, max(3, max_size) + 1):
        ok = mirror(chain(k)) == chain(k)
        rep.add(k, "*", ok, f"mirror(C{k}) == C{k}")
    for m in range(0, max_size + 1):
        bad = 0
        total = 0
        for w in enumerate_bases(m):
            for match in enumerate_matchings(w):
                total += 1
                if mirror(mirror(match)) != match:
                    bad += 1
                if base(mirror(match)) != mirror_word(base(match)):
                    bad += 1
        rep.add(m, "*", bad == 0, f"involution and base-commute over {total} matchings")
        table = count_table(m, {"132": _M132, "213": permutational("213")})
        per132 = table.per_base("132")
        per213 = table.per_base("213")
        for w_bits in sorted(per213):
            mirrored = mirror_word(w_bits).bits
            ok = per213[w_bits] == per132[mirrored]
            rep.add(
                m,
                w_bits,
                ok,
                f"g_213={per213[w_bits]} g_132(mirror={mirrored})={per132[mirrored]}",
            )
    return rep


def check_counts_chain(max_size: int) -> CheckReport:
    """The six single patterns fall into three classes ordered cell-by-cell."""
    rep = CheckReport("counts-chain", max_size)
    labels = ("132", "213", "123", "321", "231", "312")
    for m in range(0, max_size + 1):
        table = count_table(m, {lab: permutational(lab) for lab in labels})
        per = {lab: table.per_base(lab) for lab in labels}
        for w in sorted(per["132"]):
            c = {lab: per[lab][w] for lab in labels}
            ok = (
                c["132"] == c["213"]
                and c["123"] == c["321"] == c["231"]
                and c["132"] <= c["123"]
                and c["231"] <= c["312"]
            )
            rep.add(m, w, ok, " ".join(f"{lab}={c[lab]}" for lab in labels))
        totals = {lab: table.marginal(lab) for lab in labels}
        agg_ok = (
            totals["132"] == totals["213"]
            and totals["123"] == totals["321"] == totals["231"]
            and totals["132"] <= totals["123"]
            and totals["231"] <= totals["312"]
        )
        rep.add(m, "*", agg_ok, " ".join(f"{lab}={totals[lab]}" for lab in labels))
    return rep


def check_tree_iso(max_size: int) -> CheckReport:
    """Tree leaf counts match brute force, and phi is a leaf bijection."""
    rep = CheckReport("tree-iso", max_size)
    for m in range(0, max_size + 1):
        for w in enumerate_bases(m):
            brute_m = set()
            brute_c = set()
            for match in enumerate_matchings(w):
                if avoids(match, _M132):
                    brute_m.add(match)
                if avoids(match, CHAINS):
                    brute_c.add(match)
            tm = leaf_count(w, TreeKind.TM)
            tc = leaf_count(w, TreeKind.TC)
            ok = len(brute_m) == len(brute_c) == tm == tc
            rep.add(
                m,
                w.bits,
                ok,
                f"brute_132={len(brute_m)} brute_chain={len(brute_c)} leaves_TM={tm} leaves_TC={tc}",
            )
            witness = phi(w)  # raises if block sizes ever diverge
            lefts = [a for a, _ in witness.leaf_pairs]
            rights = [b for _, b in witness.leaf_pairs]
            ok = (
                set(lefts) == brute_m
                and len(set(rights)) == len(rights)
                and set(rights) == brute_c
                and all(p.left.k == p.right.k for p in witness.node_pairs)
            )
            rep.add(
                m,
                w.bits,
                ok,
                f"phi: {len(witness.leaf_pairs)} leaf pairs, {len(witness.node_pairs)} node pairs",
            )
    return rep


def check_bijection231(max_size: int) -> CheckReport:
    """Dominated-pair counts equal brute 231-avoider counts; round-trips hold."""
    rep = CheckReport("bijection231", max_size)
    for m in range(0, max_size + 1):
        total = 0
        for w in enumerate_bases(m):
            brute = {match for match in enumerate_matchings(w) if avoids(match, _M231)}
            cnc = count_noncrossing(w)
            total += cnc
            rep.add(m, w.bits, cnc == len(brute), f"dominated={cnc} brute_231={len(brute)}")
            images = []
            trips = 0
            for p in enumerate_noncrossing(w):
                match = matching_from_pair(w, p)
                images.append(match)
                if avoids(match, _M231) and path_from_matching(match) == p:
                    trips += 1
            ok = trips == len(images) and set(images) == brute
            rep.add(m, w.bits, ok, f"round-trips={trips}/{len(images)} image=brute set")
        expected = a005700(m)
        rep.add(m, "*", total == expected, f"sum={total} a005700={expected}")
    return rep


def check_ferrers(max_size: int) -> CheckReport:
    """Shape/transversal round-trips and base-shape inverses."""
    rep = CheckReport("ferrers", max_size)
    for m in range(0, max_size + 1):
        for w in enumerate_bases(m):
            shape = shape_from_base(w)
            ok = base_word_for_shape(shape) == w
            bad = 0
            total = 0
            for match in enumerate_matchings(w):
                total += 1
                t = matching_to_transversal(match)
                if t.shape != shape or transversal_to_matching(t) != match:
                    bad += 1
            rep.add(m, w.bits, ok and bad == 0, f"shape inverse ok={ok}, round-trips {total - bad}/{total}")
    return rep


def check_split231(max_size: int) -> CheckReport:
    """The recursive 231 test agrees with plain pattern containment."""
    rep = CheckReport("split231", max_size)
    for m in range(0, max_size + 1):
        for w in enumerate_bases(m):
            bad = 0
            total = 0
            for match in enumerate_matchings(w):
                total += 1
                if avoids231_by_split(match) != avoids(match, _M231):
                    bad += 1
            rep.add(m, w.bits, bad == 0, f"agreement {total - bad}/{total}")
    return rep


CHECK_NAMES: dict[str, object] = {
    "mirror": check_mirror,
    "counts-chain": check_counts_chain,
    "tree-iso": check_tree_iso,
    "bijection231": check_bijection231,
    "split231": check_split231,
    "ferrers": check_ferrers,
}

# Alternate spellings accepted on the command line.
_ALIASES = {"ferrers-roundtrip": "ferrers"}


def run_check(name: str, max_size: int) -> CheckReport:
    try:
        fn = CHECK_NAMES[_ALIASES.get(name, name)]
    except KeyError:
        raise ValueError(
            f"unknown check {name!r}; pick one of {', '.join(CHECK_NAMES)} or all"
        ) from None
    return fn(max_size)


def run_checks(name: str, max_size: int) -> list[CheckReport]:
    if name == "all":
        return [fn(max_size) for fn in CHECK_NAMES.values()]
    return [run_check(name, max_size)]
