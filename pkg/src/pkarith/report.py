"""Report assembly and rendering, plus the scan cache.

Every residue appears in three coordinated forms: decimal, fixed-width
base-p digits, and the balanced signed representative. Text and
structured (JSON) renderings carry the same numeric content; the scan
cache is an append-only JSONL file keyed by (p, k).
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ._version import __version__
from .errors import ModulusOverflow, NoCubicRoots
from .groups import CoreSet, GroupStructure, core_elements, group_structure
from .residues import PrimePowerModulus, Residue, to_padic
from .roots import (
    CUBIC_POLY,
    CubicRootTriple,
    FltRootPair,
    cubic_roots_of_unity,
    enumerate_core_root_pairs,
    enumerate_flt_roots_mod_p2,
    hensel_lift_poly_root,
)
from .subgroups import CoreTheoremReport, verify_core_theorem
from .triplets import FixedPoint, ScanRecord, Triplet, find_core_triplets


def residue_doc(r: Residue) -> dict:
    """The three coordinated renderings of one residue."""
    return {"dec": r.value, "padic": str(to_padic(r)), "signed": r.signed}


def _fmt(r: Residue, signed: bool) -> str:
    return str(r.signed) if signed else str(r.value)


def _pair_text(pair: FltRootPair, signed: bool) -> str:
    a, b = pair.a, pair.b
    parts = [
        f"({_fmt(a, signed)}, {_fmt(b, signed)})",
        f"base-{pair.modulus.p} ({to_padic(a)}, {to_padic(b)})",
        "EDS holds" if pair.eds_holds else "EDS fails",
    ]
    return "  ".join(parts)


def _triplet_text(t: Triplet, signed: bool) -> str:
    return f"({_fmt(t.a, signed)}, {_fmt(t.b, signed)}, {_fmt(t.c, signed)})"


# --- analyze ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AnalysisReport:
    """Everything the analyze command reports for one modulus."""

    modulus: PrimePowerModulus
    structure: GroupStructure
    core: CoreSet
    cubic: Optional[CubicRootTriple]
    flt_pairs: Optional[list[FltRootPair]]  # at precision 2; None if p^2 overflows
    core_theorem: CoreTheoremReport
    proper_triplets: list[Triplet]  # at the analyzed precision, k >= 2 only
    fixed_points: list[FixedPoint]


def build_analysis(p: int, k: int) -> AnalysisReport:
    modulus = PrimePowerModulus(p, k)
    try:
        cubic = cubic_roots_of_unity(modulus)
    except NoCubicRoots:
        cubic = None
    try:
        flt_pairs = enumerate_flt_roots_mod_p2(p)
    except ModulusOverflow:
        flt_pairs = None
    if k >= 2:
        proper, fixed = find_core_triplets(modulus)
    else:
        proper, fixed = [], []
    return AnalysisReport(
        modulus=modulus,
        structure=group_structure(modulus),
        core=core_elements(modulus),
        cubic=cubic,
        flt_pairs=flt_pairs,
        core_theorem=verify_core_theorem(modulus),
        proper_triplets=proper,
        fixed_points=fixed,
    )


def _core_rows(core: CoreSet) -> tuple[Residue, ...]:
    """Core in the table order h^1, h^2, ..., h^(p-1) = 1 (identity last)."""
    return core.elements[1:] + core.elements[:1]


def analysis_to_text(rep: AnalysisReport, signed: bool = False) -> str:
    mod = rep.modulus
    p, k, m = mod.p, mod.k, mod.m
    s = rep.structure
    rows = _core_rows(rep.core)
    lines = [
        f"modulus: p = {p}, k = {k}, m = {m}",
        f"units group: order {s.group_order}, generator {s.generator.value}",
        f"subgroup orders: core {s.core_order}, extension {s.extension_order}, "
        f"fermat {s.fermat_order}",
        f"core table (powers h^1..h^{p - 1} of the core generator h = "
        f"{s.core_generator.value}):",
        "  decimal: " + " ".join(str(r.value) for r in rows),
        f"  base-{p}: " + " ".join(str(to_padic(r)) for r in rows),
        "  signed: " + " ".join(str(r.signed) for r in rows),
    ]
    if rep.cubic is None:
        lines.append(f"cubic roots of 1: none ({p} is not 1 mod 6)")
    else:
        roots = rep.cubic.roots
        total = sum(r.value for r in roots) % m
        lines.append(
            "cubic roots of 1: {"
            + ", ".join(_fmt(r, signed) for r in roots)
            + f"}}, sum {total} mod {m}"
        )
    if rep.flt_pairs is None:
        lines.append(f"FLT roots mod {p}^2: skipped ({p}^2 exceeds the modulus bound)")
    elif not rep.flt_pairs:
        lines.append(f"no FLT roots mod {p * p}")
    else:
        lines.append(f"FLT root pairs mod {p * p}:")
        lines.extend("  " + _pair_text(pair, signed) for pair in rep.flt_pairs)
    ct = rep.core_theorem
    verdict = "pass" if ct.all_pass else "FAIL"
    divisors = ", ".join(str(c.d) for c in ct.checks)
    lines.append(
        f"core theorem: {verdict} for d in {{{divisors}}} "
        f"(d = 1 excluded, sum {ct.trivial_sum.value})"
    )
    if k >= 2:
        lines.append(
            f"triplets at k = {k}: {len(rep.proper_triplets)} proper, "
            f"{len(rep.fixed_points)} degenerate fixed points"
        )
        lines.extend("  " + _triplet_text(t, signed) for t in rep.proper_triplets)
    return "\n".join(lines) + "\n"


def analysis_to_dict(rep: AnalysisReport) -> dict:
    mod = rep.modulus
    s = rep.structure
    ct = rep.core_theorem
    return {
        "modulus": {"p": mod.p, "k": mod.k, "m": mod.m},
        "group": {
            "order": s.group_order,
            "generator": residue_doc(s.generator),
            "core_generator": residue_doc(s.core_generator),
            "extension_generator": residue_doc(s.extension_generator),
            "core_order": s.core_order,
            "extension_order": s.extension_order,
            "fermat_order": s.fermat_order,
        },
        "core": [residue_doc(r) for r in _core_rows(rep.core)],
        "cubic_roots": (
            None if rep.cubic is None else [residue_doc(r) for r in rep.cubic.roots]
        ),
        "flt_pairs": (
            None
            if rep.flt_pairs is None
            else [
                {
                    "a": residue_doc(pair.a),
                    "b": residue_doc(pair.b),
                    "eds_holds": pair.eds_holds,
                }
                for pair in rep.flt_pairs
            ]
        ),
        "core_theorem": {
            "all_pass": ct.all_pass,
            "trivial_sum": ct.trivial_sum.value,
            "checks": [
                {"d": c.d, "sum": c.total.value, "pass": c.passed} for c in ct.checks
            ],
        },
        "triplets": {
            "precision": mod.k,
            "proper": [
                [residue_doc(t.a), residue_doc(t.b), residue_doc(t.c)]
                for t in rep.proper_triplets
            ],
            "fixed_points": [residue_doc(f.value) for f in rep.fixed_points],
        }
        if mod.k >= 2
        else None,
    }


# --- roots ------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RootsReport:
    """FLT root pairs at the requested precision, cubic pair marked."""

    modulus: PrimePowerModulus
    pairs: list[FltRootPair]
    cubic_key: Optional[tuple[int, int]]


def build_roots(p: int, k: int) -> RootsReport:
    modulus = PrimePowerModulus(p, k)
    pairs = enumerate_core_root_pairs(modulus)
    try:
        lo, hi = cubic_roots_of_unity(modulus).nontrivial
        cubic_key = (lo.value, hi.value)
    except NoCubicRoots:
        cubic_key = None
    return RootsReport(modulus, pairs, cubic_key)


def roots_to_text(rep: RootsReport, signed: bool = False) -> str:
    mod = rep.modulus
    if not rep.pairs:
        return f"no FLT roots mod {mod.m}\n"
    lines = [f"FLT root pairs mod {mod.m} (core pairs with a + b = -1):"]
    for pair in rep.pairs:
        tag = "  [cubic-root pair]" if pair.key() == rep.cubic_key else ""
        lines.append("  " + _pair_text(pair, signed) + tag)
    return "\n".join(lines) + "\n"


def roots_to_dict(rep: RootsReport) -> dict:
    return {
        "modulus": {"p": rep.modulus.p, "k": rep.modulus.k, "m": rep.modulus.m},
        "pairs": [
            {
                "a": residue_doc(pair.a),
                "b": residue_doc(pair.b),
                "eds_holds": pair.eds_holds,
                "cubic_root_pair": pair.key() == rep.cubic_key,
            }
            for pair in rep.pairs
        ],
    }


# --- core theorem -----------------------------------------------------------


def core_theorem_to_text(ct: CoreTheoremReport) -> str:
    mod = ct.modulus
    lines = [
        f"core theorem mod {mod.p}^{mod.k}: "
        f"subgroup sums over divisors of p - 1 = {mod.p - 1}"
    ]
    for c in ct.checks:
        lines.append(f"  d = {c.d}: sum = {c.total.value}, {'pass' if c.passed else 'FAIL'}")
    lines.append(f"  d = 1 excluded: trivial subgroup sums to {ct.trivial_sum.value}")
    lines.append("all pass" if ct.all_pass else "FAILURES present")
    return "\n".join(lines) + "\n"


def core_theorem_to_dict(ct: CoreTheoremReport) -> dict:
    return {
        "modulus": {"p": ct.modulus.p, "k": ct.modulus.k, "m": ct.modulus.m},
        "all_pass": ct.all_pass,
        "trivial_sum": ct.trivial_sum.value,
        "checks": [{"d": c.d, "sum": c.total.value, "pass": c.passed} for c in ct.checks],
    }


# --- lift -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class LiftReport:
    """Cubic roots lifted to a higher precision, with both verifications."""

    from_modulus: PrimePowerModulus
    lifted: CubicRootTriple
    zero_sum: bool
    one_complement: bool


def build_lift(p: int, from_k: int, to_k: int) -> LiftReport:
    start = cubic_roots_of_unity(PrimePowerModulus(p, from_k))
    target = PrimePowerModulus(p, to_k)
    lo = hensel_lift_poly_root(CUBIC_POLY, start.roots[1], to_k)
    hi = hensel_lift_poly_root(CUBIC_POLY, start.roots[2], to_k)
    lo, hi = sorted((lo, hi), key=lambda r: r.value)
    lifted = CubicRootTriple((Residue(1, target), lo, hi), target)
    total = (1 + lo.value + hi.value) % target.m
    complement = (lo.value + lo.inverse().value) % target.m
    return LiftReport(
        from_modulus=start.modulus,
        lifted=lifted,
        zero_sum=total == 0,
        one_complement=complement == target.m - 1,
    )


def lift_to_text(rep: LiftReport, signed: bool = False) -> str:
    mod = rep.lifted.modulus
    roots = rep.lifted.roots
    lines = [
        f"cubic roots of 1 mod {mod.p}^{mod.k} "
        f"(lifted from precision {rep.from_modulus.k}):",
        "  roots: "
        + " ".join(_fmt(r, signed) for r in roots)
        + f"  base-{mod.p}: "
        + " ".join(str(to_padic(r)) for r in roots),
        f"  zero sum mod {mod.m}: {'pass' if rep.zero_sum else 'FAIL'}",
        f"  one-complement a + a^-1 = -1: {'pass' if rep.one_complement else 'FAIL'}",
    ]
    return "\n".join(lines) + "\n"


def lift_to_dict(rep: LiftReport) -> dict:
    mod = rep.lifted.modulus
    return {
        "modulus": {"p": mod.p, "k": mod.k, "m": mod.m},
        "from_k": rep.from_modulus.k,
        "roots": [residue_doc(r) for r in rep.lifted.roots],
        "zero_sum": rep.zero_sum,
        "one_complement": rep.one_complement,
    }


# --- scan -------------------------------------------------------------------


def record_to_dict(record: ScanRecord) -> dict:
    return {
        "p": record.p,
        "k": record.k,
        "degenerate_count": record.degenerate_count,
        "proper_triplet_count": record.proper_triplet_count,
        "first_proper": (
            None if record.first_proper is None else list(record.first_proper.values())
        ),
        "elapsed": round(record.elapsed, 6),
    }


def record_from_dict(doc: dict) -> ScanRecord:
    modulus = PrimePowerModulus(doc["p"], doc["k"])
    first = doc.get("first_proper")
    triplet = None
    if first is not None:
        a, b, c = (Residue(v, modulus) for v in first)
        triplet = Triplet(a, b, c, modulus)
    return ScanRecord(
        p=doc["p"],
        k=doc["k"],
        degenerate_count=doc["degenerate_count"],
        proper_triplet_count=doc["proper_triplet_count"],
        first_proper=triplet,
        elapsed=doc.get("elapsed", 0.0),
    )


def load_scan_cache(path: Path) -> dict[tuple[int, int], ScanRecord]:
    """Parse the JSONL cache; the last line for a (p, k) key wins."""
    records: dict[tuple[int, int], ScanRecord] = {}
    if not path.exists():
        return records
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            doc = json.loads(line)
            records[(doc["p"], doc["k"])] = record_from_dict(doc)
    return records


def append_scan_cache(path: Path, records: list[ScanRecord]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record_to_dict(record)) + "\n")


def scan_to_text(records: list[ScanRecord], k: int, signed: bool = False) -> str:
    lines = []
    for record in records:
        if record.proper_triplet_count:
            detail = (
                f"{record.proper_triplet_count} proper triplets, "
                f"{record.degenerate_count} degenerate; "
                f"first {_triplet_text(record.first_proper, signed)}"
            )
        else:
            detail = f"no proper triplets, {record.degenerate_count} degenerate"
        lines.append(f"  p = {record.p}: {detail}")
    onset = next((r for r in records if r.proper_triplet_count), None)
    if onset is None:
        lines.append("summary: no proper triplets found")
    else:
        lines.append(
            f"summary: first proper triplet at p = {onset.p}: "
            f"{_triplet_text(onset.first_proper, signed)}"
        )
    return "\n".join(lines) + "\n"


def scan_to_dict(records: list[ScanRecord]) -> dict:
    onset = next((r for r in records if r.proper_triplet_count), None)
    return {
        "records": [record_to_dict(r) for r in records],
        "summary": {
            "onset_prime": None if onset is None else onset.p,
            "first_proper": (
                None if onset is None else list(onset.first_proper.values())
            ),
        },
    }


# --- envelope ---------------------------------------------------------------


def envelope(command: str, params: dict, payload: dict) -> str:
    """The structured output document: version, inputs, then the report."""
    doc = {
        "tool": "pkarith",
        "version": __version__,
        "command": command,
        "params": params,
        "report": payload,
    }
    return json.dumps(doc, indent=2) + "\n"
