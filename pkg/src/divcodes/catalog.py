"""Table regeneration: classical, doubly even and triply even columns with provenance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .classical import build_qr, extend_parity, is_doubly_even_classical
from .css import CssCode, gamma
from .distance import CssDistance, DistanceReport, classical_min_distance, coset_min_weight
from .divisibility import is_doubly_even_span, is_triply_even_span
from .doubling import EXTENDED_QR_DISTANCES, ChainStep, build_table_chain, doubly_even_schedule
from .gates import check_transversal_diagonal, check_transversal_hadamard
from .gf2 import rowspace_equal

DEFAULT_TABLE_BUDGET = 50_000_000
DEFAULT_TABLE_TRIALS = 2_000


@dataclass
class CatalogEntry:
    label: str
    n: int
    k: int
    d_lower: int | None
    d_upper: int | None
    d_provenance: str
    claimed: int | None
    divisibility: str | None = None
    gates: dict | None = None
    lineage: dict | None = None
    effort: dict = field(default_factory=dict)
    structure: str = "certified"          # provenance of n and k
    quantum: bool = True

    @property
    def d_value(self) -> int | None:
        if self.d_provenance in ("certified", "witnessed"):
            return self.d_upper
        return self.claimed

    def to_dict(self, seed: int) -> dict:
        g = gamma(self.n, self.k, self.d_value) if self.quantum and self.d_value and self.d_value > 1 else None
        return {
            "label": self.label,
            "n": self.n,
            "k": self.k,
            "provenance": {"n": self.structure, "k": self.structure, "d": self.d_provenance},
            "d": {
                "lower": self.d_lower,
                "upper": self.d_upper,
                "certified": self.d_provenance == "certified",
                "upper-or-claimed": self.d_value,
                "claimed": self.claimed,
                "claimed_provenance": "paper-table" if self.claimed is not None else None,
            },
            "divisibility": self.divisibility,
            "gates": self.gates,
            "gamma": round(g, 3) if g is not None else None,
            "lineage": self.lineage,
            "seed": seed,
            "effort": self.effort,
        }


def _label(n: int, k: int, d: int | None, classical: bool = False) -> str:
    inner = f"{n},{k},{d if d is not None else '?'}"
    return f"[{inner}]" if classical else f"[[{inner}]]"


def _tag(report: DistanceReport | CssDistance) -> str:
    if report.certified:
        return "certified"
    return "witnessed" if report.upper is not None else "unverified"


def _effort(*reports: DistanceReport) -> dict:
    return {
        "candidates": sum(r.candidates for r in reports),
        "methods": sorted({r.method for r in reports}),
        "levels": [list(r.levels) for r in reports],
    }


def _css_distance(Q: CssCode, budget: int, trials: int, seed: int) -> CssDistance:
    dx = coset_min_weight(Q.sx, Q.lx, budget, trials=trials, seed=seed)
    if rowspace_equal(Q.sx, Q.sz) and Q.lx == Q.lz:
        return CssDistance(dx, dx)
    dz = coset_min_weight(Q.sz, Q.lz, budget, trials=trials, seed=seed)
    return CssDistance(dx, dz)


def _gates(Q: CssCode) -> dict:
    reports = {
        "H": check_transversal_hadamard(Q),
        "S": check_transversal_diagonal(Q, 2),
        "T": check_transversal_diagonal(Q, 3),
    }
    return {g: {"preserves": r.preserves_codespace, "action": r.logical_action} for g, r in reports.items()}


def _quantum_entry(Q: CssCode, level: str, budget: int, trials: int, seed: int, lineage=None) -> CatalogEntry:
    dist = _css_distance(Q, budget, trials, seed)
    ok = is_doubly_even_span(Q.sx) if level == "doubly-even" else is_triply_even_span(Q.sx)
    return CatalogEntry(
        label=_label(Q.n, Q.k, dist.upper if dist.certified else Q.claimed_distance),
        n=Q.n,
        k=Q.k,
        d_lower=dist.lower,
        d_upper=dist.upper,
        d_provenance=_tag(dist),
        claimed=Q.claimed_distance,
        divisibility=level if ok else "none",
        gates=_gates(Q),
        lineage=lineage,
        effort=_effort(dist.dx, dist.dz) if dist.dx is not dist.dz else _effort(dist.dx),
    )


def _chain_entry(step: ChainStep, budget: int, trials: int, seed: int) -> CatalogEntry:
    lineage = {
        "q1": step.q1.label,
        "q2": step.q2.label if step.q2 is not None else _label(step.n2, 1, step.d2),
        "identity": f"2*{step.n1}+{step.n2}={step.n3}",
        "distance_rule": f"min({step.d1},{step.d2}+2)={step.d3}",
        "doubling": step.diagnostics.to_dict(),
    }
    if step.q3 is not None:
        return _quantum_entry(step.q3, "triply-even", budget, trials, seed, lineage)
    return CatalogEntry(
        label=_label(step.n3, 1, step.d3),
        n=step.n3,
        k=1,
        d_lower=None,
        d_upper=None,
        d_provenance="unverified",
        claimed=step.d3,
        divisibility=None,
        lineage=lineage,
        structure="unverified",
    )


def build_catalog(
    max_p: int, budget: int = DEFAULT_TABLE_BUDGET, seed: int = 0, trials: int = DEFAULT_TABLE_TRIALS
) -> dict:
    schedule = doubly_even_schedule(max_p)
    classical, doubly = [], []
    for Q in schedule:
        if Q.label.startswith("QR"):
            p = Q.n
            C = extend_parity(build_qr(p))
            rep = classical_min_distance(C, budget, trials=trials, seed=seed)
            claimed = EXTENDED_QR_DISTANCES[p]
            entry = CatalogEntry(
                label=_label(C.n, C.k, rep.upper if rep.certified else claimed, classical=True),
                n=C.n,
                k=C.k,
                d_lower=rep.lower,
                d_upper=rep.upper,
                d_provenance=_tag(rep),
                claimed=claimed,
                divisibility="doubly-even" if is_doubly_even_classical(C) else "none",
                effort=_effort(rep),
                quantum=False,
            )
            classical.append(entry.to_dict(seed))
        doubly.append(_quantum_entry(Q, "doubly-even", budget, trials, seed).to_dict(seed))
    triply = [_chain_entry(s, budget, trials, seed).to_dict(seed) for s in build_table_chain(max_p, seed=seed)]
    curve = [
        {"family": family, "n": e["n"], "d": e["d"]["upper-or-claimed"], "provenance": e["provenance"]["d"]}
        for family, entries in (("doubly_even", doubly), ("triply_even", triply))
        for e in entries
    ]
    return {
        "max_p": max_p,
        "seed": seed,
        "budget": budget,
        "trials": trials,
        "classical": classical,
        "doubly_even": doubly,
        "triply_even": triply,
        "curve": curve,
    }


def catalog_json(catalog: dict) -> str:
    return json.dumps(catalog, indent=2, sort_keys=True) + "\n"
