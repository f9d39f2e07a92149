"""Transversal gate checks: algebraic criteria and an exact small-n simulator.

Transversal ``S`` multiplies a computational basis state ``|v>`` by
``i**|v|`` and transversal ``T`` by ``exp(i*pi/4)**|v|``.  Phases are kept as
integer exponents of ``exp(i*pi/4)``, so nothing here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .css import CssCode
from .divisibility import is_doubly_even_span, is_triply_even_span, logical_overlap_divisibility
from .gf2 import rowspace_contains, rowspace_equal, span_elements

GATE_LEVELS = {"S": 2, "T": 3}
HADAMARD_ACTION = "H: logical X and Z exchanged"


@dataclass(frozen=True)
class GateReport:
    gate: str
    preserves_codespace: bool
    logical_action: str | None
    method: str
    phase_exponent: int | None = None   # c in exp(i*pi*c / 2**(level-1)) on |1>, relative to |0>

    def agrees_with(self, other: GateReport) -> bool:
        return (
            self.gate == other.gate
            and self.preserves_codespace == other.preserves_codespace
            and self.logical_action == other.logical_action
            and self.phase_exponent == other.phase_exponent
        )

    def to_dict(self) -> dict:
        return {
            "gate": self.gate,
            "preserves": self.preserves_codespace,
            "action": self.logical_action,
            "phase_exponent": self.phase_exponent,
            "method": self.method,
        }


def _phase_text(level: int, c: int) -> str:
    return f"relative phase exp(i*pi*{c}/{2 ** (level - 1)})"


def _level(gate_or_level) -> int:
    if gate_or_level in GATE_LEVELS:
        return GATE_LEVELS[gate_or_level]
    if gate_or_level in (2, 3):
        return int(gate_or_level)
    raise ValueError(f"unsupported diagonal level {gate_or_level!r}")


def check_transversal_diagonal(Q: CssCode, level) -> GateReport:
    """Level 2 is transversal S, level 3 transversal T."""
    lvl = _level(level)
    gate = "S" if lvl == 2 else "T"
    span_ok = is_doubly_even_span(Q.sx) if lvl == 2 else is_triply_even_span(Q.sx)
    preserves = bool(span_ok) and logical_overlap_divisibility(Q.sx, Q.lx, 2 ** (lvl - 1))
    if not preserves:
        return GateReport(gate, False, None, "algebraic")
    c = Q.lx.weight % (2**lvl)
    return GateReport(gate, True, _phase_text(lvl, c), "algebraic", c)


def _hadamard_action(Q: CssCode) -> str:
    if rowspace_contains(Q.sx, Q.lx ^ Q.lz):
        return HADAMARD_ACTION
    return "preserves codespace; logical X and Z representatives differ"


def check_transversal_hadamard(Q: CssCode) -> GateReport:
    preserves = rowspace_equal(Q.sx, Q.sz)
    if not preserves:
        return GateReport("H", False, None, "algebraic")
    return GateReport("H", True, _hadamard_action(Q), "algebraic")


def _coset_indices(Q: CssCode) -> tuple[np.ndarray, np.ndarray]:
    elems = span_elements(Q.sx)[:, 0].astype(np.int64)
    shift = np.int64(Q.lx.to_int())
    return elems, elems ^ shift


def _popcounts(idx: np.ndarray) -> np.ndarray:
    return np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)


def _walsh_hadamard(v: np.ndarray, n: int) -> np.ndarray:
    out = v.copy()
    for q in range(n):
        view = out.reshape(-1, 2, 1 << q)
        a, b = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = a + b
        view[:, 1, :] = a - b
    return out


def statevector_oracle(Q: CssCode, gate: str, max_n: int = 25) -> GateReport:
    """Apply the transversal gate to the logical basis states and read off the action."""
    if Q.n > max_n:
        raise ValueError(f"statevector oracle limited to n <= {max_n}, got {Q.n}")
    zero, one = _coset_indices(Q)
    if gate == "H":
        return _statevector_hadamard(Q, zero, one)
    lvl = _level(gate)
    step = 2 ** (3 - lvl)               # exponent of exp(i*pi/4) per excited qubit
    phases = []
    for support in (zero, one):
        exps = (step * _popcounts(support)) % 8
        if (exps != exps[0]).any():
            return GateReport(gate, False, None, "statevector")
        phases.append(int(exps[0]))
    if phases[0] != 0:
        raise AssertionError("stabilizer span contains the zero vector, its phase must be trivial")
    c = (phases[1] - phases[0]) % 8 // step
    return GateReport(gate, True, _phase_text(lvl, c), "statevector", c)


def _statevector_hadamard(Q: CssCode, zero: np.ndarray, one: np.ndarray) -> GateReport:
    n = Q.n
    size = 1 << n
    basis = []
    for support in (zero, one):
        v = np.zeros(size, dtype=np.int32)
        v[support] = 1
        basis.append(v)
    i0, i1 = int(zero[0]), int(one[0])
    matrix = []
    for v in basis:
        w = _walsh_hadamard(v, n)
        alpha, beta = int(w[i0]), int(w[i1])
        if not np.array_equal(w, alpha * basis[0] + beta * basis[1]):
            return GateReport("H", False, None, "statevector")
        matrix.append((alpha, beta))
    (a0, b0), (a1, b1) = matrix
    if a0 == b0 == a1 == -b1 and a0 != 0:
        return GateReport("H", True, HADAMARD_ACTION, "statevector")
    return GateReport("H", True, "preserves codespace; logical X and Z representatives differ", "statevector")
