"""Out-of-place field inversion and the closed-form resource bounds.

The inverter raises the input to 2^m - 2 by an addition chain on the exponent
(see ``fields.addition_chain``): floor(log2(m-1)) doubling multiplications,
then HW(m-1) - 1 merges, every operand power-of-two read folded into wiring,
and the final squaring folded into the last multiplier's write permutation.
After the forward pass, all blocks except the final one are run backwards to
return the ancilla registers to zero, so the circuit maps

    |a> |0...0>  ->  |a> |0...0> |a^-1>

with the inverse in the last register and the input untouched. Register
layout (and the ``registers`` map of the emitted circuit) is: input, ladder
ancillas in exponent order, merge ancillas, output = last written register.

``check_bounds`` measures an inverter against the closed-form bounds without
materializing it; the gate stream is consumed by a single counting pass, so
even multi-million-gate instances fit in modest memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .circuits import Circuit, Gate, ResourceEstimate, cnot, measure_stream
from .errors import DegreeTooSmall, UnsupportedDegree
from .fields import (
    FieldSpec,
    InverterPlan,
    Representation,
    addition_chain,
    check_ghost_bit_support,
    find_gnb_type,
    make_gnb_params,
)
from .multipliers import (
    _gbb_mult_gates,
    _gbb_self_mult_gates,
    _gnb_mult_gates,
    _gnb_self_mult_gates,
)


@dataclass(frozen=True)
class MultiplierBlock:
    """One multiplier in the inverter schedule.

    ``self_power`` blocks compute target += source * source^(2^r); ``general``
    blocks compute target += source * operand^(2^operand_exponent). The final
    forward block carries ``squared_write`` so its result lands pre-squared.
    """

    kind: str  # "self_power" | "general"
    source_reg: int
    target_reg: int
    r: int = 0
    operand_reg: int = -1
    operand_exponent: int = 0
    squared_write: bool = False


@dataclass(frozen=True)
class InverterStructure:
    """Block-level layout of an inverter for one field spec."""

    spec: FieldSpec
    plan: InverterPlan
    reg_width: int
    width: int
    registers: dict[str, tuple[int, int]]
    forward: tuple[MultiplierBlock, ...]
    uncompute: tuple[MultiplierBlock, ...]  # execution order; gates reversed

    @property
    def output_register(self) -> str:
        return "output"


def inverter_structure(spec: FieldSpec) -> InverterStructure:
    if spec.m < 3:
        raise DegreeTooSmall("inverter synthesis needs m >= 3")
    plan = addition_chain(spec.m)
    w = spec.width
    width = plan.register_count * w

    names = {0: "input"}
    for j in range(1, plan.k_list[0] + 1):
        names[j] = f"ladder{j}"
    for s in range(1, plan.hamming_weight):
        names[plan.k_list[0] + s] = f"work{s}"
    names[plan.output_reg] = "output"
    registers = {names[i]: (i * w, w) for i in range(plan.register_count)}

    forward: list[MultiplierBlock] = []
    for st in plan.ladder:
        forward.append(
            MultiplierBlock(
                kind="self_power",
                source_reg=st.source_reg,
                target_reg=st.target_reg,
                r=st.r,
            )
        )
    for st in plan.combine:
        forward.append(
            MultiplierBlock(
                kind="general",
                source_reg=st.acc_reg,
                target_reg=st.target_reg,
                operand_reg=st.operand_reg,
                operand_exponent=st.operand_exponent,
            )
        )
    last = forward[-1]
    forward[-1] = MultiplierBlock(
        kind=last.kind,
        source_reg=last.source_reg,
        target_reg=last.target_reg,
        r=last.r,
        operand_reg=last.operand_reg,
        operand_exponent=last.operand_exponent,
        squared_write=True,
    )
    return InverterStructure(
        spec=spec,
        plan=plan,
        reg_width=w,
        width=width,
        registers=registers,
        forward=tuple(forward),
        uncompute=tuple(reversed(forward[:-1])),
    )


def _block_gates(spec: FieldSpec, block: MultiplierBlock, w: int) -> Iterator[Gate]:
    src = block.source_reg * w
    tgt = block.target_reg * w
    if spec.representation is Representation.GHOST_BIT:
        if block.kind == "self_power":
            return _gbb_self_mult_gates(
                spec.m, block.r, src, tgt, square_write=block.squared_write
            )
        return _gbb_mult_gates(
            spec.m,
            src,
            block.operand_reg * w,
            tgt,
            b_exp=block.operand_exponent,
            square_write=block.squared_write,
        )
    if block.kind == "self_power":
        return _gnb_self_mult_gates(
            spec.gnb_params, block.r, src, tgt, square_write=block.squared_write
        )
    return _gnb_mult_gates(
        spec.gnb_params,
        src,
        block.operand_reg * w,
        tgt,
        b_exp=block.operand_exponent,
        square_write=block.squared_write,
    )


def inverter_gates(spec: FieldSpec) -> Iterator[Gate]:
    """Stream the full inverter gate sequence (forward pass, then uncompute).

    Uncomputed blocks regenerate their gates on demand, so at most one block
    is ever held in memory.
    """
    s = inverter_structure(spec)
    for block in s.forward:
        yield from _block_gates(spec, block, s.reg_width)
    for block in s.uncompute:
        yield from reversed(list(_block_gates(spec, block, s.reg_width)))


def synth_inverter(spec: FieldSpec, in_place: bool = False) -> Circuit:
    """Materialize the inverter netlist.

    With ``in_place`` a transversal swap (three CNOT layers) is appended so
    the inverse replaces the input register and the input value parks in the
    output register; the closed-form bounds describe the default out-of-place
    form only.
    """
    s = inverter_structure(spec)
    gates = list(inverter_gates(spec))
    if in_place:
        a0 = s.registers["input"][0]
        b0 = s.registers["output"][0]
        for i in range(s.reg_width):
            gates.append(cnot(a0 + i, b0 + i))
            gates.append(cnot(b0 + i, a0 + i))
            gates.append(cnot(a0 + i, b0 + i))
    return Circuit(s.width, tuple(gates), s.registers)


# ---------------------------------------------------------------------------
# closed-form resource bounds


@dataclass(frozen=True)
class ResourceBound:
    """Upper bounds for one inverter; per-kind gate splits only exist for the
    ghost-bit construction (``gate_bound`` covers both representations)."""

    m: int
    depth_bound: int
    gate_bound: int
    qubit_bound: int
    t_depth_bound: int
    t_count_bound: int
    toffoli_bound: Optional[int] = None
    cnot_bound: Optional[int] = None


def _chain_shape(m: int) -> tuple[int, int]:
    if m < 3:
        raise DegreeTooSmall("inversion bounds need m >= 3")
    e = m - 1
    return e.bit_length() - 1, bin(e).count("1")


def bounds_ghost(m: int) -> ResourceBound:
    """Ghost-bit inverter bounds: the ladder is counted twice (compute and
    uncompute) at the self-power costs, the merges twice at the general
    multiplier costs, and one register per chain value."""
    if not check_ghost_bit_support(m):
        raise UnsupportedDegree(f"m={m} has no ghost-bit representation")
    log2, hw = _chain_shape(m)
    n = m + 1
    toffoli = 2 * log2 * (m * m + m) + 2 * (hw - 1) * (m * m + 2 * m + 1)
    cnot_b = 2 * log2 * n
    return ResourceBound(
        m=m,
        depth_bound=2 * log2 * (2 * m + 2) + 2 * (hw - 1) * n,
        gate_bound=toffoli + cnot_b,
        qubit_bound=(1 + log2) * n + (hw - 1) * n,
        t_depth_bound=12 * log2 * (2 * m + 2) + 12 * (hw - 1) * n,
        t_count_bound=14 * log2 * (m * m + m) + 14 * (hw - 1) * (m * m + 2 * m + 1),
        toffoli_bound=toffoli,
        cnot_bound=cnot_b,
    )


def bounds_gnb(m: int, t: int) -> ResourceBound:
    """Normal-basis inverter bounds with T = t rounded up to even."""
    log2, hw = _chain_shape(m)
    T = t + (t % 2)
    per_block = T * m * m - m
    return ResourceBound(
        m=m,
        depth_bound=log2 * (6 * T * m - 6) + 2 * (hw - 1) * (T * m - 1),
        gate_bound=2 * log2 * per_block + 2 * (hw - 1) * per_block,
        qubit_bound=(1 + log2) * m + (hw - 1) * m,
        t_depth_bound=6 * log2 * (6 * T * m - 6) + (12 * hw - 6) * (T * m - 1),
        t_count_bound=14 * log2 * per_block + 14 * (hw - 1) * per_block,
    )


def bounds_t(
    m: int,
    representation: Union[Representation, str],
    t: Optional[int] = None,
) -> tuple[int, int]:
    """(T-depth bound, T-count bound) for the inverter in the given
    representation; the normal-basis type is looked up when not supplied."""
    rep = Representation(representation) if isinstance(representation, str) else representation
    if rep is Representation.GHOST_BIT:
        b = bounds_ghost(m)
    else:
        if t is None:
            t = find_gnb_type(m).t
        else:
            make_gnb_params(m, t)  # validates the (m, t) pair
        b = bounds_gnb(m, t)
    return b.t_depth_bound, b.t_count_bound


@dataclass(frozen=True)
class BoundCheck:
    metric: str
    actual: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.actual <= self.bound


@dataclass(frozen=True)
class BoundsReport:
    m: int
    representation: Representation
    t: Optional[int]
    estimate: ResourceEstimate
    checks: tuple[BoundCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def format_lines(self) -> list[str]:
        rep = self.representation.value
        head = f"m={self.m} rep={rep}" + (f" t={self.t}" if self.t is not None else "")
        out = [head]
        for c in self.checks:
            verdict = "ok" if c.ok else "VIOLATED"
            out.append(f"  {c.metric}: {c.actual} <= {c.bound} {verdict}")
        return out


def check_bounds(spec: FieldSpec) -> BoundsReport:
    """Measure the synthesized inverter stream against the closed-form bounds."""
    s = inverter_structure(spec)
    est = measure_stream(s.width, inverter_gates(spec))
    if spec.representation is Representation.GHOST_BIT:
        b = bounds_ghost(spec.m)
        t = None
    else:
        t = spec.gnb_params.t
        b = bounds_gnb(spec.m, t)
    checks = [
        BoundCheck("depth", est.depth, b.depth_bound),
        BoundCheck("gates", est.gate_count, b.gate_bound),
        BoundCheck("qubits", est.qubits, b.qubit_bound),
        BoundCheck("t_depth", est.t_depth, b.t_depth_bound),
        BoundCheck("t_count", est.t_count, b.t_count_bound),
    ]
    if b.toffoli_bound is not None:
        checks.append(BoundCheck("toffoli", est.toffoli_count, b.toffoli_bound))
        checks.append(BoundCheck("cnot", est.cnot_count, b.cnot_bound))
    return BoundsReport(
        m=spec.m,
        representation=spec.representation,
        t=t,
        estimate=est,
        checks=tuple(checks),
    )
