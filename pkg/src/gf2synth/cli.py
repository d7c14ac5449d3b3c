"""Command-line front end: parameter search, synthesis, verification, tables.

Commands
--------
* ``params``: report which representations a degree supports.
* ``synth {add|mult|selfmult|invert}``: emit a netlist and its resource
  summary as key=value lines. With ``--out`` the summary is recomputed from
  the re-parsed file, so the printed numbers describe what was written.
* ``verify {add|mult|selfmult|invert}``: simulate a synthesized (or, with
  ``--in``, previously emitted) netlist against the classical field oracles,
  exhaustively or on seeded random samples.
* ``table``: measured depth/gates next to the closed-form bounds for a list
  of degrees, plus the asymptotic comparison against a polynomial basis.

Exit codes: 0 success / verification passed, 1 verification failed,
2 domain error (unsupported degree, bad parameters, bad usage),
3 I/O or netlist parse failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from typing import Iterable, Optional

from .circuits import (
    Circuit,
    Gate,
    ResourceEstimate,
    emit_lines,
    measure_stream,
    parse,
    resources,
    run_packed,
)
from .errors import ParseError, WidthMismatch
from .fields import (
    FieldSpec,
    GhostBitElement,
    GnbElement,
    PolyElement,
    Representation,
    check_ghost_bit_support,
    find_gnb_type,
    gbb_frobenius,
    gbb_mult,
    gnb_frobenius,
    gnb_identity,
    gnb_mult,
    phi_retract,
    poly_inverse,
)
from .inverters import (
    bounds_ghost,
    bounds_gnb,
    check_bounds,
    inverter_gates,
    inverter_structure,
    synth_inverter,
)
from .multipliers import (
    synth_add,
    synth_gbb_mult,
    synth_gbb_self_mult,
    synth_gnb_mult,
    synth_gnb_self_mult,
)

DEFAULT_SEED = 0xB10F
DEFAULT_SAMPLES = 100
EXHAUSTIVE_CAP = 1 << 20

KINDS = ("add", "mult", "selfmult", "invert")


# ---------------------------------------------------------------------------
# verification engine


@dataclass(frozen=True)
class VerifyResult:
    passed: bool
    tested: int
    mode: str  # "exhaustive" | "random"
    seed: Optional[int]
    counterexample: Optional[str] = None


def _exhaustive_wire_pattern(bit: int, count: int) -> int:
    """Packed value of pattern-bit ``bit`` across patterns 0..count-1."""
    half = 1 << bit
    block = ((1 << half) - 1) << half  # one period: half zeros then half ones
    span = half << 1
    while span < count:
        block |= block << span
        span <<= 1
    return block & ((1 << count) - 1)


def _pack_patterns(
    width: int, input_wires: list[int], patterns: Optional[list[int]], nbits: int
) -> tuple[list[int], int]:
    """Bit-sliced state for a batch: wire input_wires[i] carries pattern bit i.

    ``patterns=None`` means all 2^nbits patterns in order.
    """
    state = [0] * width
    if patterns is None:
        count = 1 << nbits
        for i, wire in enumerate(input_wires):
            state[wire] = _exhaustive_wire_pattern(i, count)
    else:
        count = len(patterns)
        for b, pat in enumerate(patterns):
            for i, wire in enumerate(input_wires):
                if (pat >> i) & 1:
                    state[wire] |= 1 << b
    return state, count


def _reg_value(state: list[int], b: int, start: int, length: int) -> int:
    v = 0
    for i in range(length):
        v |= ((state[start + i] >> b) & 1) << i
    return v


def _bitstr(v: int, n: int) -> str:
    return "".join(str((v >> i) & 1) for i in range(n))


def _pattern_at(patterns: Optional[list[int]], b: int) -> int:
    return b if patterns is None else patterns[b]


def verify_kind(
    spec: FieldSpec,
    kind: str,
    *,
    r: Optional[int] = None,
    circuit: Optional[Circuit] = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> VerifyResult:
    """Check a netlist against the classical oracles.

    add/mult/selfmult are verified on raw register patterns (the convolution
    identities hold on every bit vector, embedded or not); invert is verified
    on embedded field elements with three checks per input: the output
    register inverts the input (extended Euclid in the polynomial basis for
    ghost-bit, product-equals-identity for the normal basis), the input
    register is preserved, and every ancilla register returns to zero.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown verification kind {kind!r}")
    w = spec.width
    ghost = spec.representation is Representation.GHOST_BIT

    if kind == "add":
        nbits = 2 * w
    elif kind == "mult":
        nbits = 2 * w
    elif kind == "selfmult":
        if r is None:
            raise ValueError("selfmult verification needs the exponent r")
        nbits = w
    else:
        nbits = spec.m  # field elements, not raw vectors

    if mode == "auto":
        mode = "exhaustive" if (1 << nbits) <= EXHAUSTIVE_CAP else "random"
    if mode == "exhaustive" and (1 << nbits) > EXHAUSTIVE_CAP:
        raise ValueError(
            f"exhaustive mode needs 2^{nbits} simulated inputs; the cap is 2^20"
        )
    if mode == "random":
        rng = random.Random(seed)
        patterns: Optional[list[int]] = [rng.getrandbits(nbits) for _ in range(samples)]
        used_seed: Optional[int] = seed
    else:
        patterns = None
        used_seed = None

    # Layout and gate source. The positional layout is part of the netlist
    # contract, so verification derives spans from the spec, not the file.
    if kind == "invert":
        struct = inverter_structure(spec)
        width = struct.width
        registers = struct.registers
        gates: Iterable[Gate] = (
            circuit.gates if circuit is not None else inverter_gates(spec)
        )
        if circuit is not None and circuit.width != width:
            raise WidthMismatch(
                f"netlist has {circuit.width} wires, inverter needs {width}"
            )
    else:
        if circuit is None:
            circuit = synth_circuit(spec, kind, r=r)
        expected_width = {"add": 2 * w, "mult": 3 * w, "selfmult": 2 * w}[kind]
        if circuit.width != expected_width:
            raise WidthMismatch(
                f"netlist has {circuit.width} wires, {kind} needs {expected_width}"
            )
        width = circuit.width
        registers = None
        gates = circuit.gates

    if kind == "invert" and ghost:
        # Embedded inputs carry a zero ghost coefficient: wire m stays 0.
        input_wires = list(range(spec.m))
    else:
        input_wires = list(range(nbits))

    state, count = _pack_patterns(width, input_wires, patterns, nbits)
    baseline = list(state)
    run_packed(gates, state)

    mask_w = (1 << w) - 1
    if kind == "add":
        for wire in range(w):  # first register must be untouched
            if state[wire] != baseline[wire]:
                return VerifyResult(False, count, mode, used_seed, f"wire {wire} modified")
        for b in range(count):
            pat = _pattern_at(patterns, b)
            a, bb = pat & mask_w, pat >> w
            got = _reg_value(state, b, w, w)
            if got != a ^ bb:
                return VerifyResult(
                    False, count, mode, used_seed,
                    f"a={_bitstr(a, w)} b={_bitstr(bb, w)} got={_bitstr(got, w)} "
                    f"expected={_bitstr(a ^ bb, w)}",
                )
        return VerifyResult(True, count, mode, used_seed)

    if kind == "mult":
        for wire in range(2 * w):
            if state[wire] != baseline[wire]:
                return VerifyResult(False, count, mode, used_seed, f"wire {wire} modified")
        for b in range(count):
            pat = _pattern_at(patterns, b)
            a, bb = pat & mask_w, pat >> w
            if ghost:
                exp = gbb_mult(
                    GhostBitElement.from_int(spec.m, a),
                    GhostBitElement.from_int(spec.m, bb),
                ).to_int()
            else:
                exp = gnb_mult(
                    spec.gnb_params,
                    GnbElement.from_int(spec.m, a),
                    GnbElement.from_int(spec.m, bb),
                ).to_int()
            got = _reg_value(state, b, 2 * w, w)
            if got != exp:
                return VerifyResult(
                    False, count, mode, used_seed,
                    f"a={_bitstr(a, w)} b={_bitstr(bb, w)} got={_bitstr(got, w)} "
                    f"expected={_bitstr(exp, w)}",
                )
        return VerifyResult(True, count, mode, used_seed)

    if kind == "selfmult":
        for wire in range(w):
            if state[wire] != baseline[wire]:
                return VerifyResult(False, count, mode, used_seed, f"wire {wire} modified")
        for b in range(count):
            a = _pattern_at(patterns, b)
            if ghost:
                ea = GhostBitElement.from_int(spec.m, a)
                exp = gbb_mult(ea, gbb_frobenius(ea, r)).to_int()
            else:
                ea = GnbElement.from_int(spec.m, a)
                exp = gnb_mult(spec.gnb_params, ea, gnb_frobenius(ea, r)).to_int()
            got = _reg_value(state, b, w, w)
            if got != exp:
                return VerifyResult(
                    False, count, mode, used_seed,
                    f"a={_bitstr(a, w)} got={_bitstr(got, w)} expected={_bitstr(exp, w)}",
                )
        return VerifyResult(True, count, mode, used_seed)

    # invert
    in_start, _ = registers["input"]
    out_start, _ = registers["output"]
    ancilla_spans = [
        span for name, span in registers.items() if name not in ("input", "output")
    ]
    for wire in range(in_start, in_start + w):
        if state[wire] != baseline[wire]:
            return VerifyResult(False, count, mode, used_seed, f"input wire {wire} modified")
    for start, length in ancilla_spans:
        for wire in range(start, start + length):
            if state[wire] != 0:
                return VerifyResult(
                    False, count, mode, used_seed, f"ancilla wire {wire} not returned to zero"
                )
    one = None if ghost else gnb_identity(spec.m)
    for b in range(count):
        v = _pattern_at(patterns, b)
        got = _reg_value(state, b, out_start, w)
        if ghost:
            out_elem = GhostBitElement.from_int(spec.m, got)
            if v == 0:
                ok = phi_retract(out_elem).to_int() == 0
            else:
                inv = poly_inverse(PolyElement.from_int(spec.m, v))
                ok = phi_retract(out_elem) == inv
        else:
            if v == 0:
                ok = got == 0
            else:
                prod = gnb_mult(
                    spec.gnb_params,
                    GnbElement.from_int(spec.m, v),
                    GnbElement.from_int(spec.m, got),
                )
                ok = prod == one
        if not ok:
            return VerifyResult(
                False, count, mode, used_seed,
                f"input={_bitstr(v, spec.m)} output={_bitstr(got, w)}",
            )
    return VerifyResult(True, count, mode, used_seed)


# ---------------------------------------------------------------------------
# synthesis dispatch


def synth_circuit(spec: FieldSpec, kind: str, r: Optional[int] = None) -> Circuit:
    if kind == "add":
        return synth_add(spec.width)
    if kind == "mult":
        if spec.representation is Representation.GHOST_BIT:
            return synth_gbb_mult(spec.m)
        return synth_gnb_mult(spec.gnb_params)
    if kind == "selfmult":
        if r is None:
            raise ValueError("selfmult needs -r <exponent>")
        if spec.representation is Representation.GHOST_BIT:
            return synth_gbb_self_mult(spec.m, r)
        return synth_gnb_self_mult(spec.gnb_params, r)
    if kind == "invert":
        return synth_inverter(spec)
    raise ValueError(f"unknown synthesis kind {kind!r}")


# ---------------------------------------------------------------------------
# command implementations


def _spec_from_args(args) -> FieldSpec:
    rep = Representation(args.rep)
    if rep is Representation.GHOST_BIT:
        if args.t is not None:
            raise ValueError("-t only applies to --rep gnb")
        return FieldSpec.ghost_bit(args.m)
    return FieldSpec.gnb(args.m, t=args.t)


def _context_lines(spec: FieldSpec, kind: str, r: Optional[int]) -> list[str]:
    out = [f"command={kind}", f"rep={spec.representation.value}", f"m={spec.m}"]
    if spec.representation is Representation.GNB:
        out.append(f"t={spec.gnb_params.t}")
    if kind == "selfmult" and r is not None:
        out.append(f"r={r}")
    return out


def cmd_params(args) -> int:
    m = args.m
    lines = [f"m={m}"]
    ghost_ok = check_ghost_bit_support(m)
    gnb_params = None
    if args.rep != "gbb":
        if args.t is not None:
            from .fields import make_gnb_params

            try:
                gnb_params = make_gnb_params(m, args.t)
            except ValueError:
                gnb_params = None
        else:
            try:
                gnb_params = find_gnb_type(m)
            except ValueError:
                gnb_params = None

    if args.rep in (None, "gbb"):
        lines.append(f"ghost_bit={'yes' if ghost_ok else 'no'}")
    if args.rep in (None, "gnb"):
        if gnb_params is not None:
            lines.append(f"gnb_type={gnb_params.t}")
            lines.append(f"gnb_p={gnb_params.p}")
            lines.append(f"gnb_u={gnb_params.u}")
        else:
            lines.append("gnb_type=none")

    available = (args.rep != "gnb" and ghost_ok) or (
        args.rep != "gbb" and gnb_params is not None
    )
    print("\n".join(lines))
    return 0 if available else 2


def cmd_synth(args) -> int:
    spec = _spec_from_args(args)
    r = args.r
    circuit = synth_circuit(spec, args.kind, r=r)
    header = _context_lines(spec, args.kind, r)
    if args.out:
        with open(args.out, "w") as fh:
            for line in emit_lines(circuit.width, circuit.registers, circuit.gates, header):
                fh.write(line)
                fh.write("\n")
        with open(args.out) as fh:
            reparsed = parse(fh.read())
        est = resources(reparsed)
        header.append(f"out={args.out}")
    else:
        est = resources(circuit)
    print("\n".join(header + est.summary_lines()))
    return 0


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    circuit = None
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            circuit = parse(fh.read())
    if args.exhaustive:
        mode = "exhaustive"
    elif args.random is not None:
        mode = "random"
    else:
        mode = "auto"
    samples = args.random if args.random is not None else DEFAULT_SAMPLES
    if samples < 1:
        raise ValueError("--random needs at least one sample")
    result = verify_kind(
        spec,
        args.kind,
        r=args.r,
        circuit=circuit,
        mode=mode,
        samples=samples,
        seed=args.seed,
    )
    lines = _context_lines(spec, args.kind, args.r)
    lines.append(f"mode={result.mode}")
    lines.append(f"inputs={result.tested}")
    if result.seed is not None:
        lines.append(f"seed=0x{result.seed:X}")
    lines.append(f"result={'pass' if result.passed else 'fail'}")
    if result.counterexample:
        lines.append(f"counterexample={result.counterexample}")
    print("\n".join(lines))
    return 0 if result.passed else 1


def _table_rows_for(m: int, rep: Representation) -> list[tuple]:
    """(op, depth, gates, depth_bound, gate_bound) rows for one (m, rep)."""
    if rep is Representation.GHOST_BIT:
        spec = FieldSpec.ghost_bit(m)
        w = m + 1
        mult = resources(synth_gbb_mult(m))
        mult_bounds = (m + 1, (m + 1) * (m + 1))
        inv_bound = bounds_ghost(m)
    else:
        spec = FieldSpec.gnb(m)
        t = spec.gnb_params.t
        w = m
        mult = resources(synth_gnb_mult(spec.gnb_params))
        T = t + (t % 2)
        mult_bounds = (T * m - 1, T * m * m - m)
        inv_bound = bounds_gnb(m, t)
    add = resources(synth_add(w))
    rows = [
        ("add", add.depth, add.gate_count, 1, w),
        ("mult", mult.depth, mult.gate_count, mult_bounds[0], mult_bounds[1]),
    ]
    struct = inverter_structure(spec)
    inv = measure_stream(struct.width, inverter_gates(spec))
    rows.append(
        ("invert", inv.depth, inv.gate_count, inv_bound.depth_bound, inv_bound.gate_bound)
    )
    return rows


def cmd_table(args) -> int:
    degrees = args.m
    header = f"{'m':>5} {'rep':>4} {'op':>8} {'depth':>9} {'gates':>10} {'depth<=':>9} {'gates<=':>10}"
    print(header)
    print("-" * len(header))
    printed = 0
    for m in degrees:
        reps = []
        if check_ghost_bit_support(m):
            reps.append(Representation.GHOST_BIT)
        try:
            find_gnb_type(m)
            reps.append(Representation.GNB)
        except ValueError:
            pass
        if args.rep:
            reps = [rp for rp in reps if rp.value == args.rep]
        for rep in reps:
            if m < 3:
                continue
            for op, d, gc, db, gb in _table_rows_for(m, rep):
                print(f"{m:>5} {rep.value:>4} {op:>8} {d:>9} {gc:>10} {db:>9} {gb:>10}")
                printed += 1
    print()
    print("asymptotics: representation | add depth/gates | mult | invert")
    print("  polynomial basis | O(1) / O(m) | O(m) / O(m^2) | O(m^2) / O(m^3), extended Euclid")
    print("  ghost-bit        | O(1) / O(m) | O(m) / O(m^2) | O(m log m) / O(m^2 log m)")
    print("  normal basis     | O(1) / O(m) | O(m) / O(m^2) | O(m log m) / O(m^2 log m)")
    if printed == 0:
        raise ValueError("no supported representation for the requested degrees")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser, need_rep: bool) -> None:
    p.add_argument("-m", type=int, required=True, help="field degree")
    p.add_argument(
        "--rep",
        choices=("gbb", "gnb"),
        required=need_rep,
        help="representation: gbb (ghost-bit) or gnb (Gaussian normal basis)",
    )
    p.add_argument("-t", type=int, default=None, help="normal-basis type override")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gf2synth",
        description="Synthesize and verify binary-field arithmetic circuits.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="report available representations for a degree")
    _add_common(p, need_rep=False)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("synth", help="emit a netlist and its resource summary")
    p.add_argument("kind", choices=KINDS)
    _add_common(p, need_rep=True)
    p.add_argument("-r", type=int, default=None, help="self-power exponent")
    p.add_argument("--out", default=None, help="write the netlist to this path")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="check a netlist against the field oracles")
    p.add_argument("kind", choices=KINDS)
    _add_common(p, need_rep=True)
    p.add_argument("-r", type=int, default=None, help="self-power exponent")
    p.add_argument("--in", dest="infile", default=None, help="verify this netlist file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate all inputs")
    mode.add_argument("--random", type=int, default=None, metavar="N", help="sample N inputs")
    p.add_argument(
        "--seed",
        type=lambda s: int(s, 0),
        default=DEFAULT_SEED,
        help="PRNG seed for random mode (default 0xB10F)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="resource table for a list of degrees")
    p.add_argument(
        "-m",
        type=lambda s: [int(x) for x in s.split(",") if x],
        required=True,
        help="comma-separated degrees",
    )
    p.add_argument("--rep", choices=("gbb", "gnb"), default=None)
    p.set_defaults(func=cmd_table)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
