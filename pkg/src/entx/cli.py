"""Command-line front end and the JSON/CSV formats it speaks.

Ensemble files are JSON objects with integer ``dim_a``/``dim_b``, a
``weights`` array, and a ``basis`` array of states, each state an array of
[re, im] pairs of length dim_a*dim_b (row-major, subsystem A slow). State
files carry ``dim_a``, ``dim_b`` and one ``amplitudes`` array in the same
encoding. Reports echo their inputs and round-trip through JSON exactly.

Exit codes: 0 success, 2 input validation failure, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .dynamics import (
    SpectralDecomposition,
    default_time_grid_parameters,
    evolve_amplitudes,
    exact_time_average,
    form_ensemble,
    time_average_numeric,
)
from .ensemble import (
    MicrocanonicalEnsemble,
    mean_entanglement_closed_form,
    phase_average_oracle,
)
from .entropy import EntropyKind
from .errors import ValidationError
from .hilbert import PureState
from ._kernels import linear_entanglement_amplitudes, von_neumann_entanglement_amplitudes
from .models import jaynes_cummings, jc_excited_fock_state, jc_mean_entanglement_reference, two_spin

DEFAULT_SEED = 12345
SEED_ENV_VAR = "ENTX_SEED"
DEFAULT_ORACLE_SAMPLES = 100_000

_KIND_NAMES = {
    "linear": EntropyKind.LINEAR,
    "von-neumann": EntropyKind.VON_NEUMANN,
}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)


def _complex_vector(pairs, expected: int, what: str) -> np.ndarray:
    _require(isinstance(pairs, list), f"{what} must be an array")
    _require(
        len(pairs) == expected,
        f"{what} must have {expected} entries, got {len(pairs)}",
    )
    out = np.empty(expected, dtype=np.complex128)
    for k, pair in enumerate(pairs):
        _require(
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(v, (int, float)) for v in pair),
            f"{what}[{k}] must be a [re, im] pair",
        )
        out[k] = complex(pair[0], pair[1])
    return out


def _pairs(vector: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in vector]


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc
    _require(isinstance(obj, dict), f"{path} must hold a JSON object")
    return obj


def _dims_from(obj: dict, path: str) -> tuple[int, int]:
    for key in ("dim_a", "dim_b"):
        _require(
            isinstance(obj.get(key), int) and obj[key] >= 1,
            f"{path}: {key} must be a positive integer",
        )
    return obj["dim_a"], obj["dim_b"]


def load_state(path: str) -> PureState:
    """Parse a state file, rejecting malformed or non-normalized input."""
    obj = _load_json(path)
    dim_a, dim_b = _dims_from(obj, path)
    amp = _complex_vector(obj.get("amplitudes"), dim_a * dim_b, f"{path}: amplitudes")
    try:
        return PureState(dim_a, dim_b, amp)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def load_ensemble(path: str) -> MicrocanonicalEnsemble:
    """Parse an ensemble file, rejecting non-orthonormal or unnormalized input."""
    obj = _load_json(path)
    dim_a, dim_b = _dims_from(obj, path)
    weights = obj.get("weights")
    _require(
        isinstance(weights, list)
        and all(isinstance(w, (int, float)) for w in weights),
        f"{path}: weights must be an array of numbers",
    )
    basis = obj.get("basis")
    _require(isinstance(basis, list), f"{path}: basis must be an array of states")
    _require(
        len(basis) == len(weights),
        f"{path}: weights and basis must have the same length",
    )
    members = []
    for k, row in enumerate(basis):
        amp = _complex_vector(row, dim_a * dim_b, f"{path}: basis[{k}]")
        try:
            members.append(PureState(dim_a, dim_b, amp))
        except ValidationError as exc:
            raise ValidationError(f"{path}: basis[{k}]: {exc}") from exc
    try:
        return MicrocanonicalEnsemble(np.asarray(weights, dtype=float), tuple(members))
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def ensemble_to_json(e: MicrocanonicalEnsemble) -> dict:
    return {
        "dim_a": e.dim_a,
        "dim_b": e.dim_b,
        "weights": [float(w) for w in e.weights],
        "basis": [_pairs(m.amplitudes) for m in e.members],
    }


def state_to_json(psi: PureState) -> dict:
    return {
        "dim_a": psi.dim_a,
        "dim_b": psi.dim_b,
        "amplitudes": _pairs(psi.amplitudes),
    }


def _closed_form_fields(e: MicrocanonicalEnsemble) -> dict:
    report = mean_entanglement_closed_form(e)
    return {
        "s1_sigma": report.s1_sigma,
        "s1_tau": report.s1_tau,
        "delta": report.delta,
        "mean_closed_form": report.mean,
    }


def _resolve_seed(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValidationError(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}"
            ) from exc
    return DEFAULT_SEED


def _oracle_fields(e, kind: EntropyKind, samples: int, seed: int) -> dict:
    est = phase_average_oracle(e, kind, samples, seed)
    return {
        "kind": kind.value,
        "mean": est.mean,
        "std_error": est.std_error,
        "samples": est.samples,
        "seed": est.seed,
    }


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj: dict, output: str | None) -> None:
    _write_output(json.dumps(obj, indent=2) + "\n", output)


def _cmd_mean(args) -> int:
    e = load_ensemble(args.input)
    report = {"input": ensemble_to_json(e)}
    report.update(_closed_form_fields(e))
    _emit_json(report, args.output)
    return 0


def _cmd_oracle(args) -> int:
    e = load_ensemble(args.input)
    kind = _KIND_NAMES[args.kind]
    seed = _resolve_seed(args.seed)
    report = {"input": ensemble_to_json(e)}
    report.update(_closed_form_fields(e))
    report["oracle"] = _oracle_fields(e, kind, args.samples, seed)
    _emit_json(report, args.output)
    return 0


def _model_system(args) -> tuple[SpectralDecomposition, PureState, dict]:
    if args.model_type == "two-spin":
        parts = args.energies.split(",")
        _require(len(parts) == 4, "--energies needs 4 comma-separated values")
        try:
            energies = [float(p) for p in parts]
        except ValueError as exc:
            raise ValidationError(f"--energies: {exc}") from exc
        s, _model = two_spin(energies)
        psi = load_state(args.state)
        _require(
            (psi.dim_a, psi.dim_b) == (2, 2),
            "two-spin states must have dim_a = dim_b = 2",
        )
        descriptor = {"type": "two-spin", "energies": energies, "state": args.state}
        return s, psi, descriptor

    s, model = jaynes_cummings(args.omega, args.omega0, args.kappa, args.n_max)
    descriptor = {
        "type": "jc",
        "omega": args.omega,
        "omega0": args.omega0,
        "kappa": args.kappa,
        "n_max": args.n_max,
    }
    if args.init_fock is not None:
        psi = jc_excited_fock_state(model, args.init_fock)
        descriptor["init_fock"] = args.init_fock
        descriptor["reference_mean"] = jc_mean_entanglement_reference(
            model, args.init_fock
        )
    else:
        _require(args.state is not None, "need --init-fock or --state")
        psi = load_state(args.state)
        _require(
            (psi.dim_a, psi.dim_b) == (model.dim_a, model.dim_b),
            f"state must have dim_a = {model.dim_a}, dim_b = {model.dim_b}",
        )
        descriptor["state"] = args.state
    return s, psi, descriptor


def _cmd_model_mean(args) -> int:
    s, psi, descriptor = _model_system(args)
    e = form_ensemble(psi, s)
    report = {"model": descriptor, "weights": [float(w) for w in e.weights]}
    report.update(_closed_form_fields(e))
    _emit_json(report, args.output)
    return 0


def _cmd_model_report(args) -> int:
    s, psi, descriptor = _model_system(args)
    e = form_ensemble(psi, s)
    kind = _KIND_NAMES[args.kind]
    seed = _resolve_seed(args.seed)
    report = {"model": descriptor, "weights": [float(w) for w in e.weights]}
    report.update(_closed_form_fields(e))
    exact = exact_time_average(psi, s)
    numeric = time_average_numeric(psi, s, kind, args.horizon, args.step)
    report["time_average"] = {
        "numeric": numeric,
        "exact": exact.value,
        "resonances_found": exact.has_nontrivial_resonances,
        "exact_minus_closed_form": exact.value - report["mean_closed_form"],
    }
    report["oracle"] = _oracle_fields(e, kind, args.samples, seed)
    _emit_json(report, args.output)
    return 0


def _cmd_model_timeseries(args) -> int:
    s, psi, descriptor = _model_system(args)
    kind = _KIND_NAMES[args.kind]
    t_max, dt = args.t_max, args.dt
    if t_max is None or dt is None:
        horizon, step = default_time_grid_parameters(s)
        if t_max is None:
            t_max = 0.1 * horizon
        if dt is None:
            dt = step
    _require(t_max > 0.0, "--t-max must be positive")
    _require(0.0 < dt < t_max, "--dt must satisfy 0 < dt < t-max")
    count = int(np.ceil(t_max / dt))
    times = np.linspace(0.0, t_max, count + 1)
    amps = evolve_amplitudes(psi, s, times)
    if kind is EntropyKind.LINEAR:
        ent = linear_entanglement_amplitudes(amps, psi.dim_a, psi.dim_b)
    else:
        ent = von_neumann_entanglement_amplitudes(amps, psi.dim_a, psi.dim_b)
    lines = []
    if descriptor["type"] == "jc":
        ground = (np.abs(amps[:, 0::2]) ** 2).sum(axis=1)
        lines.append("t,entanglement,w_ground")
        for t, v, w in zip(times, ent, ground):
            lines.append(f"{_fmt(t)},{_fmt(v)},{_fmt(w)}")
    else:
        lines.append("t,entanglement")
        for t, v in zip(times, ent):
            lines.append(f"{_fmt(t)},{_fmt(v)}")
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


_MODEL_ACTIONS = {
    "mean": _cmd_model_mean,
    "timeseries": _cmd_model_timeseries,
    "report": _cmd_model_report,
}


def _add_common_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("action", choices=sorted(_MODEL_ACTIONS))
    parser.add_argument("--kind", choices=sorted(_KIND_NAMES), default="linear")
    parser.add_argument("--samples", type=int, default=DEFAULT_ORACLE_SAMPLES)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--horizon", type=float, default=None)
    parser.add_argument("--step", type=float, default=None)
    parser.add_argument("--t-max", type=float, default=None)
    parser.add_argument("--dt", type=float, default=None)
    parser.add_argument("--output", default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entx",
        description=(
            "Ensemble-averaged and time-averaged entanglement of finite "
            "bipartite quantum systems."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mean = sub.add_parser("mean", help="closed-form mean entanglement of an ensemble file")
    p_mean.add_argument("input")
    p_mean.add_argument("--output", default=None)

    p_oracle = sub.add_parser("oracle", help="Monte Carlo phase-average of an ensemble file")
    p_oracle.add_argument("input")
    p_oracle.add_argument("--kind", choices=sorted(_KIND_NAMES), default="linear")
    p_oracle.add_argument("--samples", type=int, default=DEFAULT_ORACLE_SAMPLES)
    p_oracle.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"defaults to ${SEED_ENV_VAR} or {DEFAULT_SEED}",
    )
    p_oracle.add_argument("--output", default=None)

    p_model = sub.add_parser("model", help="bundled two-spin and Jaynes-Cummings systems")
    model_sub = p_model.add_subparsers(dest="model_type", required=True)

    p_two = model_sub.add_parser("two-spin")
    p_two.add_argument("--energies", required=True, help="4 comma-separated energies")
    p_two.add_argument("--state", required=True, help="initial state JSON file")
    _add_common_model_arguments(p_two)

    p_jc = model_sub.add_parser("jc")
    p_jc.add_argument("--omega", type=float, required=True)
    p_jc.add_argument("--omega0", type=float, required=True)
    p_jc.add_argument("--kappa", type=float, required=True)
    p_jc.add_argument("--n-max", type=int, required=True)
    group = p_jc.add_mutually_exclusive_group(required=True)
    group.add_argument("--init-fock", type=int, default=None)
    group.add_argument("--state", default=None)
    _add_common_model_arguments(p_jc)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "mean":
            return _cmd_mean(args)
        if args.command == "oracle":
            if args.samples < 2:
                raise ValidationError("--samples must be at least 2")
            return _cmd_oracle(args)
        return _MODEL_ACTIONS[args.action](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
