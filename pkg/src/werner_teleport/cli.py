"""Command-line front end: oracle-vs-formula verification and figure data.

Every subcommand writes one table, either CSV (``#`` metadata lines, then a
header row) or JSON (``{"meta": ..., "rows": [...]}``). Numbers carry 12
significant digits. Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""
import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__, formulas
from .linalg import projector
from .measures import correlation_information, entanglement, fidelity, purity
from .states import bloch_decompose, random_pure, schmidt_angle, schmidt_pure
from .teleport import teleport_closed_form, teleport_one, teleport_two

DEFAULT_SEED = 42
DEFAULT_TOL = 1e-9
FIG3_TARGETS = (0.16, 0.18, 0.20, 0.21)
FIG3_STRATEGY = (
    "sweep (theta, ew1) on a uniform grid; rho72 = teleport particle 1 of the Schmidt "
    "state through channel ew1; keep points with |e72 - target| <= target_tol; "
    "teleport particle 2 of rho72 through channel e46"
)

FIG2_COLUMNS = ["e12", "ew", "e78_formula", "e78_oracle", "deviation"]
FIDELITY_COLUMNS = ["e12", "ew", "fidelity_formula", "fidelity_oracle", "deviation"]
INFO_COLUMNS = ["e12", "ew", "ic12", "ic78_formula", "ic78_oracle", "deviation"]
FIG3_COLUMNS = ["target", "e46", "theta", "ew1", "e72", "p72", "e78", "note"]
VERIFY_COLUMNS = ["check", "max_deviation", "tolerance", "samples", "status", "note"]


def format_number(x):
    """12 significant digits; ``%g`` switches to scientific below 1e-4."""
    return f"{x:.12g}"


def _cell_csv(v):
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return format_number(float(v))
    return str(v)


def _cell_json(v):
    if isinstance(v, list):
        return [_cell_json(x) for x in v]
    if isinstance(v, (float, np.floating)):
        x = float(v)
        return float(format_number(x)) if math.isfinite(x) else None
    if isinstance(v, np.integer):
        return int(v)
    return v


def render(meta, columns, rows, fmt):
    if fmt == "json":
        doc = {
            "meta": {k: _cell_json(v) for k, v in meta.items()},
            "rows": [{c: _cell_json(row.get(c)) for c in columns} for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    for k, v in meta.items():
        buf.write(f"# {k}: {_cell_csv(v) if not isinstance(v, list) else ','.join(map(_cell_csv, v))}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell_csv(row.get(c)) for c in columns])
    return buf.getvalue()


def grid(steps):
    return [i / (steps - 1) for i in range(steps)]


def step_grid(step):
    n = math.ceil(1.0 / step - 1e-9)
    return [min(1.0, i * step) for i in range(n + 1)]


def schmidt_state(e12):
    return schmidt_pure(schmidt_angle(e12))


def _meta(command, args, **extra):
    meta = {"tool": "werner-teleport", "version": __version__, "command": command, "seed": args.seed}
    meta.update(extra)
    return meta


# --- figure / sweep commands -------------------------------------------------


def cmd_fig2(args):
    rows = []
    for e12 in grid(args.e12_steps):
        psi = schmidt_state(e12)
        for ew in grid(args.ew_steps):
            rho78, _ = teleport_two(psi, ew, ew)
            f = formulas.replica_entanglement_formula(e12, ew)
            o = entanglement(rho78)
            rows.append(dict(e12=e12, ew=ew, e78_formula=f, e78_oracle=o, deviation=abs(f - o)))
    meta = _meta("fig2", args, e12_steps=args.e12_steps, ew_steps=args.ew_steps, source="both")
    return meta, FIG2_COLUMNS, rows


def cmd_fidelity(args):
    rows = []
    for e12 in grid(args.e12_steps):
        psi = schmidt_state(e12)
        for ew in grid(args.ew_steps):
            rho78, _ = teleport_two(psi, ew, ew)
            f = formulas.fidelity_formula(e12, ew)
            o = fidelity(psi, rho78)
            rows.append(dict(e12=e12, ew=ew, fidelity_formula=f, fidelity_oracle=o, deviation=abs(f - o)))
    meta = _meta("fidelity", args, e12_steps=args.e12_steps, ew_steps=args.ew_steps, source="both")
    return meta, FIDELITY_COLUMNS, rows


def cmd_info(args):
    rows = []
    for e12 in grid(args.e12_steps):
        psi = schmidt_state(e12)
        ic12 = correlation_information(projector(psi))
        for ew in grid(args.ew_steps):
            rho78, _ = teleport_two(psi, ew, ew)
            f = formulas.correlation_transfer(ic12, ew)
            o = correlation_information(rho78)
            rows.append(dict(e12=e12, ew=ew, ic12=ic12, ic78_formula=f, ic78_oracle=o, deviation=abs(f - o)))
    meta = _meta("info", args, e12_steps=args.e12_steps, ew_steps=args.ew_steps, source="both")
    return meta, INFO_COLUMNS, rows


def fig3_rows(e46, targets, target_tol, density):
    candidates = []
    for theta in np.linspace(0.0, np.pi / 4, density):
        rho12 = projector(schmidt_pure(float(theta)))
        for ew1 in np.linspace(0.0, 1.0, density):
            rho72, _ = teleport_one(rho12, 1, float(ew1))
            candidates.append((float(theta), float(ew1), rho72, entanglement(rho72)))

    rows = []
    for target in targets:
        picked = []
        for theta, ew1, rho72, e72 in candidates:
            if abs(e72 - target) <= target_tol:
                rho78, _ = teleport_one(rho72, 2, e46)
                picked.append(
                    dict(target=target, e46=e46, theta=theta, ew1=ew1, e72=e72,
                         p72=purity(rho72), e78=entanglement(rho78), note="")
                )
        if not picked:
            rows.append(dict(target=target, e46=e46, note="no sweep point within target_tol"))
        picked.sort(key=lambda r: (r["p72"], r["theta"], r["ew1"]))
        rows.extend(picked)
    return rows


def cmd_fig3(args):
    targets = list(args.targets)
    rows = fig3_rows(args.e46, targets, args.target_tol, args.sweep_density)
    meta = _meta(
        "fig3", args, e46=args.e46, targets=targets, target_tol=args.target_tol,
        sweep_density=args.sweep_density, source="oracle", strategy=FIG3_STRATEGY,
    )
    return meta, FIG3_COLUMNS, rows


# --- verification ------------------------------------------------------------


class _Check:
    def __init__(self, name, note=""):
        self.name = name
        self.worst = 0.0
        self.samples = 0
        self.note = note

    def add(self, deviation):
        self.worst = max(self.worst, abs(deviation))
        self.samples += 1


def run_verification(grid_step, seeds, seed):
    """Compare the closed forms with the brute-force simulator.

    Returns an ordered dict of checks keyed by name.
    """
    names = [
        ("bloch_contraction", ""),
        ("fidelity_law", ""),
        ("replica_entanglement_law", ""),
        ("correlation_kappa4", ""),
        ("correlation_first_step_kappa2", ""),
        ("correlation_second_step_kappa2", ""),
        ("intermediate_correlation_published", "linear term (1 - ew)"),
        ("intermediate_quadratic_published", "linear term (1 - ew)"),
        ("intermediate_correlation_exact", "linear term (1 - kappa)"),
        ("intermediate_quadratic_exact", "linear term (1 - kappa)"),
        ("outcome_uniformity", ""),
    ]
    checks = {name: _Check(name, note) for name, note in names}
    ews = step_grid(grid_step)

    inputs = [(e12, schmidt_state(e12), True) for e12 in ews]
    for i in range(seeds):
        psi = random_pure(seed + i)
        inputs.append((entanglement(projector(psi)), psi, False))

    zero_e72 = 0
    for e12, psi, is_schmidt in inputs:
        rho12 = projector(psi)
        rep12 = bloch_decompose(rho12)
        ic12 = correlation_information(rho12)
        for ew in ews:
            k = formulas.kappa(ew)
            rho78, outcomes = teleport_two(rho12, ew, ew)
            for o in outcomes:
                checks["outcome_uniformity"].add(o.probability - 1.0 / 16.0)
            checks["bloch_contraction"].add(
                bloch_decompose(rho78).max_abs_diff(teleport_closed_form(rep12, k, k))
            )
            checks["fidelity_law"].add(fidelity(psi, rho78) - formulas.fidelity_formula(e12, ew))
            checks["replica_entanglement_law"].add(
                entanglement(rho78) - formulas.replica_entanglement_formula(e12, ew)
            )
            checks["correlation_kappa4"].add(
                correlation_information(rho78) - formulas.correlation_transfer(ic12, ew)
            )

            rho72, _ = teleport_one(rho12, 1, ew)
            ic72 = correlation_information(rho72)
            rho78_chain, _ = teleport_one(rho72, 2, ew)
            ic72_f, _ = formulas.correlation_two_step(ic12, ew)
            checks["correlation_first_step_kappa2"].add(ic72 - ic72_f)
            checks["correlation_second_step_kappa2"].add(correlation_information(rho78_chain) - k**2 * ic72)

            if is_schmidt and ew > 0.0:
                e72 = entanglement(rho72)
                zero_e72 += e72 == 0.0
                for form in ("published", "exact"):
                    checks[f"intermediate_correlation_{form}"].add(
                        formulas.intermediate_correlation(e72, ew, form) - ic72
                    )
                    checks[f"intermediate_quadratic_{form}"].add(
                        formulas.intermediate_quadratic(e72, e12, ew, form)
                    )
    if zero_e72:
        for form in ("published", "exact"):
            c = checks[f"intermediate_correlation_{form}"]
            c.note = (c.note + f"; {zero_e72} samples with e72 = 0").lstrip("; ")
    return checks


def cmd_verify(args):
    checks = run_verification(args.grid_step, args.seeds, args.seed)
    rows = []
    failed = False
    for c in checks.values():
        ok = c.worst <= args.tol
        failed |= not ok
        rows.append(dict(check=c.name, max_deviation=c.worst, tolerance=args.tol,
                         samples=c.samples, status="pass" if ok else "fail", note=c.note))
    meta = _meta("verify", args, grid_step=args.grid_step, seeds=args.seeds, tol=args.tol)
    return meta, VERIFY_COLUMNS, rows, 1 if failed else 0


# --- argument parsing --------------------------------------------------------


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: standard output)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)

    parser = argparse.ArgumentParser(
        prog="werner-teleport",
        description="Teleportation of entangled pairs through Werner channels.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="oracle vs closed forms")
    p.add_argument("--grid-step", type=float, default=0.1)
    p.add_argument("--seeds", type=int, default=50)

    for name, help_text in (
        ("fig2", "replica entanglement over (e12, ew)"),
        ("fidelity", "replica fidelity over (e12, ew)"),
        ("info", "correlation information transfer over (e12, ew)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--e12-steps", type=int, default=21)
        p.add_argument("--ew-steps", type=int, default=21)

    p = sub.add_parser("fig3", parents=[common], help="replica entanglement vs intermediate purity")
    p.add_argument("--e46", type=float, default=0.6)
    p.add_argument("--targets", type=_float_list, default=list(FIG3_TARGETS))
    p.add_argument("--target-tol", type=float, default=0.002)
    p.add_argument("--sweep-density", type=int, default=200)
    return parser


def _validate(parser, args):
    if args.command == "verify":
        if not 0.0 < args.grid_step <= 0.5:
            parser.error("--grid-step must lie in (0, 0.5]")
        if args.seeds < 1:
            parser.error("--seeds must be at least 1")
    if args.command in ("fig2", "fidelity", "info"):
        if args.e12_steps < 2 or args.ew_steps < 2:
            parser.error("--e12-steps and --ew-steps must be at least 2")
    if args.command == "fig3":
        if not 0.0 <= args.e46 <= 1.0:
            parser.error("--e46 must lie in [0, 1]")
        if not args.targets:
            parser.error("--targets must not be empty")
        if args.target_tol <= 0.0:
            parser.error("--target-tol must be positive")
        if args.sweep_density < 2:
            parser.error("--sweep-density must be at least 2")
    if not args.tol > 0.0:
        parser.error("--tol must be positive")


COMMANDS = {"fig2": cmd_fig2, "fig3": cmd_fig3, "fidelity": cmd_fidelity, "info": cmd_info}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return exc.code

    if args.command == "verify":
        meta, columns, rows, code = cmd_verify(args)
    else:
        meta, columns, rows = COMMANDS[args.command](args)
        code = 0

    text = render(meta, columns, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        for row in rows:
            if row["status"] == "fail":
                print(f"FAIL {row['check']}: max deviation {format_number(row['max_deviation'])}",
                      file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
