"""Command-line front end: verify, scan, bell, robinson.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
configuration error. Output files are CSV (with a '#' comment header
recording version, config and seed) or JSON; identical config and seed
give byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__, bell, extended, little_algebra
from .dirac import FourMomentum
from .even_spin import LIMIT_SCAN_HEADER, limit_inequivalence_scan
from .numkernel import DomainError, kernel_backend
from .suite import full_report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """Everything a command needs; round-trips losslessly through JSON."""

    command: str
    mass: float = 1.0
    momentum: tuple = (0.0, 0.0, 2.0)
    tol: float | None = None
    out: str | None = None
    fmt: str = "csv"
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def record(self) -> dict:
        """Config as recorded in output headers: the destination path is
        presentation, not configuration, and would break byte-level
        reproducibility across locations."""
        data = asdict(self)
        data.pop("out")
        return data

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        data["momentum"] = tuple(data["momentum"])
        return cls(**data)


def _parse_vec3(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated numbers")
    return tuple(float(x) for x in parts)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _write_rows(path, header, rows, config: RunConfig):
    if config.fmt == "json":
        payload = {
            "version": __version__,
            "config": config.record(),
            "seed": config.seed,
            "header": list(header),
            "rows": [[(x if isinstance(x, bool) else
                       (int(x) if isinstance(x, (int, np.integer)) else float(x)))
                      for x in row] for row in rows],
        }
        _write_json(path, payload)
        return
    lines = [
        f"# evenspin {__version__}",
        f"# config: {json.dumps(config.record(), sort_keys=True)}",
        f"# seed: {config.seed}",
        ",".join(header),
    ]
    lines.extend(",".join(_fmt(x) for x in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_json(path, payload):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _momentum(config: RunConfig) -> FourMomentum:
    return FourMomentum(config.mass, np.array(config.momentum))


def cmd_verify(config: RunConfig) -> int:
    fm = _momentum(config)
    samples = int(config.extra.get("samples", 20))
    report = full_report(fm, seed=config.seed, samples=samples,
                         tol_override=config.tol)
    payload = {
        "version": __version__,
        "backend": kernel_backend(),
        "config": config.record(),
        "checks": report.to_rows(),
        "pass": report.ok,
        "max_residual": report.max_residual,
    }
    _write_json(config.out, payload)
    summary = "PASS" if report.ok else "FAIL"
    print(f"{summary}: {len(report)} checks, {len(report.failures)} failed, "
          f"max residual {report.max_residual:.3e}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_scan(config: RunConfig) -> int:
    mode = config.extra["mode"]
    if mode in ("mass", "mass_to_zero"):
        grid = np.geomspace(config.extra["mmin"], config.extra["mmax"],
                            int(config.extra["steps"]))
        rows = little_algebra.contraction_scan(
            "mass_to_zero", grid[::-1], fixed=config.extra.get("pmag", 1.0))
        _write_rows(config.out, little_algebra.CONTRACTION_SCAN_HEADER, rows, config)
    elif mode in ("momentum", "momentum_to_infinity"):
        grid = np.geomspace(config.extra["pmin"], config.extra["pmax"],
                            int(config.extra["steps"]))
        rows = little_algebra.contraction_scan(
            "momentum_to_infinity", grid, fixed=config.mass)
        _write_rows(config.out, little_algebra.CONTRACTION_SCAN_HEADER, rows, config)
    elif mode == "inequivalence":
        masses = [float(x) for x in config.extra["masses"]]
        momenta = [float(x) for x in config.extra["momenta"]]
        rows = limit_inequivalence_scan(masses, momenta)
        _write_rows(config.out, LIMIT_SCAN_HEADER, rows, config)
    else:
        raise DomainError(f"unknown scan mode: {mode}")
    return EXIT_OK


def cmd_bell(config: RunConfig) -> int:
    fm = _momentum(config)
    plane = config.extra.get("plane", "perp")
    step = float(config.extra.get("step", 5.0))
    system = bell.build_two_particle_system(fm)
    if config.extra.get("chsh"):
        rows = bell.chsh_scan(fm, plane, step_deg=step, system=system)
        _write_rows(config.out, bell.CHSH_HEADER, rows, config)
    else:
        rows = bell.correlation_scan(fm, plane, step_deg=step, system=system)
        _write_rows(config.out, bell.CORRELATION_HEADER, rows, config)
    return EXIT_OK


def cmd_robinson(config: RunConfig) -> int:
    if config.mass != 0.0:
        raise DomainError("the circle geometry applies to massless momenta; use --m 0")
    fm = FourMomentum(0.0, np.array(config.momentum))
    rows = extended.robinson_circle_samples(
        fm,
        helicity=float(config.extra.get("helicity", 0.5)),
        n_samples=int(config.extra.get("samples", 64)),
        n_frames=int(config.extra.get("frames", 1)),
    )
    scale = float(config.extra.get("unit_scale", 1.0))
    if scale != 1.0:
        rows = [(f, t * scale, x * scale, y * scale, z * scale, ph)
                for f, t, x, y, z, ph in rows]
    _write_rows(config.out, extended.ROBINSON_HEADER, rows, config)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenspin",
        description="Momentum-parametrized spin algebra of the free Dirac "
                    "equation: invariant verification and data scans.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--m", type=float, default=1.0, help="mass (natural units)")
        p.add_argument("--p", type=_parse_vec3, default=(0.0, 0.0, 2.0),
                       metavar="PX,PY,PZ", help="spatial momentum")
        p.add_argument("--tol", type=float, default=None,
                       help="override every check tolerance")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       default="csv", help="output format where applicable")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized check batches")

    pv = sub.add_parser("verify", help="run the full invariant suite")
    common(pv)
    pv.add_argument("--samples", type=int, default=20,
                    help="random momenta in the seeded batch (0 disables)")

    ps = sub.add_parser("scan", help="contraction and limit scans")
    common(ps)
    ps.add_argument("--mode", required=True,
                    choices=("mass", "momentum", "inequivalence"))
    ps.add_argument("--mmin", type=float, default=1e-3)
    ps.add_argument("--mmax", type=float, default=1.0)
    ps.add_argument("--pmin", type=float, default=0.1)
    ps.add_argument("--pmax", type=float, default=1000.0)
    ps.add_argument("--steps", type=int, default=40)
    ps.add_argument("--pmag", type=float, default=1.0,
                    help="fixed |p| for the mass scan")
    ps.add_argument("--masses", default="1,0.1",
                    help="comma list for the inequivalence scan")
    ps.add_argument("--momenta", default="1,10,100",
                    help="comma list for the inequivalence scan")

    pb = sub.add_parser("bell", help="correlation and CHSH scans")
    common(pb)
    pb.add_argument("--chsh", action="store_true", help="emit CHSH rows")
    pb.add_argument("--plane", choices=("perp", "mixed"), default="perp")
    pb.add_argument("--step", type=float, default=5.0, help="grid step in degrees")

    pr = sub.add_parser("robinson", help="sample the massless circle geometry")
    pr.add_argument("--m", type=float, default=0.0, help="mass; must be 0")
    pr.add_argument("--p", type=_parse_vec3, default=(0.0, 0.0, 1.0),
                    metavar="PX,PY,PZ", help="spatial momentum")
    pr.add_argument("--tol", type=float, default=None)
    pr.add_argument("--out", default=None, help="output path (default stdout)")
    pr.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--s", dest="helicity", type=float, default=0.5,
                    help="field helicity")
    pr.add_argument("--samples", type=int, default=64)
    pr.add_argument("--frames", type=int, default=1)
    pr.add_argument("--unit-scale", dest="unit_scale", type=float, default=1.0,
                    help="multiply emitted lengths by this scale "
                         "(presentation only; natural units otherwise)")
    return parser


def _config_from_args(args) -> RunConfig:
    extra_keys = {
        "verify": ("samples",),
        "scan": ("mode", "mmin", "mmax", "pmin", "pmax", "steps", "pmag",
                 "masses", "momenta"),
        "bell": ("chsh", "plane", "step"),
        "robinson": ("helicity", "samples", "frames", "unit_scale"),
    }[args.command]
    extra = {k: getattr(args, k) for k in extra_keys}
    if args.command == "scan":
        extra["masses"] = [float(x) for x in str(extra["masses"]).split(",")]
        extra["momenta"] = [float(x) for x in str(extra["momenta"]).split(",")]
    return RunConfig(
        command=args.command,
        mass=args.m,
        momentum=tuple(args.p),
        tol=args.tol,
        out=args.out,
        fmt=args.fmt,
        seed=args.seed,
        extra=extra,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    handlers = {
        "verify": cmd_verify,
        "scan": cmd_scan,
        "bell": cmd_bell,
        "robinson": cmd_robinson,
    }
    try:
        return handlers[config.command](config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
