"""Command-line interface.

Exit codes: 0 success, 2 input/usage error, 3 mathematical-domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, bench, io, sampling
from .core import LctError, LctParams
from .transform import dfresnel, dfrft, dlct, dscale, idlct

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class _UsageError(Exception):
    pass


def _fail(msg: str, code: int) -> int:
    print(f"fastlct: error: {msg}", file=sys.stderr)
    return code


def _params(values) -> LctParams:
    return LctParams(*values)


def cmd_transform(args) -> int:
    try:
        x = io.read_signal(args.input)
    except (OSError, io.SignalFormatError) as exc:
        raise _UsageError(f"cannot read {args.input}: {exc}") from exc

    if args.params is not None:
        M = _params(args.params)
        y = idlct(x, M) if args.inverse else dlct(x, M)
    elif args.frft is not None:
        y = dfrft(x, -args.frft if args.inverse else args.frft)
    elif args.fresnel is not None:
        wavelength, z = args.fresnel
        y = dfresnel(x, wavelength, -z if args.inverse else z)
    else:
        sigma = args.scale
        if args.inverse:
            if sigma == 0:
                raise ValueError("sigma must be nonzero")
            y = idlct(x, LctParams(sigma, 0.0, 0.0, 1.0 / sigma))
        else:
            y = dscale(x, sigma)
    io.write_signal(y, args.output)
    return EXIT_OK


def cmd_plan(args) -> int:
    M = _params(args.params)
    if args.vertices is not None:
        t1, f1, t2, f2 = args.vertices
        spec = sampling.ParallelogramSpec((t1, f1), (t2, f2))
        try:
            result = sampling.plan_refined(spec, M, recoverable=args.recoverable)
        except sampling.DegenerateParallelogram as exc:
            raise _UsageError(str(exc)) from exc
    else:
        if args.T is None or args.F is None:
            raise _UsageError("plan needs either --T and --F, or --vertices")
        try:
            box = sampling.TimeFreqBox(args.T, args.F)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
        result = sampling.plan(box, M, recoverable=args.recoverable)
    print(json.dumps(result.to_dict()))
    return EXIT_OK


def cmd_experiment(args) -> int:
    report = analysis.run_experiment(
        args.suite,
        signal=args.signal,
        runs=args.runs,
        seed=args.seed,
        s=args.s,
        N=args.n,
        chirp_limit=args.chirp_limit,
        n_jobs=args.jobs,
    ).sorted()
    report.save(args.output)
    summary = report.summary()
    if summary["runs"] == 0:
        print(f"{args.suite}: 0 runs")
    else:
        print(
            f"{args.suite} signal={report.signal} N={report.N} runs={summary['runs']} "
            f"min={summary['min']:.3e} median={summary['median']:.3e} max={summary['max']:.3e}"
        )
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = ["fast", "direct"] if args.method == "both" else [args.method]
    print("method,n,seconds")
    for method in methods:
        for n in args.sizes:
            print(f"{method},{n},{bench.time_method(method, n, repeat=args.repeat)!r}")
    return EXIT_OK


def cmd_signal(args) -> int:
    x = analysis.make_test_signal(args.name, s=args.s, N=args.n)
    io.write_signal(x, args.output)
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fastlct", description="Fast discrete linear canonical transform")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a signal file (CSV or JSON)")
    p.add_argument("input")
    p.add_argument("output")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--params", nargs=4, type=float, metavar=("A", "B", "C", "D"))
    kind.add_argument("--frft", type=float, metavar="ALPHA", help="fractional angle in radians")
    kind.add_argument("--fresnel", nargs=2, type=float, metavar=("LAMBDA", "Z"))
    kind.add_argument("--scale", type=float, metavar="SIGMA")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("plan", help="sampling period and length for approximating the continuous LCT")
    p.add_argument("--T", type=float, help="signal duration")
    p.add_argument("--F", type=float, help="signal bandwidth")
    p.add_argument("--vertices", nargs=4, type=float, metavar=("T1", "F1", "T2", "F2"),
                   help="two upper vertices of the time-frequency parallelogram")
    p.add_argument("--params", nargs=4, type=float, required=True, metavar=("A", "B", "C", "D"))
    p.add_argument("--recoverable", action="store_true",
                   help="also keep input and output bandwidths inside the grid")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("experiment", help="run a randomized experiment suite")
    p.add_argument("suite", choices=analysis.PROTOCOLS)
    p.add_argument("output", help="report path (.csv or .json)")
    p.add_argument("--signal", default="h1", choices=analysis.SIGNAL_NAMES)
    p.add_argument("--runs", type=_nonnegative_int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chirp-limit", type=float, default=None,
                   help="additivity only: bound on every chirp rate")
    p.add_argument("--s", type=float, default=1.0, help="Gaussian width parameter")
    p.add_argument("--n", type=_positive_int, default=101, help="Gaussian length")
    p.add_argument("--jobs", type=_positive_int, default=None,
                   help="worker threads (default: $LCT_THREADS or 1)")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("bench", help="time fast vs direct DLCT")
    p.add_argument("--sizes", nargs="+", type=_positive_int, default=[256, 512, 1024, 2048, 4096])
    p.add_argument("--method", choices=("fast", "direct", "both"), default="both")
    p.add_argument("--repeat", type=_positive_int, default=5)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("signal", help="write a named test signal")
    p.add_argument("name", choices=analysis.SIGNAL_NAMES)
    p.add_argument("output")
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--n", type=_positive_int, default=101)
    p.set_defaults(func=cmd_signal)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (LctError, ValueError, ZeroDivisionError) as exc:
        return _fail(str(exc), EXIT_DOMAIN)
    except OSError as exc:
        return _fail(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
