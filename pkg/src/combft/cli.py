"""Command-line front end: spectra, DFTs, identity checks, and experiments.

Every command streams plot-ready records to stdout, either as CSV with the
fixed header ``frequency_hz,frequency_bins,series,re,im,masked`` or as a JSON
array of objects with the same field names.  Masked rows carry empty re/im
fields in CSV and null in JSON.  Diagnostics go to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 data-compatibility error (e.g. wrong signal-length parity).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from . import combs, experiments, identities, transforms
from .core import COMB_KINDS, FrequencyGrid, SamplingKind, SamplingSpec, hz_to_bins
from .transforms import DftForm, ParityError

CSV_HEADER = ("frequency_hz", "frequency_bins", "series", "re", "im", "masked")

_KIND_BY_NAME = {kind.value: kind for kind in SamplingKind}
_FORM_BY_NAME = {form.value: form for form in DftForm}


@dataclass(frozen=True)
class OutputRecord:
    frequency_hz: float
    frequency_bins: float
    series_name: str
    re: float | None
    im: float | None
    masked: bool


# -----------------------------
# Serialization
# -----------------------------
def _write_csv(records, out, trailing_comments=()) -> None:
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [
                repr(r.frequency_hz),
                repr(r.frequency_bins),
                r.series_name,
                "" if r.re is None else repr(r.re),
                "" if r.im is None else repr(r.im),
                "true" if r.masked else "false",
            ]
        )
    for line in trailing_comments:
        out.write(f"# {line}\n")


def _write_json(records, out, trailing=None) -> None:
    payload = [
        {
            "frequency_hz": r.frequency_hz,
            "frequency_bins": r.frequency_bins,
            "series": r.series_name,
            "re": r.re,
            "im": r.im,
            "masked": r.masked,
        }
        for r in records
    ]
    if trailing is not None:
        payload.append(trailing)
    json.dump(payload, out, indent=1)
    out.write("\n")


def _emit(records, fmt: str, trailing_metrics=None) -> None:
    if fmt == "csv":
        comments = []
        if trailing_metrics is not None:
            comments = [
                " ".join(f"{k}={v}" for k, v in trailing_metrics.items() if k != "series")
            ]
        _write_csv(records, sys.stdout, comments)
    else:
        _write_json(records, sys.stdout, trailing_metrics)


def _spectrum_records(name: str, spectrum, n: int, f_s: float):
    freqs = spectrum.frequencies()
    for f, v, masked in zip(freqs, spectrum.values, spectrum.mask):
        yield OutputRecord(
            frequency_hz=float(f),
            frequency_bins=float(hz_to_bins(f, f_s, n)),
            series_name=name,
            re=None if masked else float(v.real),
            im=None if masked else float(v.imag),
            masked=bool(masked),
        )


def _line_records(name: str, lines, n: int, f_s: float):
    for f, w in lines.lines:
        yield OutputRecord(
            frequency_hz=float(f),
            frequency_bins=float(hz_to_bins(f, f_s, n)),
            series_name=name,
            re=float(w.real),
            im=float(w.imag),
            masked=False,
        )


# -----------------------------
# Commands
# -----------------------------
def _grid_from_args(args, f_s: float, n: int) -> FrequencyGrid:
    start, stop, step = args.grid_start, args.grid_stop, args.grid_step
    if args.units == "bins":
        scale = f_s / n
        start, stop, step = start * scale, stop * scale, step * scale
    return FrequencyGrid.from_range(start, stop, step)


def cmd_spectrum(args) -> int:
    kind = _KIND_BY_NAME[args.kind]
    extra = {}
    if kind is SamplingKind.SHIFTED:
        if args.r is None:
            raise ValueError("shifted sampling requires --r")
        extra["shift"] = args.r
    if kind in (SamplingKind.HALF, SamplingKind.HALF_REVERSAL):
        if args.case is None:
            raise ValueError(f"{args.kind} sampling requires --case")
        extra["case"] = args.case
    spec = SamplingSpec(kind, args.fs, **extra)

    if kind in COMB_KINDS:
        lines = combs.comb_ft_lines(spec, args.truncation)
        records = list(_line_records(args.kind, lines, args.n, args.fs))
    else:
        grid = _grid_from_args(args, args.fs, args.n)
        spectrum = combs.dense_spectrum(spec, grid)
        records = list(_spectrum_records(args.kind, spectrum, args.n, args.fs))
    _emit(records, args.format)
    return 0


def _read_signal(path: str) -> list[float]:
    values = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a number: {text!r}") from None
    if not values:
        raise ValueError(f"{path}: no samples found")
    return values


def cmd_dft(args) -> int:
    x = _read_signal(args.input)
    form = _FORM_BY_NAME[args.form]
    n = len(x)
    if args.pad > 1:
        if form is not DftForm.SYMMETRIC_CORRECTED:
            raise ValueError("--pad is only supported with the sdft-corrected form")
        spectrum = transforms.sdft_zero_padded(x, args.pad, sample_rate=args.fs)
        records = list(_spectrum_records(args.form, spectrum, n, args.fs))
    else:
        forward = {
            DftForm.ORDINARY: transforms.odft,
            DftForm.SYMMETRIC_ODD: transforms.sdft_odd,
            DftForm.SYMMETRIC_EVEN_LEGACY: transforms.sdft_even_legacy,
            DftForm.SYMMETRIC_CORRECTED: transforms.sdft_corrected,
        }[form]
        result = forward(x)
        records = [
            OutputRecord(
                frequency_hz=float(m * args.fs / n),
                frequency_bins=float(m),
                series_name=args.form,
                re=float(v.real),
                im=float(v.imag),
                masked=False,
            )
            for m, v in zip(result.freq_indices(), result.values)
        ]
    _emit(records, args.format)
    return 0


def cmd_identities(args) -> int:
    if args.samples < 1:
        raise ValueError(f"--samples must be >= 1, got {args.samples}")
    reports = identities.run_identity_suite(args.seed, args.samples)
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["identity", "samples", "max_abs_residual"])
        for report in reports:
            writer.writerow(
                [report.identity_id.value, report.sample_count, repr(report.max_abs_residual)]
            )
    else:
        json.dump(
            [
                {
                    "identity": report.identity_id.value,
                    "samples": report.sample_count,
                    "max_abs_residual": report.max_abs_residual,
                }
                for report in reports
            ],
            sys.stdout,
            indent=1,
        )
        sys.stdout.write("\n")
    worst = max(report.max_abs_residual for report in reports)
    if worst >= identities.RESIDUAL_TOL:
        print(f"identity residual {worst:.3e} exceeds {identities.RESIDUAL_TOL:.0e}", file=sys.stderr)
        return 1
    return 0


def cmd_experiment(args) -> int:
    bin_hz = args.fs / args.n
    grid = FrequencyGrid.from_range(
        -args.n / 2 * bin_hz, args.n / 2 * bin_hz, args.grid_step * bin_hz
    )
    config = experiments.ExperimentConfig(
        f_s=args.fs,
        n=args.n,
        grid=grid,
        truncation_k=args.k,
        quadrature_step=args.h * bin_hz,
    )
    result = experiments.run_experiment(args.which, config)
    records = []
    for name, spectrum in result.series.items():
        records.extend(_spectrum_records(name, spectrum, args.n, args.fs))
    trailing = None
    if result.metrics is not None:
        m = result.metrics
        trailing = {
            "series": "comparison_metrics",
            "max_abs_diff": m.max_abs_diff,
            "relative_l2": m.relative_l2,
            "pearson_correlation": m.pearson_correlation,
            "points_compared": m.points_compared,
        }
    _emit(records, args.format, trailing)
    if result.metrics is not None:
        if result.metrics.pearson_correlation <= experiments.CONVOLUTION_MIN_CORRELATION:
            print(
                f"convolution correlation {result.metrics.pearson_correlation:.4f} "
                f"<= {experiments.CONVOLUTION_MIN_CORRELATION}",
                file=sys.stderr,
            )
            return 1
    return 0


# -----------------------------
# Parser and dispatch
# -----------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combft",
        description="Spectra of sampling combs, centered DFTs, and their cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form spectrum of a sampling function")
    sp.add_argument("kind", choices=sorted(_KIND_BY_NAME))
    sp.add_argument("--case", type=int, help="variant for half / half-reversal kinds")
    sp.add_argument("--r", type=float, help="shift amount for the shifted kind")
    sp.add_argument("--fs", type=float, default=20.0, help="sample rate in Hz")
    sp.add_argument("--n", type=int, default=20, help="window length used for bin units")
    sp.add_argument("--grid-start", type=float, default=-10.0)
    sp.add_argument("--grid-stop", type=float, default=10.0)
    sp.add_argument("--grid-step", type=float, default=0.1)
    sp.add_argument("--units", choices=("hz", "bins"), default="bins",
                    help="units of the grid arguments")
    sp.add_argument("--truncation", type=int, default=combs.DEFAULT_TRUNCATION,
                    help="line-index bound for comb kinds")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_spectrum)

    dft = sub.add_parser("dft", help="transform a signal file")
    dft.add_argument("--form", choices=sorted(_FORM_BY_NAME), required=True)
    dft.add_argument("--input", required=True, help="one sample per line, # comments allowed")
    dft.add_argument("--pad", type=int, default=1, help="zero-padding factor L")
    dft.add_argument("--fs", type=float, default=1.0, help="sample rate in Hz")
    dft.add_argument("--format", choices=("csv", "json"), default="csv")
    dft.set_defaults(func=cmd_dft)

    ident = sub.add_parser("identities", help="evaluate the identity residual suite")
    ident.add_argument("--seed", type=int, default=0)
    ident.add_argument("--samples", type=int, default=1000)
    ident.add_argument("--format", choices=("csv", "json"), default="csv")
    ident.set_defaults(func=cmd_identities)

    exp = sub.add_parser("experiment", help="run a windowed-spectrum experiment")
    exp.add_argument("which", choices=experiments.EXPERIMENT_NAMES)
    exp.add_argument("--fs", type=float, default=20.0)
    exp.add_argument("--n", type=int, default=20)
    exp.add_argument("--grid-step", type=float, default=0.1, help="grid step in bins")
    exp.add_argument("--k", type=int, default=25, help="convolution truncation, in f_s units")
    exp.add_argument("--h", type=float, default=0.01, help="quadrature step in bins")
    exp.add_argument("--format", choices=("csv", "json"), default="csv")
    exp.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
