"""Command line front end.

Subcommands: `region` (rate region polygons plus the outer bound),
`sumrate` (largest sum rate along an alpha or key-rate sweep), `gdof`
(normalized high-power regions), and `verify` (invariant battery).

Outputs are CSV tables plus a JSON metadata sidecar; `--svg` draws a
chart by re-reading the emitted CSV so the picture can never disagree
with the data. Reruns produce byte-identical files. Exit codes: 0 ok,
1 failed verification, 2 bad configuration, 3 unsupported parameter
domain.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, replace
from pathlib import Path

import numpy as np

from .bounds import composite_outer_region, evaluate_outer_bounds
from .channel import ChannelParams, DomainError, classify_regime, snr_inr
from .gdof import GDOF_SCHEMES, GdofParams, gdof_region, no_secrecy_gdof
from .scenario import (ConfigError, build_channel, build_grid, load_config,
                       parse_value)
from .schemes import GridSpec, max_sum_rate, sweep_region
from .svg import polyline_chart
from .verify import render_report, run_battery

# public scheme names -> (core scheme, sweep-grid restrictions)
SCHEME_VARIANTS = {
    "key_splitting": ("key_splitting", {}),
    "rate_splitting": ("rate_splitting", {}),
    "rate_splitting_no_an": ("rate_splitting", {"no_an": True}),
    "key_as_wiretap": ("key_as_wiretap", {}),
    "one_time_pad": ("one_time_pad", {}),
}
DEFAULT_VARIANTS = tuple(SCHEME_VARIANTS)

# these two are only claimed to be achievable while the cross link does
# not dominate (inr1 <= snr2); elsewhere they are skipped with a note
HIGH_REGIME_UNSUPPORTED = ("rate_splitting_no_an", "key_as_wiretap")

GRID_PRESETS = {
    "coarse": GridSpec(n_lambda1=9, n_lambda2=9, n_beta1=9, n_beta2=9, n_eta=7),
    "default": GridSpec(),
    "fine": GridSpec(n_lambda1=49, n_lambda2=49, n_beta1=49, n_beta2=49,
                     n_eta=31),
}


def _f(v) -> str:
    # repr of a Python float round-trips exactly
    return repr(float(v))


def _merge_values(args, keys) -> dict:
    """Scenario dict from the config file with CLI flags layered on top."""
    values = load_config(args.config) if getattr(args, "config", None) else {}
    for key in keys:
        v = getattr(args, key.replace(".", "_"), None)
        if v is not None:
            values[key] = v
    for flag in ("svg", "nonsecrecy_bound", "full_power"):
        if getattr(args, flag, False):
            values[flag] = True
    return values


def _validate_schemes(names, allowed) -> tuple:
    names = tuple(names)
    for n in names:
        if n not in allowed:
            raise ConfigError(f"unknown scheme {n!r}; expected one of: "
                              + ", ".join(allowed))
    if len(set(names)) != len(names):
        raise ConfigError("duplicate scheme names")
    return names


def _apply_grid_option(grid: GridSpec, spec: str) -> GridSpec:
    if spec in GRID_PRESETS:
        return GRID_PRESETS[spec]
    kwargs = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ConfigError(f"bad --grid entry {part!r}; expected a preset "
                              "(coarse|default|fine) or name=value pairs")
        name, _, raw = part.partition("=")
        name = name.strip()
        if name not in ("n_lambda1", "n_lambda2", "n_beta1", "n_beta2",
                        "n_eta", "include_gdof_split", "no_an", "full_power"):
            raise ConfigError(f"unknown grid field {name!r}")
        # value syntax and range rules are shared with scenario files
        kwargs[name] = parse_value(f"grid.{name}", raw.strip())
    return replace(grid, **kwargs)


def _resolve_grid(args, values) -> GridSpec:
    grid = build_grid(values)
    if getattr(args, "grid", None):
        grid = _apply_grid_option(grid, args.grid)
    return grid


def _write_csv(path: Path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _read_csv(path: Path):
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def _write_meta(path: Path, meta: dict):
    path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def _svg_polygons_from_csv(csv_paths, svg_path: Path, xlabel, ylabel,
                           title):
    """Chart of closed polygons, one per distinct name in column 0."""
    order, series = [], {}
    for csv_path in csv_paths:
        _, rows = _read_csv(csv_path)
        for name, xs, ys in rows:
            if name not in series:
                series[name] = []
                order.append(name)
            series[name].append((float(xs), float(ys)))
    plot = []
    for name in order:
        pts = series[name]
        if len(pts) > 2:
            pts = pts + [pts[0]]
        plot.append((name, pts))
    svg_path.write_text(polyline_chart(plot, xlabel, ylabel, title),
                        encoding="utf-8")


def _svg_curves_from_csv(csv_path: Path, svg_path: Path, ylabel, title):
    """Chart of one curve per value column, x from column 0, blanks skipped."""
    header, rows = _read_csv(csv_path)
    plot = []
    for col in range(1, len(header)):
        pts = [(float(r[0]), float(r[col])) for r in rows if r[col] != ""]
        if pts:
            plot.append((header[col], pts))
    svg_path.write_text(polyline_chart(plot, header[0], ylabel, title),
                        encoding="utf-8")


def _out_dir(values) -> Path:
    out = Path(values.get("out_dir", "."))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _channel_meta(ch: ChannelParams) -> dict:
    s1, s2, i1 = snr_inr(ch)
    return {"h11": ch.h11, "h22": ch.h22, "h21": ch.h21,
            "p1": ch.p1, "p2": ch.p2, "rk": ch.rk,
            "snr1": s1, "snr2": s2, "inr1": i1}


def cmd_region(args) -> int:
    values = _merge_values(args, ("h11", "h22", "h21", "p1", "p2", "p1_db",
                                  "p2_db", "rk", "out_dir"))
    if args.schemes:
        values["schemes"] = parse_value("schemes", args.schemes)
    ch = build_channel(values)
    grid = _resolve_grid(args, values)
    if values.get("full_power"):
        grid = replace(grid, full_power=True)
    schemes = _validate_schemes(values.get("schemes", DEFAULT_VARIANTS),
                                SCHEME_VARIANTS)
    regime = classify_regime(ch)
    suppressed = tuple(s for s in schemes
                       if regime == "high" and s in HIGH_REGIME_UNSUPPORTED)
    kept = tuple(s for s in schemes if s not in suppressed)
    for name in suppressed:
        print(f"note: skipping {name}: only claimed while the cross link "
              "does not dominate (inr1 <= snr2)", file=sys.stderr)

    out = _out_dir(values)
    csv_paths = []
    for name in kept:
        core, flags = SCHEME_VARIANTS[name]
        region = sweep_region(ch, core, replace(grid, **flags))
        path = out / f"region_{name}.csv"
        _write_csv(path, ("scheme", "R1", "R2"),
                   [(name, _f(x), _f(y)) for x, y in region.vertices])
        csv_paths.append(path)
    include_ns = bool(values.get("nonsecrecy_bound", False))
    outer = composite_outer_region(ch, include_nonsecrecy=include_ns)
    path = out / "region_outer.csv"
    _write_csv(path, ("scheme", "R1", "R2"),
               [("outer", _f(x), _f(y)) for x, y in outer.vertices])
    csv_paths.append(path)
    written = list(csv_paths)
    files = [p.name for p in csv_paths]
    if values.get("svg"):
        svg_path = out / "region.svg"
        _svg_polygons_from_csv(csv_paths, svg_path, "R1 [bits/use]",
                               "R2 [bits/use]", "secrecy rate regions")
        written.append(svg_path)
        files.append("region.svg")
    ob = evaluate_outer_bounds(ch, include_nonsecrecy=include_ns)
    meta_path = out / "region_meta.json"
    _write_meta(meta_path, {
        "command": "region",
        "channel": _channel_meta(ch),
        "regime": regime,
        "grid": asdict(grid),
        "schemes": list(kept),
        "suppressed": list(suppressed),
        "nonsecrecy_bound": include_ns,
        "outer_bounds": asdict(ob),
        "files": files + ["region_meta.json"],
    })
    written.append(meta_path)
    for p in written:
        print(f"wrote {p}")
    return 0


def _family_channel(p: float, alpha: float, rk: float) -> ChannelParams:
    """Symmetric channel with snr = p and inr = p**alpha."""
    if p <= 0.0:
        raise ConfigError("the symmetric family needs p > 0")
    if alpha < 0.0:
        raise ConfigError("alpha must be >= 0")
    return ChannelParams(h11=1.0, h22=1.0, h21=p ** ((alpha - 1.0) / 2.0),
                         p1=p, p2=p, rk=rk)


def _axis_values(values, prefix, lo_default, hi_default, n_default):
    if f"{prefix}_list" in values:
        return [float(v) for v in values[f"{prefix}_list"]]
    steps = values.get(f"{prefix}_steps", n_default)
    if steps < 1:
        raise ConfigError(f"{prefix}_steps must be >= 1")
    lo = values.get(f"{prefix}_min", lo_default)
    hi = values.get(f"{prefix}_max", hi_default)
    return [float(v) for v in np.linspace(lo, hi, steps)]


def _outer_sum_cell(ch: ChannelParams, include_nonsecrecy: bool):
    ob = evaluate_outer_bounds(ch, include_nonsecrecy=include_nonsecrecy)
    vals = [v for v in (ob.sum_keyed, ob.sum_nonsecrecy) if v is not None]
    return min(vals) if vals else None


def cmd_sumrate(args) -> int:
    values = _merge_values(args, ("h11", "h22", "h21", "p1", "p2", "p1_db",
                                  "p2_db", "rk", "p", "alpha", "alpha_min",
                                  "alpha_max", "alpha_steps", "rk_min",
                                  "rk_max", "rk_steps", "out_dir"))
    for key in ("alpha_list", "rk_list", "schemes"):
        raw = getattr(args, key, None)
        if raw is not None:
            values[key] = parse_value(key, raw)
    schemes = _validate_schemes(values.get("schemes", DEFAULT_VARIANTS),
                                SCHEME_VARIANTS)
    grid = _resolve_grid(args, values)
    full_power = bool(values.get("full_power", True))
    if getattr(args, "sweep_powers", False):
        full_power = False
    include_ns = bool(values.get("nonsecrecy_bound", False))

    alpha_axis = {"alpha_min", "alpha_max", "alpha_steps", "alpha_list"} & set(values)
    rk_axis = {"rk_min", "rk_max", "rk_steps", "rk_list"} & set(values)
    if bool(alpha_axis) == bool(rk_axis):
        raise ConfigError("choose exactly one sweep axis: alpha_* keys "
                          "or rk_* keys")

    if alpha_axis:
        axis_name = "alpha"
        axis_vals = _axis_values(values, "alpha", 0.0, 1.2, 25)
        if "p" not in values:
            raise ConfigError("the alpha sweep needs the symmetric power p")
        rk = values.get("rk", 0.0)
        chans = [_family_channel(values["p"], a, rk) for a in axis_vals]
    else:
        axis_name = "rk"
        axis_vals = _axis_values(values, "rk", 0.0, 2.0, 21)
        if any(r < 0 for r in axis_vals):
            raise ConfigError("rk must be >= 0")
        explicit = {"h11", "h22", "h21", "p1", "p2", "p1_db", "p2_db"} & set(values)
        if explicit:
            ch0 = build_channel(values)
        elif "p" in values:
            if "alpha" not in values:
                raise ConfigError("the symmetric family needs alpha "
                                  "for an rk sweep")
            ch0 = _family_channel(values["p"], values["alpha"], 0.0)
        else:
            raise ConfigError("give a channel (h11, h22, h21, p1, p2) or "
                              "the symmetric family (p and alpha)")
        chans = [replace(ch0, rk=r) for r in axis_vals]

    suppressed = set()
    table = []
    for axis_v, ch in zip(axis_vals, chans):
        regime = classify_regime(ch)
        row = [_f(axis_v)]
        for name in schemes:
            if regime == "high" and name in HIGH_REGIME_UNSUPPORTED:
                suppressed.add(name)
                row.append("")
                continue
            core, flags = SCHEME_VARIANTS[name]
            g = replace(grid, full_power=full_power, **flags)
            row.append(_f(max_sum_rate(ch, core, g)))
        cell = _outer_sum_cell(ch, include_ns)
        row.append("" if cell is None else _f(cell))
        table.append(row)
    for name in sorted(suppressed):
        print(f"note: {name} left blank where the cross link dominates "
              "(inr1 > snr2)", file=sys.stderr)

    out = _out_dir(values)
    csv_path = out / "sumrate.csv"
    _write_csv(csv_path, [axis_name, *schemes, "outer"], table)
    written = [csv_path]
    files = ["sumrate.csv"]
    if values.get("svg"):
        svg_path = out / "sumrate.svg"
        _svg_curves_from_csv(csv_path, svg_path, "sum rate [bits/use]",
                             f"largest sum rate vs {axis_name}")
        written.append(svg_path)
        files.append("sumrate.svg")
    meta_path = out / "sumrate_meta.json"
    meta = {
        "command": "sumrate",
        "axis": axis_name,
        "axis_values": [float(v) for v in axis_vals],
        "schemes": list(schemes),
        "suppressed_in_high_regime": sorted(suppressed),
        "full_power": full_power,
        "nonsecrecy_bound": include_ns,
        "grid": asdict(grid),
        "files": files + ["sumrate_meta.json"],
    }
    if axis_name == "alpha":
        meta["family"] = {"p": values["p"], "rk": values.get("rk", 0.0)}
    else:
        meta["channel"] = _channel_meta(chans[0])
    _write_meta(meta_path, meta)
    written.append(meta_path)
    for p in written:
        print(f"wrote {p}")
    return 0


def cmd_gdof(args) -> int:
    values = _merge_values(args, ("alpha", "gamma", "eta", "out_dir"))
    if args.schemes:
        values["schemes"] = parse_value("schemes", args.schemes)
    missing = [k for k in ("alpha", "gamma") if k not in values]
    if missing:
        raise ConfigError("missing: " + ", ".join(missing))
    gp = GdofParams(alpha=values["alpha"], gamma=values["gamma"],
                    eta=values.get("eta", 1.0))
    schemes = _validate_schemes(values.get("schemes", GDOF_SCHEMES),
                                GDOF_SCHEMES)
    rows = []
    for name in schemes:
        region = gdof_region(gp, name)
        rows += [(name, _f(x), _f(y)) for x, y in region.vertices]
    # no-secrecy reference shape, always included for comparison
    rows += [("no_secrecy", _f(x), _f(y))
             for x, y in no_secrecy_gdof(gp.alpha).vertices]

    out = _out_dir(values)
    csv_path = out / "gdof.csv"
    _write_csv(csv_path, ("scheme", "d1", "d2"), rows)
    written = [csv_path]
    files = ["gdof.csv"]
    if values.get("svg"):
        svg_path = out / "gdof.svg"
        _svg_polygons_from_csv([csv_path], svg_path, "d1", "d2",
                               "normalized high-power regions")
        written.append(svg_path)
        files.append("gdof.svg")
    meta_path = out / "gdof_meta.json"
    _write_meta(meta_path, {
        "command": "gdof",
        "alpha": gp.alpha,
        "gamma": gp.gamma,
        "eta": gp.eta,
        "schemes": list(schemes),
        "files": files + ["gdof_meta.json"],
    })
    written.append(meta_path)
    for p in written:
        print(f"wrote {p}")
    return 0


def cmd_verify(args) -> int:
    report = run_battery(seed=args.seed, corrupt=args.corrupt)
    text = render_report(report)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    if not report["all_pass"]:
        failed = sorted({r["invariant"] for r in report["results"]
                         if not r["pass"]})
        print("failed invariants: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zickey",
        description="Secrecy rate regions, outer bounds, and normalized "
                    "high-power regions for the two-user Gaussian one-sided "
                    "interference channel with a shared secret key.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="key=value scenario file")
        sp.add_argument("--out-dir", dest="out_dir",
                        help="output directory (default: current)")
        sp.add_argument("--svg", action="store_true",
                        help="draw an SVG chart from the emitted CSV")

    region = sub.add_parser(
        "region", help="achievable rate region polygons plus the outer bound")
    common(region)
    for name in ("h11", "h22", "h21", "p1", "p2", "rk"):
        region.add_argument(f"--{name}", type=float)
    region.add_argument("--p1-db", dest="p1_db", type=float,
                        help="p1 in dB (alternative to --p1)")
    region.add_argument("--p2-db", dest="p2_db", type=float)
    region.add_argument("--schemes",
                        help="comma list of: " + ", ".join(SCHEME_VARIANTS))
    region.add_argument("--grid",
                        help="preset (coarse|default|fine) or name=value pairs")
    region.add_argument("--full-power", dest="full_power", action="store_true",
                        help="pin beta1 = beta2 = 1 in the sweep")
    region.add_argument("--nonsecrecy-bound", dest="nonsecrecy_bound",
                        action="store_true",
                        help="fold the no-secrecy sum-rate reference into "
                             "the outer region")
    region.set_defaults(func=cmd_region)

    sumrate = sub.add_parser(
        "sumrate", help="largest sum rate along an alpha or key-rate sweep")
    common(sumrate)
    for name in ("h11", "h22", "h21", "p1", "p2", "rk", "p", "alpha",
                 "alpha_min", "alpha_max", "rk_min", "rk_max"):
        sumrate.add_argument(f"--{name.replace('_', '-')}",
                             dest=name, type=float)
    sumrate.add_argument("--p1-db", dest="p1_db", type=float)
    sumrate.add_argument("--p2-db", dest="p2_db", type=float)
    for name in ("alpha_steps", "rk_steps"):
        sumrate.add_argument(f"--{name.replace('_', '-')}",
                             dest=name, type=int)
    sumrate.add_argument("--alpha-list", dest="alpha_list",
                         help="comma list of alpha values to sweep")
    sumrate.add_argument("--rk-list", dest="rk_list",
                         help="comma list of key rates to sweep")
    sumrate.add_argument("--schemes",
                         help="comma list of: " + ", ".join(SCHEME_VARIANTS))
    sumrate.add_argument("--grid",
                         help="preset (coarse|default|fine) or name=value pairs")
    sumrate.add_argument("--sweep-powers", dest="sweep_powers",
                         action="store_true",
                         help="also sweep the power back-off fractions "
                              "(default pins beta1 = beta2 = 1)")
    sumrate.add_argument("--nonsecrecy-bound", dest="nonsecrecy_bound",
                         action="store_true",
                         help="fold the no-secrecy sum-rate reference into "
                              "the outer column")
    sumrate.set_defaults(func=cmd_sumrate)

    gdof = sub.add_parser(
        "gdof", help="normalized high-power region polygons")
    common(gdof)
    gdof.add_argument("--alpha", type=float,
                      help="interference exponent log(inr)/log(snr)")
    gdof.add_argument("--gamma", type=float,
                      help="key rate normalized by 0.5*log2(snr)")
    gdof.add_argument("--eta", type=float,
                      help="key fraction spent on the common layer")
    gdof.add_argument("--schemes",
                      help="comma list of: " + ", ".join(GDOF_SCHEMES))
    gdof.set_defaults(func=cmd_gdof)

    verify = sub.add_parser(
        "verify", help="run the invariant battery and print a JSON report")
    verify.add_argument("--seed", type=int, default=20240817)
    verify.add_argument("--corrupt", action="store_true",
                        help="shave one outer-bound face to prove the "
                             "containment checks can fail")
    verify.add_argument("--out", help="also write the JSON report here")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
