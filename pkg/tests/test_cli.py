"""Command line behavior: emitted files, formats, determinism, exit codes."""

import csv
import filecmp
import json
import math
import xml.etree.ElementTree as ET

import jsonschema
import pytest

from zickey.cli import main
from zickey.verify import REPORT_SCHEMA

WEAK = ["--h11", "1", "--h22", "1", "--h21", "0.6",
        "--p1", "100", "--p2", "100", "--rk", "0.2"]
HIGH = ["--h11", "1", "--h22", "1", "--h21", "1.2",
        "--p1", "100", "--p2", "100", "--rk", "1"]

ALL_SCHEMES = ("key_splitting", "rate_splitting", "rate_splitting_no_an",
               "key_as_wiretap", "one_time_pad")


def read_rows(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def region_files(out):
    return sorted(p.name for p in out.iterdir())


def test_region_emits_one_csv_per_scheme(tmp_path, capsys):
    out = tmp_path / "w"
    rc = main(["region", *WEAK, "--grid", "coarse", "--svg",
               "--out-dir", str(out)])
    assert rc == 0
    expected = {f"region_{s}.csv" for s in ALL_SCHEMES}
    expected |= {"region_outer.csv", "region.svg", "region_meta.json"}
    assert set(region_files(out)) == expected
    for name in ALL_SCHEMES:
        header, rows = read_rows(out / f"region_{name}.csv")
        assert header == ["scheme", "R1", "R2"]
        assert all(r[0] == name for r in rows)
        pts = [(float(r[1]), float(r[2])) for r in rows]
        assert all(x >= 0 and y >= 0 for x, y in pts)
        # CCW from the lexicographically smallest vertex
        assert pts[0] == min(pts)
        if len(pts) >= 3:
            area = sum(pts[i][0] * pts[(i + 1) % len(pts)][1]
                       - pts[(i + 1) % len(pts)][0] * pts[i][1]
                       for i in range(len(pts)))
            assert area > 0
    meta = json.loads((out / "region_meta.json").read_text())
    assert meta["regime"] == "weak_moderate"
    assert meta["suppressed"] == []
    assert meta["channel"]["snr2"] == 100.0
    assert meta["channel"]["inr1"] == pytest.approx(36.0, abs=1e-9)
    assert meta["outer_bounds"]["sum_nonsecrecy"] is None
    assert sorted(meta["files"]) == region_files(out)
    err = capsys.readouterr().err
    assert "skipping" not in err


def test_region_runs_are_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        assert main(["region", *WEAK, "--grid", "coarse", "--svg",
                     "--out-dir", str(out)]) == 0
    names = region_files(out1)
    assert names == region_files(out2)
    match, mismatch, errors = filecmp.cmpfiles(out1, out2, names,
                                               shallow=False)
    assert mismatch == [] and errors == []
    assert match == names


def test_region_high_regime_suppression(tmp_path, capsys):
    out = tmp_path / "h"
    assert main(["region", *HIGH, "--grid", "coarse",
                 "--out-dir", str(out)]) == 0
    files = region_files(out)
    assert "region_rate_splitting_no_an.csv" not in files
    assert "region_key_as_wiretap.csv" not in files
    assert "region_key_splitting.csv" in files
    assert "region_one_time_pad.csv" in files
    meta = json.loads((out / "region_meta.json").read_text())
    assert meta["regime"] == "high"
    assert sorted(meta["suppressed"]) == ["key_as_wiretap",
                                          "rate_splitting_no_an"]
    err = capsys.readouterr().err
    assert err.count("skipping") == 2


def test_region_zero_key_pad_collapses(tmp_path):
    out = tmp_path / "z"
    assert main(["region", *WEAK[:-2], "--rk", "0",
                 "--schemes", "one_time_pad", "--grid", "coarse",
                 "--out-dir", str(out)]) == 0
    _, rows = read_rows(out / "region_one_time_pad.csv")
    assert all(float(r[2]) == 0.0 for r in rows)
    assert "region_key_splitting.csv" not in region_files(out)


def test_region_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "scene.cfg"
    cfg.write_text("# weak-interference scenario\n"
                   "h11 = 1\nh22 = 1\nh21 = 0.6\n"
                   "p1 = 100\np2 = 100\nrk = 0.2\n")
    out1, out2 = tmp_path / "c1", tmp_path / "c2"
    assert main(["region", "--config", str(cfg), "--rk", "1",
                 "--grid", "coarse", "--out-dir", str(out1)]) == 0
    meta = json.loads((out1 / "region_meta.json").read_text())
    assert meta["channel"]["rk"] == 1.0  # flag wins over the file
    assert main(["region", "--h11", "1", "--h22", "1", "--h21", "0.6",
                 "--p1", "100", "--p2", "100", "--rk", "1",
                 "--grid", "coarse", "--out-dir", str(out2)]) == 0
    for s in ALL_SCHEMES:
        assert filecmp.cmp(out1 / f"region_{s}.csv", out2 / f"region_{s}.csv",
                           shallow=False)


def test_region_db_flags_match_linear(tmp_path):
    out1, out2 = tmp_path / "lin", tmp_path / "db"
    assert main(["region", *WEAK, "--grid", "coarse",
                 "--out-dir", str(out1)]) == 0
    assert main(["region", "--h11", "1", "--h22", "1", "--h21", "0.6",
                 "--p1-db", "20", "--p2-db", "20", "--rk", "0.2",
                 "--grid", "coarse", "--out-dir", str(out2)]) == 0
    for s in ALL_SCHEMES:
        assert filecmp.cmp(out1 / f"region_{s}.csv", out2 / f"region_{s}.csv",
                           shallow=False)


def test_region_svg_is_wellformed_and_csv_sourced(tmp_path):
    out = tmp_path / "s"
    assert main(["region", *WEAK, "--grid", "coarse", "--svg",
                 "--out-dir", str(out)]) == 0
    text = (out / "region.svg").read_text()
    root = ET.fromstring(text)
    assert root.tag.endswith("svg")
    for name in (*ALL_SCHEMES, "outer"):
        assert name in text  # legend entry per emitted polygon


def test_region_error_exit_codes(tmp_path, capsys):
    # missing channel parameters -> config error
    assert main(["region", "--h11", "1", "--out-dir", str(tmp_path)]) == 2
    # unknown scheme name
    assert main(["region", *WEAK, "--schemes", "bogus",
                 "--out-dir", str(tmp_path)]) == 2
    # malformed grid option
    assert main(["region", *WEAK, "--grid", "n_桁=3",
                 "--out-dir", str(tmp_path)]) == 2
    # contradictory power flags in the file
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("h11 = 1\nh22 = 1\nh21 = 0.6\n"
                   "p1 = 100\np1_db = 20\np2 = 100\n")
    assert main(["region", "--config", str(cfg),
                 "--out-dir", str(tmp_path)]) == 2
    # domain violation: negative power budget
    assert main(["region", "--h11", "1", "--h22", "1", "--h21", "0.6",
                 "--p1", "-5", "--p2", "100",
                 "--out-dir", str(tmp_path)]) == 3
    err = capsys.readouterr().err
    assert "error:" in err


def test_config_file_parse_errors(tmp_path):
    out = str(tmp_path)
    bad = [
        "h11 : 1\n",                      # not key = value
        "mystery = 3\n",                  # unknown key
        "h11 = 1\nh11 = 2\n",             # duplicate
        "h11 =\n",                        # empty value
        "alpha_steps = 0\n",              # count below 1
        "p1 = inf\n",                     # non-finite
    ]
    for text in bad:
        cfg = tmp_path / "t.cfg"
        cfg.write_text(text)
        assert main(["region", "--config", str(cfg), "--out-dir", out]) == 2


def test_sumrate_alpha_sweep(tmp_path, capsys):
    out = tmp_path / "sa"
    rc = main(["sumrate", "--p", "10", "--rk", "0.4",
               "--alpha-list", "0,0.6,1.2", "--grid", "coarse", "--svg",
               "--out-dir", str(out)])
    assert rc == 0
    header, rows = read_rows(out / "sumrate.csv")
    assert header == ["alpha", *ALL_SCHEMES, "outer"]
    assert [r[0] for r in rows] == ["0.0", "0.6", "1.2"]
    blank_cols = [header.index("rate_splitting_no_an"),
                  header.index("key_as_wiretap"), header.index("outer")]
    for r in rows[:2]:  # weak/moderate rungs: every cell filled
        assert all(cell != "" for cell in r)
    last = rows[2]  # inr > snr: unsupported schemes and keyed sum blank
    for idx in blank_cols:
        assert last[idx] == ""
    assert last[header.index("key_splitting")] != ""
    err = capsys.readouterr().err
    assert "left blank" in err
    meta = json.loads((out / "sumrate_meta.json").read_text())
    assert meta["axis"] == "alpha"
    assert meta["family"] == {"p": 10.0, "rk": 0.4}
    assert sorted(meta["suppressed_in_high_regime"]) == [
        "key_as_wiretap", "rate_splitting_no_an"]
    assert meta["full_power"] is True
    root = ET.fromstring((out / "sumrate.svg").read_text())
    assert root.tag.endswith("svg")


def test_sumrate_rk_sweep_monotone(tmp_path):
    out = tmp_path / "sr"
    assert main(["sumrate", "--h11", "1", "--h22", "1", "--h21", "0.6",
                 "--p1", "10", "--p2", "10", "--rk-list", "0,0.5,1,2",
                 "--grid", "coarse", "--out-dir", str(out)]) == 0
    header, rows = read_rows(out / "sumrate.csv")
    assert header[0] == "rk"
    for col in range(1, len(header)):
        vals = [float(r[col]) for r in rows if r[col] != ""]
        assert all(b >= a - 1e-9 for a, b in zip(vals, vals[1:]))


def test_sumrate_axis_validation(tmp_path):
    out = str(tmp_path)
    # no axis at all
    assert main(["sumrate", "--p", "10", "--out-dir", out]) == 2
    # both axes at once
    assert main(["sumrate", "--p", "10", "--alpha-list", "0.5",
                 "--rk-list", "1", "--out-dir", out]) == 2
    # alpha sweep without the symmetric power
    assert main(["sumrate", "--alpha-list", "0.5", "--out-dir", out]) == 2
    # rk sweep without any channel
    assert main(["sumrate", "--rk-list", "0,1", "--out-dir", out]) == 2
    # rk sweep over a negative key rate
    assert main(["sumrate", "--p", "10", "--alpha", "0.5",
                 "--rk-list=-1,0", "--out-dir", out]) == 2


def test_sumrate_power_sweep_beats_full_power(tmp_path):
    outs = []
    for args, name in ((["--sweep-powers"], "swept"), ([], "full")):
        out = tmp_path / name
        assert main(["sumrate", "--h11", "1", "--h22", "1", "--h21", "1.4",
                     "--p1", "50", "--p2", "50", "--rk-list", "0.3",
                     "--grid", "coarse", *args, "--out-dir", str(out)]) == 0
        outs.append(read_rows(out / "sumrate.csv"))
    (h_s, rows_s), (h_f, rows_f) = outs
    assert h_s == h_f
    for col in range(1, len(h_s) - 1):
        if rows_s[0][col] == "" or rows_f[0][col] == "":
            continue
        assert float(rows_s[0][col]) >= float(rows_f[0][col]) - 1e-12


def test_gdof_outputs_and_reference(tmp_path):
    out = tmp_path / "g"
    assert main(["gdof", "--alpha", "0.3", "--gamma", "0.3", "--svg",
                 "--out-dir", str(out)]) == 0
    header, rows = read_rows(out / "gdof.csv")
    assert header == ["scheme", "d1", "d2"]
    by_scheme = {}
    for name, xs, ys in rows:
        by_scheme.setdefault(name, []).append((float(xs), float(ys)))
    assert set(by_scheme) == {"key_splitting", "rate_splitting",
                              "key_as_wiretap", "one_time_pad", "no_secrecy"}
    # saturated key at eta = 1: key splitting reaches the reference shape
    ks, ref = by_scheme["key_splitting"], by_scheme["no_secrecy"]
    assert len(ks) == len(ref)
    assert all(math.dist(a, b) < 1e-12 for a, b in zip(ks, ref))
    meta = json.loads((out / "gdof_meta.json").read_text())
    assert meta["eta"] == 1.0
    root = ET.fromstring((out / "gdof.svg").read_text())
    assert root.tag.endswith("svg")


def test_gdof_scheme_selection_and_domain(tmp_path):
    out = tmp_path / "gg"
    assert main(["gdof", "--alpha", "0.5", "--gamma", "0.1",
                 "--schemes", "one_time_pad", "--out-dir", str(out)]) == 0
    _, rows = read_rows(out / "gdof.csv")
    assert {r[0] for r in rows} == {"one_time_pad", "no_secrecy"}
    # beyond the supported interference exponent
    assert main(["gdof", "--alpha", "1.2", "--gamma", "0.1",
                 "--out-dir", str(out)]) == 3
    # missing required parameter
    assert main(["gdof", "--alpha", "0.5", "--out-dir", str(out)]) == 2


def test_verify_passes_and_matches_schema(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    assert main(["verify", "--out", str(report_path)]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["all_pass"] is True
    assert report["n_scenarios"] >= 23  # at least one row per invariant
    assert json.loads(report_path.read_text()) == report


def test_verify_corrupt_self_test(capsys):
    assert main(["verify", "--corrupt"]) == 1
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    assert report["all_pass"] is False
    failed = {r["invariant"] for r in report["results"] if not r["pass"]}
    assert failed == {"schemes_within_outer"}
    assert "schemes_within_outer" in captured.err
