import csv
import io
import json

import pytest

from combft.cli import CSV_HEADER, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]
    return rows[0], rows[1:]


# -----------------------------
# spectrum
# -----------------------------
def test_spectrum_step_reference_grid(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum", "step", "--fs", "20",
        "--grid-start", "-10", "--grid-stop", "10", "--grid-step", "0.1",
        "--units", "bins",
    )
    assert code == 0
    header, rows = parse_csv(out)
    assert list(header) == list(CSV_HEADER)
    assert len(rows) == 201
    masked = [r for r in rows if r[5] == "true"]
    assert len(masked) == 1
    assert abs(float(masked[0][1])) < 1e-9  # the f = 0 bin
    assert masked[0][3] == "" and masked[0][4] == ""


def test_spectrum_half_case6_is_purely_imaginary(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum", "half", "--case", "6", "--fs", "1", "--n", "1",
        "--grid-start", "-0.45", "--grid-stop", "0.45", "--grid-step", "0.05",
        "--units", "hz",
    )
    assert code == 0
    _, rows = parse_csv(out)
    for row in rows:
        if row[5] == "false":
            assert float(row[3]) == 0.0


def test_spectrum_comb_kind_emits_lines(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "even", "--fs", "1", "--truncation", "2")
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 5
    assert [float(r[3]) for r in rows] == [1, -1, 1, -1, 1]


def test_spectrum_unknown_kind_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "banana"])
    assert exc.value.code == 2


def test_spectrum_half_without_case_exits_2(capsys):
    code, _, err = run_cli(capsys, "spectrum", "half")
    assert code == 2
    assert "case" in err


def test_spectrum_json_masked_is_null(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum", "step", "--fs", "20", "--format", "json",
        "--grid-start", "-1", "--grid-stop", "1", "--grid-step", "1", "--units", "bins",
    )
    assert code == 0
    records = json.loads(out)
    center = [r for r in records if r["masked"]]
    assert len(center) == 1
    assert center[0]["re"] is None and center[0]["im"] is None


# -----------------------------
# dft
# -----------------------------
def write_signal(tmp_path, values, name="signal.txt"):
    path = tmp_path / name
    path.write_text("# test signal\n" + "\n".join(str(v) for v in values) + "\n")
    return str(path)


def test_dft_corrected_ones(capsys, tmp_path):
    path = write_signal(tmp_path, [1, 1, 1, 1])
    code, out, _ = run_cli(capsys, "dft", "--form", "sdft-corrected", "--input", path)
    assert code == 0
    _, rows = parse_csv(out)
    by_bin = {float(r[1]): (float(r[3]), float(r[4])) for r in rows}
    assert by_bin[0.0][0] == pytest.approx(4.0)
    for re, im in by_bin.values():
        assert abs(im) < 1e-12


def test_dft_parity_mismatch_exits_3(capsys, tmp_path):
    path = write_signal(tmp_path, [1, 2, 3, 4])
    code, _, err = run_cli(capsys, "dft", "--form", "sdft-odd", "--input", path)
    assert code == 3
    assert "odd" in err


def test_dft_parse_failure_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1.0\nnot-a-number\n")
    code, _, err = run_cli(capsys, "dft", "--form", "odft", "--input", str(path))
    assert code == 2
    assert "not a number" in err


def test_dft_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "dft", "--form", "odft", "--input", str(tmp_path / "none.txt"))
    assert code == 2


def test_dft_padded_matches_experiment_even_window(capsys, tmp_path):
    path = write_signal(tmp_path, [1.0] * 20)
    code, out, _ = run_cli(
        capsys,
        "dft", "--form", "sdft-corrected", "--input", path, "--pad", "10", "--fs", "20",
    )
    assert code == 0
    _, dft_rows = parse_csv(out)
    dft_by_bin = {round(float(r[1]), 6): complex(float(r[3]), float(r[4])) for r in dft_rows}

    code, out, _ = run_cli(capsys, "experiment", "fig6")
    assert code == 0
    _, exp_rows = parse_csv(out)
    checked = 0
    for row in exp_rows:
        if row[2] != "even_rect_dtft":
            continue
        b = round(float(row[1]), 6)
        if b in dft_by_bin:
            assert abs(dft_by_bin[b] - complex(float(row[3]), float(row[4]))) < 1e-9
            checked += 1
    assert checked == 200  # all padded bins except +10 (one period reported)


# -----------------------------
# identities
# -----------------------------
def test_identities_default_run_passes(capsys):
    code, out, _ = run_cli(capsys, "identities", "--seed", "0", "--samples", "1000")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["identity", "samples", "max_abs_residual"]
    assert len(rows) == 13
    assert all(float(r[2]) < 1e-12 for r in rows)


def test_identities_zero_samples_exits_2(capsys):
    code, _, _ = run_cli(capsys, "identities", "--samples", "0")
    assert code == 2


def test_identities_same_seed_is_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "identities", "--seed", "3", "--samples", "50")
    _, out2, _ = run_cli(capsys, "identities", "--seed", "3", "--samples", "50")
    assert out1 == out2


# -----------------------------
# experiment
# -----------------------------
def test_experiment_fig6_odd_length_exits_2(capsys):
    code, _, _ = run_cli(capsys, "experiment", "fig6", "--n", "19")
    assert code == 2


def test_experiment_fig8_superposes_fig6_series(capsys):
    code, out, _ = run_cli(capsys, "experiment", "fig8")
    assert code == 0
    _, rows8 = parse_csv(out)
    combined = {r[0]: complex(float(r[3]), float(r[4])) for r in rows8 if r[2] == "combined_rect_dtft"}

    code, out, _ = run_cli(capsys, "experiment", "fig6")
    assert code == 0
    _, rows6 = parse_csv(out)
    s1 = {r[0]: complex(float(r[3]), float(r[4])) for r in rows6 if r[2] == "even_rect_dtft"}
    s2 = {r[0]: complex(float(r[3]), float(r[4])) for r in rows6 if r[2] == "step_rect_dtft"}
    assert combined.keys() == s1.keys()
    for key in combined:
        assert abs(combined[key] - (s1[key] + s2[key])) < 1e-12


def test_experiment_fig7_emits_metrics_and_passes(capsys):
    code, out, _ = run_cli(capsys, "experiment", "fig7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    metrics = payload[-1]
    assert metrics["series"] == "comparison_metrics"
    assert metrics["pearson_correlation"] > 0.99
    assert metrics["relative_l2"] < 0.05


def test_experiment_fig7_csv_metrics_comment(capsys):
    code, out, _ = run_cli(capsys, "experiment", "fig7")
    assert code == 0
    comment_lines = [line for line in out.splitlines() if line.startswith("#")]
    assert len(comment_lines) == 1
    assert "relative_l2" in comment_lines[0]
