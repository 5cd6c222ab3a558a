import json
import subprocess
import sys

import pytest

from permshuffle.cli import main
from permshuffle.shuffles import shuffle_count


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "6 3 5 1 2 7 4")
    assert code == 0
    assert out == (
        "word 6 3 5 1 2 7 4\n"
        "n 7\n"
        "des_set 1,3,6\n"
        "des 3\n"
        "maj 10\n"
        "pk_set 3,6\n"
        "pk 2\n"
        "epk 3\n"
        "bir 5\n"
        "udr 6\n"
        "chi_plus 1\n"
        "chi_minus 0\n"
        "profile 1;2,2,2,3,2\n"
        "class 3\n"
        "class_k 2\n"
        "class_d 3\n"
        "canonical no\n"
    )


def test_stats_singleton_has_no_class_lines(capsys):
    code, out, _ = run(capsys, "stats", "5")
    assert code == 0
    assert "class" not in out
    assert "des_set -\n" in out
    assert "epk 1\n" in out
    assert "udr 1\n" in out


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "2 1 3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["word"] == [2, 1, 3]
    assert payload["des_set"] == [1]
    assert payload["maj"] == 1
    assert payload["profile"] == {"lengths": [2, 2], "chi_plus": 1}
    assert payload["classification"]["class_id"] == 4
    assert payload["classification"]["is_canonical"] is True


def test_shuffles_lists_all_words(capsys):
    code, out, _ = run(capsys, "shuffles", "3 1", "2 4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == shuffle_count(2, 2)
    assert len(set(lines)) == len(lines)
    assert "3 1 2 4" in lines
    assert "2 4 3 1" in lines


def test_shuffles_json(capsys):
    code, out, _ = run(capsys, "shuffles", "1", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert sorted(payload["shuffles"]) == [[1, 2], [2, 1]]


def test_dist_golden(capsys):
    code, out, _ = run(capsys, "dist", "3 1", "2 4", "--stat", "des")
    assert code == 0
    assert out == "1:3 2:3\n"


def test_dist_json(capsys):
    code, out, _ = run(capsys, "dist", "3 1", "2 4", "--stat", "des", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["stat"] == "des"
    assert payload["pairs"] == [[1, 3], [2, 3]]
    assert payload["total"] == 6


def test_dist_unknown_stat_is_usage_error(capsys):
    code, _, err = run(capsys, "dist", "3 1", "2 4", "--stat", "nope")
    assert code == 2
    assert "unknown statistic" in err


def test_overlapping_ground_sets_rejected(capsys):
    code, _, err = run(capsys, "dist", "3 1", "1 4", "--stat", "des")
    assert code == 2
    assert "overlap" in err


def test_stream_guard_and_force(capsys):
    big_p = " ".join(str(v) for v in range(1, 9))
    big_s = " ".join(str(v) for v in range(9, 16))
    code, _, err = run(capsys, "shuffles", big_p, big_s)
    assert code == 2
    assert "--force" in err
    code, out, _ = run(capsys, "shuffles", big_p, big_s, "--force")
    assert code == 0
    assert len(out.splitlines()) == shuffle_count(8, 7)


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--stat", "udr_pk_des", "--n", "3", "--m", "2")
    assert code == 0
    assert out.rstrip().endswith("verdict=PASS")


def test_verify_fail_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--stat", "des_parity", "--n", "3", "--m", "1")
    assert code == 1
    assert "counterexample" in out
    assert out.rstrip().endswith("verdict=FAIL")


def test_verify_reduced_refuses_non_descent_stat(capsys):
    code, _, err = run(capsys, "verify", "--stat", "first_entry", "--n", "3", "--m", "2")
    assert code == 2
    assert "descent statistic" in err


def test_verify_jobs_output_identical(capsys):
    base = run(capsys, "verify", "--stat", "udr_pk_des", "--n", "3", "--m", "2")
    wide = run(capsys, "verify", "--stat", "udr_pk_des", "--n", "3", "--m", "2", "--jobs", "2")
    assert base == wide
    base_j = run(capsys, "verify", "--stat", "udr_pk_des", "--n", "3", "--m", "2", "--json")
    wide_j = run(
        capsys, "verify", "--stat", "udr_pk_des", "--n", "3", "--m", "2", "--jobs", "2", "--json"
    )
    assert base_j == wide_j
    json.loads(base_j[1])


def test_canonicalize_trace(capsys):
    code, out, _ = run(capsys, "canonicalize", "6 3 5 1 2 7 4")
    assert code == 0
    assert out == ("ell=4 src=6 3 5 1 2 7 4 dst=7 4 5 6 2 3 1\n" "final 7 4 5 6 2 3 1\n")


def test_canonicalize_already_canonical(capsys):
    code, out, _ = run(capsys, "canonicalize", "6 5 3 4 7 9 2")
    assert code == 0
    assert out == "final 6 5 3 4 7 9 2\n"


def test_canonicalize_with_sigma_prints_bijection(capsys):
    code, out, _ = run(capsys, "canonicalize", "6 3 5 1 2 7 4", "--sigma", "11 8 9 10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ell=4 src=6 3 5 1 2 7 4 dst=7 4 5 6 2 3 1"
    assert lines[1] == "final 7 4 5 6 2 3 1"
    arrows = [line for line in lines[2:] if " -> " in line]
    assert len(arrows) == shuffle_count(7, 4)
    images = {line.split(" -> ")[1] for line in arrows}
    assert len(images) == len(arrows)


def test_canonicalize_singleton_rejected(capsys):
    code, _, err = run(capsys, "canonicalize", "1")
    assert code == 2
    assert err.startswith("error:")


def test_phi_forward_golden(capsys):
    code, out, _ = run(
        capsys,
        "phi",
        "--ell",
        "4",
        "--pi",
        "6 3 5 1 2 7 4",
        "--pi-prime",
        "6 1 4 5 2 7 3",
        "--tau",
        "6 3 11 8 5 9 1 2 7 10 4",
    )
    assert code == 0
    assert out == "6 1 4 11 8 5 9 2 7 10 3\n"


def test_phi_inverse_golden(capsys):
    code, out, _ = run(
        capsys,
        "phi",
        "--ell",
        "4",
        "--pi",
        "6 3 5 1 2 7 4",
        "--pi-prime",
        "6 1 4 5 2 7 3",
        "--tau",
        "6 1 4 11 8 5 9 2 7 10 3",
        "--inverse",
    )
    assert code == 0
    assert out == "6 3 11 8 5 9 1 2 7 10 4\n"


def test_phi_json(capsys):
    code, out, _ = run(
        capsys,
        "phi",
        "--ell",
        "4",
        "--pi",
        "6 3 5 1 2 7 4",
        "--pi-prime",
        "6 1 4 5 2 7 3",
        "--tau",
        "6 3 5 1 2 7 4",
        "--json",
    )
    assert code == 0
    assert json.loads(out) == {"result": [6, 1, 4, 5, 2, 7, 3]}


def test_phi_rejects_non_member(capsys):
    code, _, err = run(
        capsys,
        "phi",
        "--ell",
        "4",
        "--pi",
        "6 3 5 1 2 7 4",
        "--pi-prime",
        "7 4 2 6 3 1 5",
        "--tau",
        "6 3 5 1 2 7 4",
    )
    assert code == 2
    assert err.startswith("error:")


def test_stanley_eq1(capsys):
    code, out, _ = run(capsys, "stanley", "3 1", "2 4", "--eq", "1")
    assert code == 0
    assert out == (
        "lhs q + q^2 + 2q^3 + q^4 + q^5\n"
        "rhs q + q^2 + 2q^3 + q^4 + q^5\n"
        "verdict PASS\n"
    )


def test_stanley_eq2(capsys):
    code, out, _ = run(capsys, "stanley", "3 1", "2 4", "--eq", "2", "--k", "1")
    assert code == 0
    assert out.endswith("verdict PASS\n")
    assert out.startswith("lhs q + q^2 + q^3\n")


def test_stanley_eq2_empty_band(capsys):
    code, out, _ = run(capsys, "stanley", "3 1", "2 4", "--eq", "2", "--k", "0")
    assert code == 0
    assert out == "lhs 0\nrhs 0\nverdict PASS\n"


def test_stanley_k_flag_validation(capsys):
    code, _, err = run(capsys, "stanley", "3 1", "2 4", "--eq", "2")
    assert code == 2
    assert "--k" in err
    code, _, err = run(capsys, "stanley", "3 1", "2 4", "--eq", "1", "--k", "2")
    assert code == 2
    assert "--k" in err


def test_stanley_json(capsys):
    code, out, _ = run(capsys, "stanley", "1", "2", "--eq", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["lhs"] == payload["rhs"] == [[0, 1], [1, 1]]


def test_bad_word_is_usage_error(capsys):
    code, _, err = run(capsys, "stats", "1 2 two")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "nope")
    assert code == 2
    assert "invalid choice" in err


def test_missing_subcommand(capsys):
    code, _, err = run(capsys)
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "stats" in out and "stanley" in out


def test_closed_output_pipe_is_quiet():
    big_p = " ".join(str(v) for v in range(1, 9))
    big_s = " ".join(str(v) for v in range(9, 16))
    script = (
        f"{sys.executable} -m permshuffle.cli shuffles '{big_p}' '{big_s}' --force | head -n 1"
    )
    proc = subprocess.run(["sh", "-c", script], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stderr == ""
    assert proc.stdout.count("\n") == 1


@pytest.mark.parametrize("flag", ["--json", None])
def test_entry_point_subprocess(flag):
    argv = [sys.executable, "-m", "permshuffle.cli", "dist", "3 1", "2 4", "--stat", "des"]
    if flag:
        argv.append(flag)
    proc = subprocess.run(argv, capture_output=True, text=True)
    assert proc.returncode == 0
    if flag:
        assert json.loads(proc.stdout)["pairs"] == [[1, 3], [2, 3]]
    else:
        assert proc.stdout == "1:3 2:3\n"
