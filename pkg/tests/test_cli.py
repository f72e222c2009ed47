"""End-to-end tests of the ar-iet command line."""
import json

import pytest

from ar_iet.cli import load_config, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# --- config ------------------------------------------------------------------

def test_config_defaults_and_overrides(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text(
        "# comment line\n"
        "seed_triple = 4,2,1\n"
        "word_cap = 500   # inline comment\n"
        "l1_threshold = 2/10\n"
        "output_dir = out\n"
        "random_seed = 7\n"
    )
    config = load_config(str(path))
    assert config.word_cap == 500
    assert str(config.l1_threshold) == "1/5"
    assert config.output_dir == "out"
    assert config.random_seed == 7
    assert config.max_steps == 64  # untouched default


def test_config_errors_are_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    for text in ("word_cap = -3\n", "no_such_key = 1\n", "word_cap: 3\n",
                 "word_cap = x\n"):
        bad.write_text(text)
        code, _, err = run(capsys, "--config", str(bad), "gasket",
                           "--triple", "7,4,2")
        assert code == 2
        assert "ar-iet:" in err


# --- gasket ------------------------------------------------------------------

def test_gasket_two_steps_with_tie_exit(capsys):
    payload = run_json(capsys, "gasket", "--triple", "13/1,7/1,4/1",
                       "--steps", "10")
    assert payload["schema"] == "ar-iet/gasket/1"
    assert payload["prefix"] == "11"
    assert payload["exit"] == {"kind": "not-in-gasket", "step": 3, "reason": "tie"}
    assert payload["omega_lengths"] == ["20", "11", "17"]
    assert payload["partial_quotients"]["ks"] == [1, 1]


def test_gasket_from_prefix_reconstructs(capsys):
    payload = run_json(capsys, "gasket", "--prefix", "112")
    assert payload["prefix"].startswith("112")
    assert payload["triple"] == [str(v) for v in payload["triple"]]


def test_gasket_inadmissible_triple_is_domain_error(capsys):
    code, out, err = run(capsys, "gasket", "--triple", "2,4,7")
    assert code == 1 and out == ""
    error = json.loads(err)
    assert error["schema"] == "ar-iet/error/1"
    assert error["code"] == "inadmissible"


# --- words -------------------------------------------------------------------

def test_words_tribonacci_stage3(capsys):
    payload = run_json(capsys, "words", "--prefix", "111", "--alphabet", "a3")
    assert payload["words"] == {"a": "abacaba", "b": "abacab", "c": "abac"}
    assert payload["heights"] == {"a": 7, "b": 6, "c": 4}
    assert payload["stage"] == 3


def test_words_multiplicative_matches_additive(capsys):
    additive = run_json(capsys, "words", "--prefix", "331", "--alphabet", "a9")
    mult = run_json(capsys, "words", "--prefix", "331", "--alphabet", "a9",
                    "--multiplicative")
    assert additive["words"] == mult["words"]
    assert mult["multiplicative"] is True


def test_words_overflow_is_domain_error(capsys):
    code, _, err = run(capsys, "words", "--prefix", "1" * 30, "--cap", "100")
    assert code == 1
    assert json.loads(err)["code"] == "word-overflow"


# --- orbit -------------------------------------------------------------------

def test_orbit_frozen_coding_and_csv(capsys, tmp_path):
    payload = run_json(capsys, "--output-dir", str(tmp_path), "orbit",
                       "--triple", "7,4,2", "--point", "6", "--length", "5",
                       "--csv", "freq.csv")
    assert payload["coding"] == "17184"
    assert payload["counts"] == {"1": 2, "4": 1, "7": 1, "8": 1}
    text = (tmp_path / "freq.csv").read_text()
    lines = text.splitlines()
    assert lines[0] == "letter,count,frequency,decimal"
    assert lines[1] == "1,2,2/5,0.4"
    assert len(lines) == 5


def test_orbit_sampled_point_is_deterministic(capsys):
    first = run_json(capsys, "orbit", "--triple", "7,4,2", "--length", "40")
    second = run_json(capsys, "orbit", "--triple", "7,4,2", "--length", "40")
    assert first == second
    assert first["point"]  # a sampled rational was recorded


def test_orbit_three_letter_partition(capsys):
    payload = run_json(capsys, "orbit", "--triple", "7,4,2", "--point", "6",
                       "--length", "5", "--partition", "three")
    assert payload["coding"] == "abaca"


# --- induct and towers -------------------------------------------------------

def test_induct_tribonacci_three_stages(capsys):
    payload = run_json(capsys, "induct", "--prefix", "111111", "--steps", "3")
    assert [s["case"] for s in payload["stages"]] == ["1", "1", "1"]
    assert all(s["verified"] for s in payload["stages"])
    assert payload["stages"][0]["return_words"]["1"] == "35"


def test_induct_not_in_gasket_is_domain_error(capsys):
    code, _, err = run(capsys, "induct", "--triple", "7,4,2", "--steps", "5")
    assert code == 1
    error = json.loads(err)
    assert error["code"] == "not-in-gasket"
    assert error["detail"]["at_step"] == "2"


def test_towers_stage2_heights_and_checks(capsys):
    payload = run_json(capsys, "towers", "--prefix", "111111", "--stage", "2")
    assert payload["nine"]["1"]["height"] == 4
    assert payload["nine"]["5"]["height"] == 3
    assert payload["nine"]["9"]["height"] == 2
    assert payload["checks"]["partition"] is True
    assert payload["checks"]["adjacency"] is True
    assert payload["checks"]["component_counts"]["c"] == 1


# --- check -------------------------------------------------------------------

def test_check_all_from_prefix_file(capsys, tmp_path):
    listing = tmp_path / "p.txt"
    listing.write_text("111111\n# a comment\n12312\n")
    payload = run_json(capsys, "check", "--all", "--prefix-file", str(listing),
                       "--depth", "3")
    assert payload["ok"] is True
    assert len(payload["targets"]) == 2
    for target in payload["targets"]:
        assert set(target["checks"]) == {
            "partition", "adjacency", "components", "induction", "coding"
        }
        assert all(target["checks"].values())


def test_check_single_kind_and_repeatable_prefix(capsys):
    payload = run_json(capsys, "check", "--partition", "--prefix", "1212",
                       "--prefix", "111", "--depth", "2")
    assert payload["selected"] == ["partition"]
    assert len(payload["targets"]) == 2


def test_check_without_prefixes_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--all")
    assert code == 2
    assert "no prefixes" in err


# --- experiment --------------------------------------------------------------

def test_experiment_xi_tribonacci(capsys):
    payload = run_json(capsys, "experiment", "--xi", "--ks", "1,1,1,1,1",
                       "--rules", "11111")
    assert payload["xi"] == {"1": "1/9", "2": "1/9"}
    assert payload["flags"]["bqp_bound"] == 1
    assert payload["evidence_scope"] == "prefix-only"


def test_experiment_twm_includes_recurrence_patterns(capsys):
    payload = run_json(capsys, "experiment", "--twm", "--prefix", "1" * 10)
    assert payload["n_indices"] == list(range(1, 11))
    assert payload["tourab_i"] == list(range(0, 9))
    assert payload["tourab_ii"] == []


def test_experiment_eigen_verdicts(capsys):
    rejected = run_json(capsys, "experiment", "--eigen", "--prefix", "1" * 30,
                        "--theta", "1/2")
    assert rejected["verdict"] == "rejected"
    assert rejected["rejected_at"] == 0
    surviving = run_json(capsys, "experiment", "--eigen", "--prefix", "1" * 30,
                         "--theta", "0")
    assert surviving["verdict"] == "survives-prefix"
    assert surviving["rejected_at"] is None


def test_experiment_two_measure_smoke(capsys):
    payload = run_json(capsys, "experiment", "--two-measure", "--ks", "1,1,1",
                       "--rules", "111", "--length", "300")
    assert payload["depth"] == 3
    # two I rules precede the third block, so the towers come back unswapped
    assert payload["swapped"] is False
    assert "l1" in payload and "exceeds_threshold" in payload


def test_experiment_birkhoff_with_csv(capsys, tmp_path):
    payload = run_json(capsys, "--output-dir", str(tmp_path), "experiment",
                       "--birkhoff", "--triple", "7,4,2", "--point", "6",
                       "--length", "100", "--csv", "b.csv")
    assert sum(payload["counts"].values()) == 100
    lines = (tmp_path / "b.csv").read_text().splitlines()
    assert lines[0] == "letter,count,frequency,decimal"
    assert len(lines) == len(payload["counts"]) + 1


def test_experiment_requires_quotient_source(capsys):
    code, _, err = run(capsys, "experiment", "--xi")
    assert code == 2
    assert "required" in err


# --- render ------------------------------------------------------------------

def test_render_layout_is_deterministic_svg(capsys):
    code, first, _ = run(capsys, "render", "--layout", "--triple", "7/1,4/1,2/1")
    assert code == 0
    assert first.startswith("<svg ")
    assert "<!-- ar-iet " in first
    assert ">11<" in first  # exact tick label for the breakpoint at 11
    code, second, _ = run(capsys, "render", "--layout", "--triple", "7/1,4/1,2/1")
    assert first == second


def test_render_induction_and_towers_to_files(capsys, tmp_path):
    code, out, _ = run(capsys, "--output-dir", str(tmp_path), "render",
                       "--induction", "--prefix", "1111", "--stage", "2",
                       "--out", "ind.svg")
    assert code == 0
    text = (tmp_path / "ind.svg").read_text()
    assert "stage 2" in text and text.rstrip().endswith("</svg>")
    code, _, _ = run(capsys, "--output-dir", str(tmp_path), "render",
                     "--towers", "--prefix", "1111", "--stage", "3",
                     "--out", "tow.svg")
    assert code == 0
    assert (tmp_path / "tow.svg").exists()


# --- emission and usage ------------------------------------------------------

def test_emit_writes_stdout_copy(capsys, tmp_path):
    payload = run_json(capsys, "--output-dir", str(tmp_path), "gasket",
                       "--triple", "13,7,4", "--emit", "g.json")
    on_disk = json.loads((tmp_path / "g.json").read_text())
    assert on_disk == payload


def test_malformed_rational_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gasket", "--triple", "7,x,2"])
    assert exc.value.code == 2


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
