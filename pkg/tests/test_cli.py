"""CLI: JSON round trips, exit codes, determinism."""

import json

from jacobi_orbits.cli import main
from jacobi_orbits.jacobi import AlgebraElement, GroupElement


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


ELEM = '{"x":"0","y":"1/2","z":"1/2","p":"0","q":"0","r":"3"}'
GROUP = '{"a":"1","b":"0","c":"0","d":"1","lambda":"1","mu":"2","kappa":"3"}'


def test_classify_example(capsys):
    code, out, _ = run_cli(capsys, "classify", ELEM)
    assert code == 0
    assert json.loads(out) == {"family": "PiS_R", "params": {"rho": "3"}}


def test_classify_text_rendering(capsys):
    code, out, _ = run_cli(capsys, "--format", "text", "classify", ELEM)
    assert code == 0
    assert out.strip() == "Π(S^J + 3R^J)"


def test_invariants(capsys):
    code, out, _ = run_cli(capsys, "invariants",
                           '{"x":"1","y":"0","z":"0","p":"0","q":"0","r":"1"}')
    assert code == 0
    assert json.loads(out) == {"c1": "1", "f": "0", "I": "-1", "rho": None}


def test_adjoint_and_round_trip(capsys):
    code, out, _ = run_cli(capsys, "adjoint",
                           '{"a":"1","b":"0","c":"0","d":"1","lambda":"-1","mu":"0","kappa":"0"}',
                           '{"x":"0","y":"1","z":"1","p":"1","q":"2","r":"0"}')
    assert code == 0
    parsed = AlgebraElement.from_json(json.loads(out))
    assert parsed == AlgebraElement.of(0, 1, 1, 1, 0, -2)


def test_mul_inv_round_trip(capsys):
    code, out, _ = run_cli(capsys, "inv", GROUP)
    assert code == 0
    g = GroupElement.from_json(json.loads(out))
    assert g == GroupElement.translation(-1, -2, -3)


def test_embed_dispatches_on_payload(capsys):
    code, out, _ = run_cli(capsys, "embed", GROUP)
    assert code == 0
    assert json.loads(out)["matrix"][0] == ["1", "0", "0", "2"]
    code, out, _ = run_cli(capsys, "embed",
                           '{"x":"0","y":"0","z":"0","p":"1","q":"0","r":"0"}')
    assert code == 0
    assert json.loads(out)["matrix"][1][0] == "1"


def test_witness_output(capsys):
    code, out, _ = run_cli(capsys, "witness",
                           '{"x":"0","y":"0","z":"0","p":"0","q":"1","r":"0"}')
    assert code == 0
    data = json.loads(out)
    assert data["witness"]["exact"] is True
    assert data["witness"]["b"] == "-1"
    assert data["label"]["family"] == "PiP"


def test_exit_code_validation():
    assert main(["mul",
                 '{"a":"2","b":"0","c":"0","d":"2","lambda":"0","mu":"0","kappa":"0"}',
                 '{"a":"1","b":"0","c":"0","d":"1"}']) == 1
    assert main(["classify", '{"x":0.5}']) == 1
    assert main(["classify", "not json"]) == 1
    assert main(["--no-such-flag", "classify", "{}"]) == 1


def test_exit_code_domain():
    assert main(["ks-complete", '{"x":"1","y":"0","z":"0"}']) == 2
    assert main(["ks-complete", '{"x":"0","y":"0","z":"0"}']) == 2
    assert main(["ks-map", '{"family":"Hyperbolic","params":{"c1":"1"}}']) == 2


def test_kc_validation_exit(capsys):
    h = '{"x":{"re":"1","im":"0"},"y":{"re":"0","im":"1"},"p":{"re":"1","im":"0"},"q":{"re":"0","im":"0"}}'
    # a^2 + b^2 = 2 != 1 is rejected at parse time with exit 1.
    bad = '{"a":{"re":"1","im":"0"},"b":{"re":"1","im":"0"},"kappa":{"re":"0","im":"0"}}'
    assert main(["act-kc", bad, h]) == 1
    capsys.readouterr()
    good = '{"a":{"re":"3/5","im":"0"},"b":{"re":"4/5","im":"0"},"kappa":{"re":"0","im":"0"}}'
    code, out, _ = run_cli(capsys, "act-kc", good, '{"x":{"re":"0","im":"0"},"y":{"re":"0","im":"0"},"p":{"re":"1","im":"0"},"q":{"re":"0","im":"0"}}')
    assert code == 0
    assert json.loads(out)["p"] == {"re": "3/5", "im": "0"}
    flipped = '{"x":{"re":"1","im":"0"},"y":{"re":"0","im":"1"},"p":{"re":"-1","im":"0"},"q":{"re":"0","im":"0"}}'
    code2, out2, _ = run_cli(capsys, "same-orbit-kc", h, flipped)
    assert code2 == 0
    assert json.loads(out2)["same"] is True


def test_ks_complete_and_cayley_pipeline(capsys):
    code, out, _ = run_cli(capsys, "ks-complete", '{"x":"0","y":"1/2","z":"1/2"}')
    assert code == 0
    data = json.loads(out)
    assert data["ks"] is True
    code2, out2, _ = run_cli(capsys, "cayley", json.dumps(data["triple"]))
    assert code2 == 0
    code3, _, err = run_cli(capsys, "cayley",
                            json.dumps(json.loads(out2)["triple"]))
    assert code3 == 2  # complexified triple is not a real KS-triple
    assert json.loads(err)["error"] == "domain-error"


def test_ks_map(capsys):
    code, out, _ = run_cli(capsys, "ks-map", '{"family":"NPlus"}')
    assert code == 0
    assert json.loads(out)["family"] == "NThetaMinus"


def test_act_sj(capsys):
    code, out, _ = run_cli(capsys, "act-sj", GROUP,
                           '{"tau":{"re":0,"im":1},"zeta":{"re":0,"im":0}}')
    assert code == 0
    data = json.loads(out)
    assert abs(data["zeta"]["re"] - 2) < 1e-12
    assert abs(data["zeta"]["im"] - 1) < 1e-12


def test_audit_determinism_and_fail_on_flag(capsys):
    argv = ["audit", "--seed", "42", "--trials", "5"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run_cli(capsys, *(argv + ["--fail-on-flag"]))
    assert code3 == 3


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "--output", str(target), "classify", ELEM)
    assert code == 0
    assert not out
    assert json.loads(target.read_text())["family"] == "PiS_R"


def test_emitted_elements_parse_back(capsys):
    # Round-trip invariant: element JSON the CLI emits parses to an equal value.
    for g_json, v_json in [
        (GROUP, ELEM),
        ('{"a":"0","b":"-1","c":"1","d":"0","lambda":"1/2","mu":"-2","kappa":"0"}',
         '{"x":"3","y":"4","z":"5","p":"-1/3","q":"2","r":"7/2"}'),
    ]:
        code, out, _ = run_cli(capsys, "adjoint", g_json, v_json)
        assert code == 0
        first = AlgebraElement.from_json(json.loads(out))
        code, out2, _ = run_cli(capsys, "adjoint",
                                '{"a":"1","b":"0","c":"0","d":"1"}',
                                json.dumps(first.to_json()))
        assert AlgebraElement.from_json(json.loads(out2)) == first
