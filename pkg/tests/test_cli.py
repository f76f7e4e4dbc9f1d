import json
import random

import pytest

from rcled import checks, cli
from rcled.cli import PathSyntaxError, main, parse_path, render_path
from rcled.crystal import RowElement

E = RowElement.parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParsePath:
    def test_separators(self):
        expected = [E("11"), E("2"), E("122")]
        assert parse_path("11.2.122") == expected
        assert parse_path("11, 2 ,122") == expected
        assert parse_path(" 11..2\t122 ") == expected

    @pytest.mark.parametrize("text, pos", [("", 0), ("  ", 0), ("11.3", 3), ("11.21", 4)])
    def test_errors(self, text, pos):
        with pytest.raises(PathSyntaxError) as info:
            parse_path(text)
        assert info.value.position == pos

    def test_render_round_trip(self, path_b):
        text = render_path(path_b)
        assert parse_path(text) == path_b
        assert render_path(parse_path(text)) == text

    def test_render_random(self):
        rng = random.Random(4)
        for _ in range(50):
            path = checks.random_path(rng, 15, 6)
            assert parse_path(render_path(path)) == path


class TestKkr:
    def test_json_single_box(self, capsys):
        code, out, _ = run(capsys, "kkr", "1", "--json")
        assert code == 0
        assert out == '{"lambda":[1],"rows":[],"vacancy":{}}\n'

    def test_methods_agree(self, capsys):
        corpus = checks.sample(9, 40, 12, 4)
        for path in corpus:
            text = render_path(path)
            _, a, _ = run(capsys, "kkr", text, "--json")
            _, b, _ = run(capsys, "kkr", text, "--json", "--method", "crystal")
            assert a == b

    def test_text_output(self, capsys, path_a):
        code, out, _ = run(capsys, "kkr", render_path(path_a))
        assert code == 0
        assert "(6,1)" in out and "(2,2)" in out and "(1,1)" in out

    def test_bad_path(self, capsys):
        code, _, err = run(capsys, "kkr", "1.21")
        assert code == 1
        assert err.startswith("error:")


class TestLed:
    def test_json(self, capsys, path_a):
        code, out, _ = run(capsys, "led", render_path(path_a), "--json")
        assert code == 0
        d = json.loads(out)
        assert [g["mu"] for g in d["groups"]] == [2, 1, 6]

    def test_bottomup_same_groups(self, capsys, path_a):
        _, a, _ = run(capsys, "led", render_path(path_a), "--json")
        _, b, _ = run(capsys, "led", render_path(path_a), "--json", "--bottomup")
        key = lambda d: sorted(map(str, d["groups"]))  # noqa: E731
        assert key(json.loads(a)) == key(json.loads(b))

    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "led", "2.12")
        assert code == 0
        assert "2*" not in out and "1*" in out


class TestEvolve:
    def test_steps(self, capsys):
        code, out, _ = run(capsys, "evolve", "2.2.1.1.1.1.1", "--l", "2", "--steps", "2")
        assert code == 0
        assert out.splitlines() == ["2.2.1.1.1.1.1", "1.1.2.2.1.1.1", "1.1.1.1.2.2.1"]

    def test_periodic(self, capsys):
        code, out, _ = run(capsys, "evolve", "1 1 2", "--l", "1", "--periodic")
        assert code == 0
        assert out.splitlines()[-1] == "2.1.1"

    def test_periodic_rejects(self, capsys):
        code, _, err = run(capsys, "evolve", "12.1", "--l", "1", "--periodic")
        assert code == 1 and "error" in err

    def test_missing_l(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["evolve", "2.1"])
        assert info.value.code == 1


class TestEnergy:
    def test_example_a(self, capsys, path_a):
        code, out, _ = run(capsys, "energy", render_path(path_a), "--lmax", "6")
        assert code == 0
        assert out.splitlines()[0] == "E_1 = 3"
        assert out.splitlines()[-1] == "E_6 = 9"

    def test_default_range(self, capsys):
        _, out, _ = run(capsys, "energy", "2.1")
        assert out.splitlines() == ["E_1 = 1", "E_2 = 1"]


class TestRcToPath:
    def test_small(self, capsys):
        code, out, _ = run(capsys, "rc-to-path", "--lambda", "1,2", "--rows", "2:-2")
        assert code == 0
        assert out.strip() == "2.12"

    def test_no_rows(self, capsys):
        _, out, _ = run(capsys, "rc-to-path", "--lambda", "2,1")
        assert out.strip() == "11.1"

    def test_invalid(self, capsys):
        code, _, err = run(capsys, "rc-to-path", "--lambda", "2", "--rows", "1:5")
        assert code == 1 and "error" in err

    def test_malformed_row(self, capsys):
        code, _, err = run(capsys, "rc-to-path", "--lambda", "2", "--rows", "1-5")
        assert code == 1 and "LENGTH:RIGGING" in err


class TestCheck:
    def test_exhaustive_small(self, capsys):
        code, out, _ = run(capsys, "check", "--exhaustive", "--max-factors", "3",
                           "--max-capacity", "2")
        assert code == 0
        assert "0 failures" in out.splitlines()[-1]

    def test_random(self, capsys):
        code, out, _ = run(capsys, "check", "--random", "5", "--max-factors", "8")
        assert code == 0
        assert "FAIL" not in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        def broken(*args, **kwargs):
            tally = checks.Tally()
            tally.record("always_false", False, [E("2")])
            return tally

        monkeypatch.setattr(cli.checks, "full_suite", broken)
        code, out, _ = run(capsys, "check", "--random", "1")
        assert code == 2
        assert "FAIL always_false" in out

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["check", "--exhaustive", "--random", "3"])
        assert info.value.code == 1
