import io
import re
import shlex
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from visemap import get_map
from visemap.cli import run
from visemap.maps import serialize_map

ROOT = Path(__file__).resolve().parents[1]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    shutil.copytree(ROOT / "demos" / "data", tmp_path / "demos" / "data")
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("VISEMAP_CATALOG", raising=False)
    return tmp_path


def readme_examples():
    """(command, expected output) pairs from the console blocks in README.md."""
    text = (ROOT / "README.md").read_text(encoding="utf-8")
    examples = []
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        for chunk in re.split(r"^\$ ", block, flags=re.M)[1:]:
            command, _, output = chunk.partition("\n")
            examples.append((command, output))
    return examples


def test_readme_has_examples():
    assert len(readme_examples()) >= 8


def test_readme_examples_byte_for_byte(workdir):
    # run in order: later examples read files written by earlier ones
    for command, expected in readme_examples():
        argv = shlex.split(command)
        assert argv[0] == "visemap"
        code, out, err = call(*argv[1:])
        assert code == 0, (command, err)
        assert out == expected, command


def test_cf_woodward():
    assert call("cf", "woodward-consonants") == (0, "V=4 P=24 CF=0.167\n", "")


def test_cf_csv():
    code, out, _ = call("cf", "lee-consonants", "--format", "csv")
    assert out == "map_id,visemes,phonemes,cf\nlee-consonants,6,24,0.250000\n"


def test_list_vowels_has_eight_rows():
    code, out, _ = call("list", "--coverage", "vowel")
    assert code == 0 and len(out.splitlines()) == 8
    code, out, _ = call("list", "--format", "csv")
    assert len(out.splitlines()) == 1 + 39


def test_self_score_is_perfect(workdir):
    code, out, _ = call("score", "--ref", "demos/data/ref.tsv", "--hyp", "demos/data/ref.tsv")
    assert code == 0 and out.endswith("C=1.000\n")


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["cf"], ["derive"], ["derive", "--confusions", "x.csv",
                                                                            "--stage", "medium"]])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert "usage:" in err


@pytest.mark.parametrize("argv,name", [
    (["cf", "nobody-consonants"], "UnknownMap"),
    (["combine", "--consonants", "lee-vowels", "--vowels", "lee-vowels"], "CoverageMismatch"),
    (["derive", "--confusions", "missing.csv"], "FileNotFoundError"),
    (["derive", "--confusions", "demos/data/talker.csv", "--classes", "split"], "ValueError"),
])
def test_domain_errors_exit_1(workdir, argv, name):
    code, out, err = call(*argv)
    assert code == 1
    assert err.startswith(f"visemap: {name}:")


def test_overlapping_map_file_exit_1(workdir):
    Path("bad.map").write_text("# id: bad\n# coverage: consonant\nA: p b\nB: p\n", encoding="utf-8")
    code, _, err = call("cf", "bad.map")
    assert code == 1 and "OverlappingClasses" in err


def test_extra_catalog_env(workdir, monkeypatch):
    extra = workdir / "extra"
    extra.mkdir()
    text = serialize_map(get_map("lee-vowels")).replace("# id: lee-vowels", "# id: my-vowels")
    (extra / "mine.map").write_text(text, encoding="utf-8")
    monkeypatch.setenv("VISEMAP_CATALOG", str(extra))
    code, out, _ = call("list", "--coverage", "vowel")
    assert code == 0 and len(out.splitlines()) == 9
    (extra / "dup.map").write_text(serialize_map(get_map("lee-vowels")), encoding="utf-8")
    code, _, err = call("list")
    assert code == 1 and "DuplicateMapId" in err


def test_outputs_are_atomic_and_deterministic(workdir):
    args = ["derive", "--confusions", "demos/data/talker.csv", "--stage", "loose", "-o", "a.map"]
    assert call(*args)[0] == 0
    first = Path("a.map").read_bytes()
    assert call(*args)[0] == 0
    assert Path("a.map").read_bytes() == first
    assert sorted(p.name for p in workdir.iterdir()) == ["a.map", "demos"]  # no temp files left


def test_failed_command_leaves_existing_output(workdir):
    Path("out.map").write_text("keep\n", encoding="utf-8")
    code, _, _ = call("combine", "--consonants", "lee-vowels", "--vowels", "lee-vowels", "-o", "out.map")
    assert code == 1
    assert Path("out.map").read_text(encoding="utf-8") == "keep\n"


def test_sweep_missing_hypotheses(workdir):
    code, _, err = call("sweep", "--consonant-maps", "woodward-consonants", "--vowel-maps", "lee-vowels",
                        "--ref", "demos/data/ref.tsv", "--hyp-dir", "demos/data/hyps")
    assert code == 1 and "IncompleteSweep" in err


def test_installed_entry_point(workdir):
    exe = shutil.which("visemap")
    cmd = [exe] if exe else [sys.executable, "-m", "visemap.cli"]
    proc = subprocess.run(cmd + ["cf", "woodward-consonants"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "V=4 P=24 CF=0.167\n"
    proc = subprocess.run(cmd + ["bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
