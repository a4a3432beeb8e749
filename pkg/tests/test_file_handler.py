import json

import numpy as np
import pandas as pd
import pytest

from pdmwell.file_handler import OutputSpec, OutputWriter


@pytest.fixture
def writer():
    return OutputWriter()


@pytest.mark.parametrize(
    "spec, curves, ok",
    [
        (OutputSpec("csv"), True, True),
        (OutputSpec("svg"), True, True),
        (OutputSpec("svg"), False, False),
        (OutputSpec("xlsx"), True, False),
        (OutputSpec("csv", samples=1), True, False),
    ],
)
def test_validate_format(writer, spec, curves, ok):
    valid, message = writer.validate_format(spec, produces_curves=curves)
    assert valid is ok
    assert bool(message) is not ok


def test_unsupported_message_lists_formats(writer):
    _, message = writer.validate_format(OutputSpec("xlsx"), True)
    assert message == "Unsupported output format. Supported formats: csv, json, svg, text"


def test_csv_render(writer):
    text = writer.render(pd.DataFrame({"x": [0.1, 2.0], "V": [3.0, np.pi]}), "csv")
    lines = text.split("\n")
    assert lines[0] == "x,V"
    assert lines[1] == "0.10000000000000001,3"
    assert "\r" not in text
    assert text.endswith("\n")


def test_json_render(writer):
    text = writer.render({"energy": 3.25, "n": [0, 1]}, "json")
    assert json.loads(text) == {"energy": 3.25, "n": [0, 1]}
    assert text.endswith("}\n")
    with pytest.raises(ValueError):
        writer.render({"energy": float("nan")}, "json")


def test_text_render(writer):
    text = writer.render(pd.DataFrame({"n": [0, 1], "energy": ["3.25 (13/4)", "5.9"]}), "text")
    assert "3.25 (13/4)" in text.splitlines()[1]
    assert writer.render("summary", "text") == "summary\n"


def test_render_unknown_format(writer):
    with pytest.raises(ValueError):
        writer.render({}, "xml")


def test_write_to_file(writer, tmp_path):
    path = tmp_path / "out.json"
    ok, message = writer.write({"a": 1}, OutputSpec("json", str(path)))
    assert ok and message == ""
    assert json.loads(path.read_text()) == {"a": 1}


def test_write_to_stdout(writer, capsys):
    spec = OutputSpec("csv", "-")
    assert spec.to_stdout
    ok, _ = writer.write(pd.DataFrame({"x": [1.5]}), spec)
    assert ok
    assert capsys.readouterr().out == "x\n1.5\n"


def test_write_reports_os_errors(writer, tmp_path):
    ok, message = writer.write({"a": 1}, OutputSpec("json", str(tmp_path / "missing" / "out.json")))
    assert not ok
    assert message.startswith("Error writing output")
