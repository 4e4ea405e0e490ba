from __future__ import annotations

import io
from pathlib import Path

import pytest

from lyndon_induce.config import CheckConfig, InputConfig, OutputConfig, RunConfig
from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.options_enum import CheckStatus, EmitKind, LyndonVariant, OutputFormat
from lyndon_induce.pipeline import InputSource, check_limits, ingest, run_bench, run_pipeline, write_outputs
from lyndon_induce.serialization import load_binary

# ---------------------------------------------------------------------------
# InputSource / ingest
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [{}, {"text": "a", "generator": "bbba:4"}, {"text": "a", "file": Path("x")}],
)
def test_input_source_needs_exactly_one(kwargs: dict[str, object]) -> None:
    with pytest.raises(LyndonInduceError) as excinfo:
        InputSource(**kwargs)  # type: ignore[arg-type]
    assert excinfo.value.code is ErrorCode.FLAG_CONFLICT


def test_input_source_names(tmp_path: Path) -> None:
    assert InputSource(text="abc").name == "text"
    assert InputSource(file=tmp_path / "dna.txt").name == "dna.txt"
    assert InputSource(generator="rand:10").name == "rand4:10:0"


def test_ingest_file(tmp_path: Path) -> None:
    path = tmp_path / "in.bin"
    path.write_bytes(b"banana")

    text = ingest(InputSource(file=path), InputConfig())

    assert text.raw == b"banana"


def test_ingest_missing_file_is_io_error(tmp_path: Path) -> None:
    with pytest.raises(LyndonInduceError) as excinfo:
        ingest(InputSource(file=tmp_path / "absent"), InputConfig())
    assert excinfo.value.code is ErrorCode.IO_ERROR


def test_ingest_remap_accepts_zero_bytes(tmp_path: Path) -> None:
    path = tmp_path / "in.bin"
    path.write_bytes(b"\x00\xff\x00")

    text = ingest(InputSource(file=path), InputConfig(remap=True))

    assert text.raw == b"\x01\x02\x01"


def test_ingest_zero_byte_without_remap(tmp_path: Path) -> None:
    path = tmp_path / "in.bin"
    path.write_bytes(b"a\x00b")

    with pytest.raises(LyndonInduceError) as excinfo:
        ingest(InputSource(file=path), InputConfig())
    assert excinfo.value.code is ErrorCode.SENTINEL_IN_INPUT


def test_ingest_empty_rejected_when_disallowed() -> None:
    with pytest.raises(LyndonInduceError) as excinfo:
        ingest(InputSource(text=""), InputConfig(allow_empty=False))
    assert excinfo.value.code is ErrorCode.EMPTY_INPUT


def test_check_limits() -> None:
    assert check_limits(CheckConfig()) is None
    limits = check_limits(CheckConfig(enabled=True, brute_force_max_n=10))
    assert limits is not None
    assert limits.brute_force_max_n == 10


# ---------------------------------------------------------------------------
# run_pipeline / write_outputs
# ---------------------------------------------------------------------------


def test_run_pipeline_text_both_columns() -> None:
    stdout = io.StringIO()

    outcome = run_pipeline(RunConfig(), InputSource(text="banana"), stdout)

    assert stdout.getvalue().splitlines() == ["7\t1", "6\t2", "4\t1", "2\t2", "1\t1", "5\t1", "3\t1"]
    assert outcome.report.check_status is CheckStatus.SKIPPED


def test_run_pipeline_with_check() -> None:
    config = RunConfig(check=CheckConfig(enabled=True), output=OutputConfig(emit=EmitKind.LA))
    stdout = io.StringIO()

    outcome = run_pipeline(config, InputSource(generator="bbba:100"), stdout)

    assert outcome.report.check_status is CheckStatus.PASS
    assert stdout.getvalue() == "1\n" * 101


def test_run_pipeline_raises_on_check_failure(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr("lyndon_induce.bench.compare_with_oracles", lambda *args: CheckStatus.FAIL)
    config = RunConfig(check=CheckConfig(enabled=True))
    stdout = io.StringIO()

    with pytest.raises(LyndonInduceError) as excinfo:
        run_pipeline(config, InputSource(text="banana"), stdout)

    assert excinfo.value.code is ErrorCode.CHECK_FAILED
    assert len(stdout.getvalue().splitlines()) == 7


def test_run_pipeline_binary_needs_path() -> None:
    config = RunConfig(output=OutputConfig(format=OutputFormat.BINARY))

    with pytest.raises(LyndonInduceError, match="--out"):
        run_pipeline(config, InputSource(text="abc"), io.StringIO())


def test_run_pipeline_sa_only_cannot_emit_lyndon_array() -> None:
    config = RunConfig(variant=LyndonVariant.SA_ONLY)

    with pytest.raises(LyndonInduceError) as excinfo:
        run_pipeline(config, InputSource(text="abc"), io.StringIO())
    assert excinfo.value.code is ErrorCode.FLAG_CONFLICT


def test_run_pipeline_binary_both_arrays(tmp_path: Path) -> None:
    out = tmp_path / "banana"
    config = RunConfig(output=OutputConfig(format=OutputFormat.BINARY, path=out, width=8))

    outcome = run_pipeline(config, InputSource(text="banana"), io.StringIO())

    assert load_binary(Path(f"{out}.sa")).tolist() == [7, 6, 4, 2, 1, 5, 3]
    assert load_binary(Path(f"{out}.la")).tolist() == [1, 2, 1, 2, 1, 1, 1]
    assert outcome.outputs.sa is not None


def test_write_outputs_single_binary_array_uses_path(tmp_path: Path) -> None:
    out = tmp_path / "la.bin"
    config = RunConfig(output=OutputConfig(emit=EmitKind.LA, format=OutputFormat.BINARY, path=out))
    outcome = run_pipeline(config, InputSource(text="banana"), io.StringIO())

    written = write_outputs(outcome.outputs, config.output, io.StringIO())

    assert written == [out]
    assert outcome.outputs.sa is None


def test_write_outputs_text_file(tmp_path: Path) -> None:
    out = tmp_path / "sa.txt"
    config = RunConfig(output=OutputConfig(emit=EmitKind.SA, path=out))
    stdout = io.StringIO()

    run_pipeline(config, InputSource(text="ab"), stdout)

    assert stdout.getvalue() == ""
    assert out.read_text() == "3\n1\n2\n"


def test_write_outputs_unwritable_path(tmp_path: Path) -> None:
    config = RunConfig(output=OutputConfig(path=tmp_path / "missing" / "out.txt"))

    with pytest.raises(LyndonInduceError) as excinfo:
        run_pipeline(config, InputSource(text="ab"), io.StringIO())
    assert excinfo.value.code is ErrorCode.IO_ERROR


# ---------------------------------------------------------------------------
# run_bench
# ---------------------------------------------------------------------------


def test_run_bench_expands_generators() -> None:
    config = RunConfig.model_validate({"bench": {"double": 2}})

    reports = run_bench(config, [InputSource(generator="fib:64"), InputSource(text="banana")], [LyndonVariant.INPLACE])

    assert [(r.input_name, r.n) for r in reports] == [("fib:64", 65), ("fib:128", 129), ("fib:256", 257), ("text", 7)]
