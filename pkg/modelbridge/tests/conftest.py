import json

import pytest

from modelbridge import TrainingConfig, train_classifier, train_summarizer

from _bridge_helpers import run_cli, write_fixture_corpus

SMOKE_RESULTS: dict[str, bool] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not SMOKE_RESULTS:
        return
    terminalreporter.section("acceptance criteria (secondary)")
    for name, passed in SMOKE_RESULTS.items():
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[ACCEPTANCE] {name}: {status}")


@pytest.fixture
def smoke_results():
    return SMOKE_RESULTS


@pytest.fixture(scope="session")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("bridge")


@pytest.fixture(scope="session")
def corpus_file(workdir):
    path = workdir / "corpus.jsonl"
    write_fixture_corpus(path)
    return path


@pytest.fixture(scope="session")
def split_file(workdir, corpus_file):
    path = workdir / "split.json"
    split = {
        "seed": 0,
        "train": ["case-0", "case-1", "case-2"],
        "validation": ["case-3"],
        "test": ["case-4"],
    }
    path.write_text(json.dumps(split), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def marked_dir(workdir, corpus_file, split_file):
    out = workdir / "marked"
    result = run_cli(
        "markup", str(corpus_file), str(split_file),
        "--scheme", "binary2", "--limit", "bart", "--out", str(out),
    )
    assert result.returncode == 0, result.stderr
    return out


@pytest.fixture(scope="session")
def classifier_dir(workdir, corpus_file):
    config = TrainingConfig(max_epochs=1, batch_size=4)
    return train_classifier(corpus_file, corpus_file, config, workdir / "clf")


@pytest.fixture(scope="session")
def summarizer_dir(workdir, marked_dir):
    config = TrainingConfig(max_epochs=1, batch_size=4, selection_metric="rouge2")
    return train_summarizer(
        marked_dir / "train.marked.jsonl",
        marked_dir / "validation.marked.jsonl",
        config,
        workdir / "summ",
    )
