import pytest
from hypothesis import settings as hypothesis_settings

from verbclosure.core.grammar import parse_word

hypothesis_settings.register_profile("verbclosure", max_examples=200, deadline=None)
hypothesis_settings.load_profile("verbclosure")


@pytest.fixture
def word():
    return parse_word


@pytest.fixture
def corpus_file(tmp_path):
    def write(*lines):
        path = tmp_path / "corpus.jsonl"
        raw = [line if isinstance(line, bytes) else line.encode("utf-8") for line in lines]
        path.write_bytes(b"\n".join(raw) + (b"\n" if raw else b""))
        return path
    return write
