import json
import sys
from pathlib import Path

import pytest

from fockrank.corpus import build_index
from fockrank.gfdata import GF_DOCS

# make the straight-line oracle importable as `gf_oracle`
sys.path.insert(0, str(Path(__file__).parent / "oracles"))


@pytest.fixture(scope="session")
def gf_index():
    return build_index(GF_DOCS)


@pytest.fixture()
def gf_corpus_path(tmp_path):
    path = tmp_path / "gf.jsonl"
    lines = [json.dumps({"id": doc_id, "text": text}) for doc_id, text in GF_DOCS]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
