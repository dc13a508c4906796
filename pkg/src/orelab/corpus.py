"""The bundled ring corpus (``data/corpus/*.ring``)."""

from __future__ import annotations

from importlib import resources

from .finring import FiniteRing
from .ringspec import parse_ring


def corpus_names() -> list[str]:
    files = resources.files("orelab") / "data" / "corpus"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".ring"))


def corpus_spec(name: str) -> str:
    path = resources.files("orelab") / "data" / "corpus" / f"{name}.ring"
    return path.read_text(encoding="utf-8").strip()


def load_corpus() -> dict[str, FiniteRing]:
    return {name: parse_ring(corpus_spec(name)) for name in corpus_names()}
