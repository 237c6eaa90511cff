# wknots/corpus/__init__.py
"""Bundled Gauss codes and the tables they are expected to reproduce."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

import yaml

from wknots.alexander import LaurentPoly, parse_laurent
from wknots.config import settings
from wknots.errors import WKnotsError
from wknots.knots import GaussDiagram, parse_gauss_code

logger = logging.getLogger("wknots.corpus")

EXPECTED_FILE = "expected.yaml"


class CorpusError(WKnotsError):
    """Raised for a missing or malformed corpus directory."""


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: Path
    diagram: GaussDiagram
    alexander: Optional[LaurentPoly] = None


def corpus_dir(directory: Optional[Path] = None) -> Path:
    path = Path(directory) if directory is not None else Path(settings.corpus_dir)
    if not path.is_dir():
        raise CorpusError(f"corpus directory {path} does not exist")
    return path


def read_gauss_file(path: Path) -> GaussDiagram:
    return parse_gauss_code(Path(path).read_text(encoding="utf-8"))


def load_expected(directory: Optional[Path] = None) -> Dict:
    path = corpus_dir(directory) / EXPECTED_FILE
    if not path.is_file():
        logger.warning("No %s in %s", EXPECTED_FILE, path.parent)
        return {}
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise CorpusError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise CorpusError(f"{path}: expected a mapping at top level")
    return data


def load_corpus(directory: Optional[Path] = None) -> List[CorpusEntry]:
    """Every *.gauss file, with its expected polynomial when expected.yaml names one."""
    root = corpus_dir(directory)
    by_file = {
        str(meta.get("file")): (name, meta.get("alexander"))
        for name, meta in (load_expected(root).get("knots") or {}).items()
    }
    entries = []
    for path in sorted(root.glob("*.gauss")):
        name, poly = by_file.get(path.name, (path.stem, None))
        entries.append(
            CorpusEntry(
                name=str(name),
                path=path,
                diagram=read_gauss_file(path),
                alexander=parse_laurent(str(poly)) if poly is not None else None,
            )
        )
    logger.info("Loaded %d corpus diagrams from %s", len(entries), root)
    return entries


def expected_dimensions(skeleton: str, space: str, directory: Optional[Path] = None) -> List[int]:
    return list((load_expected(directory).get("dimensions") or {}).get(skeleton, {}).get(space, []))


def expected_primitives(skeleton: str, space: str, directory: Optional[Path] = None) -> List[int]:
    return list((load_expected(directory).get("primitives") or {}).get(skeleton, {}).get(space, []))
