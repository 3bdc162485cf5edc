"""Labeled corpus manifests."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from hybridscan.detection.model import RULE_CWE, Rule
from hybridscan.representation import ParseError, SourceUnit, parse

log = logging.getLogger(__name__)


class ManifestSchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


@lru_cache(maxsize=1)
def manifest_schema() -> dict:
    text = resources.files("hybridscan.evaluation").joinpath("data/manifest.schema.json").read_text("utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class Label:
    path: str
    category: Rule
    start_line: int
    end_line: int
    cwe: int | None = None

    def overlaps(self, start_line: int, end_line: int) -> bool:
        return self.start_line <= end_line and start_line <= self.end_line


@dataclass
class CorpusUnit:
    path: str
    language: str
    size_class: str
    labels: list[Label]
    unit: SourceUnit | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.unit is not None and self.error is None


@dataclass
class Corpus:
    root: Path
    version: str
    units: list[CorpusUnit] = field(default_factory=list)

    @property
    def labels(self) -> list[Label]:
        return [lab for u in self.units for lab in u.labels]

    def source_units(self) -> list[SourceUnit]:
        return [u.unit for u in self.units if u.unit is not None]

    @property
    def flagged(self) -> list[CorpusUnit]:
        return [u for u in self.units if u.error is not None]


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def validate_manifest(doc: dict) -> None:
    errors = sorted(jsonschema.Draft202012Validator(manifest_schema()).iter_errors(doc),
                    key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        e = errors[0]
        raise ManifestSchemaError(_pointer(e.absolute_path), e.message)
    for i, u in enumerate(doc["units"]):
        for j, lab in enumerate(u["labels"]):
            cwe = lab.get("cwe")
            expected = RULE_CWE.get(Rule(lab["category"]))
            if cwe is not None and cwe != expected:
                raise ManifestSchemaError(f"/units/{i}/labels/{j}/cwe",
                                          f"CWE-{cwe} does not belong to {lab['category']}")
            if lab["span"]["endLine"] < lab["span"]["startLine"]:
                raise ManifestSchemaError(f"/units/{i}/labels/{j}/span", "endLine precedes startLine")


def load_corpus(manifest_path: str | Path) -> Corpus:
    manifest_path = Path(manifest_path)
    try:
        doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestSchemaError("", f"not JSON: {exc}") from None
    validate_manifest(doc)
    root = manifest_path.parent
    corpus = Corpus(root, str(doc["version"]))
    if not doc["units"]:
        log.warning("manifest %s lists no units", manifest_path)
    for u in doc["units"]:
        rel = u["path"]
        labels = [
            Label(rel, Rule(lab["category"]), lab["span"]["startLine"], lab["span"]["endLine"],
                  lab.get("cwe", RULE_CWE.get(Rule(lab["category"]))))
            for lab in u["labels"]
        ]
        cu = CorpusUnit(rel, u["language"], u["sizeClass"], labels)
        try:
            cu.unit = SourceUnit.from_text((root / rel).read_text(encoding="utf-8"), rel, u["language"])
            parse(cu.unit)
        except FileNotFoundError:
            cu.error = "missing file"
        except ParseError as exc:
            cu.error = f"parse error at line {exc.span.start_line}: {exc.expected}"
        except (KeyError, ValueError) as exc:
            cu.error = str(exc)
        if cu.error:
            log.warning("corpus unit %s flagged: %s", rel, cu.error)
        corpus.units.append(cu)
    return corpus
