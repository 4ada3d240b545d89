"""Benchmark manifests: what was generated, from what, with which knobs.

A manifest is a single JSON document at the root of a generated benchmark
directory. It pins every corruption parameter and a content hash per
stimulus, so a run can be audited and regenerated bit-identically.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

MANIFEST_NAME = "manifest.json"
SCHEMA_VERSION = 1


class ManifestError(ValueError):
    pass


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class ManifestItem:
    id: str
    index: int
    label: int
    sha256: str
    file: str | None = None


@dataclass
class ConditionRecord:
    direction: str
    interval: int
    dir: str
    format: str  # "png" or "idx"
    items: list[ManifestItem] = field(default_factory=list)
    images_idx: str | None = None
    labels_idx: str | None = None
    images_sha256: str | None = None
    labels_sha256: str | None = None

    @property
    def count(self) -> int:
        return len(self.items)


@dataclass
class BenchmarkManifest:
    dataset: str
    source: str
    seed: int
    params: dict
    class_names: list[str]
    conditions: list[ConditionRecord] = field(default_factory=list)
    source_indices: list[int] | None = None
    schema_version: int = SCHEMA_VERSION

    @property
    def total_stimuli(self) -> int:
        return sum(c.count for c in self.conditions)

    def condition(self, direction: str, interval: int) -> ConditionRecord:
        for cond in self.conditions:
            if cond.direction == direction and cond.interval == int(interval):
                return cond
        raise ManifestError(f"no condition {direction}/{interval} in manifest")

    def to_json(self) -> str:
        doc = asdict(self)
        doc["total_stimuli"] = self.total_stimuli
        for cond in doc["conditions"]:
            cond["count"] = len(cond["items"])
        return json.dumps(doc, indent=2, sort_keys=True)

    def save(self, out_dir) -> Path:
        path = Path(out_dir) / MANIFEST_NAME
        path.write_text(self.to_json(), encoding="utf-8")
        return path


def load_manifest(path) -> BenchmarkManifest:
    """Read a manifest.json (or the directory containing one)."""
    p = Path(path)
    if p.is_dir():
        p = p / MANIFEST_NAME
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ManifestError(f"no manifest at {p}")
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest {p} is not valid JSON: {exc}")

    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ManifestError(f"unsupported manifest schema_version {doc.get('schema_version')}")

    conditions = []
    for cond in doc.get("conditions", []):
        items = [
            ManifestItem(
                id=i["id"], index=i["index"], label=i["label"],
                sha256=i["sha256"], file=i.get("file"),
            )
            for i in cond.get("items", [])
        ]
        conditions.append(
            ConditionRecord(
                direction=cond["direction"],
                interval=cond["interval"],
                dir=cond["dir"],
                format=cond["format"],
                items=items,
                images_idx=cond.get("images_idx"),
                labels_idx=cond.get("labels_idx"),
                images_sha256=cond.get("images_sha256"),
                labels_sha256=cond.get("labels_sha256"),
            )
        )
    return BenchmarkManifest(
        dataset=doc["dataset"],
        source=doc["source"],
        seed=doc["seed"],
        params=doc["params"],
        class_names=list(doc["class_names"]),
        conditions=conditions,
        source_indices=doc.get("source_indices"),
    )
