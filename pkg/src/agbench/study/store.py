"""Session bookkeeping for the human classification study.

A session is a fixed-order walk over three blocks, always in the same
order: 100 low-resolution digit stimuli, 100 high-resolution digit
stimuli, 160 silhouettes (sizes come from the generated store). One
condition (direction, interval) applies per block. Responses are forced
choice, accepted only for the cursor stimulus, and immutable once
recorded.

Persistence is one append-only JSON-lines file per session: a header line
carrying the full stimulus order (with truth, server-side only) followed
by one line per response. Accuracy can always be recounted from the file
alone.

Clients never see truth before completion: stimuli travel under opaque
per-session ids and result payloads stay aggregate-free until the last
response is in.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..manifest import BenchmarkManifest, load_manifest
from ..validation import check_direction, check_interval

BLOCK_ORDER = ("mnist", "mnist_hires", "silhouettes")


class StudyError(ValueError):
    """Client-correctable study errors; `status` is the HTTP mapping."""

    def __init__(self, message: str, status: int = 400):
        super().__init__(message)
        self.status = status


@dataclass
class Stimulus:
    file: str         # path relative to the store root
    label_index: int
    label_name: str
    source_id: str    # manifest item id within its dataset


@dataclass
class Block:
    kind: str
    direction: str
    interval: int
    allowed_labels: list[str]
    stimuli: list[Stimulus]


@dataclass
class Session:
    session_id: str
    seed: int
    subject_tag: str | None
    created_at: float
    blocks: list[Block]
    responses: list[dict] = field(default_factory=list)

    @property
    def order(self) -> list[tuple[int, Stimulus]]:
        flat = []
        for b, block in enumerate(self.blocks):
            flat.extend((b, s) for s in block.stimuli)
        return flat

    @property
    def total(self) -> int:
        return sum(len(b.stimuli) for b in self.blocks)

    @property
    def cursor(self) -> int:
        return len(self.responses)

    @property
    def done(self) -> bool:
        return self.cursor >= self.total

    def stimulus_token(self, index: int) -> str:
        return f"{self.session_id}.{index:04d}"


class StudyStore:
    """Sessions over a generated benchmark store directory.

    The store holds one generated benchmark per block kind
    (`<store>/mnist`, `<store>/mnist_hires`, `<store>/silhouettes`) and a
    `sessions/` directory of JSONL logs, created on demand.
    """

    def __init__(self, root):
        self.root = Path(root)
        self.sessions_dir = self.root / "sessions"
        self._manifests: dict[str, BenchmarkManifest] = {}
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._create_lock = threading.Lock()
        self._load_existing()

    # -- store plumbing ------------------------------------------------

    def manifest(self, kind: str) -> BenchmarkManifest:
        if kind not in self._manifests:
            path = self.root / kind
            if not (path / "manifest.json").exists():
                raise StudyError(f"store has no generated dataset {kind!r}", status=404)
            self._manifests[kind] = load_manifest(path)
        return self._manifests[kind]

    def _load_existing(self):
        if not self.sessions_dir.is_dir():
            return
        for path in sorted(self.sessions_dir.glob("*.jsonl")):
            session = _read_session_file(path)
            self._sessions[session.session_id] = session
            self._locks[session.session_id] = threading.Lock()

    def _session_path(self, session_id: str) -> Path:
        return self.sessions_dir / f"{session_id}.jsonl"

    def _append(self, session_id: str, record: dict):
        with self._session_path(session_id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    # -- operations -----------------------------------------------------

    def create_session(self, conditions: dict, seed: int = 0,
                       subject_tag: str | None = None) -> Session:
        """Fix a session's stimulus order from one condition per block.

        `conditions` maps each block kind to {"direction": ..., "interval": ...};
        all three protocol blocks are required, and each condition must
        exist in the generated store.
        """
        missing = [k for k in BLOCK_ORDER if k not in conditions]
        if missing:
            raise StudyError(f"conditions required for blocks: {missing}")

        blocks = []
        rng = np.random.default_rng(seed)
        for kind in BLOCK_ORDER:
            cond = conditions[kind]
            direction = cond["direction"]
            interval = cond["interval"]
            try:
                check_direction(direction)
                check_interval(interval)
            except ValueError as exc:
                raise StudyError(str(exc))
            manifest = self.manifest(kind)
            try:
                record = manifest.condition(direction, interval)
            except ValueError:
                raise StudyError(
                    f"{kind} has no generated condition {direction}/{interval}",
                    status=404,
                )
            if record.format != "png":
                raise StudyError(f"{kind} condition {record.dir} has no PNG stimuli")
            stimuli = [
                Stimulus(
                    file=f"{kind}/{item.file}",
                    label_index=item.label,
                    label_name=manifest.class_names[item.label],
                    source_id=item.id,
                )
                for item in record.items
            ]
            order = rng.permutation(len(stimuli))
            blocks.append(Block(
                kind=kind, direction=direction, interval=interval,
                allowed_labels=list(manifest.class_names),
                stimuli=[stimuli[i] for i in order],
            ))

        session = Session(
            session_id=uuid.uuid4().hex[:12],
            seed=int(seed),
            subject_tag=subject_tag,
            created_at=time.time(),
            blocks=blocks,
        )
        with self._create_lock:
            self.sessions_dir.mkdir(parents=True, exist_ok=True)
            self._sessions[session.session_id] = session
            self._locks[session.session_id] = threading.Lock()
        self._append(session.session_id, _session_header(session))
        return session

    def get_session(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise StudyError(f"unknown session {session_id!r}", status=404)

    def next_stimulus(self, session_id: str) -> dict:
        """Descriptor of the cursor stimulus; never includes truth."""
        session = self.get_session(session_id)
        k = session.cursor
        if k >= session.total:
            return {"done": True, "answered": k, "total": session.total}
        block_idx, _ = session.order[k]
        block = session.blocks[block_idx]
        offset = sum(len(b.stimuli) for b in session.blocks[:block_idx])
        token = session.stimulus_token(k)
        return {
            "done": False,
            "stimulus_id": token,
            "image_url": f"/stimuli/{token}.png",
            "index": k,
            "total": session.total,
            "allowed_labels": block.allowed_labels,
            "block": {
                "kind": block.kind,
                "index": block_idx,
                "position": k - offset,
                "size": len(block.stimuli),
                "direction": block.direction,
                "interval": block.interval,
            },
        }

    def stimulus_bytes(self, token: str) -> bytes:
        """Resolve an opaque stimulus token to its PNG payload.

        Only stimuli at or before the session cursor are served, so a
        client cannot scan ahead through the fixed order.
        """
        session_id, _, index_text = token.partition(".")
        session = self.get_session(session_id)
        try:
            index = int(index_text)
        except ValueError:
            raise StudyError(f"bad stimulus token {token!r}", status=404)
        if not (0 <= index < session.total):
            raise StudyError(f"bad stimulus token {token!r}", status=404)
        if index > session.cursor:
            raise StudyError("stimulus not yet reachable", status=403)
        _, stimulus = session.order[index]
        return (self.root / stimulus.file).read_bytes()

    def record_response(self, session_id: str, stimulus_id: str, label: str) -> dict:
        """Append a forced-choice response for the cursor stimulus."""
        session = self.get_session(session_id)
        with self._locks[session_id]:
            if session.done:
                raise StudyError("session already complete", status=409)
            k = session.cursor
            expected = session.stimulus_token(k)
            if stimulus_id != expected:
                raise StudyError(
                    f"response out of order: expected stimulus {expected}, "
                    f"got {stimulus_id}",
                    status=409,
                )
            block_idx, _ = session.order[k]
            block = session.blocks[block_idx]
            if label not in block.allowed_labels:
                raise StudyError(
                    f"label {label!r} not in the {block.kind} block's allowed set"
                )
            record = {
                "type": "response",
                "index": k,
                "stimulus_id": stimulus_id,
                "label": label,
                "timestamp": time.time(),
            }
            self._append(session_id, record)
            session.responses.append(record)
            return {"accepted": True, "answered": session.cursor, "total": session.total}

    def results(self, session_id: str) -> dict:
        """Per-block accuracies once complete; a bare progress stub before.

        Partial sessions are flagged partial and expose no correctness
        information (truth isolation).
        """
        session = self.get_session(session_id)
        if not session.done:
            return {
                "session_id": session_id,
                "partial": True,
                "answered": session.cursor,
                "total": session.total,
            }
        blocks = []
        responses = []
        cursor = 0
        for block_idx, block in enumerate(session.blocks):
            correct = 0
            for stimulus in block.stimuli:
                response = session.responses[cursor]
                is_correct = response["label"] == stimulus.label_name
                correct += is_correct
                responses.append({
                    "index": cursor,
                    "block": block_idx,
                    "stimulus_id": response["stimulus_id"],
                    "source_id": stimulus.source_id,
                    "label": response["label"],
                    "truth": stimulus.label_name,
                    "correct": is_correct,
                    "timestamp": response["timestamp"],
                })
                cursor += 1
            blocks.append({
                "kind": block.kind,
                "direction": block.direction,
                "interval": block.interval,
                "correct": correct,
                "total": len(block.stimuli),
                "accuracy": correct / len(block.stimuli) if block.stimuli else 0.0,
            })
        return {
            "session_id": session_id,
            "partial": False,
            "subject_tag": session.subject_tag,
            "blocks": blocks,
            "responses": responses,
        }

    def recount(self, session_id: str) -> list[dict]:
        """Recompute per-block tallies from the persisted log alone."""
        session = _read_session_file(self._session_path(session_id))
        blocks = []
        cursor = 0
        for block in session.blocks:
            correct = total = 0
            for stimulus in block.stimuli:
                if cursor >= len(session.responses):
                    break
                correct += session.responses[cursor]["label"] == stimulus.label_name
                total += 1
                cursor += 1
            blocks.append({"kind": block.kind, "correct": correct, "total": total})
        return blocks


def _session_header(session: Session) -> dict:
    return {
        "type": "session",
        "session_id": session.session_id,
        "seed": session.seed,
        "subject_tag": session.subject_tag,
        "created_at": session.created_at,
        "blocks": [
            {
                "kind": b.kind,
                "direction": b.direction,
                "interval": b.interval,
                "allowed_labels": b.allowed_labels,
                "stimuli": [
                    {
                        "file": s.file,
                        "label_index": s.label_index,
                        "label_name": s.label_name,
                        "source_id": s.source_id,
                    }
                    for s in b.stimuli
                ],
            }
            for b in session.blocks
        ],
    }


def _read_session_file(path: Path) -> Session:
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise StudyError(f"empty session file {path}", status=500)
    header = json.loads(lines[0])
    if header.get("type") != "session":
        raise StudyError(f"malformed session file {path}", status=500)
    blocks = [
        Block(
            kind=b["kind"],
            direction=b["direction"],
            interval=b["interval"],
            allowed_labels=list(b["allowed_labels"]),
            stimuli=[
                Stimulus(
                    file=s["file"],
                    label_index=s["label_index"],
                    label_name=s["label_name"],
                    source_id=s["source_id"],
                )
                for s in b["stimuli"]
            ],
        )
        for b in header["blocks"]
    ]
    session = Session(
        session_id=header["session_id"],
        seed=header["seed"],
        subject_tag=header.get("subject_tag"),
        created_at=header["created_at"],
        blocks=blocks,
    )
    for line in lines[1:]:
        record = json.loads(line)
        if record.get("type") == "response":
            session.responses.append(record)
    return session
