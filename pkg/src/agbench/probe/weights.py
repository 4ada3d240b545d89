"""Framework-neutral weight bundles for the convolutional stem.

A bundle is a JSON manifest next to a raw blob of little-endian f32
values. The manifest lists each tensor's name, shape and byte offset into
the blob. Any training framework can emit this with a few lines, which
keeps the probe free of framework dependencies.

Required tensors: conv_weights (out, in, kh, kw) and the four per-channel
batch-norm vectors bn_gamma, bn_beta, bn_mean, bn_var.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

TENSOR_NAMES = ("conv_weights", "bn_gamma", "bn_beta", "bn_mean", "bn_var")


class WeightBundleError(ValueError):
    """Raised for inconsistent bundle manifests or blobs."""


@dataclass
class WeightBundle:
    conv_weights: np.ndarray
    bn_gamma: np.ndarray
    bn_beta: np.ndarray
    bn_mean: np.ndarray
    bn_var: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.conv_weights = np.asarray(self.conv_weights, dtype=np.float32)
        for name in TENSOR_NAMES[1:]:
            setattr(self, name, np.asarray(getattr(self, name), dtype=np.float32))
        if self.conv_weights.ndim != 4:
            raise WeightBundleError(
                f"conv_weights must be rank 4, got shape {self.conv_weights.shape}"
            )
        channels = self.conv_weights.shape[0]
        for name in TENSOR_NAMES[1:]:
            vec = getattr(self, name)
            if vec.shape != (channels,):
                raise WeightBundleError(
                    f"{name} must have shape ({channels},), got {vec.shape}"
                )
        if np.any(self.bn_var < 0):
            raise WeightBundleError("bn_var entries must be >= 0")
        for name in TENSOR_NAMES:
            if not np.all(np.isfinite(getattr(self, name))):
                raise WeightBundleError(f"{name} contains non-finite values")

    @property
    def channels(self) -> int:
        return self.conv_weights.shape[0]

    def tensors(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in TENSOR_NAMES}


def save_weight_bundle(bundle: WeightBundle, manifest_path, blob_path=None) -> None:
    """Write `<name>.json` + blob; the manifest records the blob filename."""
    manifest_path = Path(manifest_path)
    if blob_path is None:
        blob_path = manifest_path.with_suffix(".bin")
    blob_path = Path(blob_path)

    chunks = []
    records = []
    offset = 0
    for name, tensor in bundle.tensors().items():
        raw = tensor.astype("<f4").tobytes(order="C")
        records.append({
            "name": name,
            "shape": list(tensor.shape),
            "dtype": "f32",
            "offset": offset,
        })
        chunks.append(raw)
        offset += len(raw)

    blob_path.write_bytes(b"".join(chunks))
    doc = {
        "blob": blob_path.name,
        "byte_order": "little",
        "tensors": records,
        "metadata": bundle.metadata,
    }
    manifest_path.write_text(json.dumps(doc, indent=2), encoding="utf-8")


def load_weight_bundle(manifest_path, blob: bytes | None = None) -> WeightBundle:
    """Load a bundle from its manifest; blob bytes may be passed directly."""
    manifest_path = Path(manifest_path)
    try:
        doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise WeightBundleError(f"bundle manifest is not valid JSON: {exc}") from exc

    if blob is None:
        blob = (manifest_path.parent / doc["blob"]).read_bytes()
    if doc.get("byte_order", "little") != "little":
        raise WeightBundleError("only little-endian blobs are supported")

    arrays: dict[str, np.ndarray] = {}
    for rec in doc.get("tensors", []):
        name, shape, offset = rec["name"], tuple(rec["shape"]), int(rec["offset"])
        if rec.get("dtype", "f32") != "f32":
            raise WeightBundleError(f"tensor {name}: only f32 supported")
        n_bytes = int(np.prod(shape, dtype=np.int64)) * 4
        if offset < 0 or offset + n_bytes > len(blob):
            raise WeightBundleError(
                f"tensor {name}: offset {offset} + {n_bytes} bytes exceeds "
                f"blob length {len(blob)}"
            )
        arrays[name] = np.frombuffer(
            blob, dtype="<f4", count=n_bytes // 4, offset=offset
        ).reshape(shape)

    missing = [name for name in TENSOR_NAMES if name not in arrays]
    if missing:
        raise WeightBundleError(f"bundle manifest missing tensors: {missing}")
    return WeightBundle(metadata=dict(doc.get("metadata", {})), **{
        name: arrays[name] for name in TENSOR_NAMES
    })
