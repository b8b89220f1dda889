"""Synthetic corpora for the demo scripts.

Every builder writes EMB1 embedding files plus a manifest.jsonl under the
given root and returns the loaded (validated) manifest. The embeddings carry
planted structure - class-dependent means for classification, a linear score
direction for regression - so the graders have something real to learn at a
size that trains in seconds on a laptop.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from l2grader import load_manifest, write_embedding_file

CLASSES = ("A2", "B1_1", "B1_2", "B2", "native")


def _write_rows(root: Path, rows) -> object:
    root = Path(root)
    (root / "emb").mkdir(parents=True, exist_ok=True)
    lines = []
    for uid, mat, modality, source, split, labels in rows:
        write_embedding_file(np.asarray(mat, dtype=np.float32), root / "emb" / f"{uid}.emb1")
        lines.append(json.dumps({
            "utterance_id": uid,
            "embedding_path": f"emb/{uid}.emb1",
            "modality": modality,
            "transcription_source": source,
            "split": split,
            "labels": labels,
        }))
    (root / "manifest.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return load_manifest(root / "manifest.jsonl")


def make_classification_corpus(root, dim=768, counts=(("train", 50), ("dev", 10), ("test", 15)),
                               seed=1234):
    """Five separable CEFR classes, 20-60 frames per utterance."""
    rng = np.random.Generator(np.random.PCG64(seed))
    means = rng.normal(0.0, 1.0, (5, dim))
    rows = []
    i = 0
    for split, n in counts:
        for j in range(n):
            cls = (i if split == "train" else j) % 5
            frames = int(rng.integers(20, 61))
            mat = means[cls] + rng.normal(0.0, 0.5, (frames, dim))
            rows.append((f"utt{i:03d}", mat, "speech", "none", split,
                         {"cefr_class": CLASSES[cls]}))
            i += 1
    return _write_rows(root, rows)


def make_regression_corpus(root, dim=768, n_train=200, n_test=80, seed=4321):
    """Holistic 0-12 scores planted linearly along one embedding direction."""
    rng = np.random.Generator(np.random.PCG64(seed))
    w = rng.normal(0.0, 1.0, dim)
    w /= np.linalg.norm(w)
    rows = []
    for i in range(n_train + n_test):
        split = "train" if i < n_train else "test"
        u = float(np.clip(rng.normal(0.0, 1.0), -2.5, 2.5))
        frames = int(rng.integers(3, 7))
        mat = 2.0 * u * w + rng.normal(0.0, 0.01, (frames, dim))
        score = float(np.clip(6.0 + 2.0 * u + rng.normal(0.0, 0.1), 0.0, 12.0))
        rows.append((f"reg{i:03d}", mat, "speech", "none", split,
                     {"holistic_score": score}))
    return _write_rows(root, rows)


def make_two_view_corpus(root, dim=768, n_train=200, n_test=80, seed=97, view_noise=0.35):
    """Two embedding streams for the same utterances, with independent errors.

    Each view encodes the latent proficiency plus its own noise term, so a
    grader trained on either view makes mistakes the other view does not
    share. Returns (manifest_a, manifest_b); ids, labels and splits match.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    w_a = rng.normal(0.0, 1.0, dim)
    w_a /= np.linalg.norm(w_a)
    w_b = rng.normal(0.0, 1.0, dim)
    w_b /= np.linalg.norm(w_b)
    rows_a, rows_b = [], []
    for i in range(n_train + n_test):
        split = "train" if i < n_train else "test"
        u = float(np.clip(rng.normal(0.0, 1.0), -2.5, 2.5))
        score = float(np.clip(6.0 + 2.0 * u + rng.normal(0.0, 0.05), 0.0, 12.0))
        labels = {"holistic_score": score}
        for rows, w, tag in ((rows_a, w_a, "a"), (rows_b, w_b, "b")):
            noisy = u + float(rng.normal(0.0, view_noise))
            frames = int(rng.integers(3, 7))
            mat = 2.0 * noisy * w + rng.normal(0.0, 0.01, (frames, dim))
            rows.append((f"two{i:03d}", mat, "speech", "none", split, labels))
    return (_write_rows(Path(root) / "view_a", rows_a),
            _write_rows(Path(root) / "view_b", rows_b))
