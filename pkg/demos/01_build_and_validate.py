"""Build a synthetic embedding corpus and run it through manifest validation.

Writes EMB1 files + manifest.jsonl under demos/output/corpus5, loads them
back, and prints what the validator saw. Also shows what a broken manifest
looks like: validation is total, so every problem is reported at once.
"""

from __future__ import annotations

import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from corpus import make_classification_corpus

from l2grader import ManifestValidationError, load_manifest, read_embedding_file

out = HERE / "output" / "corpus5"
manifest = make_classification_corpus(out)

print(f"corpus written to {out}")
print(f"records: {len(manifest.records)}")
for split in ("train", "dev", "test"):
    recs = manifest.split(split)
    print(f"  {split:5s}: {len(recs)} utterances")

r = manifest.records[0]
emb = read_embedding_file(out / r.embedding_path)
print(f"first utterance {r.utterance_id}: {emb.shape[0]} frames x {emb.shape[1]} dims, "
      f"class {r.cefr_class}")

# now break a copy of the manifest on purpose
bad_lines = (out / "manifest.jsonl").read_text(encoding="utf-8").splitlines()
bad_lines[0] = bad_lines[0].replace('"speech"', '"video"')
bad_lines[1] = bad_lines[1].replace('"cefr_class": "B1_1"', '"holistic_score": 99')
bad = out / "manifest_broken.jsonl"
bad.write_text("\n".join(bad_lines) + "\n", encoding="utf-8")

print("\nvalidating a deliberately broken copy:")
try:
    load_manifest(bad)
except ManifestValidationError as exc:
    for err in exc.errors:
        print(f"  {err}")
