"""Train the 5-class CEFR grader on the synthetic corpus and inspect it.

Uses the icnale-speech preset (dense 768 unit layer, softmax over 5 classes,
AdamW, gradient accumulation) with the epoch count raised until the separable
corpus is fully learned. Prints training progress, dev/test metrics, the
confusion matrix, and per-utterance class probabilities for a few test items.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from corpus import CLASSES, make_classification_corpus

from l2grader import builtin_config, evaluate_model, persist_model, predict, train_grader

manifest = make_classification_corpus(HERE / "output" / "corpus5")
config = builtin_config("icnale-speech", epochs=200, seed=7)
print(f"preset: icnale-speech  optimizer={config.optimizer}  lr={config.learning_rate}")
print(f"batch={config.batch_size} x accum={config.grad_accum}  dropout={config.dropout_rate}")

t0 = time.perf_counter()
model = train_grader(manifest, config)
print(f"\ntrained {config.epochs} epochs in {time.perf_counter() - t0:.1f}s")
for entry in model.history[:: max(1, len(model.history) // 8)]:
    line = f"  epoch {entry['epoch']:3d}  train_loss {entry['train_loss']:.4f}"
    if "dev_accuracy" in entry:
        line += f"  dev_accuracy {entry['dev_accuracy']:.3f}"
    print(line)

for split in ("train", "dev", "test"):
    rep = evaluate_model(model, manifest, split)
    print(f"{split:5s}: accuracy {rep['accuracy']:.3f}  weighted_f1 {rep['weighted_f1']:.3f}")

rep = evaluate_model(model, manifest, "test")
print("\nconfusion (rows = true, cols = predicted):")
print("        " + "".join(f"{c:>8s}" for c in CLASSES))
for cls, row in zip(CLASSES, rep["confusion"]):
    print(f"{cls:>8s}" + "".join(f"{v:8d}" for v in row))

preds = predict(model, manifest, "test")
print("\nsample test probabilities:")
for uid, probs in list(zip(preds.utterance_ids, preds.outputs))[:5]:
    best = CLASSES[int(probs.argmax())]
    print(f"  {uid}: {best:7s}  " + " ".join(f"{p:.2f}" for p in probs))

ckpt = HERE / "output" / "classifier_ckpt"
persist_model(model, ckpt)
print(f"\ncheckpoint written to {ckpt}")
