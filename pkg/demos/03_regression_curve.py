"""Train a holistic-score regressor and plot its MSE-by-score curve.

The corpus plants the 0-12 holistic score along one embedding direction, so
a small speech head recovers it almost perfectly. The curve at the end shows
where on the score scale the remaining error lives (Gaussian-smoothed per
distinct score, sigma 0.5), rendered as ASCII bars.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from corpus import make_regression_corpus

from l2grader import GraderConfig, evaluate_model, mse_by_score_curve, predict, train_grader
from l2grader.data import encode_labels

manifest = make_regression_corpus(HERE / "output" / "reg_corpus")
config = GraderConfig(
    head_kind="speech", task="regression", dropout_rate=0.0,
    epochs=20, batch_size=16, optimizer="adamw", learning_rate=1e-3,
    weight_decay=0.01, seed=11,
)

t0 = time.perf_counter()
model = train_grader(manifest, config)
print(f"trained {config.epochs} epochs in {time.perf_counter() - t0:.1f}s")

for split in ("train", "test"):
    rep = evaluate_model(model, manifest, split)
    print(f"{split:5s}: pcc {rep['pcc']:.4f}  src {rep['src']:.4f}  mse {rep['mse']:.4f}")

preds = predict(model, manifest, "test")
targets = encode_labels(manifest.split("test"), "regression", None)
print("\nsample test predictions (raw / clipped / human):")
for uid, raw, clip, t in list(zip(preds.utterance_ids, preds.outputs, preds.clipped, targets))[:5]:
    print(f"  {uid}: {raw:6.2f} / {clip:5.2f} / {t:5.2f}")

# error along the score axis, smoothed over neighbouring scores
points = mse_by_score_curve(preds.outputs, targets, sigma=0.5)
peak = max(v for _, v in points)
print(f"\nMSE by score (sigma 0.5, peak {peak:.4f}):")
for score, value in points:
    bar = "#" * max(1, round(40 * value / peak)) if peak > 0 else ""
    print(f"  {score:5.2f} | {value:.4f} {bar}")
