"""Compare three graders with the Friedman test and Nemenyi post-hoc.

Trains the same regression head three times with increasing epoch budgets,
collects per-utterance squared errors on the shared test split (a paired
design: same utterances, different graders), and asks whether the graders
differ significantly and, if so, which pairs.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from corpus import make_regression_corpus

from l2grader import (
    GraderConfig,
    PairedScoreTable,
    friedman_test,
    nemenyi_test,
    predict,
    train_grader,
)
from l2grader.data import encode_labels

manifest = make_regression_corpus(HERE / "output" / "reg_corpus")
targets = encode_labels(manifest.split("test"), "regression", None)

budgets = (3, 8, 20)
errors = []
for epochs in budgets:
    config = GraderConfig(
        head_kind="speech", task="regression", dropout_rate=0.0,
        epochs=epochs, batch_size=16, optimizer="adamw", learning_rate=1e-3,
        weight_decay=0.01, seed=11,
    )
    model = train_grader(manifest, config)
    preds = predict(model, manifest, "test")
    sq = (preds.outputs - targets) ** 2
    errors.append(sq)
    print(f"grader @ {epochs:2d} epochs: test mse {sq.mean():.4f}")

names = tuple(f"ep{e}" for e in budgets)
table = PairedScoreTable(np.column_stack(errors), names)

fr = friedman_test(table)
print(f"\nFriedman: statistic {fr['statistic']:.3f}  p {fr['p_value']:.2e}")
print("mean ranks (lower error = lower rank = better):")
for name, rank in zip(names, fr["mean_ranks"]):
    print(f"  {name:5s} {rank:.3f}")

ne = nemenyi_test(table)
print("\nNemenyi pairwise p-values:")
print("       " + "".join(f"{n:>8s}" for n in names))
for i, name in enumerate(names):
    print(f"{name:>7s}" + "".join(f"{ne.p_values[i, j]:8.4f}" for j in range(len(names))))
pairs = ne.significant_pairs()
if pairs:
    print("significant at alpha 0.05: "
          + ", ".join(f"{a} vs {b} (p {p:.4f})" for a, b, p in pairs))
else:
    print("no pair is significant at alpha 0.05")
