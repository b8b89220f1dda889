"""Fuse two graders trained on complementary embedding views.

Each view encodes the latent proficiency plus its own independent noise, so
the two graders make different mistakes. Shallow fusion averages their raw
scores; deep fusion trains a small combiner on their penultimate hidden
representations. Both should beat either grader alone.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from corpus import make_two_view_corpus

from l2grader import (
    FusionConfig,
    GraderConfig,
    PredictionSet,
    deep_fuse,
    mse,
    predict,
    shallow_fuse,
    train_grader,
)
from l2grader.data import encode_labels

manifest_a, manifest_b = make_two_view_corpus(HERE / "output" / "two_view")
config = GraderConfig(
    head_kind="speech", task="regression", dropout_rate=0.0,
    epochs=20, batch_size=16, optimizer="adamw", learning_rate=1e-3,
    weight_decay=0.01, seed=11,
)
model_a = train_grader(manifest_a, config)
model_b = train_grader(manifest_b, config)

targets = encode_labels(manifest_a.split("test"), "regression", None)
preds_a = predict(model_a, manifest_a, "test")
preds_b = predict(model_b, manifest_b, "test")
mse_a = mse(preds_a.outputs, targets)
mse_b = mse(preds_b.outputs, targets)

# shallow: average the raw scores per utterance
fused = shallow_fuse(preds_a, preds_b)
mse_shallow = mse(fused.outputs, targets)


def concat(p: PredictionSet, q: PredictionSet) -> PredictionSet:
    return PredictionSet(
        task=p.task,
        utterance_ids=p.utterance_ids + q.utterance_ids,
        outputs=np.concatenate([p.outputs, q.outputs]),
        hidden_reps=np.vstack([p.hidden_reps, q.hidden_reps]),
    )


# deep: the combiner trains on train-split penultimate representations and
# predicts every utterance, so hand it train + test rows with split tags.
hid_a = concat(predict(model_a, manifest_a, "train", hidden="penultimate"),
               predict(model_a, manifest_a, "test", hidden="penultimate"))
hid_b = concat(predict(model_b, manifest_b, "train", hidden="penultimate"),
               predict(model_b, manifest_b, "test", hidden="penultimate"))
n_train = len(manifest_a.split("train"))
splits = ["train"] * n_train + ["test"] * len(targets)
all_targets = np.concatenate([
    encode_labels(manifest_a.split("train"), "regression", None), targets,
])

fusion_config = FusionConfig(deep_epochs=800, deep_learning_rate=1e-3,
                             deep_batch_size=128, deep_dropout=0.0, seed=5)
fusion_model, deep_preds = deep_fuse(hid_a, hid_b, all_targets, fusion_config, splits)
mse_deep = mse(deep_preds.outputs[n_train:], targets)

print("test-set mean squared error:")
print(f"  grader A (view 1)   {mse_a:.4f}")
print(f"  grader B (view 2)   {mse_b:.4f}")
print(f"  shallow fusion      {mse_shallow:.4f}")
print(f"  deep fusion         {mse_deep:.4f}")
print(f"\nshallow beats best single grader: {mse_shallow < min(mse_a, mse_b)}")
print(f"deep beats best single grader:    {mse_deep < min(mse_a, mse_b)}")
