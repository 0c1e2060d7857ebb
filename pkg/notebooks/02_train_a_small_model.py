"""
Training a small conditional diffusion model
============================================

A reduced model on 60 scenes at 32x32, trained for a few desk epochs.
The held-out error is compared with the untrained network and the
interpolation baseline.  Takes a few minutes on one core.
"""
import sys
from pathlib import Path

import numpy as np

from rfdiffusion import data as D
from rfdiffusion.config import DataConfig, DiffusionConfig, LossWeights, ModelConfig, TrainConfig
from rfdiffusion.diffusion import RFDiffusion
from rfdiffusion.training import evaluate, evaluate_mri, export_model, train

out = Path(sys.argv[1] if len(sys.argv) > 1 else "notebook_output/02")
epochs = int(sys.argv[2]) if len(sys.argv) > 2 else 10

# %%
# Data: 60 scenes at all 10 chirps, one chirp per scene by cycling.
dcfg = DataConfig(n_scenes=60, grid=32)
bank = D.simulate_bank(dcfg)
tr, te = D.make_split(60, dcfg.train_frac, dcfg.seed)
all_f = list(range(len(bank.freqs)))
train_s = D.make_samples(bank, tr, D.cycle_frequencies(tr, all_f), "train", 15, dcfg.seed)
test_s = D.make_samples(bank, te, D.cycle_frequencies(te, all_f), "test", 15, dcfg.seed)
print(len(train_s), "training maps,", len(test_s), "test maps")

# %%
# A narrow model; every width lives in ModelConfig.
mcfg = ModelConfig(image_size=32, latent_channels=16, unet_channels=(16, 32, 32), c2d=16, c3d=16, csig=16,
                   pyramid_channels=(8, 16, 16, 16), vox_channels=(4, 8, 8, 8), token_grid=8,
                   voxel_canvas=16, time_dim=32, groups=4, heads=2)
dif = DiffusionConfig()
test_in = D.prepare(test_s, mcfg)
untrained = evaluate(RFDiffusion(mcfg, dif, seed=0), test_in, test_s)
print(f"untrained median error {untrained.median:.2f} dB")

# %%
# Warm-up then step decay; the loss history is written as JSON lines.
model = RFDiffusion(mcfg, dif, seed=0)
tcfg = TrainConfig(batch=8, epochs=epochs, milestones={epochs // 2: 0.8, 3 * epochs // 4: 0.2})
res = train(model, D.prepare(train_s, mcfg), tcfg, LossWeights(), out_dir=out, log=print)
export_model(out / "model.ckpt", model, {"steps": res.step})
print(f"{res.step} steps in {res.elapsed_s:.0f} s")

# %%
trained = evaluate(model, test_in, test_s)
mri = evaluate_mri(test_s)
print(f"held-out median error: trained {trained.median:.2f} dB, untrained {untrained.median:.2f} dB, "
      f"baseline {mri.median:.2f} dB")
q, _ = trained.cdf(5)
print("trained error quantiles (0, 25, 50, 75, 100%):", np.round(q, 2))
