"""
Warm-starting the video model from an image model
=================================================

Temporal layers are added with zero-initialized output projections, so
before any video training the 8-frame sampler reproduces the image model
frame by frame.  A short fine-tune then runs on moving-box clips.
"""
import sys
from pathlib import Path

import numpy as np

from rfdiffusion import data as D
from rfdiffusion import propsim as ps
from rfdiffusion.autodiff import Tensor, no_grad
from rfdiffusion.config import DiffusionConfig, ModelConfig, VideoConfig
from rfdiffusion.diffusion import RFDiffusion
from rfdiffusion.video import VideoRFDiffusion, finetune, make_clips, prepare_clips, static_frame_mae, write_video

out = Path(sys.argv[1] if len(sys.argv) > 1 else "notebook_output/03")

mcfg = ModelConfig(image_size=16, latent_channels=8, unet_channels=(8, 16, 16), c2d=8, c3d=8, csig=8,
                   pyramid_channels=(8, 8, 8, 8), vox_channels=(4, 4, 4, 4), token_grid=8, voxel_canvas=16,
                   time_dim=16, groups=4, heads=2)
vcfg = VideoConfig(frame_size=16, clips=4, steps=20)
image = RFDiffusion(mcfg, DiffusionConfig(), seed=0)
video = VideoRFDiffusion(image, frames=vcfg.frames, seed=0)
freqs = ps.fmcw_frequencies().frequencies

# %%
# Two clips, each a straight box trajectory at walking speed.
clips = make_clips(2, vcfg, freqs, seed=1)
moving = [max(np.linalg.norm(np.subtract(b.center, a.center))
              for a, b in zip(c[0].scene.obstacles, c[-1].scene.obstacles)) for c in clips]
print("moving-box displacement over each clip (m):", np.round(moving, 2))
prep = prepare_clips(clips, mcfg)

# %%
# Identity at warm start: same noise, per-frame image sampling.
z = video.initial_noise(2, seed=3)
frames = video.sample(prep, seed=3, steps=10, z_T=z)
with no_grad():
    per_frame = [image.codec.decode(Tensor(image.ddim_sample(image.condition(D.take(prep, np.array([i]))),
                                                             z[i:i + 1], 10))).data[0, 0]
                 for i in range(len(prep["pixels"]))]
print(f"max |video - per-frame image| = {np.max(np.abs(np.stack(per_frame).reshape(frames.shape) - frames)):.1e}")

# %%
# A short fine-tune moves the temporal layers away from identity.
finetune(video, prepare_clips(make_clips(vcfg.clips, vcfg, freqs, seed=0), mcfg), vcfg, seed=0, log=print)
after = video.sample(prep, seed=3, steps=10, z_T=z)
print(f"frame-to-frame MAE: {static_frame_mae(after):.4f}")
print("frames written to", write_video(after[0], out, {"clip": 0}))
