"""
Simulating RF heatmaps of a random indoor scene
===============================================

Builds a scene, traces it at every FMCW chirp, and compares the ground
truth with the interpolation baseline fed by 15 measured cells.
Images are written as PGM files next to this script's output directory.
"""
import sys
from pathlib import Path

import numpy as np

from rfdiffusion import propsim as ps
from rfdiffusion import scenegen as sg
from rfdiffusion.training import rssi_error

out = Path(sys.argv[1] if len(sys.argv) > 1 else "notebook_output/01")
out.mkdir(parents=True, exist_ok=True)

# %%
# A random scene: one room or a two-room apartment, a few boxes, a transmitter.
scene = sg.random_scene(7)
print("bounds", scene.bounds, "walls", len(scene.walls), "boxes", len(scene.obstacles), "tx", scene.tx)
(out / "scene.json").write_text(sg.serialize_scene(scene))

# %%
# The ten chirps sit 8 MHz apart above 77 GHz.
plan = ps.fmcw_frequencies()
print("chirps (GHz):", np.round(np.array(plan.frequencies) / 1e9, 3))

# %%
# One 64x64 receiver grid, all chirps traced together.
grid = ps.GridSpec.covering(scene, 64)
maps = ps.simulate_heatmaps(scene, grid, plan.frequencies)
for k, hm in enumerate(maps):
    ps.save_pgm(out / f"chirp-{k}.pgm", hm.normalized())
spread = np.std([hm.grid for hm in maps], axis=0)
print(f"per-cell spread across chirps: median {np.median(spread):.2f} dB, max {spread.max():.2f} dB")

# %%
# Free space check: with no walls and no boxes the field is the Friis law.
empty = sg.Scene(scene.bounds, (), (), scene.tx, 0)
free = ps.simulate_heatmap(empty, grid, plan.frequencies[0])
d = np.hypot(*(grid.centers() - np.array(scene.tx)).T).reshape(64, 64)
print(f"free-space max deviation from Friis: {np.max(np.abs(free.grid - ps.friis_db(d, free.freq))):.1e} dB")

# %%
# The interpolation baseline sees only K=15 cells of the true map.
hm = maps[0]
pre = ps.sample_premeasurements(hm, 15, seed=0)
mri = ps.mri_baseline(pre, scene, grid, hm.freq)
err = rssi_error(ps.Heatmap(mri.grid, grid, hm.freq, hm.floor_db), hm)
ps.save_pgm(out / "mri.pgm", ps.Heatmap(mri.grid, grid, hm.freq, hm.floor_db).normalized())
print(f"baseline median error {np.median(err):.2f} dB, mean {err.mean():.2f} dB")
