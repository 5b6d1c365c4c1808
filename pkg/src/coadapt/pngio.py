"""8-bit PNG reading/writing for images and label maps.

Color images are exchanged as float64 arrays in [0, 1]; quantization to
8 bit uses round-half-up. Label maps are single-channel 8-bit PNGs with one
class id per pixel (255 reserved for ignore).
"""

from __future__ import annotations

import os

import numpy as np
from PIL import Image as PILImage

# fixed color table for label visualizations (class id -> RGB), 255 -> black
_VIZ_COLORS = np.array(
    [
        (70, 130, 180),   # 0 sky
        (128, 64, 128),   # 1 road
        (70, 70, 70),     # 2 building
        (220, 20, 60),    # 3 vehicle
        (107, 142, 35),   # 4 vegetation
        (244, 164, 96),
        (0, 139, 139),
        (255, 215, 0),
        (138, 43, 226),
        (46, 139, 87),
    ],
    dtype=np.uint8,
)


def quantize_unit(arr: np.ndarray) -> np.ndarray:
    """Map [0, 1] floats to uint8 with round-half-up."""
    return np.clip(np.floor(arr * 255.0 + 0.5), 0, 255).astype(np.uint8)


def load_rgb_unit(path: str | os.PathLike) -> np.ndarray:
    """Load an RGB PNG as float64 (H, W, 3) in [0, 1]."""
    with PILImage.open(path) as im:
        data = np.asarray(im.convert("RGB"), dtype=np.float64)
    return data / 255.0


def save_rgb_unit(path: str | os.PathLike, arr: np.ndarray) -> None:
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) array, got shape {arr.shape}")
    PILImage.fromarray(quantize_unit(arr), mode="RGB").save(path, format="PNG")


def load_label(path: str | os.PathLike) -> np.ndarray:
    """Load a single-channel label PNG as int32 (H, W)."""
    with PILImage.open(path) as im:
        if im.mode != "L":
            im = im.convert("L")
        return np.asarray(im, dtype=np.int32)


def save_label(path: str | os.PathLike, labels: np.ndarray) -> None:
    if labels.ndim != 2:
        raise ValueError(f"expected (H, W) label map, got shape {labels.shape}")
    if labels.min() < 0 or labels.max() > 255:
        raise ValueError("label ids must fit in uint8")
    PILImage.fromarray(labels.astype(np.uint8), mode="L").save(path, format="PNG")


def save_label_viz(path: str | os.PathLike, labels: np.ndarray) -> None:
    """Write a color-coded visualization of a label map (ignore id -> black)."""
    rgb = np.zeros(labels.shape + (3,), dtype=np.uint8)
    valid = labels != 255
    ids = labels[valid] % len(_VIZ_COLORS)
    rgb[valid] = _VIZ_COLORS[ids]
    PILImage.fromarray(rgb, mode="RGB").save(path, format="PNG")
