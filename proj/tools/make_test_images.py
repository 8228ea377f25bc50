#!/usr/bin/env python3
"""Fetch bundled scikit-image photographs and write them as 8-bit PGMs.

Writes 256x256 grayscale center crops of two standard test photographs into
the output directory (default: test_images).  The acceptance harness uses
whatever PGMs it finds there; lena512.pgm is not bundled with scikit-image
and must be dropped in manually for the full photographic checks.
"""

import sys
from pathlib import Path

import numpy as np


def center_crop(img: np.ndarray, size: int) -> np.ndarray:
    r0 = (img.shape[0] - size) // 2
    c0 = (img.shape[1] - size) // 2
    return img[r0:r0 + size, c0:c0 + size]


def write_pgm(path: Path, img: np.ndarray) -> None:
    img = np.clip(np.rint(img), 0, 255).astype(np.uint8)
    with path.open("wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (img.shape[1], img.shape[0]))
        fh.write(img.tobytes())


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("test_images")
    out_dir.mkdir(parents=True, exist_ok=True)

    try:
        from skimage import data
        from skimage.color import rgb2gray
    except ImportError as exc:
        print(f"make_test_images: scikit-image unavailable ({exc})", file=sys.stderr)
        return 1

    images = {
        "camera.pgm": data.camera().astype(np.float64),
        "astronaut.pgm": rgb2gray(data.astronaut()) * 255.0,
    }
    for name, img in images.items():
        write_pgm(out_dir / name, center_crop(img, 256))
        print(f"wrote {out_dir / name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
