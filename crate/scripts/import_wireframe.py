#!/usr/bin/env python3
"""Convert WireFrame dataset annotations to segment-map JSON.

The dataset ships one pickle per image. Depending on the release, line
segments live in ``lines`` (an N x 4 array of x1, y1, x2, y2) or in
``points`` + ``pointlines`` / ``line`` adjacency structures; image size is
``height``/``width`` or the shape of an embedded ``img``. This script
handles the common layouts, clamps endpoints into the image box, drops
zero-length segments, and writes one ``<name>.json`` per input:

    {"width": W, "height": H, "segments": [[x1, y1, x2, y2], ...]}

Usage:
    python3 scripts/import_wireframe.py <pickle_dir> <out_dir>
"""

import json
import pickle
import sys
from pathlib import Path


def to_scalar(v):
    return float(getattr(v, "item", lambda: v)())


def image_size(data):
    if "width" in data and "height" in data:
        return int(to_scalar(data["width"])), int(to_scalar(data["height"]))
    img = data.get("img")
    if img is not None and hasattr(img, "shape"):
        h, w = img.shape[0], img.shape[1]
        return int(w), int(h)
    raise KeyError("no width/height and no img to infer them from")


def extract_lines(data):
    lines = data.get("lines")
    if lines is not None:
        return [[to_scalar(c) for c in row] for row in lines]
    # point list + index pairs
    points = data.get("points")
    pairs = data.get("line") or data.get("lines_idx")
    if points is not None and pairs is not None:
        out = []
        for i, j in pairs:
            p, q = points[int(i)], points[int(j)]
            out.append([to_scalar(p[0]), to_scalar(p[1]), to_scalar(q[0]), to_scalar(q[1])])
        return out
    raise KeyError("no recognizable line-segment field")


def convert(pkl_path, out_dir):
    with open(pkl_path, "rb") as fh:
        data = pickle.load(fh, encoding="latin1")
    if not isinstance(data, dict):
        raise TypeError(f"expected a dict, got {type(data)!r}")
    width, height = image_size(data)
    segments = []
    for x1, y1, x2, y2 in extract_lines(data):
        x1 = min(max(x1, 0.0), float(width))
        x2 = min(max(x2, 0.0), float(width))
        y1 = min(max(y1, 0.0), float(height))
        y2 = min(max(y2, 0.0), float(height))
        if (x1, y1) != (x2, y2):
            segments.append([x1, y1, x2, y2])
    out_path = out_dir / (pkl_path.stem + ".json")
    with open(out_path, "w") as fh:
        json.dump({"width": width, "height": height, "segments": segments}, fh)
        fh.write("\n")
    return len(segments)


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    src, dst = Path(sys.argv[1]), Path(sys.argv[2])
    dst.mkdir(parents=True, exist_ok=True)
    pickles = sorted(src.glob("*.pkl"))
    if not pickles:
        sys.exit(f"no .pkl files under {src}")
    total = 0
    failed = 0
    for p in pickles:
        try:
            total += convert(p, dst)
        except Exception as exc:  # noqa: BLE001 - report and continue
            failed += 1
            print(f"skipping {p.name}: {exc}", file=sys.stderr)
    print(f"converted {len(pickles) - failed}/{len(pickles)} files, {total} segments")


if __name__ == "__main__":
    main()
