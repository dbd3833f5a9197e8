#!/usr/bin/env python3
# Copyright 2026 The hassanat-knn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Rebuild data/uci/*.csv from the UCI copies shipped inside PyPI wheels.

Sources:
  keel_ds               KEEL mirrors of UCI sets (header-stripped .dat files)
  imbalanced_databases  original UCI glass.data and german.data-numeric
  Orange3               original UCI ionosphere (all 34 attributes)
  balance-scale         generated: the UCI file is the full 5^4 factorial

Every output is comma separated, no header, label in the last column.
"""
import argparse
import glob
import itertools
import os
import subprocess
import sys
import tempfile
import zipfile

KEEL = {
    # name: (keel file, transform)
    "wine": ("wine", None),
    "cancer": ("wisconsin", "shift_minus_one"),
    "liver": ("bupa", None),
    "diabetes": ("pima", None),
    "sonar": ("sonar", None),
    "vehicle": ("vehicle", None),
    "vote": ("housevotes", "yes_no"),
    "heart13": ("heart", None),
    "australian14": ("australian", None),
    "phoneme": ("phoneme", None),
    "segment": ("segment", None),
}


def fetch(package, dest):
    subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps", "-q",
                    "-d", dest, package], check=True)
    matches = glob.glob(os.path.join(dest, package.replace("-", "_").lower() + "*.whl"))
    matches += glob.glob(os.path.join(dest, package.lower() + "*.whl"))
    if not matches:
        raise SystemExit(f"no wheel found for {package}")
    return zipfile.ZipFile(matches[0])


def write_rows(path, rows):
    with open(path, "w") as f:
        for r in rows:
            f.write(",".join(r) + "\n")


def clean(line, sep=","):
    return [c.strip() for c in line.strip().split(sep)]


def keel_rows(text, transform):
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("@"):
            continue
        r = clean(line)
        feats, label = r[:-1], r[-1]
        if transform == "shift_minus_one":
            feats = [str(int(float(v)) - 1) for v in feats]
        elif transform == "yes_no":
            feats = ["1" if v == "y" else "0" for v in feats]
        rows.append(feats + [label])
    return rows


def balance_rows():
    # UCI balance-scale ordering: left-weight, left-distance, right-weight,
    # right-distance, each 1..5, outermost varying slowest.
    rows = []
    for lw, ld, rw, rd in itertools.product(range(1, 6), repeat=4):
        left, right = lw * ld, rw * rd
        label = "L" if left > right else ("R" if right > left else "B")
        rows.append([str(lw), str(ld), str(rw), str(rd), label])
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "uci"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        keel = fetch("keel-ds", tmp)
        for name, (src, transform) in KEEL.items():
            text = keel.read(f"keel_ds/data/balanced/raw/{src}.dat").decode()
            write_rows(os.path.join(args.out, name + ".csv"), keel_rows(text, transform))

        imb = fetch("imbalanced-databases", tmp)
        glass = imb.read("imbalanced_databases/data/glass/glass.data.txt").decode()
        # drop the leading id column
        write_rows(os.path.join(args.out, "glass.csv"),
                   [clean(l)[1:] for l in glass.splitlines() if l.strip()])
        german = imb.read("imbalanced_databases/data/german/german.data-numeric.txt").decode()
        write_rows(os.path.join(args.out, "german.csv"),
                   [l.split() for l in german.splitlines() if l.strip()])

        orange = fetch("Orange3", tmp)
        iono = orange.read("Orange/tests/datasets/ionosphere.tab").decode().splitlines()
        write_rows(os.path.join(args.out, "ionosphere.csv"),
                   [clean(l, "\t") for l in iono[3:] if l.strip()])

    write_rows(os.path.join(args.out, "balance.csv"), balance_rows())


if __name__ == "__main__":
    main()
