#!/usr/bin/env python3
# Copyright 2026 The Clairvoyant Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the embed regression corpus under tests/data/corpus.

Golden answers come from a plain depth-first search over gap sequences, which
shares no code with the C++ solver. The corpus is committed; rerun this only
when the set of instances should change.
"""

import argparse
import json
import pathlib
import random
import sys


def reachable_rows(x, y, m, length):
    """Positions reachable after matching each prefix of y, found by DFS."""
    rows = [set() for _ in range(length + 1)]
    sys.setrecursionlimit(10000)

    def walk(j, pos):
        if pos in rows[j]:
            return
        rows[j].add(pos)
        if j == length:
            return
        for gap in range(1, m + 1):
            nxt = pos + gap
            if nxt > len(x):
                break
            if x[nxt - 1] == y[j]:
                walk(j + 1, nxt)

    walk(0, 0)
    return rows


def witness(rows, m, length):
    """Smallest final position, then the smallest predecessor at each step."""
    if not rows[length]:
        return None
    steps = [min(rows[length])]
    for j in range(length - 1, 0, -1):
        after = steps[-1]
        steps.append(min(p for p in rows[j] if 1 <= after - p <= m))
    return list(reversed(steps))


def make_instance(rng, index):
    m = rng.randint(1, 4)
    y_len = rng.randint(1, 12)
    x_len = rng.randint(y_len, min(60, m * y_len + 8))
    # A biased source for X makes long runs, and so negative answers, common.
    bias = rng.choice([0.5, 0.5, 0.3, 0.8])
    x = "".join("1" if rng.random() < bias else "0" for _ in range(x_len))
    y = "".join(rng.choice("01") for _ in range(y_len))
    length = y_len if index % 4 else rng.randint(1, y_len)
    return x, y, m, length


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("tests/data"))
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20260117)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    corpus_dir = args.out / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    cases = []
    for index in range(args.count):
        x, y, m, length = make_instance(rng, index)
        rows = reachable_rows(x, y, m, length)
        steps = witness(rows, m, length)
        name = f"case_{index:02d}"
        (corpus_dir / f"{name}.x").write_text(x + "\n")
        (corpus_dir / f"{name}.y").write_text(y + "\n")
        cases.append({
            "name": name,
            "m": m,
            "L": length,
            "embeddable": steps is not None,
            "frontier": sorted(rows[length]),
            "steps": steps,
        })
    with open(args.out / "corpus.json", "w") as f:
        json.dump({"seed": args.seed, "cases": cases}, f, indent=1)
        f.write("\n")
    positives = sum(c["embeddable"] for c in cases)
    print(f"wrote {len(cases)} cases ({positives} embeddable)")


if __name__ == "__main__":
    main()
