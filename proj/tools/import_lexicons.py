#!/usr/bin/env python3
"""Convert the upstream VADER and pattern lexicon distributions into the
tab-separated files under data/lexicons/.

usage: import_lexicons.py VADER_PKG_DIR TEXTBLOB_PKG_DIR OUT_DIR
"""
import ast
import collections
import pathlib
import sys
import xml.etree.ElementTree as ET


def vader(pkg: pathlib.Path, out: pathlib.Path) -> None:
    entries = {}
    for raw in (pkg / "vader_lexicon.txt").read_text(encoding="utf-8").splitlines():
        raw = raw.rstrip("\r")
        if not raw.strip():
            continue
        token, mean = raw.split("\t")[:2]
        token = token.strip().lower()
        if token and " " not in token:
            entries[token] = float(mean)

    src = (pkg / "vaderSentiment.py").read_text(encoding="utf-8")
    tree = ast.parse(src)
    consts = {"B_INCR": 0.293, "B_DECR": -0.293}
    negate, boosters = [], {}
    for node in tree.body:
        if isinstance(node, ast.Assign) and isinstance(node.targets[0], ast.Name):
            name = node.targets[0].id
            if name == "NEGATE":
                negate = [ast.literal_eval(e) for e in node.value.elts]
            elif name == "BOOSTER_DICT":
                for k, v in zip(node.value.keys, node.value.values):
                    boosters[ast.literal_eval(k)] = consts[v.id]

    d = out / "valence-rule"
    d.mkdir(parents=True, exist_ok=True)
    with open(d / "valence.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("# token\tvalence  (mean human rating, range [-4, 4])\n")
        for k in sorted(entries):
            f.write(f"{k}\t{entries[k]:g}\n")
    with open(d / "boosters.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("# token\tincrement\n")
        for k in sorted(boosters):
            if " " not in k:
                f.write(f"{k.lower()}\t{boosters[k]:g}\n")
    with open(d / "negators.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write("# one negator per line\n")
        for k in sorted(set(t.lower() for t in negate)):
            f.write(f"{k}\n")


def pattern(pkg: pathlib.Path, out: pathlib.Path) -> None:
    root = ET.parse(pkg / "en" / "en-sentiment.xml").getroot()
    pol = collections.defaultdict(list)
    for w in root.iter("word"):
        form = w.get("form", "").strip().lower()
        if form and " " not in form:
            pol[form].append(float(w.get("polarity", "0")))
    d = out / "pattern-average"
    d.mkdir(parents=True, exist_ok=True)
    with open(d / "polarity.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("# token\tpolarity  (mean over word senses, range [-1, 1])\n")
        for k in sorted(pol):
            v = sum(pol[k]) / len(pol[k])
            f.write(f"{k}\t{round(v, 4):g}\n")
    with open(d / "negators.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write("# one negator per line\n")
        for k in ("n't", "never", "no", "not"):
            f.write(f"{k}\n")


if __name__ == "__main__":
    vpkg, tpkg, out = map(pathlib.Path, sys.argv[1:4])
    vader(vpkg, out)
    pattern(tpkg, out)
