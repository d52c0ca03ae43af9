#!/usr/bin/env python3
"""Regenerate the shipped corpus files from the construction builders."""

import json
from pathlib import Path

from linkirr import arcio
from linkirr.constructions import corpus
from linkirr.graphs import Digraph, LabeledGraph


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "src" / "linkirr" / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, nc in sorted(corpus().items()):
        arcio.write_path(out_dir / nc.filename, nc.obj, comments=nc.comments)
        kind = ("digraph" if isinstance(nc.obj, Digraph)
                else "labeled" if isinstance(nc.obj, LabeledGraph)
                else "undirected")
        manifest[nc.filename] = {
            "construction": name,
            "kind": kind,
            "properties": list(nc.expected_properties),
        }
        print(f"wrote {nc.filename}")
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {manifest_path.name} ({len(manifest)} entries)")


if __name__ == "__main__":
    main()
