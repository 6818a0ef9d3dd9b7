"""Regenerate the bundled permgroup/v1 reference files from their explicit
constructions (GF(16) arithmetic for the Suzuki group, signed permutation
matrices over F_3 for the non-normal-Sylow example)."""

import json
import sys
from pathlib import Path

from pyramidal.families import REFERENCE_NAMES, build_reference
from pyramidal.kernel import permgroup_document

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else \
    Path(__file__).resolve().parents[1] / "src" / "pyramidal" / "data"
out_dir.mkdir(parents=True, exist_ok=True)
for name in REFERENCE_NAMES:
    g = build_reference(name)
    labels = g.permutation_labels()
    doc = permgroup_document(labels.shape[1], [labels[x] for x in g.generators], name)
    (out_dir / f"{name}.json").write_text(json.dumps(doc) + "\n")
    print(f"{name}: order {g.order}, degree {labels.shape[1]}, {len(g.generators)} generators")
