"""Regenerate src/shlie/fixtures/*.json. Output is deterministic."""

import json
import sys
from pathlib import Path

from shlie import io
from shlie.core import build_structure
from shlie.instances import GenSeed, gen_random_acyclic, lie2, lie2_broken, perturbed4
from shlie.mutations import enumerate_s_mutations

OUT = Path(__file__).resolve().parent.parent / "src" / "shlie" / "fixtures"

RANDOM = {
    "random_seed1_dims4-2.json": GenSeed(1, (4, 2)),
    "random_seed2_dims3-3-3-1.json": GenSeed(2, (3, 3, 3, 1)),
}


def breaks_homotopy_identity(inst, m):
    """A change delta*E_rc of s: X_n -> X_{n+1} shows up in the identity iff
    l1(e_r) != 0 (seen on e_c in degree n) or row c of l1: X_{n+1} -> X_n
    is nonzero (seen in degree n + 1)."""
    cc = inst.complex
    n, r, c = m["degree"], m["row"], m["col"]
    if n + 1 > cc.max_degree:
        return False
    d = cc.diff[n + 1]
    return any(d.column(r)) or any(d.entries[c])


def l2tilde_mutations():
    out = [{"fixture": "lie2.json", "i": 0, "j": 1, "value": ["1", "0"]},
           {"fixture": "lie2.json", "i": 0, "j": 1, "value": ["2", "1"]}]
    # B = span{e3, e4}: any bracket with e3 or e4 that leaves B breaks (i)
    for i, j in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
        for value in (["1", "0", "0", "0"], ["0", "-1", "1", "0"]):
            out.append({"fixture": "perturbed4.json", "i": i, "j": j, "value": value})
    return out


def built_l2_mutations():
    # l1 is injective on X_1 for these fixtures, so l1 l2(e, f) detects any change
    out = []
    for name, (d0, d1) in (("lie2.json", (2, 1)), ("perturbed4.json", (4, 2)),
                           ("random_seed1_dims4-2.json", (4, 2))):
        for i in range(d0):
            for j in range(d1):
                out.append({"fixture": name, "args": [[0, i], [1, j]],
                            "coordinate": 0, "delta": "1"})
    out.append({"fixture": "lie2.json", "args": [[0, 0], [0, 1]], "coordinate": 0, "delta": "1"})
    out.append({"fixture": "lie2.json", "args": [[0, 0], [0, 1]], "coordinate": 1, "delta": "-1/2"})
    return out


def main():
    OUT.mkdir(exist_ok=True)
    insts = {"lie2.json": lie2(), "perturbed4.json": perturbed4(),
             "lie2_broken.json": lie2_broken()}
    for name, gs in RANDOM.items():
        insts[name] = gen_random_acyclic(gs)
    for name, inst in insts.items():
        (OUT / name).write_bytes(io.save_instance(inst))
    s, _ = build_structure(insts["perturbed4.json"])
    (OUT / "perturbed4_structure.json").write_bytes(io.save_structure(s))

    s_muts = []
    for name in ("lie2.json", "perturbed4.json") + tuple(RANDOM):
        for m in enumerate_s_mutations(name):
            if breaks_homotopy_identity(insts[name], m):
                s_muts.append(m)
    data = {"l2tilde": l2tilde_mutations(), "s": s_muts, "built_l2": built_l2_mutations()}
    (OUT / "mutations.json").write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")
    print("wrote %d fixtures, %d mutations" % (len(insts) + 2, sum(map(len, data.values()))),
          file=sys.stderr)


if __name__ == "__main__":
    main()
