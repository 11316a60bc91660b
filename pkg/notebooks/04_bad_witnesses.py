# Every non-identity permutation of four colours
#
# Run with `python3 notebooks/04_bad_witnesses.py`.

# %%
from collections import defaultdict

from slabelcol import Citation, bad_witness, conjugacy_class_rep, solve, symmetric_group

by_class = defaultdict(list)
for p in sorted(symmetric_group(4)):
    if not p.is_identity():
        by_class[str(conjugacy_class_rep(p))].append(p)
print({rep: len(ps) for rep, ps in by_class.items()})

# %%
# 3-cycles and 4-cycles reuse the two constructions with colours renamed.
# Transpositions and double transpositions are known from other work.

for rep, members in by_class.items():
    for p in members:
        out = bad_witness(p)
        if isinstance(out, Citation):
            print(f"{str(p):10} {out.message()}")
        else:
            labels = sorted({str(a.label) for a in out.arcs})
            print(f"{str(p):10} {solve(out).status:6} labels {labels}")
