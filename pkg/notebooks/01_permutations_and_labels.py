# Permutations, labels and what "proper" means
#
# Run with `python3 notebooks/01_permutations_and_labels.py`.

# %%
import itertools

from slabelcol import (
    Arc,
    SLabeledGraph,
    check_colouring,
    compose,
    conjugate_set,
    from_signed,
    inverse,
    parse_cycles,
    reverse_arc,
)
from slabelcol.perm import SIGNED_NK, SIGNED_ZK, PermSet
from slabelcol.solver import brute_force_colourings

# Cycle notation is 1-indexed. Images are stored as a tuple.

# %%
p = parse_cycles("(123)", 4)
print(p, p.images)
print("p o p =", compose(p, p), " inverse =", inverse(p))

# %%
# Conjugating a label set by pi renames colours.

S = PermSet.of(["id", "(123)"], 4)
print(sorted(map(str, conjugate_set(S, parse_cycles("(12)", 4)))))

# %%
# An arc (x, y) labeled s is satisfied when s(f(x)) != f(y).
# With the transposition on two colours, equal colours are the only good choice.

L = SLabeledGraph(2, (0, 1), (Arc(0, 1, parse_cycles("(12)", 2)),))
for f in itertools.product((1, 2), repeat=2):
    print(f, check_colouring(L, dict(enumerate(f))))

# %%
# Flipping an arc and inverting its label leaves the colourings alone.

L = SLabeledGraph(4, (0, 1), (Arc(0, 1, parse_cycles("(1234)", 4)),))
R = reverse_arc(L, 0, 1)
print(R.arcs[0], brute_force_colourings(L) == brute_force_colourings(R))

# %%
# Signed graphs: a negative edge becomes the negation permutation of the colour set.

for mode in (SIGNED_NK, SIGNED_ZK):
    print(mode, from_signed([(0, 1, -1)], 4, mode).arcs[0].label)
