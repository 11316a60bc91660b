# Gadgets, an UNSAT verdict, and a certificate anyone can recheck
#
# Run with `python3 notebooks/03_gadgets_solve_certify.py`.

# %%
from slabelcol import construction, make_certificate, solve, verify_certificate
from slabelcol.formats import to_dot

c = construction("c123")
L = c.labeled
special = [a for a in L.arcs if not a.label.is_identity()]
print(len(L.vertices), "vertices,", len(L.arcs), "arcs,", len(special), "labeled (123)")

# %%
res = solve(L)
print(res.status, res.stats.to_dict())

# %%
# The certificate lists the 24 base colourings and, per gadget, the colours
# a, b, c can still take plus one violated arc per combination.

cert = make_certificate(L, c)
face = cert["faces"][0]
print("domains:", face["domains"])
for row in face["rows"]:
    print(row)

# %%
print("verified:", verify_certificate(cert, L))

# %%
# The same story with (1234) on four arcs per gadget.

c2 = construction("c1234")
cert2 = make_certificate(c2.labeled, c2)
print(solve(c2.labeled).status, cert2["faces"][0]["domains"], verify_certificate(cert2, c2.labeled))

# %%
# DOT output draws only the labeled arcs with arrows.

labeled = [line for line in to_dot(L).splitlines() if "label=" in line]
print(len(labeled), "arrowed edges, e.g.")
print("\n".join(labeled[:3]))
