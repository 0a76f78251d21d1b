"""Resigning, balance certificates and the layer decomposition.

Resigning at a vertex set flips the signs on its edge cut and leaves every
circuit sign alone, so colorability is a property of the equivalence class.
"""
from signedcolor import (
    build_graph,
    decompose_layers,
    enumerate_circuits,
    is_balanced,
    resign,
    shannon_color,
    signatures_equivalent,
)
from signedcolor.graph import circuit_sign

with open(__file__.replace("resigning_and_layers.py", "data/wheel.sg")) as fh:
    G = build_graph(fh.read())

ok, witness = is_balanced(G)
print("balanced:", ok)
if not ok:
    print("negative circuit through edges", witness.circuit.edges)

sigma = resign(G, None, {"hub", "r1"})
print("resigned at {hub, r1}, equivalent:", signatures_equivalent(G, G.signature(), sigma))
print("circuit signs unchanged:",
      all(circuit_sign(C, G) == circuit_sign(C, G, sigma) for C in enumerate_circuits(G)))

# ceil(Delta/2) layers, each a disjoint union of paths and circuits
for i, layer in enumerate(decompose_layers(G).layers, 1):
    print(f"layer {i}: edges {sorted(layer)}")

r = shannon_color(G)
print(f"shannon: {r.colors} colors, resigned at {sorted(r.resigned_at)}")
for line in r.trace:
    print("  ", line)
