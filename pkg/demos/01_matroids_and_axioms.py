"""First steps: build matroids four ways and check families against the axioms.

Run:  python3 demos/01_matroids_and_axioms.py
"""

from matroid_kappa import (
    check_axioms,
    explicit_matroid,
    gf2_matroid,
    graphic_matroid,
    uniform_matroid,
)

print("== four representations ==")
u24 = uniform_matroid("abcd", 2)
print(f"uniform U(2,4): rank {u24.rank()}, basis {u24.basis()}")

triangle = graphic_matroid([("e1", "u", "v"), ("e2", "v", "w"), ("e3", "w", "u")])
print(f"triangle cycle matroid: rank {triangle.rank()}, circuits {triangle.circuits()}")

binary = gf2_matroid("abc", [[1, 0, 1], [0, 1, 1]])
print(f"binary columns (1,0), (0,1), (1,1): rank {binary.rank()},",
      f"all three together independent? {binary.is_independent(binary.ground.full())}")

listed = explicit_matroid("ab", [(), ("a",), ("b",)])
print(f"explicit family on two parallel elements: circuits {listed.circuits()}")

print()
print("== rank, extension, fundamental circuits ==")
g = u24.ground
print(f"rank of {{a,b,c}} in U(2,4): {u24.rank(g.set_of('abc'))}")
print(f"greedy extension of {{}} to a basis: {u24.extend_to_basis(g.empty())}")
base = g.set_of("ab")
print(f"the one circuit inside basis+{{c}}: {u24.fundamental_circuit(base, 'c')}")

print()
print("== axiom checking ==")
good = check_axioms("abc", circuits=[("a", "b"), ("b", "c"), ("a", "c")])
print("three mutually parallel elements, given by circuits:")
print(good)

print()
print("a family that forgets downward closure:")
bad = check_axioms("ab", independent=[(), ("a", "b")])
print(bad)
print(f"verdict: {'matroid' if bad.ok else 'not a matroid'}")
