"""The sl(2) action, Lefschetz decomposition and primitive forms.

L wedges with omega, its partner contracts with the inverse bivector, and the
grading operator weighs degree k by n-k.  Primitive forms are the highest
weight vectors; every form splits uniquely into omega-powers of primitives.
"""

from symcoh import Form, SymplecticStructure, parse_form, recursive_primitive_basis, standard_omega

st = SymplecticStructure(parse_form("e16 + e25 - e34", 6))

print("commutator check on a sample form:")
a = parse_form("e13 + 2*e145 - e2", 6)
lhs = st.Lambda(st.L(a)) - st.L(st.Lambda(a))
print("  [Lambda, L] a == H a :", lhs == st.H(a))

print("\ncontracting omega itself returns the half-dimension:")
print("  Lambda(omega) =", st.Lambda(st.omega))

print("\nLefschetz decomposition of a 3-form:")
f = parse_form("e125 + e134 - e236", 6)
dec = st.lefschetz_decompose(f, 3)
for r, b in sorted(dec.components.items()):
    print(f"  omega^{r} part: primitive {b}")
print("  reconstruction exact:", dec.reconstruct() == f)

print("\nprimitive basis sizes match the binomial difference:")
for k in range(4):
    print(f"  degree {k}: {len(st.primitive_basis(k))} elements")

print("\nthe recursion over symplectic planes gives the same spaces (standard omega):")
basis = recursive_primitive_basis(2, 2)
print("  n=2, k=2:", ", ".join(str(b) for b in basis))
