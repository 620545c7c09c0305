"""Exact exterior algebra: forms, wedge products, contraction.

Everything is a finite blade -> rational map; no floating point anywhere.
"""

from symcoh import Form, contract, parse_form, wedge

e1, e2, e6 = Form.e(6, 1), Form.e(6, 2), Form.e(6, 6)

print("two covectors wedge to a canonical blade:")
print("  e1 ^ e2 =", wedge(e1, e2))
print("  e2 ^ e1 =", wedge(e2, e1), "(graded commutativity)")

omega = parse_form("e16 + e25 - e34", 6)
print("\nthe nilmanifold symplectic form:", omega)
print("its Liouville volume omega^3/3! =", omega.power(3) / 6)

print("\ncontraction is an anti-derivation acting from the left:")
a = parse_form("e15 - e23 + 2*e24", 6)
print("  a =", a)
for i in (1, 2, 5):
    print(f"  contract({i}, a) =", contract(i, a))

print("\nforms round-trip through the printed grammar:")
text = str(a)
assert parse_form(text, 6) == a
print(f"  parse({text!r}) == a")
