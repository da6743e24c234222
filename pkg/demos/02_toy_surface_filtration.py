"""
A toy surface, its derivation, and the degree filtration
=========================================================

"""

# The smallest interesting member of the four-variable family:
#     k[X, S, Y, Z] / (X^2*Y - S^2, Y^2 - X*Z - S)
# i.e. n = 2, e = 1 with P = S^2 and Q = Y^2.
from lndfilt import basis_monomials, canonical_derivation, gr_leading, hat_ideal_tops, toy_ring

ring = toy_ring()
print("ring:", ring.fingerprint())
print("relations:", ", ".join(str(r) for r in ring.relation_polys()))

# Every residue class has one canonical representative: exponents of S
# stay below 2 and exponents of Y stay below 2, and reduction rewrites
# any S^2 or Y^2 away using the two relations.
a = ring.element("S^3*Y^2 + X*Z")
print("normal form of S^3*Y^2 + X*Z:", a)

# The canonical derivation kills X, sends S to a power of X, and the
# images of Y and Z are forced by the relations.
D = canonical_derivation(ring)
for nm in ("X", "S", "Y", "Z"):
    print(f"D({nm}) =", D(ring.generator(nm)))

# Iterating D on any element reaches zero; the number of steps before
# that happens is the induced degree.  The generator degrees are the
# weights 0, 1, 2, 4.
z = ring.generator("Z")
current = z
step = 0
while not current.is_zero():
    current = D(current)
    step += 1
    print(f"D^{step}(Z) =", current)
print("degree of Z:", D.degree(z))

# For canonical basis monomials the degree is a closed formula:
#     deg(x^a s^l y^j z^i) = l + 2*j + 4*i
# and the two computations always agree.
for text in ("S*Y", "Z^2", "X^5*S*Y*Z"):
    elem = ring.element(text)
    print(f"deg {text:10s} iterated = {D.degree(elem)}, formula = {elem.degree()}")

# The filtration layer F_i is spanned over k[x] by the canonical basis
# monomials of degree at most i.
print("basis monomials of degree <= 4 (degree, (l, j, i)):")
for deg, (l, j, i) in basis_monomials(ring, 4):
    pieces = []
    for nm, ex in (("s", l), ("y", j), ("z", i)):
        if ex == 1:
            pieces.append(nm)
        elif ex:
            pieces.append(f"{nm}^{ex}")
    print(f"  degree {deg}: {'*'.join(pieces) or '1'}")

# Passing to the associated graded algebra keeps only the top-degree
# slice of a representative.
b = ring.element("Z + S*Y + X^3")
lead = gr_leading(b)
print("gr-leading of Z + S*Y + X^3:", lead.part, "in grade", lead.grade)

# The graded relations collapse to the weight-top parts of the defining
# relations; these generate the kernel of the surjection onto gr.
print("hat ideal tops:", ", ".join(str(t) for t in hat_ideal_tops(ring)))
