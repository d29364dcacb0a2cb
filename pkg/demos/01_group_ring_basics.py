"""Group ring basics: exact arithmetic with formal sums of roots of unity.

An element of the group ring is a dense integer coefficient vector over the
cyclic group of order m; coeffs[k] is the coefficient of z^k, where z stands
for a fixed primitive m-th root of unity.  Everything is exact integer
arithmetic.
"""

from cyclosum import (
    element_to_json,
    factorize,
    format_element,
    parse_element,
    sigma_subgroup,
)

m = 30

# Elements parse from a sparse text form and print back to it.
x = parse_element("z^5 + z^6 + 2*z^12", m)
print("x              =", x)
print("augmentation   =", x.augmentation(), "   (sum of coefficients: the weight)")
print("support size   =", x.support_size(), "   (number of nonzero coefficients)")

# Ring operations are the usual ones; the product is cyclic convolution.
y = parse_element("z^0 + z^25", m)
print("x + y          =", x + y)
print("x * y          =", x * y)
print("x rotated by 3 =", x.rotate(3), "  (multiplication by z^3)")

# Subgroup sums: the sum of the unique subgroup of each order dividing m.
print()
print("factorization of 30:", factorize(30))
for d in (2, 3, 5):
    sigma = sigma_subgroup(m, d)
    print(f"sigma of the order-{d} subgroup = {sigma}")

# A subgroup sum absorbs multiplication by its own subgroup elements.
sigma5 = sigma_subgroup(m, 5)
print("sigma * z^6 == sigma:", sigma5.rotate(6) == sigma5)

# The coefficientwise partial order: y >= x iff the difference is nonnegative.
print()
print("2 + z >= 1 + z:", parse_element("2*z^0 + z^1", 3) >= parse_element("z^0 + z^1", 3))
print("2    >= z    :", parse_element("2*z^0", 3) >= parse_element("z^1", 3))

# Classification of vanishing sums only matters up to rotation, so every
# element has a canonical representative of its rotation class.
w = parse_element("z^1 + z^2", 3)
shift, canon = w.canonical_rotation()
print()
print(f"canonical rotation of {w}: shift {shift}, canon {canon}")
print("all rotations share it:", {w.rotate(k).canonical_rotation()[1] for k in range(3)} == {canon})

# Elements round-trip through JSON for interchange.
print()
print("JSON form:", element_to_json(x))
print("text round trip:", parse_element(format_element(x), m) == x)
