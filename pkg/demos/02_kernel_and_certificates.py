"""Kernel membership and constructive certificates.

The evaluation map sends z to a primitive m-th root of unity; an element is a
formal vanishing sum exactly when its image is zero.  The kernel is generated
by the rotations of the prime-order subgroup sums sigma(P_i), and every
membership claim here comes with a certificate checked by exact
recombination.
"""

from cyclosum import (
    GroupRingElement,
    asymmetric_seed,
    complex_eval,
    constrained_decompose,
    coset_split,
    cyclotomic_poly,
    in_kernel,
    kernel_decompose,
    parse_element,
    phi_map,
    sigma_subgroup,
    squarefree_reduce,
    two_prime_decompose,
)

# The m-th cyclotomic polynomial is the minimal polynomial of the root.
print("Phi_15 =", cyclotomic_poly(15))

# phi_map gives exact coordinates in the power basis of the cyclotomic field.
x = parse_element("z^0 + z^2", 4)
print("phi(1 + z^2) over m=4:", phi_map(x).coords, "-> in kernel:", in_kernel(x))

# A vanishing sum decomposes over the subgroup-sum generators.
sigma5 = sigma_subgroup(30, 5)
cert = kernel_decompose(sigma5.rotate(7))
print()
print("certificate parts for a rotated subgroup sum:")
for p, part in zip(cert.primes, cert.parts):
    print(f"  z_{p} = {part}")
print("recombines exactly:", cert.recombine() == sigma5.rotate(7))

# Nonnegative kernel elements split along cosets of the radical subgroup.
y = parse_element("z^1 + z^7", 12)
print()
print("coset split of z*(1 + z^6) over m=12:", coset_split(y))
shift, reduced = squarefree_reduce(y)
print(f"square-free reduction: rotate by {shift}, reduced over m0=6: {reduced}")

# With at most two primes, the structure is completely explicit.
w = parse_element("z^0 + z^6", 12) + parse_element("z^4 + z^10", 12)
a, b = two_prime_decompose(w)
print()
print(f"two-prime decomposition: a = {a}, b = {b}")
print("a*sigma(P2) + b*sigma(P1) == w:", a * sigma_subgroup(12, 3) + b * sigma_subgroup(12, 2) == w)

# Certificates with all part augmentations nonnegative: the solver enumerates
# the finitely many augmentation targets and decides each one exactly.  The
# weight-6 asymmetric element over m=30 is a notable case: any certificate
# must give augmentation zero to two of the three parts, yet one exists.
seed = asymmetric_seed(30)
cert = constrained_decompose(seed)
print()
print("weight-6 seed:", seed)
print("nonnegative-augmentation certificate found:", cert is not None)
if cert is not None:
    print("part augmentations:", [part.augmentation() for part in cert.parts])
    print("recombines exactly:", cert.recombine() == seed)

# A high-precision numeric oracle cross-checks the exact routines; it comes
# with a rigorous error bound and never feeds exact results.
est = complex_eval(seed, precision_bits=128)
print()
print("numeric evaluation of the seed:", est.value)
print("error bound:", est.error_bound, "-> consistent with zero:", est.consistent_with_zero())
est1 = complex_eval(GroupRingElement.one(30))
print("numeric evaluation of 1:", est1.value.real, "-> definitely nonzero:", est1.definitely_nonzero())
