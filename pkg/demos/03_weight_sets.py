"""Weight sets: which sizes of vanishing sums are achievable.

For modulus m with distinct prime divisors p_1 < ... < p_r, the achievable
weights form the numerical semigroup generated by the p_i.  The library
computes the conductor and the finite gap list, so membership queries are
exact for every n.
"""

from cyclosum import (
    CharCheckInput,
    char_constraint_check,
    frobenius_bound,
    is_weight,
    smallest_positive_weight,
    weight_set,
)

for m in (13, 14, 15):
    ws = weight_set(m)
    print(f"W({m}): primes {ws.primes}, conductor {ws.conductor}, gaps {ws.gaps}")
    print(f"       members up to 15: {ws.members(15)}")

# The smallest nonzero achievable weight is the smallest prime divisor.
print()
for m in (30, 15, 13):
    print(f"smallest positive weight for m={m}:", smallest_positive_weight(m))

# Two coprime generators reach everything from (p-1)(q-1) on, and that bound
# is sharp: the integer just below it is never reachable.
print()
p, q = 3, 5
bound = frobenius_bound(p, q)
print(f"frobenius bound for ({p}, {q}) = {bound};", f"{bound - 1} achievable for m=15:", is_weight(15, bound - 1))

# Even moduli: a 2-power gives the even numbers; otherwise everything from
# p - 1 on, p the smallest odd prime divisor.
print()
print("W(16) members up to 10:", weight_set(16).members(10))
print("W(20) members up to 10:", weight_set(20).members(10))

# Application: integrality constraints on character values.  For a character
# of given degree taking an integer value on a group element of known order,
# t = degree + |value| obeys the weight-set arithmetic of the element order.
print()
cases = [
    (7, 0, 10),   # degree-7 character, value 0 on an element of order 10
    (7, -1, 15),  # value -1 on an element of order 15
    (6, 1, 14),   # positive value, odd t: compare with the smallest odd prime
    (3, 0, 4),    # impossible: 3 is not a sum of 2s
]
for degree, value, order in cases:
    verdict = char_constraint_check(CharCheckInput(degree, value, order))
    print(f"degree {degree}, value {value:+d}, order {order}: {verdict}")
