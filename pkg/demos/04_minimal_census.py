"""The census of minimal vanishing sums and the structure checks built on it.

A minimal vanishing sum has no vanishing proper subsum.  The census
enumerates all rotation classes of minimal elements within a weight budget,
classifies each as symmetric (a rotated prime-order subgroup sum) or
asymmetric, and backs the verification of the support lower bound and the
uniqueness of the extremal asymmetric class.
"""

from cyclosum import (
    asymmetric_seed,
    check_transfer,
    classify,
    enumerate_minimal,
    is_minimal,
    records_to_jsonl,
    sigma_subgroup,
    symmetric_cover,
    verify_lower_bound,
    verify_uniqueness,
    weight_plus_one_form,
    GroupRingElement,
)

# With at most two primes every minimal class is symmetric.
print("census of m=12 up to weight 12:")
for rec in enumerate_minimal(12, 12):
    print(f"  weight {rec.weight}  support {rec.support}  {rec.classification}  {rec.canon}")

# Three primes admit asymmetric classes; the least weight is
# (p1-1)(p2-1) + (p3-1), attained only by the product seed.
print()
print("census of m=30 up to weight 7:")
records = enumerate_minimal(30, 7)
for rec in records:
    print(f"  weight {rec.weight}  support {rec.support}  {rec.classification}  {rec.canon}")

seed = asymmetric_seed(30)
print()
print("the weight-6 seed:", seed)
print("minimal:", is_minimal(seed).minimal, "| classification:", classify(seed))
print("weight-7 fixed-generator form:", weight_plus_one_form(30))

# Census records serialize to JSON lines for golden files and scripting.
print()
print(records_to_jsonl(records[:2]), end="")

# The verification reports re-derive the structure results from the census.
print()
print(verify_lower_bound(30, 7, records=records, trials=30, seed=0))
print()
print(verify_uniqueness(30, records=records))

# Small kernel elements decompose into rotated subgroup sums; the seed is the
# first element for which that fails.
print()
u = sigma_subgroup(30, 2) + sigma_subgroup(30, 3).rotate(4)
print("cover of a symmetric combination:", symmetric_cover(u))
print("cover of the asymmetric seed:", symmetric_cover(seed))

# The transfer dichotomy: two nonnegative elements with the same image either
# compare coefficientwise or the second has large support; equality pins the
# exact product structure.
print()
m = 15
one = GroupRingElement.one(m)
y = (sigma_subgroup(m, 3) - one) * (sigma_subgroup(m, 5) - one)
print("x = 1, y =", y)
print(check_transfer(one, y))
