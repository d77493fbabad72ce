# %% [markdown]
# # Self-similarity groups and witnesses
#
# `self_similarity_group` returns every permutation that maps equal-distance
# pairs to equal-distance pairs. Isometries form a subgroup of it.

# %%
from combsim import (
    Permutation,
    are_combinatorially_similar,
    induced_value_map,
    is_isometry,
    is_weak_similarity,
    pseudolinear,
    rectangle_example,
    self_isometry_group,
    self_similarity_group,
)

rect = rectangle_example()
cs = self_similarity_group(rect)
iso = self_isometry_group(rect)
print(f"|Cs| = {cs.order}, |Iso| = {iso.order}")
print("isometries:", [str(p) for p in iso])

# %%
# Rotating the rectangle by one corner trades the short and long sides.
# That is a combinatorial similarity but neither an isometry nor a weak
# similarity (the value map 3 <-> 4 is not monotone).
turn = Permutation([1, 2, 3, 0])
print("value map:", induced_value_map(rect, rect, turn))
print("isometry:", is_isometry(rect, rect, turn), " weak:", is_weak_similarity(rect, rect, turn))

# %%
# Pseudolinear quadruples: similar to the rectangle exactly when s != t.
for s, t in [(1, 2), (2, 5), (1, 1)]:
    w = are_combinatorially_similar(pseudolinear(s, t), rect)
    print((s, t), "->", "no witness" if w is None else f"psi={w.psi} f={w.f}")
print("|Cs(pseudolinear(1, 1))| =", self_similarity_group(pseudolinear(1, 1)).order)

# %%
# The pruned backtracking search returns the same group and scales further.
from combsim import strongly_rigid_space

big = strongly_rigid_space(7)
print("pruned |Cs| on 7 points:", self_similarity_group(big, mode="pruned").order)
