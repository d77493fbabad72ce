# %% [markdown]
# # Spaces, value sets and equality patterns
#
# A space is a distance table with exact rational entries. Combinatorial
# similarity only cares about *which* pairs have equal distance, so the
# equality pattern is the object everything else is computed from.

# %%
from combsim import (
    equality_pattern,
    parse_space,
    pattern_fingerprint,
    rectangle_example,
    serialize_space,
    subspace,
    value_set,
)

rect = rectangle_example()
print(serialize_space(rect))
print("values:", [str(v) for v in value_set(rect)])

# %%
# Three blocks of two pairs each: the two short sides, the two long sides
# and the two diagonals.
pat = equality_pattern(rect)
for block in pat.blocks:
    print(block, "->", rect.d(*block[0]))
print(pattern_fingerprint(pat))

# %%
# Fractions and decimals parse exactly; 3.5 and 7/2 are the same distance.
s = parse_space("""
# comments are skipped
3
0   3.5  1
7/2 0    2
1   2    0
""")
print(s, value_set(s))

# %%
# Restricting to three corners keeps one side of each length.
tri = subspace(rect, [0, 1, 2])
print(serialize_space(tri))
