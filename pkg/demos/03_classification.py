# %% [markdown]
# # Deciding Cs = Sym without search
#
# Every permutation is a combinatorial self-similarity exactly when the space
# is discrete, strongly rigid, or of rectangle type (four points, the three
# perfect matchings of K4 as equality blocks). `theorem_crosscheck` compares
# that structural rule with a brute-force group computation.

# %%
from combsim import (
    SemimetricSpace,
    classify,
    discrete_space,
    pseudolinear,
    random_space,
    rectangle_example,
    strongly_rigid_space,
    theorem_crosscheck,
)

examples = {
    "rectangle": rectangle_example(),
    "discrete(5)": discrete_space(5),
    "rigid(5)": strongly_rigid_space(5),
    "isosceles": SemimetricSpace.from_pair_values(3, [1, 2, 1]),
    "pseudolinear(1,1)": pseudolinear(1, 1),
    "random(6, 4 values)": random_space(6, 4, seed=1),
}
for name, space in examples.items():
    c = classify(space)
    check = theorem_crosscheck(space)
    print(f"{name:22s} {c}  brute={check.brute_force} agree={check.agree}")
