# %% [markdown]
# Caterpillars in Slide^omega(1,...,1) and 23-1 avoiding permutations.

# %%
from slidestrata.patterns import (
    avoiders, bell, caterpillars, draw_caterpillar, leaf_labeling_trace,
    reading_word, slide_histories, word_encode_psi,
)
from slidestrata.slides import slide_set_omega

for n in range(1, 7):
    cats = caterpillars(slide_set_omega((1,) * n))
    print(n, len(cats), len(avoiders(n)), bell(n))

# %%
tree, steps = leaf_labeling_trace((2, 1, 4, 3))
print(draw_caterpillar(tree))
for s in steps:
    print(f"  leaf {s.value}: case {s.case}, slot {s.slot}")
print(reading_word(tree))

# %% [markdown]
# Recording where each slid leaf sits among the internal vertices gives a
# word with the right letter counts. It separates the trees for n <= 3 but
# collides at (0,0,2,2).

# %%
from collections import Counter

words = Counter(word_encode_psi(h) for h in slide_histories((0, 0, 2, 2)))
print(len(words), "distinct words for", sum(words.values()), "trees")
print([w for w, c in words.items() if c > 1])
