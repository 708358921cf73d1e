# %% [markdown]
# Lazy tournaments and the hyperplane schedules that produce them.

# %%
from slidestrata import lazy_tournament, tour_set, family_schedule, run_schedule
from slidestrata.counts import compositions, double_factorial_odd
from slidestrata.serialize import tree_text
from slidestrata.tournament import all_tour_sets, format_wins
from slidestrata.trees import from_splits

# (ab)-(1)-(c)-(23): 3 beats 2, then beats c but lets c advance because 1 > c
# is waiting on the other side
tree = from_splits(3, [["1", "c", "2", "3"], ["c", "2", "3"], ["2", "3"]])
result = lazy_tournament(tree)
for m in result.match_log:
    print(f"  {m.winner} beats {m.loser}, {m.advanced} advances")
print("wins:", format_wins(result), "->", result.composition())

# %%
pts = tour_set((0, 0, 2, 2))
print(len(pts), "points in Tour(0,0,2,2)")
for t in pts:
    print("  ", tree_text(t))

# %% [markdown]
# Every tree with a, b on a common vertex lands in exactly one Tour(k), so the
# sizes add up to (2n-1)!!.

# %%
for n in range(1, 6):
    sets = all_tour_sets(n)
    print(n, sum(len(s) for s in sets.values()), double_factorial_odd(n))

# %% [markdown]
# For some shapes of k a sequence of generalized slides reproduces Tour(k).

# %%
s = family_schedule((0, 0, 2, 2))
print(s)
print(run_schedule(s) == tour_set((0, 0, 2, 2)))
