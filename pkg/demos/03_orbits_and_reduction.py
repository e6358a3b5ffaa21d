"""Moving points around with Dehn twists, then folding them back into F0.

Run:  python demos/03_orbits_and_reduction.py
"""

# %% Start at the triple point and apply a word
import numpy as np

from thurston_spine import MCGWord, apply_word, in_F0, minsky_embed, reduce_to_F0, triple_point

g = 2
tp = triple_point(g)
word = MCGWord.parse("A,G,A,g")
(c, t), traj = apply_word(g, word, tp.c_M, tp.t_M)

for i, (a, b) in enumerate(traj):
    z = minsky_embed(a, b)
    tag = "start" if i == 0 else word.letters[i - 1].value
    print(f"{tag:>5}: c={a:.6f} t={b:+.6f}  ->  {z.x:+.4f} + {z.y:.4f}i   in F0: {in_F0(g, a, b)}")

# %% Reduction finds a word that undoes it
c2, t2, back = reduce_to_F0(g, c, t)
print("\nreduction word:", back)
print("recovered:", (c2, t2), "error:", max(abs(c2 - tp.c_M), abs(t2 - tp.t_M)))
print("composite word, freely reduced:", (word + back).free_reduce())

# %% Scatter a cloud of points and fold them all back
rng = np.random.default_rng(1)
lengths = []
for _ in range(200):
    c = rng.uniform(0.3, 3.0)
    t = rng.uniform(-15, 15) * c
    c2, t2, w = reduce_to_F0(g, c, t)
    assert in_F0(g, c2, t2)
    lengths.append(len(w))
print("\nreduction word lengths: mean %.1f, max %d" % (np.mean(lengths), max(lengths)))
