"""Local signatures of singular fibers and the fold homomorphism.

sigma_loc assigns a rational number to each Lefschetz fiber type; h is the
homomorphism on fold monodromies.  The identity h = s + phi - (pushforward
phi) ties the tables to the cocycle machinery and is checked on the fly.
"""

import random

from blfsig import locsig
from blfsig.locsig import CycleContext
from blfsig.surface import TypeI, TypeII
from blfsig.verify import random_context_word
from blfsig.words import IOTA, ChainTwist, gen_word

# %% local signature tables
print("sigma_loc, type I:   ",
      {g: locsig.sigma_loc(TypeI(), g) for g in range(1, 6)})
print("sigma_loc, type II_h:",
      {(g, h): locsig.sigma_loc(TypeII(h), g)
       for g in range(2, 5) for h in range(1, g)})

# %% the fold homomorphism on its generating sets
ctx = CycleContext(2, TypeI())
print("\ntype I, g=2:")
for i in (1, 2, 3, 5):
    print(f"  h(t_{i}) =", locsig.h_generator(ChainTwist(i), ctx))
print("  h(iota) =", locsig.h_generator(IOTA, ctx))

ctx31 = CycleContext(3, TypeII(1))
print("type II_1, g=3:  h(t_1) =", locsig.h_generator(ChainTwist(1), ctx31),
      "  h(t_4) =", locsig.h_generator(ChainTwist(4), ctx31))

# %% h is evaluated additively on words
w = gen_word(2, ChainTwist(5), -4)
print("\nh(t_5^-4) =", locsig.h_word(w, ctx), "(the fold term of a built-in family)")

# %% the round-cobordism signature s saturates, it does not add up
print("\ns(t_5)   =", locsig.s_word(gen_word(2, ChainTwist(5)), ctx))
print("s(t_5^2) =", locsig.s_word(gen_word(2, ChainTwist(5), 2), ctx))
print("s(t_5^-3)=", locsig.s_word(gen_word(2, ChainTwist(5), -3), ctx))

# %% the decomposition identity, on a random stabiliser word
rng = random.Random(23)
w = random_context_word(rng, ctx, 12)
rep = locsig.decomposition_check(w, ctx)
print("\nrandom word:", w)
print(f"h = {rep.homomorphism};  s + phi - pushed phi = {rep.s_term} + "
      f"{rep.phi_term} - {rep.pushed_phi_term} = {rep.assembled}")
print("identity holds:", rep.agrees)
