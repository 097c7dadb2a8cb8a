# %% [markdown]
# # Frames and their tangent spaces
#
# A frame turns a graded ideal I of S = k[x1..xn] into a finite-colength
# ideal J of T = S[y1..yn] while keeping track of equivariant deformations.
# We look at the bigraded pieces of Hom_T(J, T/J).

# %%
from hilbpath import FieldSpec, IdealHandle, PolyRing, tangent
from hilbpath.frames import build_frame, build_tweaked_frame, frame_like_check

S = PolyRing(FieldSpec.gf(5), ["x1", "x2", "x3"])
J = build_frame(IdealHandle(S, []), a=2)
print("colength of T/J:", J.colength())
prof = tangent.hom_profile(J)
print(prof.format())

# %% [markdown]
# Only the partial derivatives survive in negative degree (TNT), and the
# pieces of degree (k, -k) with k >= 1 are exactly the 9 = n^2 derivations
# y_i -> sum_j A_ij x_j.

# %%
rep = frame_like_check(J)
print("TNT:", rep.cond_a, "| g-map total:", rep.gmap_total, "| injective:", rep.gmap_injective)
print("frame-like:", rep.verdict)

# %% [markdown]
# In characteristic 2 the quadric needs a different companion ideal, giving
# the tweaked frame.  With a = 2 and n = 4 the negative part is still only
# translations, but the degree (1, -1) piece is larger than the 16 derivations:
# maps such as y2^2 -> x1*y4 pass every syzygy because the cube of the
# maximal x-ideal already lies in J.

# %%
S2 = PolyRing(FieldSpec.gf(2), ["x1", "x2", "x3", "x4"])
Jt = build_tweaked_frame(IdealHandle(S2, []), a=2)
rt = frame_like_check(Jt)
print("negative total:", rt.profile.negative_total, "| g-map total:", rt.gmap_total)
s = tangent.hom_system(Jt)
T = Jt.ring
images = [T.parse("x1*y4") if str(g) == "y2^2" else T.zero() for g in s.gens]
print("y2^2 -> x1*y4 is a homomorphism:", s.satisfies_syzygies((1, -1), s.table_from_images((1, -1), images)))
print("brute-force check of the (1,-1) piece:", tangent.hom_brute_force_oracle(Jt, (1, -1), budget=30000))
