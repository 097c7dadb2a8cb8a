# %% [markdown]
# # A tour of the algebra core
#
# Rings carry an x-block and an optional y-block of variables.  Everything
# below is exact: coefficients live in F_p or in Q.

# %%
from hilbpath import FieldSpec, IdealHandle, PolyRing, intersect, saturate
from hilbpath.groebner import maximal_ideal, power_of_variables
from hilbpath.pathology import MDP_K
from hilbpath.resolution import minimal_free_resolution

R = PolyRing(FieldSpec.gf(7), ["x", "y", "z"])
I = IdealHandle(R, ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])
print("reduced basis:")
for g in I.gb:
    print("   ", g)

# %% [markdown]
# Normal forms are canonical, so ideal membership is a normal-form test.

# %%
f = R.parse("x^3 - y^3")
print("NF(x^3 - y^3) =", I.normal_form(f), "| member:", I.contains(f))

# %% [markdown]
# Saturation at the origin strips embedded components.  Here we add a fat
# point at the origin and take it away again.

# %%
m = maximal_ideal(R)
dirty = intersect(I, power_of_variables(R, range(3), 3))
print("dirty == I:", dirty.same_ideal(I))
print("saturated == I:", saturate(dirty, m).same_ideal(I))

# %% [markdown]
# Betti tables and regularity.  The ideal K below has regularity four, which
# fixes the frame size a >= reg + 1 used later.

# %%
S = PolyRing(FieldSpec.qq(), ["x1", "x2", "x3", "x4"])
K = IdealHandle(S, list(MDP_K))
table = minimal_free_resolution(K)
print("Betti table (i, j, b):")
print(table.format())
print("regularity:", table.regularity())
