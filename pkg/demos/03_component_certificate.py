# %% [markdown]
# # Certifying a non-reduced, non-liftable point
#
# The q-example: saturate (Q) + (x2^q, x4^q, x6^q) at the origin, with
# Q = x1x2 + x3x4 + x5x6, then add (x1, x3, x5)^(q+1).  Over F_3 the
# certificate checks that
#   * the GL_6 orbit has dimension dim Hom_0 = 26,
#   * the W_2 obstruction class is nonzero,
#   * the negative tangents are only the 6 translations.

# %%
from hilbpath import tangent
from hilbpath.pathology import build_q_example, five_step_certificate, w2_check

J = build_q_example(3)
print("colength:", J.colength())
orbit = tangent.degree_zero_orbit(J)
print(f"derivation kernel {orbit.lie_kernel_dim}, stabilizer bound {orbit.kernel_dim}, "
      f"orbit {orbit.orbit_dim}, Hom_0 {orbit.hom0_dim}")

# %% [markdown]
# The derivations preserving J form a 13-dimensional space, but three of them
# only work because d(x^3) = 0.  Requiring the stabilizer to keep the space of
# linear forms l with l^3 in J cuts this to 10, so the orbit has dimension
# 36 - 10 = 26, matching Hom_0.

# %%
rep = w2_check(J, 3)
print("W2 witness NF:", rep.normal_form, "->", rep.status)

# %%
cert = five_step_certificate(J, 3, q=3)
print(cert.to_json())
