# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # The cusp, one blowup at a time
#
# We follow the pair (x^2 + y^3, 2) from its singular locus to the single
# blowup that resolves it.

# %%
from reesalg.basicobj import MarkedObject, T_of, max_t_exact, transform_marked
from reesalg.blowup import CenterSpec
from reesalg.polyalg import parse_poly
from reesalg.rees import ReesAlgebra, diff_closure
from reesalg.resolution import resolve
from reesalg.singular import ord_at, sing_ideal

names = ("x", "y")
G = ReesAlgebra(((parse_poly("x^2 + y^3", names), 2),), 2)

# %% [markdown]
# ## Singular locus and order
#
# Sing is cut out by f and its first derivatives, so only the origin survives.

# %%
print(sing_ideal(G).generators)
print("ord at origin:", ord_at(G, (0, 0)))
print(diff_closure(G).to_str(names))

# %%
M = MarkedObject.on_root(G, names)
t = max_t_exact(M)
print("max t:", t)
print("T(G):", T_of(M, t).to_str(names))

# %% [markdown]
# ## Blowing up the origin
#
# In the y-chart the transform is (x^2 + y, 2), of order 1/2 at the origin,
# so it is no longer singular there.

# %%
for child in transform_marked(M, CenterSpec((0, 1))):
    print(child.chart.id, child.algebra.to_str(names), [r.a for r in child.chart.exceptional])

# %%
trace = resolve(G)
print(trace.to_json())
