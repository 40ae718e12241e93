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
# # Integrally equivalent inputs, identical traces
#
# Powers of the pair and Veronese subalgebras leave the integral closure
# unchanged. The driver should not notice.

# %%
from reesalg.polyalg import parse_poly
from reesalg.rees import ReesAlgebra, natural_closure, veronese
from reesalg.resolution import resolve, traces_equal

names = ("x", "y")
node = ReesAlgebra(((parse_poly("x^2 - y^2", names), 1),), 2)
squared = ReesAlgebra(((parse_poly("x^2 - y^2", names) ** 2, 2),), 2)

base = resolve(node)
print(base.outcome, len(base.steps), "steps")

# %%
for label, H in [("squared", squared), ("veronese 3", veronese(node, 3)), ("natural", natural_closure(node))]:
    print(label, traces_equal(base, resolve(H)))

# %% [markdown]
# ## Where the node needs more than blowups
#
# After two blowups the max locus contains the curve xy = 2, which is not a
# coordinate hyperplane. The driver covers the chart by two open sets and
# solves for y where x is a unit.

# %%
for s in base.steps:
    if s.kind == "localize":
        print(s.chart, s.coords)
