"""Tour of the descent algebra: Y and X bases, inclusion-exclusion, and the
product-reversing map from the invariant subalgebra."""

from gwreath import (
    cyclic,
    descent_composition,
    enumerate_colored_compositions,
    enumerate_wreath,
    express_in_x_basis,
    group_algebra_mul,
    sigma_product,
    sigma_to_x,
    x_basis,
    y_basis,
    y_from_x,
)
from gwreath.parsing import (
    render_colored_permutation,
    render_combination,
    render_composition,
)

G = cyclic(2)
n = 2

print(f"wreath product over {G.name}, n={n}: {2**n * 2} elements")
for u in enumerate_wreath(G, n):
    print(f"   {render_colored_permutation(G, u)}   descent composition "
          f"{render_composition(G, descent_composition(u))}")

comp = ((1, 1), (1, 1))
print(f"\nY{render_composition(G, comp)} sums the elements with that exact "
      "descent composition:")
for u, _ in y_basis(G, comp).items():
    print("   ", render_colored_permutation(G, u))

print(f"\nX{render_composition(G, comp)} also includes every coarsening:")
for u, _ in sorted(x_basis(G, comp).items()):
    print("   ", render_colored_permutation(G, u))

assert y_from_x(G, comp) == y_basis(G, comp)
print("\ninclusion-exclusion over coarsenings recovers Y from X exactly.")

a = ((1, 0), (1, 1))
b = ((2, 1),)
print(f"\nsigma product sigma{render_composition(G, a)} * sigma{render_composition(G, b)}:")
product = sigma_product(G, a, b)
print("   ", render_combination(G, "sigma", product))

lhs = sigma_to_x(G, product)
rhs = group_algebra_mul(G, x_basis(G, b), x_basis(G, a))
assert lhs == rhs
print("its image in the group algebra equals X_b * X_a -- the map reverses "
      "products.")

closure = group_algebra_mul(G, x_basis(G, a), x_basis(G, b))
coords = express_in_x_basis(G, n, closure)
print(f"\nX{render_composition(G, a)} * X{render_composition(G, b)} "
      f"= {render_combination(G, 'x', coords)}")
print("every such product lands back in the X span with integer coordinates.")
