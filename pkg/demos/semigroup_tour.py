"""Tour of the partition semigroup: products, identities, idempotents."""

from gwreath import (
    check_identities,
    cyclic,
    enumerate_colored_partitions,
    idempotents,
    identity_partition,
    klein_four,
    multiply,
    power,
)
from gwreath.parsing import render_partition

G = cyclic(2)
print(f"color group: {G.name}, labels {G.labels}")

P = (((1,), 1), ((2,), 0))
Q = (((1, 2), 1),)
print(f"\n{render_partition(G, P)} * {render_partition(G, Q)}"
      f" = {render_partition(G, multiply(G, P, Q))}")
print("blocks of the left factor get cut by the right factor's blocks;")
print("each surviving piece multiplies the right color onto the left color.")

one = identity_partition(2)
print(f"\nidentity element: {render_partition(G, one)}")
print(f"P * 1 = {render_partition(G, multiply(G, P, one))}")

print(f"\nP squared:  {render_partition(G, power(G, P, 2))}   (colors square)")
print(f"P cubed:    {render_partition(G, power(G, P, 3))}   (back to P, exponent |G|)")

for group, n in ((cyclic(1), 4), (cyclic(3), 3), (klein_four(), 2)):
    report = check_identities(group, n)
    print(f"\nidentities x^(|G|+1)=x and xyx^|G|=xy over {group.name}, n={n}: "
          f"{'PASS' if report['passed'] else 'FAIL'} "
          f"({report['element_count']} elements, {report['pairs_checked']} pairs)")

G3 = cyclic(3)
found = idempotents(G3, 2)
total = len(list(enumerate_colored_partitions(G3, 2)))
print(f"\nidempotents over {G3.name}, n=2: {len(found)} of {total} elements,")
print("exactly the partitions whose every color is the identity:")
for partition in found:
    print("   ", render_partition(G3, partition))
