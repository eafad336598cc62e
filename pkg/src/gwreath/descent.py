"""The descent algebra inside the group algebra of the wreath product.

Two bases, both indexed by colored compositions:

* ``y_basis(comp)`` sums the elements whose descent composition is exactly
  ``comp``; the supports partition the whole wreath product.
* ``x_basis(comp)`` sums the elements whose descent composition is a
  coarsening of ``comp``, i.e. X_comp = sum of Y_beta over beta that comp
  refines.  Inverting that by inclusion-exclusion recovers Y from X.

``sigma_to_x`` sends each sigma basis vector of the invariant algebra to the
matching X vector.  ``verify_antihomomorphism`` sweeps the defining identity
of that map: the image of sigma_a * sigma_b equals X_b * X_a, with the
factors reversed.
"""

from __future__ import annotations

import random

from .errors import NotInSpanError
from .limits import DEFAULT_LIMIT, check_limit
from .linear import LinearCombination
from .partitions import (
    ColoredComposition,
    coarsenings,
    composition_total,
    enumerate_colored_compositions,
    enumerate_partitions_of_type,
    validate_composition,
)
from .semigroup import multiply
from .wreath import (
    ColoredPermutation,
    chamber_to_wreath,
    count_wreath,
    descent_composition,
    enumerate_wreath,
    wreath_mul,
    wreath_to_chamber,
)
from .invariant import sigma_product


def descent_fibers(group, n: int, limit: int | None = DEFAULT_LIMIT) -> dict:
    """Map each composition to the tuple of elements with that descent
    composition.  The fibers partition the wreath product."""
    fibers: dict = {}
    for u in enumerate_wreath(group, n, limit):
        fibers.setdefault(descent_composition(u), []).append(u)
    return {comp: tuple(members) for comp, members in fibers.items()}


def y_basis(group, comp: ColoredComposition,
            limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    validate_composition(comp, group)
    n = composition_total(comp)
    return LinearCombination({
        u: 1
        for u in enumerate_wreath(group, n, limit)
        if descent_composition(u) == comp
    })


def x_basis(group, comp: ColoredComposition,
            limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    result = LinearCombination()
    for coarser in coarsenings(comp):
        result = result + y_basis(group, coarser, limit)
    return result


def y_from_x(group, comp: ColoredComposition,
             limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    """Recover the Y vector by inclusion-exclusion over coarsenings; must
    agree with ``y_basis`` exactly."""
    result = LinearCombination()
    length = len(comp)
    for coarser in coarsenings(comp):
        sign = -1 if (length - len(coarser)) % 2 else 1
        result = result + sign * x_basis(group, coarser, limit)
    return result


def group_algebra_mul(group, x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """Bilinear extension of the wreath product to the group algebra."""
    acc: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            key = wreath_mul(group, u, v)
            acc[key] = acc.get(key, 0) + a * b
    return LinearCombination(acc)


def sigma_to_x(group, x: LinearCombination,
               limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    """Linear extension of sigma_comp -> X_comp into the group algebra."""
    result = LinearCombination()
    for comp, coeff in x.items():
        result = result + coeff * x_basis(group, comp, limit)
    return result


def express_in_x_basis(group, n: int, z: LinearCombination,
                       limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    """Coordinates of ``z`` in the X basis, or NotInSpanError with a witness.

    ``z`` lies in the descent algebra exactly when its coefficients are
    constant on every descent fiber; the constants are the Y coordinates,
    and inclusion-exclusion converts those to X coordinates.
    """
    fibers = descent_fibers(group, n, limit)
    buckets: dict = {}
    for u, coeff in z.items():
        if len(u) != n:
            raise ValueError(f"element {u} is not over 1..{n}")
        buckets.setdefault(descent_composition(u), {})[u] = coeff
    y_coords: dict = {}
    for comp, seen in buckets.items():
        fiber = fibers[comp]
        first = seen.get(fiber[0], 0)
        for u in fiber:
            value = seen.get(u, 0)
            if value != first:
                raise NotInSpanError(
                    "not in the descent algebra: elements with equal descent "
                    f"composition {comp} carry coefficients {first} and {value}",
                    witness=(fiber[0], u),
                )
        if first:
            y_coords[comp] = first
    x_coords: dict = {}
    for comp, coeff in y_coords.items():
        length = len(comp)
        for coarser in coarsenings(comp):
            sign = -1 if (length - len(coarser)) % 2 else 1
            value = x_coords.get(coarser, 0) + sign * coeff
            if value:
                x_coords[coarser] = value
            elif coarser in x_coords:
                del x_coords[coarser]
    return LinearCombination(x_coords)


def sigma_act_on_chamber(group, comp: ColoredComposition, v: ColoredPermutation,
                         limit: int | None = DEFAULT_LIMIT) -> LinearCombination:
    """sigma_comp acting on the chamber of ``v`` by left multiplication in
    the partition semigroup, pulled back to the group algebra.

    Every summand lands on a chamber because chambers form a left ideal;
    the result equals delta_v * X_comp in the group algebra.
    """
    validate_composition(comp, group)
    chamber = wreath_to_chamber(v)
    acc: dict = {}
    for p in enumerate_partitions_of_type(comp, limit):
        u = chamber_to_wreath(multiply(group, p, chamber))
        acc[u] = acc.get(u, 0) + 1
    return LinearCombination(acc)


def verify_antihomomorphism(group, n: int, mode: str = "exhaustive",
                            samples: int = 200, seed: int = 0,
                            limit: int | None = DEFAULT_LIMIT) -> dict:
    """Sweep the identity  sigma_to_x(sigma_a * sigma_b) = X_b * X_a  over
    pairs of compositions, exhaustively or on seeded random samples.

    Returns a report dict; each failure records the pair, the first basis
    key where the sides differ, and both coefficients.
    """
    from .parsing import render_colored_permutation, render_composition

    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    comps = list(enumerate_colored_compositions(group, n, limit))
    if mode == "exhaustive":
        check_limit(len(comps) ** 2 * count_wreath(n, group.order), limit,
                    f"exhaustive anti-homomorphism sweep at n={n}, |G|={group.order}")
    fibers = descent_fibers(group, n, limit)
    x_vectors = {}
    for comp in comps:
        terms: dict = {}
        for coarser in coarsenings(comp):
            for u in fibers.get(coarser, ()):
                terms[u] = 1
        x_vectors[comp] = LinearCombination(terms)

    if mode == "exhaustive":
        pairs = [(a, b) for a in comps for b in comps]
    else:
        rng = random.Random(seed)
        pairs = [
            (comps[rng.randrange(len(comps))], comps[rng.randrange(len(comps))])
            for _ in range(samples)
        ]

    failures = []
    for a, b in pairs:
        lhs = LinearCombination()
        for comp, coeff in sigma_product(group, a, b).items():
            lhs = lhs + coeff * x_vectors[comp]
        rhs = group_algebra_mul(group, x_vectors[b], x_vectors[a])
        if lhs != rhs:
            diff = lhs - rhs
            key = min(diff.keys())
            failures.append({
                "left": render_composition(group, a),
                "right": render_composition(group, b),
                "key": render_colored_permutation(group, key),
                "lhs_coefficient": lhs.coefficient(key),
                "rhs_coefficient": rhs.coefficient(key),
            })
    return {
        "schema_version": 1,
        "theorem": "theorem1",
        "group": group.name,
        "n": n,
        "mode": mode,
        "seed": seed if mode == "sampled" else None,
        "pairs_checked": len(pairs),
        "failures": failures,
        "passed": not failures,
    }
