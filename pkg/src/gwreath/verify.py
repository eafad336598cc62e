"""Verification sweeps over the library's defining identities.

Each suite returns a JSON-ready report with the same envelope:
schema_version, theorem (the target name), group, n, mode, seed,
pairs_checked, failures, passed.  Reports are deterministic for a fixed
configuration, including the seed in sampled mode.
"""

from __future__ import annotations

import random

from .descent import (
    descent_fibers,
    group_algebra_mul,
    sigma_act_on_chamber,
    verify_antihomomorphism,
    x_basis,
    y_basis,
    y_from_x,
)
from .errors import FormatError
from .limits import DEFAULT_LIMIT, check_limit
from .linear import LinearCombination
from .parsing import (
    render_colored_permutation,
    render_composition,
    render_partition,
)
from .partitions import (
    count_colored_compositions,
    count_colored_partitions,
    enumerate_colored_compositions,
    enumerate_colored_partitions,
)
from .semigroup import check_identities, multiply
from .wreath import (
    chamber_product_direct,
    count_wreath,
    enumerate_wreath,
    is_chamber,
    wreath_identity,
    wreath_to_chamber,
)
from .invariant import sigma_product, sigma_product_bruteforce

VERIFY_TARGETS = ("identities", "prop1", "mobius", "theorem1", "left-ideal", "counts")


def _envelope(target: str, group, n: int, mode: str, seed, pairs: int, failures: list) -> dict:
    return {
        "schema_version": 1,
        "theorem": target,
        "group": group.name,
        "n": n,
        "mode": mode,
        "seed": seed,
        "pairs_checked": pairs,
        "failures": failures,
        "passed": not failures,
    }


def verify_identities(group, n: int, mode: str = "exhaustive", samples: int = 10_000,
                      seed: int = 0, limit: int | None = DEFAULT_LIMIT) -> dict:
    report = check_identities(group, n, mode=mode, samples=samples, seed=seed, limit=limit)
    failures = []
    if report["first_failure"] is not None:
        witness = report["first_failure"]
        failures.append({
            "identity": witness["identity"],
            "x": render_partition(group, witness["x"]),
            "y": render_partition(group, witness["y"]) if witness["y"] else None,
        })
    out = _envelope("identities", group, n, report["mode"], report["seed"],
                    report["pairs_checked"], failures)
    out["element_count"] = report["element_count"]
    return out


def verify_prop1(group, n: int, mode: str = "exhaustive", samples: int = 200,
                 seed: int = 0, limit: int | None = DEFAULT_LIMIT) -> dict:
    """Matrix-rule products against brute-force expansion, pair by pair."""
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    comps = list(enumerate_colored_compositions(group, n, limit))
    if mode == "exhaustive":
        check_limit(len(comps) ** 2, limit,
                    f"product-rule sweep over composition pairs at n={n}")
        pairs = [(a, b) for a in comps for b in comps]
        used_seed = None
    else:
        rng = random.Random(seed)
        pairs = [(comps[rng.randrange(len(comps))], comps[rng.randrange(len(comps))])
                 for _ in range(samples)]
        used_seed = seed
    failures = []
    for a, b in pairs:
        fast = sigma_product(group, a, b)
        brute = sigma_product_bruteforce(group, a, b, limit=limit)
        if fast != brute:
            diff = fast - brute
            key = min(diff.keys())
            failures.append({
                "left": render_composition(group, a),
                "right": render_composition(group, b),
                "key": render_composition(group, key),
                "matrix_rule": fast.coefficient(key),
                "bruteforce": brute.coefficient(key),
            })
    return _envelope("prop1", group, n, mode, used_seed, len(pairs), failures)


def verify_mobius(group, n: int, limit: int | None = DEFAULT_LIMIT) -> dict:
    """Inclusion-exclusion round trip: y_from_x must equal y_basis everywhere."""
    failures = []
    checked = 0
    for comp in enumerate_colored_compositions(group, n, limit):
        checked += 1
        direct = y_basis(group, comp, limit)
        inverted = y_from_x(group, comp, limit)
        if direct != inverted:
            diff = direct - inverted
            key = min(diff.keys())
            failures.append({
                "composition": render_composition(group, comp),
                "key": render_colored_permutation(group, key),
                "direct": direct.coefficient(key),
                "inverted": inverted.coefficient(key),
            })
    return _envelope("mobius", group, n, "exhaustive", None, checked, failures)


def verify_left_ideal(group, n: int, limit: int | None = DEFAULT_LIMIT) -> dict:
    """Chamber identities: products with chambers stay chambers and agree
    with the sorting-permutation route; the sigma action on a chamber matches
    right multiplication by the X vector; acting on the identity gives X."""
    check_limit(count_colored_partitions(n, group.order) * count_wreath(n, group.order),
                limit, f"left-ideal sweep at n={n}, |G|={group.order}")
    failures = []
    checked = 0
    chambers = [wreath_to_chamber(u) for u in enumerate_wreath(group, n, limit)]
    for partition in enumerate_colored_partitions(group, n, limit):
        for chamber in chambers:
            checked += 1
            product = multiply(group, partition, chamber)
            if not is_chamber(product):
                failures.append({
                    "kind": "not-a-chamber",
                    "left": render_partition(group, partition),
                    "right": render_partition(group, chamber),
                })
                continue
            if product != chamber_product_direct(group, partition, chamber):
                failures.append({
                    "kind": "sorting-route-mismatch",
                    "left": render_partition(group, partition),
                    "right": render_partition(group, chamber),
                })
    identity = wreath_identity(n)
    for comp in enumerate_colored_compositions(group, n, limit):
        x_vector = x_basis(group, comp, limit)
        for v in enumerate_wreath(group, n, limit):
            checked += 1
            action = sigma_act_on_chamber(group, comp, v, limit)
            expected = group_algebra_mul(group, LinearCombination.basis(v), x_vector)
            if action != expected:
                failures.append({
                    "kind": "action-mismatch",
                    "composition": render_composition(group, comp),
                    "element": render_colored_permutation(group, v),
                })
        checked += 1
        if sigma_act_on_chamber(group, comp, identity, limit) != x_vector:
            failures.append({
                "kind": "identity-action-mismatch",
                "composition": render_composition(group, comp),
            })
    return _envelope("left-ideal", group, n, "exhaustive", None, checked, failures)


def verify_counts(group, n: int, limit: int | None = DEFAULT_LIMIT) -> dict:
    """Enumerated cardinalities against the closed-form counts, plus the
    partition of the wreath product by descent fibers."""
    failures = []
    order = group.order

    partition_count = sum(1 for _ in enumerate_colored_partitions(group, n, limit))
    expected = count_colored_partitions(n, order)
    if partition_count != expected:
        failures.append({"kind": "partition-count", "enumerated": partition_count,
                         "formula": expected})

    comp_count = sum(1 for _ in enumerate_colored_compositions(group, n, limit))
    expected = count_colored_compositions(n, order)
    if comp_count != expected:
        failures.append({"kind": "composition-count", "enumerated": comp_count,
                         "formula": expected})

    wreath_count = sum(1 for _ in enumerate_wreath(group, n, limit))
    expected = count_wreath(n, order)
    if wreath_count != expected:
        failures.append({"kind": "wreath-count", "enumerated": wreath_count,
                         "formula": expected})

    fibers = descent_fibers(group, n, limit)
    fiber_total = sum(len(members) for members in fibers.values())
    distinct = len({u for members in fibers.values() for u in members})
    if fiber_total != wreath_count or distinct != wreath_count:
        failures.append({"kind": "descent-fibers", "fiber_total": fiber_total,
                         "distinct": distinct, "wreath_count": wreath_count})

    report = _envelope("counts", group, n, "exhaustive", None, 4, failures)
    report["partition_count"] = partition_count
    report["composition_count"] = comp_count
    report["wreath_count"] = wreath_count
    return report


def run_verification(target: str, group, n: int, mode: str = "exhaustive",
                     samples: int = 200, seed: int = 0,
                     limit: int | None = DEFAULT_LIMIT) -> dict:
    if target == "identities":
        identity_samples = samples if samples else 10_000
        return verify_identities(group, n, mode=mode, samples=identity_samples,
                                 seed=seed, limit=limit)
    if target == "prop1":
        return verify_prop1(group, n, mode=mode, samples=samples, seed=seed, limit=limit)
    if target == "mobius":
        return verify_mobius(group, n, limit=limit)
    if target == "theorem1":
        return verify_antihomomorphism(group, n, mode=mode, samples=samples,
                                       seed=seed, limit=limit)
    if target == "left-ideal":
        return verify_left_ideal(group, n, limit=limit)
    if target == "counts":
        return verify_counts(group, n, limit=limit)
    raise FormatError(
        f"unknown verification target {target!r}; expected one of {', '.join(VERIFY_TARGETS)}"
    )
