"""Independent root finder used to cross-check the closed-form solver.

All roots are iterated simultaneously (Aberth-Ehrlich correction with a
Durand-Kerner fallback where the derivative vanishes), starting from a
deterministic ring of initial guesses.  No randomness, no retries: a run
that fails to converge is reported as such.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import permutations

from .poly_core import RealPolynomial, horner_with_derivative

# Roots closer than this count as one cluster when measuring separation.
CLUSTER_DISTANCE = 1e-3

# Angular offset of the initial ring; keeps guesses off the real axis where
# real-coefficient symmetry could stall the iteration.
_RING_PHASE = 0.4


@dataclass(frozen=True)
class OracleConfig:
    """Iteration limits and reporting thresholds for :func:`find_roots`."""

    max_iterations: int = 200
    convergence_tolerance: float = 1e-13
    cluster_radius_factor: float = 1e-7

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.convergence_tolerance <= 0.0:
            raise ValueError("convergence_tolerance must be positive")
        if self.cluster_radius_factor <= 0.0:
            raise ValueError("cluster_radius_factor must be positive")


@dataclass(frozen=True)
class OracleResult:
    roots: tuple[complex, ...]
    iterations_used: int
    converged: bool
    cluster_radii: tuple[float, ...]


def _polish(coeffs_rev: tuple[float, ...], z: complex, steps: int = 3) -> complex:
    # Newton steps accepted only while the residual strictly decreases.
    best = abs(horner_with_derivative(coeffs_rev, z)[0])
    for _ in range(steps):
        p, dp = horner_with_derivative(coeffs_rev, z)
        if dp == 0:
            break
        candidate = z - p / dp
        r = abs(horner_with_derivative(coeffs_rev, candidate)[0])
        if r < best:
            z, best = candidate, r
        else:
            break
    return z


def _cluster_radii(roots: list[complex], floor: float) -> tuple[float, ...]:
    n = len(roots)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < CLUSTER_DISTANCE:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    members: dict[int, list[int]] = {}
    for i in range(n):
        members.setdefault(find(i), []).append(i)

    radii = [0.0] * n
    for group in members.values():
        if len(group) == 1:
            continue
        centroid = sum(roots[i] for i in group) / len(group)
        radius = max(abs(roots[i] - centroid) for i in group)
        radius = max(radius, floor)
        for i in group:
            radii[i] = radius
    return tuple(radii)


def find_roots(p: RealPolynomial, config: OracleConfig | None = None) -> OracleResult:
    """Find all complex roots of ``p`` by simultaneous iteration.

    Deterministic: the same polynomial and configuration always produce
    bit-identical results.
    """
    if config is None:
        config = OracleConfig()
    if p.degree < 1:
        raise ValueError("find_roots requires degree >= 1")

    coeffs = p.monic().coefficients
    n = p.degree
    coeffs_rev = tuple(reversed(coeffs))
    tol = config.convergence_tolerance
    scale = max(1.0, max(abs(c) for c in coeffs))

    if n == 1:
        root = complex(-coeffs[0], 0.0)
        residual = abs(horner_with_derivative(coeffs_rev, root)[0])
        return OracleResult(
            roots=(root,),
            iterations_used=0,
            converged=residual <= tol * scale,
            cluster_radii=(0.0,),
        )

    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    z = [radius * cmath.exp(1j * (2.0 * cmath.pi * k / n + _RING_PHASE)) for k in range(n)]

    iterations_used = 0
    for _ in range(config.max_iterations):
        iterations_used += 1
        new_z = list(z)
        max_step = 0.0
        for k in range(n):
            zk = z[k]
            pk, dpk = horner_with_derivative(coeffs_rev, zk)
            if pk == 0:
                continue
            repulsion = 0j
            for j in range(n):
                if j == k:
                    continue
                diff = zk - z[j]
                if diff == 0:
                    diff = complex(1e-12 * (1.0 + abs(zk)), 0.0)
                repulsion += 1.0 / diff
            if dpk != 0:
                newton = pk / dpk
                denom = 1.0 - newton * repulsion
                correction = newton if denom == 0 else newton / denom
            else:
                # Derivative vanished: fall back to the product correction.
                prod = complex(1.0, 0.0)
                for j in range(n):
                    if j == k:
                        continue
                    diff = zk - z[j]
                    if diff == 0:
                        diff = complex(1e-12 * (1.0 + abs(zk)), 0.0)
                    prod *= diff
                correction = pk / prod
            new_z[k] = zk - correction
            step = abs(correction)
            if step > max_step:
                max_step = step
        z = new_z
        if max_step <= tol * (1.0 + max(abs(w) for w in z)):
            break

    z = [_polish(coeffs_rev, w) for w in z]
    residuals = [abs(horner_with_derivative(coeffs_rev, w)[0]) for w in z]
    # Residual floor grows like |z|^n: evaluation rounding alone reaches
    # eps * scale * |z|^n, so the convergence check must scale the same way.
    converged = all(
        r <= tol * scale * max(1.0, abs(w)) ** n for r, w in zip(residuals, z)
    )
    return OracleResult(
        roots=tuple(z),
        iterations_used=iterations_used,
        converged=converged,
        cluster_radii=_cluster_radii(z, config.cluster_radius_factor),
    )


def pair_roots(
    computed: list[complex] | tuple[complex, ...],
    reference: list[complex] | tuple[complex, ...],
) -> list[tuple[int, int, float]]:
    """Match computed roots to reference roots one-to-one.

    Returns ``(computed_index, reference_index, distance)`` triples.  For up
    to four roots the assignment minimizing the maximum distance (then the
    total distance) is found exhaustively; larger inputs fall back to a
    deterministic greedy closest-pair sweep.
    """
    if len(computed) != len(reference):
        raise ValueError(
            f"cannot pair {len(computed)} computed roots with {len(reference)} reference roots"
        )
    n = len(computed)
    if n == 0:
        return []

    if n <= 4:
        best_key = None
        best_perm: tuple[int, ...] | None = None
        for perm in permutations(range(n)):
            dists = [abs(computed[i] - reference[perm[i]]) for i in range(n)]
            # Ties broken by the lexicographic (re, im) order of the
            # assigned reference roots, so equal-cost matchings are stable.
            key = (
                max(dists),
                sum(dists),
                tuple((reference[j].real, reference[j].imag) for j in perm),
            )
            if best_key is None or key < best_key:
                best_key = key
                best_perm = perm
        assert best_perm is not None
        return [(i, best_perm[i], abs(computed[i] - reference[best_perm[i]])) for i in range(n)]

    edges = sorted(
        (abs(computed[i] - reference[j]), i, j) for i in range(n) for j in range(n)
    )
    used_i: set[int] = set()
    used_j: set[int] = set()
    pairs: list[tuple[int, int, float]] = []
    for dist, i, j in edges:
        if i in used_i or j in used_j:
            continue
        used_i.add(i)
        used_j.add(j)
        pairs.append((i, j, dist))
        if len(pairs) == n:
            break
    pairs.sort(key=lambda t: t[0])
    return pairs


def max_pairing_distance(
    computed: list[complex] | tuple[complex, ...],
    reference: list[complex] | tuple[complex, ...],
) -> float:
    """Largest matched distance under :func:`pair_roots`."""
    pairs = pair_roots(computed, reference)
    return max((d for _, _, d in pairs), default=0.0)
