"""Shared oracle helpers for the test suite.

The oracles here are deliberately naive: bounded enumeration and brute
force linear algebra, independent of the implementation under test.
"""

from __future__ import annotations

from itertools import product as cartesian

from homdecomp.monomials import MonomialIdeal, mono_mul


def enumerate_monomials(ambient: int, max_exp: int):
    """Every exponent vector with all entries <= max_exp."""
    return [u for u in cartesian(range(max_exp + 1), repeat=ambient)]


def random_ideal(rng, ambient: int, max_gens: int = 4, max_exp: int = 4) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        gens.append(tuple(rng.randint(0, max_exp) for _ in range(ambient)))
    return MonomialIdeal(ambient, gens)


def random_proper_ideal(rng, ambient: int, max_gens: int = 4, max_exp: int = 4) -> MonomialIdeal:
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            g = tuple(rng.randint(0, max_exp) for _ in range(ambient))
            if sum(g) > 0:
                gens.append(g)
        if gens:
            return MonomialIdeal(ambient, gens)


def oracle_colon_member(I: MonomialIdeal, J: MonomialIdeal, u) -> bool:
    """u is in (I : J) iff u*h lands in I for every generator h of J."""
    return all(I.contains(mono_mul(u, h)) for h in J.gens)


def oracle_saturation_member(I: MonomialIdeal, J: MonomialIdeal, u, max_steps: int = 30) -> bool:
    """u is in (I : J^infinity) iff some power of J multiplies u into I."""
    frontier = {u}
    for _ in range(max_steps):
        if all(I.contains(w) for w in frontier):
            return True
        frontier = {mono_mul(w, h) for w in frontier for h in J.gens if not I.contains(w)}
    return all(I.contains(w) for w in frontier)


def brute_force_box_count(I: MonomialIdeal) -> int:
    """Count monomials outside I inside the pure-power box, by direct loops."""
    bounds = []
    for i in range(I.ambient):
        pures = [g[i] for g in I.gens
                 if g[i] > 0 and all(e == 0 for j, e in enumerate(g) if j != i)]
        bounds.append(min(pures))
    count = 0
    for u in cartesian(*(range(b) for b in bounds)):
        if not I.contains(u):
            count += 1
    return count
