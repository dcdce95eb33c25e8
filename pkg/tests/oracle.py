"""Brute-force semantic oracles, independent of the package internals.

Interpretations over a domain {0..n-1} are encoded with bitmask ints:
an atom's extension is a mask, a role is a tuple of successor masks
indexed by subject.  ``extension`` re-implements concept semantics
directly from the definitions so it can cross-check both the rewriting
code and the tableau.
"""

from __future__ import annotations

from itertools import product

from alcqgen.syntax import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Bottom,
    ConceptAssertion,
    Exists,
    Forall,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    Top,
)


def extension(c, n, atom_ext, role_ext) -> int:
    full = (1 << n) - 1
    if isinstance(c, Atomic):
        return atom_ext.get(c.name, 0)
    if isinstance(c, Top):
        return full
    if isinstance(c, Bottom):
        return 0
    if isinstance(c, Not):
        return full ^ extension(c.inner, n, atom_ext, role_ext)
    if isinstance(c, And):
        return extension(c.left, n, atom_ext, role_ext) & extension(c.right, n, atom_ext, role_ext)
    if isinstance(c, Or):
        return extension(c.left, n, atom_ext, role_ext) | extension(c.right, n, atom_ext, role_ext)
    succs = role_ext.get(c.role, (0,) * n)
    filler = extension(c.filler, n, atom_ext, role_ext)
    out = 0
    for x in range(n):
        hits = bin(succs[x] & filler).count("1")
        if isinstance(c, Exists):
            ok = hits >= 1
        elif isinstance(c, Forall):
            ok = succs[x] & ~filler & ((1 << n) - 1) == 0
        elif isinstance(c, AtLeast):
            ok = hits >= c.n
        else:
            ok = hits <= c.n
        if ok:
            out |= 1 << x
    return out


def axiom_holds(axiom, n, atom_ext, role_ext, ind_map) -> bool:
    if isinstance(axiom, Subsumption):
        lhs = extension(axiom.lhs, n, atom_ext, role_ext)
        rhs = extension(axiom.rhs, n, atom_ext, role_ext)
        return lhs & ~rhs & ((1 << n) - 1) == 0
    if isinstance(axiom, ConceptAssertion):
        ext = extension(axiom.concept, n, atom_ext, role_ext)
        return bool(ext >> ind_map[axiom.individual] & 1)
    if isinstance(axiom, RoleAssertion):
        succs = role_ext.get(axiom.role, (0,) * n)
        return bool(succs[ind_map[axiom.subject]] >> ind_map[axiom.object] & 1)
    raise TypeError(axiom)


def find_model(axioms, atoms, roles, individuals, max_domain=3):
    """First interpretation over domains of size <= max_domain satisfying
    all axioms, or None.  Subsumptions are checked before the individual
    assignment loop since they do not mention individuals."""
    atoms = tuple(atoms)
    roles = tuple(roles)
    individuals = tuple(individuals)
    tbox = [a for a in axioms if isinstance(a, Subsumption)]
    abox = [a for a in axioms if not isinstance(a, Subsumption)]
    for n in range(1, max_domain + 1):
        masks = range(1 << n)
        for atom_values in product(masks, repeat=len(atoms)):
            atom_ext = dict(zip(atoms, atom_values))
            for role_values in product(product(masks, repeat=n), repeat=len(roles)):
                role_ext = dict(zip(roles, role_values))
                if not all(axiom_holds(a, n, atom_ext, role_ext, {}) for a in tbox):
                    continue
                for assignment in product(range(n), repeat=len(individuals)):
                    ind_map = dict(zip(individuals, assignment))
                    if all(axiom_holds(a, n, atom_ext, role_ext, ind_map) for a in abox):
                        return n, atom_ext, role_ext, ind_map
    return None


def concepts_equivalent(left, right, atoms, roles, max_domain=3) -> bool:
    """Same extension in every interpretation over domains <= max_domain."""
    atoms = tuple(atoms)
    roles = tuple(roles)
    for n in range(1, max_domain + 1):
        masks = range(1 << n)
        for atom_values in product(masks, repeat=len(atoms)):
            atom_ext = dict(zip(atoms, atom_values))
            for role_values in product(product(masks, repeat=n), repeat=len(roles)):
                role_ext = dict(zip(roles, role_values))
                if extension(left, n, atom_ext, role_ext) != extension(
                    right, n, atom_ext, role_ext
                ):
                    return False
    return True
