"""Backtracking search for a table-preserving bijection between two categories.

The search first matches identities (pruned by hom-class size signatures),
then extends to all morphisms hom-class by hom-class, rejecting a partial
assignment as soon as it maps a defined composition to an undefined one, an
undefined one to a defined one, or two compositions to conflicting results.
"""
from __future__ import annotations

from collections import Counter

from .core import ObjlessCategory


def _hom_sizes(cat: ObjlessCategory) -> dict[tuple[str, str], int]:
    sizes: dict[tuple[str, str], int] = {}
    for m in cat.morphisms:
        key = (cat.dom[m], cat.cod[m])
        sizes[key] = sizes.get(key, 0) + 1
    return sizes


def _identity_signature(cat, sizes, ident):
    self_size = sizes.get((ident, ident), 0)
    out = sorted(sizes.get((ident, other), 0) for other in cat.identities if other != ident)
    inc = sorted(sizes.get((other, ident), 0) for other in cat.identities if other != ident)
    return (self_size, tuple(out), tuple(inc))


def find_table_bijection(c1: ObjlessCategory, c2: ObjlessCategory) -> dict[str, str] | None:
    """A bijection of morphism names carrying c1's table exactly onto c2's, or None."""
    if len(c1.morphisms) != len(c2.morphisms):
        return None
    if len(c1.identities) != len(c2.identities):
        return None
    if len(c1.table) != len(c2.table):
        return None

    sizes1 = _hom_sizes(c1)
    sizes2 = _hom_sizes(c2)
    sig1 = {i: _identity_signature(c1, sizes1, i) for i in c1.identities}
    sig2 = {i: _identity_signature(c2, sizes2, i) for i in c2.identities}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None

    # Rarest signatures first, then name order for determinism.
    freq = Counter(sig1.values())
    idents1 = sorted(c1.identities, key=lambda i: (freq[sig1[i]], sig1[i], i))
    idents2 = sorted(c2.identities)

    def object_maps(idx: int, sigma: dict[str, str], used: set[str]):
        if idx == len(idents1):
            if all(
                sizes1.get((a, b), 0) == sizes2.get((sigma[a], sigma[b]), 0)
                for a in idents1
                for b in idents1
            ):
                yield dict(sigma)
            return
        a = idents1[idx]
        for b in idents2:
            if b in used or sig2[b] != sig1[a]:
                continue
            sigma[a] = b
            used.add(b)
            yield from object_maps(idx + 1, sigma, used)
            used.discard(b)
            del sigma[a]

    hom2: dict[tuple[str, str], list[str]] = {}
    for m in sorted(c2.morphisms):
        hom2.setdefault((c2.dom[m], c2.cod[m]), []).append(m)

    produced_by: dict[str, list[tuple[str, str]]] = {}
    for pair, r in c1.table.items():
        produced_by.setdefault(r, []).append(pair)

    def consistent(mapping: dict[str, str], used: set[str], x: str) -> bool:
        # Check every composition pairing x with an already-assigned morphism,
        # in both orders; definedness must agree and assigned results must match.
        for w, v in list(mapping.items()):
            for (p, q), (pp, qq) in (((x, w), (mapping[x], v)), ((w, x), (v, mapping[x]))):
                r = c1.table.get((p, q))
                rr = c2.table.get((pp, qq))
                if (r is None) != (rr is None):
                    return False
                if r is None:
                    continue
                mapped = mapping.get(r)
                if mapped is not None:
                    if mapped != rr:
                        return False
                elif rr in used:
                    # rr is already the image of a different morphism, so the
                    # still-unassigned r can never be sent to it.
                    return False
        # Compositions that produce x constrain its image directly.
        for (p, q) in produced_by.get(x, ()):
            vp = mapping.get(p)
            vq = mapping.get(q)
            if vp is not None and vq is not None and c2.table.get((vp, vq)) != mapping[x]:
                return False
        return True

    def assign(arrows: list[str], idx: int, sigma: dict[str, str],
               mapping: dict[str, str], used: set[str]):
        if idx == len(arrows):
            for (b, a), r in c1.table.items():
                if c2.table.get((mapping[b], mapping[a])) != mapping[r]:
                    return None
            return dict(mapping)
        x = arrows[idx]
        for y in hom2.get((sigma[c1.dom[x]], sigma[c1.cod[x]]), ()):
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            if consistent(mapping, used, x):
                found = assign(arrows, idx + 1, sigma, mapping, used)
                if found is not None:
                    return found
            used.discard(y)
            del mapping[x]
        return None

    non_identities = sorted(m for m in c1.morphisms if m not in c1.identities)
    for sigma in object_maps(0, {}, set()):
        mapping = dict(sigma)
        used = set(sigma.values())
        found = assign(non_identities, 0, sigma, mapping, used)
        if found is not None:
            return found
    return None
