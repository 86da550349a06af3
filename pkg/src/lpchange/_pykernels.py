"""Pure-Python kernels, used when the compiled extension is unavailable.

Interpretations are bitmasks over an alphabet of ``n`` atoms.  A rule is a
4-tuple of masks ``(head_pos, head_neg, body_pos, body_neg)``.

Distance codes pack an SE pair as ``(there << w) | here``; a classical
interpretation ``y`` is packed as ``y << w`` so that one pair order covers
both kinds (an empty here-part makes the pair order collapse to plain
set inclusion, and the pair cardinality order to plain cardinality).
"""

NAME = "python"


def _violated(y, hp, hn, bp, bn):
    return not (hp & y) and not (hn & ~y) and not (bp & ~y) and not (bn & y)


def classical_models(n, rules):
    out = []
    for y in range(1 << n):
        for hp, hn, bp, bn in rules:
            if _violated(y, hp, hn, bp, bn):
                break
        else:
            out.append(y)
    return out


def se_models(n, rules):
    """All (x, y) with y a model and x a model of the reduct; sorted by (y, x)."""
    out = []
    for y in classical_models(n, rules):
        reduct = [(hp, bp) for hp, hn, bp, bn in rules if not (hn & ~y) and not (bn & y)]
        x = 0
        while True:
            for hp, bp in reduct:
                if not (bp & ~x) and not (hp & x):
                    break
            else:
                out.append((x, y))
            if x == y:
                break
            x = (x - y) & y
    return out


def _le(a, b, w):
    """Pair order on packed difference codes: there-part first, then here-part."""
    ta, tb = a >> w, b >> w
    if ta & ~tb:
        return False
    if ta != tb:
        return True
    return not (a & ~b & ((1 << w) - 1))


def _rank(code, w):
    # strictly increasing along the pair order; also the cardinality key
    return (code >> w).bit_count() * (w + 1) + (code & ((1 << w) - 1)).bit_count()


def minimal_codes(codes, w):
    """Minimal elements of a set of distinct packed codes under the pair order."""
    accepted = []
    for c in sorted(set(codes), key=lambda c: (_rank(c, w), c)):
        if not any(_le(m, c, w) for m in accepted):
            accepted.append(c)
    return accepted


def sigma_subset(codes1, codes2, w):
    """Mask over codes1: selected iff some partner gives a minimal distance."""
    if not codes2:
        return [False] * len(codes1)
    distances = {a ^ b for a in codes1 for b in codes2}
    minimal = set(minimal_codes(distances, w))
    return [any((a ^ b) in minimal for b in codes2) for a in codes1]


def sigma_card(codes1, codes2, w):
    if not codes2:
        return [False] * len(codes1)
    best = [min(_rank(a ^ b, w) for b in codes2) for a in codes1]
    if not best:
        return []
    m = min(best)
    return [k == m for k in best]


def minimal_rows(rows, w):
    """Mask over distinct signature rows: minimal under the componentwise pair order."""
    rows = [tuple(int(v) for v in r) for r in rows]
    order = sorted(range(len(rows)), key=lambda i: (sum(_rank(c, w) for c in rows[i]), rows[i]))
    accepted = []
    mask = [False] * len(rows)
    for i in order:
        row = rows[i]
        dominated = False
        for j in accepted:
            if all(_le(m, c, w) for m, c in zip(rows[j], row)):
                dominated = True
                break
        if not dominated:
            accepted.append(i)
            mask[i] = True
    return mask
