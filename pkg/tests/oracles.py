"""Independent brute-force references; nothing here imports whopf."""
import itertools


class TinyGroupoid:
    """morphisms: {label: (src, tgt)}; comp: {(g, f): g∘f}; ident: {object: label}."""

    def __init__(self, morphisms, comp, ident):
        self.morphisms = morphisms
        self.comp = comp
        self.ident = ident

    @property
    def identities(self):
        return set(self.ident.values())


def cyclic(n):
    labs = ["e"] + [("g" if k == 1 else f"g^{k}") for k in range(1, n)]
    return TinyGroupoid({l: ("*", "*") for l in labs},
                        {(labs[a], labs[b]): labs[(a + b) % n] for a in range(n) for b in range(n)},
                        {"*": "e"})


def klein():
    labs = {(0, 0): "e", (1, 0): "a", (0, 1): "b", (1, 1): "ab"}
    comp = {(labs[x], labs[y]): labs[((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)] for x in labs for y in labs}
    return TinyGroupoid({l: ("*", "*") for l in labs.values()}, comp, {"*": "e"})


def pair():
    """Two objects, one arrow each way."""
    def lab(s, t):
        return f"1_{s}" if s == t else f"{s}>{t}"
    objs = ("x", "y")
    morph = {lab(s, t): (s, t) for s in objs for t in objs}
    comp = {(lab(t, u), lab(s, t)): lab(s, u) for s in objs for t in objs for u in objs}
    return TinyGroupoid(morph, comp, {o: lab(o, o) for o in objs})


def units(p):
    return list(range(1, p))


def h2_group_cohomology(G, p):
    """(#normalized 2-cocycles, #classes) for G with trivial coefficients in GF(p)^*.

    A cochain assigns a unit to every composable pair (g, f); normalized
    means value 1 when g or f is an identity. Coboundaries are
    (g, f) -> b(g) b(f) / b(g∘f) for b normalized on identities.
    """
    pairs = sorted(G.comp)
    free = [pf for pf in pairs if pf[0] not in G.identities and pf[1] not in G.identities]
    triples = [(h, g, f) for (h, g) in pairs for (g2, f) in pairs if g2 == g]
    U = units(p)
    cocycles = []
    for vals in itertools.product(U, repeat=len(free)):
        s = dict(zip(free, vals))

        def sig(g, f):
            return s.get((g, f), 1)

        ok = all(sig(h, g) * sig(G.comp[(h, g)], f) % p == sig(g, f) * sig(h, G.comp[(g, f)]) % p
                 for h, g, f in triples)
        if ok:
            cocycles.append(tuple(sig(*pf) for pf in pairs))
    arrows = sorted(m for m in G.morphisms if m not in G.identities)
    boundaries = set()
    for vals in itertools.product(U, repeat=len(arrows)):
        b = dict(zip(arrows, vals))

        def beta(g):
            return b.get(g, 1)

        boundaries.add(tuple(beta(g) * beta(f) * pow(beta(G.comp[(g, f)]), p - 2, p) % p for g, f in pairs))
    seen, classes = set(), 0
    for z in cocycles:
        if z in seen:
            continue
        classes += 1
        for bd in boundaries:
            seen.add(tuple(x * y % p for x, y in zip(z, bd)))
    return len(cocycles), classes


def matmul2(a, b, p):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) % p for j in range(2)] for i in range(2)]


def twisted_z2_product(p, s):
    """Multiplication table of GF(p)[Z/2] twisted by s = sigma(g, g), on basis e, g."""
    return {("e", "e"): {"e": 1}, ("e", "g"): {"g": 1}, ("g", "e"): {"g": 1}, ("g", "g"): {"e": s % p}}
