"""Independent δ / embedding-dimension oracle for monomial-type germs.

Enumerates all monomials of weighted order ≤ W in the components, takes the
rank of their jets with exact Fractions, and reports δ = r(W+1) - rank and the
rank of the components modulo the span of monomials of degree ≥ 2.  Values are
checked at W and W+8 to make sure they have stabilized.
"""
from fractions import Fraction
import itertools
import sys


def parse(text):
    """Germ notation with exponents, '-' for zero, or 'c*e' for c*t^e; '|' joins terms."""
    branches = []
    for part in text.split(")+("):
        part = part.strip("()")
        comps = []
        for c in part.split(","):
            c = c.strip()
            if c == "-":
                comps.append({})
                continue
            poly = {}
            for term in c.split("|"):
                if "*" in term:
                    coef, e = term.split("*")
                    poly[int(e)] = poly.get(int(e), 0) + Fraction(coef)
                else:
                    poly[int(term)] = poly.get(int(term), 0) + 1
            comps.append(poly)
        branches.append(comps)
    return branches


def mul(a, b, w):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= w:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


class Basis:
    def __init__(self):
        self.rows = {}

    def reduce(self, v):
        v = dict(v)
        while v:
            p = min(v)
            if p not in self.rows:
                return v
            f = v[p]
            for k, x in self.rows[p].items():
                v[k] = v.get(k, 0) - f * x
                if v[k] == 0:
                    del v[k]
        return v

    def insert(self, v):
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        f = v[p]
        self.rows[p] = {k: x / f for k, x in v.items()}
        return True


def invariants(branches, w):
    n = len(branches[0])
    r = len(branches)
    weight = []
    for j in range(n):
        orders = [min(b[j]) for b in branches if b[j]]
        weight.append(min(orders) if orders else w + 1)

    def jet(exps):
        vec = {}
        for i, b in enumerate(branches):
            v = {0: Fraction(1)}
            for j, e in enumerate(exps):
                for _ in range(e):
                    v = mul(v, b[j], w)
            for k, x in v.items():
                vec[i * (w + 1) + k] = x
        return vec

    def monomials(j, budget):
        if j == n:
            yield ()
            return
        k = 0
        while k * weight[j] <= budget:
            for rest in monomials(j + 1, budget - k * weight[j]):
                yield (k,) + rest
            k += 1

    alg = Basis()
    sq = Basis()
    for e in monomials(0, w):
        v = jet(e)
        alg.insert(v)
        if sum(e) >= 2:
            sq.insert(v)
    delta = r * (w + 1) - len(alg.rows)
    emb = 0
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        if sq.insert(jet(e)):
            emb += 1
    return delta, emb


def stable(text, w=16):
    b = parse(text)
    a = invariants(b, w)
    c = invariants(b, w + 8)
    if a != c:
        raise SystemExit(f"not stable for {text}: {a} vs {c}")
    return a


if __name__ == "__main__":
    for line in sys.stdin:
        line = line.strip()
        if line and not line.startswith("#"):
            label, text = line.split(" ", 1)
            d, e = stable(text.strip())
            print(f"{label:40s} r={len(parse(text.strip()))} delta={d} emb={e}")
