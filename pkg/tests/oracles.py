"""Brute-force reference computations used to freeze expected values.

Nothing here imports the package's linear algebra or Hopf code: subspaces are
computed with sympy, structure tensors are written out by hand from group
tables or from the exterior-algebra sign rule.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy


def rref_rows(rows, ncols):
    """Nonzero rows of the reduced row echelon form, as Fractions."""
    if not rows:
        return []
    M, _ = sympy.Matrix(rows).rref()
    out = []
    for r in range(M.rows):
        row = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in M.row(r)]
        if any(row):
            out.append(row)
    return out


def nullspace_rows(matrix, ncols):
    """RREF of a basis of {x : matrix x = 0}."""
    M = sympy.Matrix(matrix) if matrix else sympy.zeros(0, ncols)
    basis = M.nullspace()
    return rref_rows([list(v) for v in basis], ncols)


def powers_mod(a, p):
    seen, x = [], 1
    while True:
        x = x * a % p
        seen.append(x)
        if x == 1:
            return seen


def has_root_of_unity(p, n):
    """True if some a in F_p has multiplicative order exactly n."""
    return any(len(powers_mod(a, p)) == n for a in range(1, p))


class Table:
    """Group algebra tensors straight from a multiplication table."""

    def __init__(self, table):
        self.table = table
        self.n = len(table)
        self.e = next(i for i in range(self.n) if all(table[i][j] == j for j in range(self.n)))
        self.inv = [next(j for j in range(self.n) if table[i][j] == self.e) for i in range(self.n)]

    def mul(self, x, y):
        out = [Fraction(0)] * self.n
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                out[self.table[i][j]] += a * b
        return out

    def comul(self, x):
        """Delta as an n*n list indexed i*n+j."""
        out = [Fraction(0)] * (self.n * self.n)
        for i, a in enumerate(x):
            out[i * self.n + i] += a
        return out

    def hkernel_system(self, f):
        """Rows of the linear system (Id (x) f) Delta x = x (x) 1 for f given as images of basis elements.

        f[i] is a dense vector in the target of dimension m with target unit at index 0.
        """
        m = len(f[0])
        eqs = []
        for r in range(self.n):
            for s in range(m):
                row = []
                for i in range(self.n):
                    lhs = f[i][s] if r == i else 0
                    rhs = 1 if (r == i and s == 0) else 0
                    row.append(lhs - rhs)
                eqs.append(row)
        return eqs


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3_table():
    """S3 as permutations of (0,1,2) in the order e,(12),(13),(23),(123),(132); composition right to left."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    idx = {p: i for i, p in enumerate(perms)}

    def compose(a, b):
        return tuple(a[b[k]] for k in range(3))

    return [[idx[compose(a, b)] for b in perms] for a in perms]


def exterior_sign(S, T):
    """Sign of concatenating sorted index sets S then T into sorted order; 0 if they meet."""
    if set(S) & set(T):
        return 0
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


def exterior_mult(k):
    """Structure constants of the exterior algebra on k odd generators, basis = subsets in size-then-lex order."""
    subsets = [c for r in range(k + 1) for c in itertools.combinations(range(k), r)]
    index = {s: i for i, s in enumerate(subsets)}
    mult = {}
    for S, T in itertools.product(subsets, repeat=2):
        sign = exterior_sign(S, T)
        if sign:
            mult[(index[S], index[T])] = (index[tuple(sorted(S + T))], sign)
    return subsets, mult


def ideal_closure_rows(ref: Table, seed):
    """Two-sided ideal generated by seed in the group algebra, by repeated multiplication."""
    n = ref.n
    rows = rref_rows(seed, n)
    while True:
        grown = list(rows)
        for r in rows:
            for i in range(n):
                e = [Fraction(int(k == i)) for k in range(n)]
                grown.append(ref.mul(e, r))
                grown.append(ref.mul(r, e))
        new = rref_rows(grown, n)
        if new == rows:
            return rows
        rows = new


def group_equalizer_rows(ref: Table, f, g):
    """Solve (Id (x) f) Delta x = (Id (x) g) Delta x for f, g given as dense images of basis elements."""
    m = len(f[0])
    eqs = []
    for r in range(ref.n):
        for s in range(m):
            eqs.append([(f[i][s] - g[i][s]) if i == r else 0 for i in range(ref.n)])
    return nullspace_rows(eqs, ref.n)
