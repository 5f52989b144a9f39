"""Brute-force module construction, independent of the KL machinery.

Builds the semisimple Lie algebra from its root datum in a Chevalley basis
(extraspecial-pair sign convention, validated against the Jacobi identity),
then realizes truncated Verma modules with exact rational matrices.  Simple
characters are extracted as quotients by the maximal proper submodule,
which is computed weight space by weight space: a vector lies in it iff
every degree-shifted raising generator maps it into the part already found.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import linalg
from .characters import FormalCharacter, decompose_in_block, verma_character, height
from .trunc_weights import TruncatedWeight, same_block

MAX_TOTAL_DIMENSION = 200000


class ChevalleyBasis:
    """Structure constants of g in the basis {h_i, e_gamma, f_gamma}.

    [e_a, e_b] = N(a,b) e_{a+b} with N(a,b) = +(p+1) on extraspecial pairs,
    the rest forced by the standard length-weighted cocycle identities.
    """

    _cache = {}

    def __init__(self, datum):
        self.datum = datum
        self.roots = datum.positive_roots
        self.index = {r: i for i, r in enumerate(self.roots)}
        self._npos = {}
        self._build_constants()
        self._assert_jacobi()

    @classmethod
    def get(cls, datum):
        if id(datum) not in cls._cache:
            cls._cache[id(datum)] = cls(datum)
        return cls._cache[id(datum)]

    # -- structure constants ------------------------------------------

    def _chain_down(self, a, b):
        """max k >= 0 with b - k a a root."""
        p = 0
        current = b
        while True:
            current = tuple(x - y for x, y in zip(current, a))
            if self.datum.is_root(current):
                p += 1
            else:
                return p

    def _build_constants(self):
        sq = self.datum.norm_sq
        for gamma in self.roots:
            pairs = []
            for a in self.roots:
                b = tuple(g - x for g, x in zip(gamma, a))
                if b in self.index and self.index[a] < self.index[b]:
                    pairs.append((a, b))
            if not pairs:
                continue
            pairs.sort(key=lambda ab: self.index[ab[0]])
            ea, eb = pairs[0]
            self._npos[(ea, eb)] = self._chain_down(ea, eb) + 1
            for x, y in pairs[1:]:
                # Jacobi on the quadruple (ea, eb, -x, -y), solved for N(x,y)
                t = Fraction(0)
                bx = tuple(p - q for p, q in zip(eb, x))
                if self.datum.is_root(bx):
                    t += Fraction(self._n(eb, tuple(-c for c in x)) *
                                  self._n(ea, tuple(-c for c in y)), 1) / sq(bx)
                ax = tuple(p - q for p, q in zip(ea, x))
                if self.datum.is_root(ax):
                    t -= Fraction(self._n(ea, tuple(-c for c in x)) *
                                  self._n(eb, tuple(-c for c in y)), 1) / sq(ax)
                value = sq(gamma) * t / self._npos[(ea, eb)]
                assert value.denominator == 1
                value = int(value)
                assert abs(value) == self._chain_down(x, y) + 1
                self._npos[(x, y)] = value

    def _n(self, a, b):
        """N(a,b) for signed roots a, b with a + b a root."""
        pos_a = a in self.index
        pos_b = b in self.index
        if pos_a and pos_b:
            if (a, b) in self._npos:
                return self._npos[(a, b)]
            return -self._npos[(b, a)]
        if not pos_a and not pos_b:
            return -self._n(tuple(-c for c in a), tuple(-c for c in b))
        if not pos_a:
            return -self._n(b, a)
        # a positive, b negative
        sq = self.datum.norm_sq
        s = tuple(p + q for p, q in zip(a, b))
        if s in self.index:
            # (-b) + s = a, a positive pair
            value = -Fraction(self._n(tuple(-c for c in b), s)) * sq(s) / sq(a)
        else:
            # (-s) + a = -b, a positive pair
            value = Fraction(self._n(tuple(-c for c in s), a)) * sq(s) / sq(tuple(-c for c in b))
        assert value.denominator == 1
        return int(value)

    # -- brackets ------------------------------------------------------

    def bracket(self, x, y):
        """Bracket of basis elements ("h", i) / ("e", root) / ("f", root).

        Returns a list of (integer coefficient, element) pairs.
        """
        kx, ky = x[0], y[0]
        if kx == "h" and ky == "h":
            return []
        if kx == "h":
            sign = 1 if ky == "e" else -1
            root = y[1]
            pair = sum(self.datum.cartan[x[1]][j] * root[j]
                       for j in range(self.datum.rank))
            return [(sign * pair, y)] if pair else []
        if ky == "h":
            return [(-c, el) for c, el in self.bracket(y, x)]
        a = x[1] if kx == "e" else tuple(-c for c in x[1])
        b = y[1] if ky == "e" else tuple(-c for c in y[1])
        s = tuple(p + q for p, q in zip(a, b))
        if all(c == 0 for c in s):
            # [e_a, f_a] = h_{a^vee}
            out = []
            for i, c in enumerate(self.datum.coroot_coords(x[1])):
                if c:
                    out.append((c if kx == "e" else -c, ("h", i)))
            return out
        if not self.datum.is_root(s):
            return []
        coeff = self._n(a, b)
        if s in self.index:
            return [(coeff, ("e", s))]
        return [(coeff, ("f", tuple(-c for c in s)))]

    # -- validation ----------------------------------------------------

    def basis_elements(self):
        out = [("h", i) for i in range(self.datum.rank)]
        out += [("e", r) for r in self.roots]
        out += [("f", r) for r in self.roots]
        return out

    def _bracket_combo(self, x, combo):
        out = {}
        for c, el in combo:
            for c2, el2 in self.bracket(x, el):
                out[el2] = out.get(el2, 0) + c * c2
        return {k: v for k, v in out.items() if v}

    def _assert_jacobi(self):
        basis = self.basis_elements()
        if len(basis) <= 30:
            triples = itertools.combinations(basis, 3)
        else:
            rng = random.Random(0)
            triples = (tuple(rng.sample(basis, 3)) for _ in range(2000))
        for x, y, z in triples:
            lhs = self._bracket_combo(x, self.bracket(y, z))
            rhs = self._bracket_combo(y, self.bracket(x, z))
            for c, el in self.bracket(x, y):
                for c2, el2 in self.bracket(el, z):
                    rhs[el2] = rhs.get(el2, 0) + c * c2
            rhs = {k: v for k, v in rhs.items() if v}
            assert lhs == rhs, "Jacobi identity fails at %r %r %r" % (x, y, z)


class TruncatedModule:
    """Verma module over g tensor C[t]/(t^(n+1)), cut off at a finite depth.

    Basis vectors are PBW monomials in the degree-shifted lowering
    operators, sorted by (root position, degree).  A monomial is a tuple of
    (root index, degree) pairs; the highest weight vector is ().
    """

    def __init__(self, datum, lam, depth):
        self.datum = datum
        self.lam = lam
        self.n = lam.level
        self.depth = depth
        self.chev = ChevalleyBasis.get(datum)
        self.spaces = {}        # beta -> list of monomials
        self.position = {}      # monomial -> index in its space
        self._act_cache = {}
        total = 0
        for beta in _cone(datum.rank, depth):
            basis = self._monomials(beta)
            self.spaces[beta] = basis
            for k, m in enumerate(basis):
                self.position[m] = k
            total += len(basis)
            if total > MAX_TOTAL_DIMENSION:
                raise MemoryError("truncated Verma module exceeds size budget")

    def _monomials(self, beta):
        gens = [(ri, d) for ri in range(len(self.chev.roots))
                for d in range(self.n + 1)]
        out = []

        def rec(rem, start, acc):
            if all(c == 0 for c in rem):
                out.append(tuple(acc))
                return
            for pos in range(start, len(gens)):
                ri, _ = gens[pos]
                root = self.chev.roots[ri]
                nxt = tuple(a - b for a, b in zip(rem, root))
                if all(c >= 0 for c in nxt):
                    acc.append(gens[pos])
                    rec(nxt, pos, acc)
                    acc.pop()

        rec(tuple(beta), 0, [])
        return out

    # -- the action ----------------------------------------------------

    def _bracket_trunc(self, gen1, gen2):
        """Bracket of two degree-shifted generators, dropping t^(>n)."""
        deg = gen1[2] + gen2[2]
        if deg > self.n:
            return []
        e1 = (gen1[0], gen1[1]) if gen1[0] == "h" else (gen1[0], self.chev.roots[gen1[1]])
        e2 = (gen2[0], gen2[1]) if gen2[0] == "h" else (gen2[0], self.chev.roots[gen2[1]])
        out = []
        for c, el in self.chev.bracket(e1, e2):
            if el[0] == "h":
                out.append((c, ("h", el[1], deg)))
            else:
                out.append((c, (el[0], self.chev.index[el[1]], deg)))
        return out

    def act_gen(self, gen, mono):
        """Action of a generator (kind, index, degree) on a basis monomial.

        Returns {monomial: Fraction} in PBW normal form.
        """
        key = (gen, mono)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        kind = gen[0]
        if not mono:
            if kind == "e":
                out = {}
            elif kind == "h":
                c = self.lam[gen[2]].coords[gen[1]]
                out = {(): c} if c else {}
            else:
                out = {((gen[1], gen[2]),): Fraction(1)}
        elif kind == "f" and (gen[1], gen[2]) <= mono[0]:
            out = {((gen[1], gen[2]),) + mono: Fraction(1)}
        else:
            head, rest = mono[0], mono[1:]
            fhead = ("f", head[0], head[1])
            out = {}
            for m, c in self.act_gen(gen, rest).items():
                for m2, c2 in self.act_gen(fhead, m).items():
                    _acc(out, m2, c * c2)
            for cb, el in self._bracket_trunc(gen, fhead):
                for m, c in self.act_gen(el, rest).items():
                    _acc(out, m, cb * c)
            out = {m: c for m, c in out.items() if c}
        self._act_cache[key] = out
        return out

    def generator_matrix(self, gen, beta):
        """Matrix of the generator from the weight space at beta to its
        target space, columns indexed by the source basis."""
        source = self.spaces[tuple(beta)]
        kind = gen[0]
        if kind == "h":
            target_beta = tuple(beta)
        else:
            root = self.chev.roots[gen[1]]
            sign = -1 if kind == "e" else 1
            target_beta = tuple(b + sign * r for b, r in zip(beta, root))
        target = self.spaces.get(target_beta, [])
        mat = [[Fraction(0)] * len(source) for _ in target]
        for col, mono in enumerate(source):
            for m, c in self.act_gen(gen, mono).items():
                row = self.position.get(m)
                if row is None:
                    assert kind == "f", "action left the depth window"
                    continue
                mat[row][col] = c
        return mat, target_beta

    def dimension(self, beta):
        return len(self.spaces.get(tuple(beta), []))


def _acc(table, key, value):
    table[key] = table.get(key, 0) + value


def _cone(rank, depth):
    out = [()]
    for _ in range(rank):
        out = [v + (c,) for v in out for c in range(depth - sum(v) + 1)]
    return sorted(out, key=lambda b: (sum(b), b))


def build_verma(datum, lam, depth):
    module = TruncatedModule(datum, lam, depth)
    # cross-check dimensions against the character formula
    expected = verma_character(datum, lam, depth)
    for beta in module.spaces:
        assert module.dimension(beta) == expected.coefficient(beta)
    return module


def simple_character(module):
    """Character of the simple quotient of the Verma, to the module depth.

    For each weight space, the maximal submodule consists of the vectors
    mapped into the maximal submodule one level up by every raising
    generator attached to a simple root; the quotient dimensions assemble
    the character.
    """
    datum = module.datum
    rank = datum.rank
    simple_idx = [module.chev.index[datum.simple_root(i)] for i in range(rank)]
    constraints = {}    # beta -> reduced matrix whose nullspace is N^beta
    table = {}
    for beta in sorted(module.spaces, key=lambda b: (height(b), b)):
        dim = module.dimension(beta)
        if height(beta) == 0:
            constraints[beta] = [[Fraction(1)] * 1] if dim else []
            table[beta] = dim
            continue
        rows = []
        for ri in simple_idx:
            for deg in range(module.n + 1):
                mat, target = module.generator_matrix(("e", ri, deg), beta)
                upper = constraints.get(target)
                if upper is None or not mat:
                    continue
                for crow in upper:
                    rows.append([
                        sum(cr * mat[r][c] for r, cr in enumerate(crow))
                        for c in range(dim)])
        ech, pivots = linalg.row_echelon(rows)
        reduced = [ech[r] for r in range(len(pivots))]
        constraints[beta] = reduced
        table[beta] = len(pivots)
    return FormalCharacter(base=module.lam[0], depth=module.depth, table=table)


def invariants_character(module, levi_indices):
    """Character of the joint kernel of the raising generators outside the
    Levi (the nilradical of degrees 0..n), weight space by weight space."""
    datum = module.datum
    levi = set(levi_indices)
    outside = [module.chev.index[r] for r in datum.positive_roots
               if any(c and (j not in levi) for j, c in enumerate(r))]
    table = {}
    for beta in sorted(module.spaces, key=lambda b: (height(b), b)):
        dim = module.dimension(beta)
        if dim == 0:
            table[beta] = 0
            continue
        rows = []
        for ri in outside:
            for deg in range(module.n + 1):
                mat, _ = module.generator_matrix(("e", ri, deg), beta)
                rows.extend(mat)
        table[beta] = dim - linalg.rank(rows) if rows else dim
    return FormalCharacter(base=module.lam[0], depth=module.depth, table=table)


_SIMPLE_CHAR_MEMO = {}
_DECOMP_MEMO = {}


def _simple_char(datum, lam, depth):
    key = (datum.key, lam, depth)
    if key not in _SIMPLE_CHAR_MEMO:
        _SIMPLE_CHAR_MEMO[key] = simple_character(
            TruncatedModule(datum, lam, depth))
    return _SIMPLE_CHAR_MEMO[key]


def verma_decomposition(datum, lam, depth):
    """Multiplicities {offset beta: [M_lam : L_{lam_0 - beta}]} by greedy
    comparison of the Verma character with brute-force simple characters."""
    key = (datum.key, lam, depth)
    if key not in _DECOMP_MEMO:
        character = verma_character(datum, lam, depth)

        def provider(beta):
            eta0 = lam[0] - datum.root_weight(beta)
            eta = TruncatedWeight((eta0,) + lam.tail())
            return _simple_char(datum, eta, depth - height(beta))

        _DECOMP_MEMO[key] = decompose_in_block(datum, character, provider)
    return _DECOMP_MEMO[key]


def oracle_multiplicity(datum, lam, nu, depth=None):
    """[M_lam : L_nu] from explicit module construction.

    `depth` defaults to the height of lambda_0 - nu_0 (the minimum needed);
    a larger value decomposes more of the Verma in one pass.
    """
    if not same_block(lam, nu):
        return 0
    offset = datum.root_coords(lam[0] - nu[0])
    if offset is None or any(c.denominator != 1 or c < 0 for c in offset):
        return 0
    beta = tuple(int(c) for c in offset)
    if depth is None:
        depth = height(beta)
    if height(beta) > depth:
        raise ValueError("depth too small for the requested weight")
    return verma_decomposition(datum, lam, depth).get(beta, 0)
