"""Derivation of the straightening table for the rank-2 quantum
superalgebras attached to a Dynkin diagram, at a symbolic deformation
parameter.

A normal-form engine needs, for every ordered pair of PBW letters x > y, an
identity  x*y = (-1)^{|x||y|} q^delta y*x + (lower terms).  Beyond the
defining relations these identities are consequences, not axioms, so every
rule produced here is *derived*, never guessed:

  1. products are expanded into the free algebra on the simple generators
     e_i, f_i, k_i, k_i^{-1} over Q(q) (composite root vectors are replaced
     by their defining q-brackets);
  2. generators are moved into triangular order f... k... e... using only
     the defining commutation relations (each move is one relation);
  3. the remaining pure e-words and f-words are rewritten in the claimed
     PBW monomials by exact linear algebra: a word is expressed as a
     combination of PBW monomials plus an explicit member of the two-sided
     ideal generated by the nilpotency and Serre relations.  The relations
     are homogeneous in the letter multidegree, so the finite span used in
     the solve is the full ideal in that degree and the certificate is
     complete, not heuristic.

The resulting table is exact over Q(q); specialization to a root of unity
only evaluates coefficients and adds the letter-power rules (k^p = 1,
x^p = 0 for even root vectors, x^2 = 0 for odd ones).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .genericq import QRAT_ONE, QRAT_QQ, QRAT_ZERO, QRat
from .roots import DynkinDiagram, UnsupportedConfigError

# generic monomial: (f_exps, k_vec, e_exps); k_vec entries may be negative
GMono = tuple


@dataclass(frozen=True)
class Rank2Context:
    """Bilinear-form and parity data of one rank-2 diagram."""

    gram: tuple  # ((G11, G12), (G21, G22))
    parities: tuple  # (t1, t2)

    @property
    def composite_parity(self) -> int:
        return (self.parities[0] + self.parities[1]) % 2


def context_from_diagram(diagram: DynkinDiagram) -> Rank2Context:
    if diagram.rank != 2:
        raise UnsupportedConfigError(
            "straightening tables are available for rank 2 only (sl(2|1), sl(1|2))"
        )
    return Rank2Context(diagram.gram, diagram.parities)


# ---------------------------------------------------------------------------
# free algebra on generic letters over Q(q)

E_LETTERS = ("e1", "e2")
F_LETTERS = ("f1", "f2")
K_LETTERS = ("k1", "k2", "K1", "K2")  # K = k^{-1}


def _gadd(acc: dict, word: tuple, coeff: QRat):
    if not coeff:
        return
    cur = acc.get(word)
    coeff = coeff if cur is None else cur + coeff
    if coeff:
        acc[word] = coeff
    elif cur is not None:
        del acc[word]


def gmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            _gadd(out, wa + wb, ca * cb)
    return out


def gscale(a: dict, c: QRat) -> dict:
    out = {}
    for w, cw in a.items():
        v = cw * c
        if v:
            out[w] = v
    return out


def gsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        _gadd(out, w, -c)
    return out


def _word(*letters) -> dict:
    return {tuple(letters): QRAT_ONE}


def letter_parity(letter: str, ctx: Rank2Context) -> int:
    if letter[0] in ("k", "K"):
        return 0
    return ctx.parities[int(letter[1]) - 1]


def composite_e(ctx: Rank2Context) -> dict:
    """[e1, e2]_{q^(a1,a2)} = e1 e2 - (-1)^{|e1||e2|} q^(a1,a2) e2 e1."""
    s = (-1) ** (ctx.parities[0] * ctx.parities[1])
    c = QRat.from_rational(s) * QRat.q_power(ctx.gram[0][1])
    return gsub(_word("e1", "e2"), gscale(_word("e2", "e1"), c))


def composite_f(ctx: Rank2Context) -> dict:
    """[f2, f1]_{q^-(a2,a1)} = f2 f1 - (-1)^{|f2||f1|} q^-(a2,a1) f1 f2."""
    s = (-1) ** (ctx.parities[0] * ctx.parities[1])
    c = QRat.from_rational(s) * QRat.q_power(-ctx.gram[1][0])
    return gsub(_word("f2", "f1"), gscale(_word("f1", "f2"), c))


def _letter_class(letter: str) -> int:
    return {"f": 0, "k": 1, "K": 1, "e": 2}[letter[0]]


def triangulate(poly: dict, ctx: Rank2Context) -> dict:
    """Rewrite into triangular form; keys become (f_word, k_vec, e_word).

    Each step applies one defining relation: generator/Cartan commutation
    for (e,k), (k,f) pairs, and the e-f cross relation (which contracts
    matching indices into Cartan terms over q - q^{-1})."""
    g = ctx.gram
    qq_inv = QRAT_ONE / QRAT_QQ
    work = dict(poly)
    done: dict = {}
    while work:
        word, coeff = work.popitem()
        pos = -1
        for j in range(len(word) - 1):
            if _letter_class(word[j]) > _letter_class(word[j + 1]):
                pos = j
                break
        if pos < 0:
            fw = tuple(x for x in word if x[0] == "f")
            kvec = [0, 0]
            for x in word:
                if x[0] == "k":
                    kvec[int(x[1]) - 1] += 1
                elif x[0] == "K":
                    kvec[int(x[1]) - 1] -= 1
            ew = tuple(x for x in word if x[0] == "e")
            _gadd(done, (fw, tuple(kvec), ew), coeff)
            continue
        x, y = word[pos], word[pos + 1]
        head, tail = word[:pos], word[pos + 2 :]
        cx, cy = _letter_class(x), _letter_class(y)
        if cx == 2 and cy == 1:  # e_i (k_j or K_j)
            i, j = int(x[1]), int(y[1])
            sign = -1 if y[0] == "k" else 1
            _gadd(work, head + (y, x) + tail, coeff * QRat.q_power(sign * g[j - 1][i - 1]))
        elif cx == 1 and cy == 0:  # (k_j or K_j) f_i
            i, j = int(y[1]), int(x[1])
            sign = -1 if x[0] == "k" else 1
            _gadd(work, head + (y, x) + tail, coeff * QRat.q_power(sign * g[j - 1][i - 1]))
        elif cx == 2 and cy == 0:  # e_i f_j
            i, j = int(x[1]), int(y[1])
            s = (-1) ** (ctx.parities[i - 1] * ctx.parities[j - 1])
            _gadd(work, head + (y, x) + tail, coeff * QRat.from_rational(s))
            if i == j:
                _gadd(work, head + (f"k{i}",) + tail, coeff * qq_inv)
                _gadd(work, head + (f"K{i}",) + tail, -coeff * qq_inv)
        else:
            raise AssertionError(f"unexpected pair {x}, {y}")
    return done


# ---------------------------------------------------------------------------
# sector PBW reduction by exact ideal-membership solves


def _sector_relations(letters: tuple, ctx: Rank2Context) -> list[dict]:
    """Nilpotency of odd generators and the Serre relations of even ones,
    expanded in the free algebra on the two sector letters."""
    rels = []
    for i in (1, 2):
        if ctx.parities[i - 1] == 1:
            rels.append(_word(letters[i - 1], letters[i - 1]))
    for i, j in ((1, 2), (2, 1)):
        if ctx.parities[i - 1] == 0:
            xi, xj = letters[i - 1], letters[j - 1]
            ti, tj = ctx.parities[i - 1], ctx.parities[j - 1]
            inner = gsub(
                _word(xi, xj),
                gscale(
                    _word(xj, xi),
                    QRat.from_rational((-1) ** (ti * tj))
                    * QRat.q_power(ctx.gram[i - 1][j - 1]),
                ),
            )
            outer = gsub(
                gmul(_word(xi), inner),
                gscale(
                    gmul(inner, _word(xi)),
                    QRat.from_rational((-1) ** (ti * (ti + tj)))
                    * QRat.q_power(ctx.gram[i - 1][i - 1] + ctx.gram[i - 1][j - 1]),
                ),
            )
            rels.append(outer)
    return rels


def _solve_in_span(columns: list[dict], target: dict) -> list[QRat] | None:
    """Solve target = sum c_i columns[i] over Q(q); None if inconsistent."""
    rows = sorted({w for col in columns for w in col} | set(target))
    idx = {w: r for r, w in enumerate(rows)}
    mat = [[QRAT_ZERO] * (len(columns) + 1) for _ in rows]
    for c, col in enumerate(columns):
        for w, v in col.items():
            mat[idx[w]][c] = v
    for w, v in target.items():
        mat[idx[w]][len(columns)] = v
    pivots = []
    r = 0
    for c in range(len(columns)):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
    for i in range(len(mat)):
        if mat[i][len(columns)] and not any(mat[i][c] for c in range(len(columns))):
            return None
    sol = [QRAT_ZERO] * len(columns)
    for r, c in pivots:
        sol[c] = mat[r][len(columns)]
    return sol


class SectorReducer:
    """Rewrites pure e-words (or f-words) into sector PBW coordinates.

    The sector monomials are x1^a x12^b x2^c for the e side and
    x2^a x12^b x1^c for the f side, with odd letters capped at exponent 1;
    at a symbolic parameter even letters are unbounded."""

    def __init__(self, ctx: Rank2Context, side: str):
        self.ctx = ctx
        self.side = side
        letters = E_LETTERS if side == "e" else F_LETTERS
        self.letters = letters
        self.relations = _sector_relations(letters, ctx)
        self.comp = composite_e(ctx) if side == "e" else composite_f(ctx)
        self._cache: dict[tuple, dict] = {}
        # multidegree of each relation (count of letter1, letter2)
        self._rel_deg = [self._poly_degree(r) for r in self.relations]

    def _poly_degree(self, poly: dict) -> tuple:
        degs = {self._word_degree(w) for w in poly}
        assert len(degs) == 1, "sector relations must be multihomogeneous"
        return degs.pop()

    def _word_degree(self, word: tuple) -> tuple:
        return (
            sum(1 for x in word if x == self.letters[0]),
            sum(1 for x in word if x == self.letters[1]),
        )

    def pbw_monomials(self, deg: tuple):
        """(a, b, c) exponent triples of sector monomials with letter
        multidegree deg; slot order is (first letter, composite, last)."""
        t1, t2 = self.ctx.parities
        tc = self.ctx.composite_parity
        d1, d2 = deg
        out = []
        for b in range(min(d1, d2) + 1):
            if self.side == "e":
                a, c = d1 - b, d2 - b  # (e1, E12, e2) exponents
                cap_a, cap_c = t1, t2
            else:
                a, c = d2 - b, d1 - b  # (f2, F12, f1) exponents
                cap_a, cap_c = t2, t1
            if tc == 1 and b > 1:
                continue
            if cap_a == 1 and a > 1 or cap_c == 1 and c > 1:
                continue
            out.append((a, b, c))
        return out

    def monomial_expansion(self, exps: tuple) -> dict:
        a, b, c = exps
        if self.side == "e":
            seq = [(_word(self.letters[0]), a), (self.comp, b), (_word(self.letters[1]), c)]
        else:
            seq = [(_word(self.letters[1]), a), (self.comp, b), (_word(self.letters[0]), c)]
        out = {(): QRAT_ONE}
        for base, n in seq:
            for _ in range(n):
                out = gmul(out, base)
        return out

    def reduce_word(self, word: tuple) -> dict:
        """PBW coordinates {exponent triple: coefficient} of a sector word."""
        if word in self._cache:
            return self._cache[word]
        deg = self._word_degree(word)
        monos = self.pbw_monomials(deg)
        columns = [self.monomial_expansion(m) for m in monos]
        n_monos = len(columns)
        for rel, rdeg in zip(self.relations, self._rel_deg):
            rem = (deg[0] - rdeg[0], deg[1] - rdeg[1])
            if rem[0] < 0 or rem[1] < 0:
                continue
            for left_deg1 in range(rem[0] + 1):
                for left_deg2 in range(rem[1] + 1):
                    for u in _words_of_degree(self.letters, (left_deg1, left_deg2)):
                        vdeg = (rem[0] - left_deg1, rem[1] - left_deg2)
                        for v in _words_of_degree(self.letters, vdeg):
                            columns.append(gmul(gmul({u: QRAT_ONE}, rel), {v: QRAT_ONE}))
        sol = _solve_in_span(columns, {word: QRAT_ONE})
        if sol is None:
            raise AssertionError(f"sector word {word} not reducible to PBW form")
        coords = {m: sol[i] for i, m in enumerate(monos) if sol[i]}
        self._cache[word] = coords
        return coords


def _words_of_degree(letters: tuple, deg: tuple):
    n = deg[0] + deg[1]
    for positions in itertools.combinations(range(n), deg[0]):
        yield tuple(letters[0] if i in positions else letters[1] for i in range(n))


# ---------------------------------------------------------------------------
# the generic table

# letter slots in a rank-2 PBW monomial, in normal order
SLOT_NAMES = ("f2", "F3", "f1", "k1", "k2", "e1", "E3", "e2")
F_SLOTS, K_SLOTS, E_SLOTS = (0, 1, 2), (3, 4), (5, 6, 7)


@dataclass(frozen=True)
class GenericRule:
    """x*y = coeff * (y*x) + tail, all at symbolic q; coeff = +-q^delta."""

    pair: tuple  # (x slot, y slot), x > y
    sign: int
    delta: int
    tail: tuple  # ((GMono, QRat), ...)


@dataclass
class GenericTable:
    ctx: Rank2Context
    rules: dict  # (x, y) -> GenericRule
    heights: tuple  # per-slot root height, k slots 0


def _slot_expansion(slot: int, ctx: Rank2Context) -> dict:
    name = SLOT_NAMES[slot]
    if name == "E3":
        return composite_e(ctx)
    if name == "F3":
        return composite_f(ctx)
    return _word(name)


def _slot_parity(slot: int, ctx: Rank2Context) -> int:
    name = SLOT_NAMES[slot]
    if name in ("k1", "k2"):
        return 0
    if name in ("E3", "F3"):
        return ctx.composite_parity
    return ctx.parities[int(name[1]) - 1]


_HEIGHTS = (1, 2, 1, 0, 0, 1, 2, 1)


def derive_generic_table(ctx: Rank2Context) -> GenericTable:
    ered = SectorReducer(ctx, "e")
    fred = SectorReducer(ctx, "f")
    rules = {}
    for x in range(7, -1, -1):
        for y in range(x):
            rules[(x, y)] = _derive_rule(x, y, ctx, ered, fred)
    return GenericTable(ctx, rules, _HEIGHTS)


def _derive_rule(x: int, y: int, ctx, ered: SectorReducer, fred: SectorReducer) -> GenericRule:
    prod = gmul(_slot_expansion(x, ctx), _slot_expansion(y, ctx))
    tri = triangulate(prod, ctx)
    acc: dict = {}
    for (fw, kvec, ew), coeff in tri.items():
        for fexp, cf in fred.reduce_word(fw).items():
            for eexp, ce in ered.reduce_word(ew).items():
                key = (fexp, kvec, eexp)
                _gadd(acc, key, coeff * cf * ce)
    swapped = _pair_mono(y, x)
    lead = acc.pop(swapped, QRAT_ZERO)
    mono = lead.as_q_monomial()
    if mono is None or abs(mono[0]) != 1:
        raise AssertionError(f"rule {SLOT_NAMES[x]}*{SLOT_NAMES[y]} has leading {lead!r}")
    sign = 1 if mono[0] > 0 else -1
    expected = (-1) ** (_slot_parity(x, ctx) * _slot_parity(y, ctx))
    if sign != expected:
        raise AssertionError(
            f"rule {SLOT_NAMES[x]}*{SLOT_NAMES[y]}: sign {sign} != Koszul {expected}"
        )
    pair_h = _HEIGHTS[x] + _HEIGHTS[y]
    pair_len = 2
    for gm in acc:
        h = _mono_height(gm)
        ln = _mono_length(gm)
        if not (h < pair_h or (h == pair_h and ln < pair_len)):
            raise AssertionError(
                f"tail of {SLOT_NAMES[x]}*{SLOT_NAMES[y]} does not drop: {gm}"
            )
    return GenericRule((x, y), sign, mono[1], tuple(sorted(acc.items())))


def _pair_mono(first: int, second: int) -> GMono:
    fe = [0, 0, 0]
    kv = [0, 0]
    ee = [0, 0, 0]
    for slot in (first, second):
        if slot in F_SLOTS:
            fe[slot] += 1
        elif slot in K_SLOTS:
            kv[slot - 3] += 1
        else:
            ee[slot - 5] += 1
    return (tuple(fe), tuple(kv), tuple(ee))


def _mono_height(gm: GMono) -> int:
    fe, _, ee = gm
    return sum(e * h for e, h in zip(fe, (1, 2, 1))) + sum(
        e * h for e, h in zip(ee, (1, 2, 1))
    )


def _mono_length(gm: GMono) -> int:
    fe, kv, ee = gm
    return sum(fe) + sum(abs(k) for k in kv) + sum(ee)


_TABLE_CACHE: dict = {}


def generic_table_for(diagram: DynkinDiagram) -> GenericTable:
    key = (diagram.m, diagram.n, diagram.d)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = derive_generic_table(context_from_diagram(diagram))
    return _TABLE_CACHE[key]
