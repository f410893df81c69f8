"""The quantum superalgebra attached to a Dynkin diagram of sl(m|n) at an
odd root of unity, realized as a confluent rewriting system on ordered PBW
monomials.

Monomials read  f_(highest root) ... f_(lowest) * k_1^a k_2^b * e_(lowest)
... e_(highest); each letter carries an exponent bound (p for k letters and
even root vectors, 2 for odd ones).  Products are normalized by repeatedly
rewriting the leftmost reducible spot: either an adjacent descent x*y with
x > y, replaced via the straightening rule x*y = +-q^d y*x + tail, or an
overfull letter power, replaced by 1 (k letters) or 0 (root vectors).
Each step strictly decreases (root height of the word, letter count,
inversion count) lexicographically, so reduction terminates; confluence is
not assumed but checked over all critical pairs by verify_pbw.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .reports import Report
from .roots import (
    DynkinDiagram,
    Groupoid,
    UnsupportedConfigError,
    add_weights,
    enumerate_groupoid,
    scale_weight,
)
from .scalars import CycField, CycScalar
from . import straighten
from .straighten import SLOT_NAMES

Mono = tuple  # 8-tuple of exponents, slots as in straighten.SLOT_NAMES

_GROUPOID_CACHE: dict = {}


def groupoid_for(m: int, n: int) -> Groupoid:
    if (m, n) not in _GROUPOID_CACHE:
        _GROUPOID_CACHE[(m, n)] = enumerate_groupoid(m, n)
    return _GROUPOID_CACHE[(m, n)]


class AlgebraConfig:
    """Immutable context: diagram data, field, letter bounds, and the
    specialized straightening table."""

    def __init__(self, m: int, n: int, p: int, d: int):
        if m == n:
            raise UnsupportedConfigError("m = n is not supported")
        if (m, n) not in ((2, 1), (1, 2)):
            raise UnsupportedConfigError(
                f"no straightening table for sl({m}|{n}); supported: sl(2|1), sl(1|2)"
            )
        self.m, self.n, self.p, self.d = m, n, p, d
        self.field = CycField(p)
        g = groupoid_for(m, n)
        if d not in g.diagrams:
            raise UnsupportedConfigError(f"no diagram d={d}")
        self.groupoid = g
        self.diagram: DynkinDiagram = g.diagrams[d]
        alpha1, alpha2 = self.diagram.tau
        self.pos_roots = (alpha1, add_weights(alpha1, alpha2), alpha2)
        table = straighten.generic_table_for(self.diagram)
        ctx = table.ctx
        self.names = SLOT_NAMES
        self.parities = tuple(straighten._slot_parity(s, ctx) for s in range(8))
        self.kinds = tuple("f" if s < 3 else "k" if s < 5 else "e" for s in range(8))
        self.bounds = tuple(
            p if self.parities[s] == 0 else 2 for s in range(8)
        )
        # k powers collapse to 1, root-vector powers to 0
        self.power_is_unit = tuple(self.kinds[s] == "k" for s in range(8))
        root_of_slot = {
            0: self.pos_roots[2], 1: self.pos_roots[1], 2: self.pos_roots[0],
            5: self.pos_roots[0], 6: self.pos_roots[1], 7: self.pos_roots[2],
        }
        zero_w = tuple(0 for _ in range(m + n))
        self.weights = tuple(
            zero_w if s in (3, 4)
            else scale_weight(-1 if s < 3 else 1, root_of_slot[s])
            for s in range(8)
        )
        self.simple = {
            ("f", 1): 2, ("f", 2): 0, ("k", 1): 3, ("k", 2): 4, ("e", 1): 5, ("e", 2): 7,
        }
        self.qq_inv = self.field.qq_inv
        self._nf_cache: dict = {}
        self._prod_cache: dict = {}
        self.swap = {}
        for (x, y), rule in table.rules.items():
            coeff = self.field.scalar(rule.sign) * self.field.q_power(rule.delta)
            tail = []
            for (fe, kvec, ee), qr in rule.tail:
                mono = fe + (kvec[0] % p, kvec[1] % p) + ee
                tail.append((self._mono_word(mono), qr.specialize(self.field)))
            self.swap[(x, y)] = (coeff, tuple(tail))
        self.composite_def = {}
        for slot, gpoly in ((6, straighten.composite_e(ctx)), (1, straighten.composite_f(ctx))):
            nm = {"e1": 5, "e2": 7, "f1": 2, "f2": 0}
            self.composite_def[slot] = tuple(
                (tuple(nm[x] for x in w), qr.specialize(self.field))
                for w, qr in sorted(gpoly.items())
            )
        # sanity: the defining bracket of each composite letter normalizes
        # back to the single-letter monomial
        for slot, expansion in self.composite_def.items():
            acc = {}
            for w, c in expansion:
                for mo, cc in self.reduce_word(w, c).items():
                    _acc_add(acc, mo, cc)
            expect = self._unit_mono(slot)
            if set(acc) != {expect} or acc[expect] != self.field.one:
                raise AssertionError(f"composite letter {SLOT_NAMES[slot]} mismatch")

    # -- word machinery ----------------------------------------------------

    def _unit_mono(self, slot: int) -> Mono:
        return tuple(1 if s == slot else 0 for s in range(8))

    def _mono_word(self, mono: Mono) -> tuple:
        out = []
        for s, e in enumerate(mono):
            out.extend([s] * e)
        return tuple(out)

    def _find_redex(self, word: tuple, rightmost: bool) -> tuple | None:
        """(position, kind); kind 'p' = power overflow, 's' = descent."""
        found = None
        n = len(word)
        for j in range(n):
            x = word[j]
            b = self.bounds[x]
            if j + b <= n and all(word[j + t] == x for t in range(1, b)):
                hit = (j, "p")
            elif j + 1 < n and x > word[j + 1]:
                hit = (j, "s")
            else:
                continue
            if not rightmost:
                return hit
            found = hit
        return found

    def apply_redex(self, word: tuple, coeff: CycScalar, j: int, kind: str) -> list:
        """One rewriting step; returns the replacement terms."""
        if kind == "p":
            x = word[j]
            rest = word[:j] + word[j + self.bounds[x]:]
            return [(rest, coeff)] if self.power_is_unit[x] else []
        x, y = word[j], word[j + 1]
        coeff0, tail = self.swap[(x, y)]
        out = [(word[:j] + (y, x) + word[j + 2:], coeff * coeff0)]
        for tw, tc in tail:
            out.append((word[:j] + tw + word[j + 2:], coeff * tc))
        return out

    def reduce_word(self, word: tuple, coeff: CycScalar, strategy: str = "leftmost") -> dict:
        """Full normal form of coeff * word as {monomial: scalar}."""
        if not coeff:
            return {}
        key = (word, strategy)
        cached = self._nf_cache.get(key)
        if cached is None:
            cached = self._reduce_uncached(word, strategy)
            self._nf_cache[key] = cached
        if coeff == self.field.one:
            return dict(cached)
        return {m: coeff * c for m, c in cached.items()}

    def mono_product_raw(self, m1: Mono, m2: Mono) -> dict:
        """Cached normal form of the product of two monomials; the returned
        dict is shared and must not be mutated."""
        key = (m1, m2)
        cached = self._prod_cache.get(key)
        if cached is None:
            cached = self._reduce_uncached(
                self._mono_word(m1) + self._mono_word(m2), "leftmost"
            )
            self._prod_cache[key] = cached
        return cached

    def _reduce_uncached(self, word: tuple, strategy: str) -> dict:
        rightmost = strategy == "rightmost"
        out: dict = {}
        stack = [(tuple(word), self.field.one)]
        while stack:
            w, c = stack.pop()
            if not c:
                continue
            hit = self._find_redex(w, rightmost)
            if hit is None:
                mono = [0] * 8
                for s in w:
                    mono[s] += 1
                _acc_add(out, tuple(mono), c)
                continue
            stack.extend(self.apply_redex(w, c, *hit))
        return out

    # -- monomial helpers ---------------------------------------------------

    def mono_parity(self, mono: Mono) -> int:
        return sum(e * t for e, t in zip(mono, self.parities)) % 2

    def mono_weight(self, mono: Mono) -> tuple:
        acc = tuple(0 for _ in range(self.m + self.n))
        for e, w in zip(mono, self.weights):
            if e:
                acc = add_weights(acc, scale_weight(e, w))
        return acc

    def expand_composites(self, mono: Mono) -> list:
        """The monomial as a polynomial in simple letters:
        [(word of simple slots, coeff), ...]."""
        terms = [((), self.field.one)]
        for s, e in enumerate(mono):
            for _ in range(e):
                if s in self.composite_def:
                    terms = [
                        (w + cw, c * cc)
                        for w, c in terms
                        for cw, cc in self.composite_def[s]
                    ]
                else:
                    terms = [(w + (s,), c) for w, c in terms]
        return terms

    def render_mono(self, mono: Mono) -> str:
        parts = []
        for s, e in enumerate(mono):
            if e == 1:
                parts.append(self.names[s])
            elif e > 1:
                parts.append(f"{self.names[s]}^{e}")
        return "*".join(parts) if parts else "1"

    # -- defining relations --------------------------------------------------

    def defining_relations(self) -> list:
        """All defining relations as free polynomials
        (name, [(word of simple slots, coeff), ...]); each must normalize
        to zero, and their images under any claimed morphism must too."""
        F = self.field
        one = F.one
        g = self.diagram.gram
        t = self.diagram.parities
        e = {i: self.simple[("e", i)] for i in (1, 2)}
        f = {i: self.simple[("f", i)] for i in (1, 2)}
        k = {i: self.simple[("k", i)] for i in (1, 2)}
        rels = []
        rels.append(("k_commute", [((k[1], k[2]), one), ((k[2], k[1]), -one)]))
        for i in (1, 2):
            rels.append((f"k{i}_order", [((k[i],) * self.p, one), ((), -one)]))
        for i in (1, 2):
            for j in (1, 2):
                cij = F.q_power(-g[j - 1][i - 1])
                rels.append(
                    (f"e{i}_k{j}", [((e[i], k[j]), one), ((k[j], e[i]), -cij)])
                )
                rels.append(
                    (f"k{j}_f{i}", [((k[j], f[i]), one), ((f[i], k[j]), -cij)])
                )
        for i in (1, 2):
            for j in (1, 2):
                sign = F.scalar((-1) ** (t[i - 1] * t[j - 1]))
                poly = [((e[i], f[j]), one), ((f[j], e[i]), -sign)]
                if i == j:
                    poly.append(((k[i],), -self.qq_inv))
                    poly.append(((k[i],) * (self.p - 1), self.qq_inv))
                rels.append((f"e{i}_f{j}", poly))
        for i in (1, 2):
            if t[i - 1] == 1:
                rels.append((f"e{i}_nilpotent", [((e[i], e[i]), one)]))
                rels.append((f"f{i}_nilpotent", [((f[i], f[i]), one)]))
            else:
                rels.append((f"e{i}_power", [((e[i],) * self.p, one)]))
                rels.append((f"f{i}_power", [((f[i],) * self.p, one)]))
        for i, j in ((1, 2), (2, 1)):
            if t[i - 1] == 0:
                for kind, x in (("e", e), ("f", f)):
                    rels.append(
                        (f"serre_{kind}{i}{j}", _serre_poly(F, g, t, x, i, j))
                    )
        return rels

    def __repr__(self):
        return f"AlgebraConfig(sl({self.m}|{self.n}), p={self.p}, d={self.d})"


def _serre_poly(F: CycField, g, t, x, i, j):
    """[x_i, [x_i, x_j]_{q^(ai,aj)}]_{q^(ai,ai+aj)} expanded in letters."""
    one = F.one
    s_in = F.scalar((-1) ** (t[i - 1] * t[j - 1])) * F.q_power(g[i - 1][j - 1])
    inner = [((x[i], x[j]), one), ((x[j], x[i]), -s_in)]
    par_in = (t[i - 1] + t[j - 1]) % 2
    s_out = F.scalar((-1) ** (t[i - 1] * par_in)) * F.q_power(
        g[i - 1][i - 1] + g[i - 1][j - 1]
    )
    out = []
    for w, c in inner:
        out.append(((x[i],) + w, c))
        out.append((w + (x[i],), -s_out * c))
    return out


def _acc_add(acc: dict, key, value):
    if not value:
        return
    cur = acc.get(key)
    value = value if cur is None else cur + value
    if value:
        acc[key] = value
    elif cur is not None:
        del acc[key]


_CONFIG_CACHE: dict = {}


def build_algebra(m: int, n: int, p: int, d: int) -> AlgebraConfig:
    key = (m, n, p, d)
    if key not in _CONFIG_CACHE:
        _CONFIG_CACHE[key] = AlgebraConfig(m, n, p, d)
    return _CONFIG_CACHE[key]


class AlgebraElement:
    """A finite linear combination of PBW monomials; immutable value type."""

    __slots__ = ("config", "terms")

    def __init__(self, config: AlgebraConfig, terms: dict):
        self.config = config
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(config: AlgebraConfig) -> "AlgebraElement":
        return AlgebraElement(config, {})

    @staticmethod
    def one(config: AlgebraConfig) -> "AlgebraElement":
        return AlgebraElement(config, {(0,) * 8: config.field.one})

    @staticmethod
    def monomial(config: AlgebraConfig, mono: Mono, coeff=None) -> "AlgebraElement":
        coeff = config.field.one if coeff is None else coeff
        return AlgebraElement(config, {tuple(mono): coeff} if coeff else {})

    @staticmethod
    def from_word(config: AlgebraConfig, word, coeff=None) -> "AlgebraElement":
        coeff = config.field.one if coeff is None else coeff
        return AlgebraElement(config, config.reduce_word(tuple(word), coeff))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if other.config is not self.config:
            raise ValueError("elements from different algebra configs")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc_add(out, m, c)
        return AlgebraElement(self.config, out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc_add(out, m, -c)
        return AlgebraElement(self.config, out)

    def __neg__(self):
        return AlgebraElement(self.config, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = self.config.field.scalar(c)
        if not c:
            return AlgebraElement.zero(self.config)
        return AlgebraElement(self.config, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        cfg = self.config
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for mo, c in cfg.mono_product_raw(m1, m2).items():
                    _acc_add(out, mo, c12 * c)
        return AlgebraElement(cfg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = AlgebraElement.one(self.config)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.config is other.config and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((m, c.coords) for m, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self):
        """0/1 for homogeneous elements, None for mixed, 0 for zero."""
        pars = {self.config.mono_parity(m) for m in self.terms}
        if not pars:
            return 0
        return pars.pop() if len(pars) == 1 else None

    def counit_part(self) -> CycScalar:
        return self.terms.get((0,) * 8, self.config.field.zero)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            mtxt = self.config.render_mono(mono)
            stxt = c.render()
            if mtxt == "1":
                txt = f"({stxt})" if ("+" in stxt or "-" in stxt[1:]) else stxt
            elif stxt == "1":
                txt = mtxt
            elif stxt == "-1":
                txt = f"-{mtxt}"
            elif "+" in stxt or "-" in stxt[1:] or "*" in stxt:
                txt = f"({stxt})*{mtxt}"
            else:
                txt = f"{stxt}*{mtxt}"
            parts.append(txt)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"<{self.render()}>"


def element_from_generator(config: AlgebraConfig, name: str, i: int, exp: int = 1) -> AlgebraElement:
    if (name, i) not in config.simple:
        raise IndexError(f"no generator {name}{i}")
    slot = config.simple[(name, i)]
    if name == "k":
        exp %= config.p
    elif exp < 0:
        raise ValueError("negative powers of root vectors are not defined")
    return AlgebraElement.from_word(config, (slot,) * exp)


def evaluate_poly(config: AlgebraConfig, poly) -> AlgebraElement:
    """Normal form of a free polynomial [(word of slots, coeff), ...]."""
    out: dict = {}
    for word, coeff in poly:
        for mo, c in config.reduce_word(tuple(word), coeff).items():
            _acc_add(out, mo, c)
    return AlgebraElement(config, out)


def q_bracket(a: AlgebraElement, b: AlgebraElement, exp: int) -> AlgebraElement:
    """[a, b]_{q^exp} = a b - (-1)^{|a||b|} q^exp b a for homogeneous a, b."""
    pa, pb = a.parity(), b.parity()
    if pa is None or pb is None:
        raise ValueError("q-bracket needs homogeneous arguments")
    sign = (-1) ** (pa * pb)
    return a * b - (b * a).scale(a.config.field.q_power(exp)).scale(sign)


# ---------------------------------------------------------------------------
# verification


def pbw_monomial_count(config: AlgebraConfig) -> int:
    count = 1
    for b in config.bounds:
        count *= b
    return count


def _resolve(config: AlgebraConfig, word: tuple, j: int, kind: str) -> dict:
    out: dict = {}
    for w, c in config.apply_redex(word, config.field.one, j, kind):
        for mo, cc in config.reduce_word(w, c).items():
            _acc_add(out, mo, cc)
    return out


def confluence_critical_pairs(config: AlgebraConfig):
    """All overlap ambiguities of the rewriting system: descent-descent
    overlaps x>y>z, power-descent overlaps x^bx*y and x*y^by, and
    power-power self overlaps."""
    letters = range(8)
    for x in letters:
        for y in letters:
            if x <= y:
                continue
            for z in letters:
                if y > z:
                    yield ("descent-descent", (x, y, z), 0, "s", 1, "s")
            bx, by = config.bounds[x], config.bounds[y]
            yield ("power-descent", (x,) * bx + (y,), 0, "p", bx - 1, "s")
            yield ("descent-power", (x,) + (y,) * by, 0, "s", 1, "p")
        b = config.bounds[x]
        for j in range(1, b):
            yield ("power-power", (x,) * (b + j), 0, "p", j, "p")


def verify_pbw(config: AlgebraConfig) -> Report:
    rep = Report()
    params = {"m": config.m, "n": config.n, "p": config.p, "d": config.d}
    for kind, word, j1, k1, j2, k2 in confluence_critical_pairs(config):
        r1 = _resolve(config, word, j1, k1)
        r2 = _resolve(config, word, j2, k2)
        ok = r1 == r2
        rep.add(
            "pbw.confluence",
            {**params, "kind": kind, "word": [config.names[s] for s in word]},
            ok,
            witness=None if ok else f"{r1} vs {r2}",
        )
    for name, poly in config.defining_relations():
        val = evaluate_poly(config, poly)
        rep.add(
            "pbw.relation_vanishes",
            {**params, "relation": name},
            val.is_zero(),
            witness=val.render(),
        )
    count = pbw_monomial_count(config)
    tower = 1
    for root in config.pos_roots:
        from .roots import weight_parity

        tower *= 2 if weight_parity(root, config.m) else config.p
    expected = tower * tower * config.p ** (config.m + config.n - 1)
    rep.add(
        "pbw.dimension",
        {**params, "count": count, "expected": expected},
        count == expected,
        witness=str(count),
    )
    return rep


def random_element(config: AlgebraConfig, rng: random.Random, max_terms: int = 3,
                   max_weight: int = 4) -> AlgebraElement:
    """A seeded random element with bounded root-vector content, used by the
    property suites."""
    out = AlgebraElement.zero(config)
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * 8
        budget = rng.randint(0, max_weight)
        slots_ef = [0, 1, 2, 5, 6, 7]
        while budget > 0:
            s = rng.choice(slots_ef)
            if mono[s] + 1 < config.bounds[s]:
                mono[s] += 1
            budget -= 1
        for s in (3, 4):
            mono[s] = rng.randrange(config.p)
        coeff = config.field.q_power(rng.randrange(config.p)) * config.field.scalar(
            rng.randint(-3, 3)
        )
        out = out + AlgebraElement.monomial(config, tuple(mono), coeff)
    return out


def random_word(config: AlgebraConfig, rng: random.Random, max_len: int = 8) -> tuple:
    return tuple(rng.randrange(8) for _ in range(rng.randint(0, max_len)))


def verify_normal_form_robustness(config: AlgebraConfig, words: int = 1000,
                                  triples: int = 500, seed: int = 0) -> Report:
    rep = Report()
    rng = random.Random(seed)
    params = {"m": config.m, "n": config.n, "p": config.p, "d": config.d, "seed": seed}
    bad = 0
    witness = None
    for _ in range(words):
        w = random_word(config, rng)
        left = config.reduce_word(w, config.field.one, "leftmost")
        right = config.reduce_word(w, config.field.one, "rightmost")
        if left != right:
            bad += 1
            witness = str(w)
    rep.add("nf.strategy_independent", {**params, "words": words}, bad == 0, witness)
    bad = 0
    witness = None
    for _ in range(triples):
        a = random_element(config, rng)
        b = random_element(config, rng)
        c = random_element(config, rng)
        if (a * b) * c != a * (b * c):
            bad += 1
            witness = f"{a!r}, {b!r}, {c!r}"
    rep.add("nf.associative", {**params, "triples": triples}, bad == 0, witness)
    bad = 0
    for _ in range(100):
        a = random_element(config, rng)
        b = random_element(config, rng)
        pa, pb = a.parity(), b.parity()
        if pa is not None and pb is not None:
            ab = a * b
            pab = ab.parity()
            if pab is not None and not ab.is_zero() and pab != (pa + pb) % 2:
                bad += 1
    rep.add("nf.parity_additive", params, bad == 0)
    bad = 0
    for _ in range(200):
        w = random_word(config, rng, 6)
        wt = config.mono_weight(tuple(_word_mono(w)))
        for mo in config.reduce_word(w, config.field.one):
            if config.mono_weight(mo) != wt:
                bad += 1
    rep.add("nf.weight_preserved", params, bad == 0)
    return rep


def _word_mono(word):
    mono = [0] * 8
    for s in word:
        mono[s] += 1
    return mono
