"""Lusztig-type isomorphisms between the quantum superalgebras attached to
adjacent Dynkin diagrams, their inverses, and the braid relations they
satisfy.

A morphism is stored as a generator-image table (images of e_i, f_i, k_i in
the target algebra) and applied by substitution plus normal form; every
claimed isomorphism is verified by checking that all defining relations of
the source map to zero and that the declared inverse composes to the
identity on generators, both ways.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .reports import Report
from .roots import GroupoidWord, bilinear_form, scale_weight, weight_parity
from .uqsuper import (
    AlgebraConfig,
    AlgebraElement,
    build_algebra,
    element_from_generator,
    q_bracket,
)

GEN_KEYS = (("e", 1), ("e", 2), ("f", 1), ("f", 2), ("k", 1), ("k", 2))


@dataclass
class AlgebraMorphism:
    source: AlgebraConfig
    target: AlgebraConfig
    images: dict  # ('e'|'f'|'k', i) -> AlgebraElement of the target
    name: str = ""
    verified: bool = False
    inverse: "AlgebraMorphism | None" = field(default=None, repr=False)
    _mono_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def image_of_slot(self, slot: int) -> AlgebraElement:
        kind = self.source.kinds[slot]
        for i in (1, 2):
            if self.source.simple.get((kind, i)) == slot:
                return self.images[(kind, i)]
        raise KeyError(f"slot {slot} is not a simple generator")

    def apply_mono(self, mono) -> AlgebraElement:
        cached = self._mono_cache.get(mono)
        if cached is None:
            cached = AlgebraElement.zero(self.target)
            for word, coeff in self.source.expand_composites(mono):
                acc = AlgebraElement.one(self.target).scale(coeff)
                for slot in word:
                    acc = acc * self.image_of_slot(slot)
                cached = cached + acc
            self._mono_cache[mono] = cached
        return cached

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        if a.config is not self.source:
            raise ValueError("element does not live in the morphism's source")
        out = AlgebraElement.zero(self.target)
        for mono, coeff in a.terms.items():
            out = out + self.apply_mono(mono).scale(coeff)
        return out

    def apply_poly(self, poly) -> AlgebraElement:
        """Image of a free polynomial [(word of simple slots, coeff), ...]."""
        out = AlgebraElement.zero(self.target)
        for word, coeff in poly:
            acc = AlgebraElement.one(self.target).scale(coeff)
            for slot in word:
                acc = acc * self.image_of_slot(slot)
            out = out + acc
        return out

    def compose(self, first: "AlgebraMorphism") -> "AlgebraMorphism":
        """self after first."""
        if first.target is not self.source:
            raise ValueError("morphisms do not compose")
        images = {key: self.apply(img) for key, img in first.images.items()}
        return AlgebraMorphism(
            first.source, self.target, images,
            name=f"{self.name}*{first.name}",
            verified=self.verified and first.verified,
        )

    def is_identity_table(self) -> bool:
        if self.source is not self.target:
            return False
        for kind, i in GEN_KEYS:
            if self.images[(kind, i)] != element_from_generator(self.source, kind, i):
                return False
        return True

    def same_images(self, other: "AlgebraMorphism") -> bool:
        return all(self.images[k] == other.images[k] for k in GEN_KEYS)


def identity_morphism(config: AlgebraConfig) -> AlgebraMorphism:
    images = {key: element_from_generator(config, *key) for key in GEN_KEYS}
    return AlgebraMorphism(config, config, images, name="id", verified=True)


def _simple_terms(a: AlgebraElement):
    for mono, coeff in a.terms.items():
        for word, c in a.config.expand_composites(mono):
            yield word, coeff * c


def _edge_data(config: AlgebraConfig, i: int):
    g = config.groupoid
    edge = g.edge(config.d, i)
    j = 3 - i
    src = config.diagram
    tgt = g.diagrams[edge.target]
    m = config.m
    x = scale_weight(-1, edge.root)  # = alpha_i of the target
    y = tgt.tau[j - 1]
    ti = src.parities[i - 1]
    b = 1 if ti == 0 else -1
    xy = bilinear_form(x, y, m)
    z = b * xy
    assert tgt.tau[i - 1] == x, "reflected root must sit at the same position"
    return edge, j, x, y, ti, b, xy, z


def t_map(m: int, n: int, p: int, i: int, d: int, variant: str = "T") -> AlgebraMorphism:
    """The isomorphism at generator i of diagram d (variants 'T', 'T-'),
    or the closed-form inverse of T (variant 'Tinv', a map back from the
    reflected diagram)."""
    src = build_algebra(m, n, p, d)
    edge, j, x, y, ti, b, xy, z = _edge_data(src, i)
    tgt = build_algebra(m, n, p, edge.target)
    if variant == "Tinv":
        return _t_inverse_map(src, tgt, i, j, x, y, ti, b, xy)
    F = src.field
    px, py = weight_parity(x, m), weight_parity(y, m)

    def gen(cfg, kind, idx, exp=1):
        return element_from_generator(cfg, kind, idx, exp)

    images = {
        ("k", i): gen(tgt, "k", i, -1),
        ("k", j): gen(tgt, "k", i) * gen(tgt, "k", j),
    }
    if variant == "T":
        images[("e", i)] = (gen(tgt, "f", i) * gen(tgt, "k", i, b)).scale((-1) ** ti)
        images[("f", i)] = gen(tgt, "k", i, -b) * gen(tgt, "e", i)
        images[("e", j)] = q_bracket(gen(tgt, "e", i), gen(tgt, "e", j), z).scale(-xy)
        images[("f", j)] = q_bracket(gen(tgt, "f", j), gen(tgt, "f", i), -z)
    elif variant == "T-":
        images[("e", i)] = gen(tgt, "k", i, -b) * gen(tgt, "f", i)
        images[("f", i)] = (gen(tgt, "e", i) * gen(tgt, "k", i, b)).scale((-1) ** px)
        aij = src.diagram.gram[i - 1][j - 1]
        se = aij * (-1) ** (
            px * (px + py) + (1 if b == -1 else 0) + (1 if b * xy == 1 else 0)
        )
        images[("e", j)] = q_bracket(gen(tgt, "e", j), gen(tgt, "e", i), z).scale(se)
        sf = (-1) ** (1 + px * py + (1 if b == 1 else 0) + (1 if b * xy == -1 else 0))
        images[("f", j)] = q_bracket(gen(tgt, "f", i), gen(tgt, "f", j), -z).scale(sf)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return AlgebraMorphism(src, tgt, images, name=f"{variant}[{i},{d}]")


def _t_inverse_map(src, tgt, i, j, x, y, ti, b, xy) -> AlgebraMorphism:
    """The closed formulas for the inverse of T at (i, d): a morphism from
    the reflected algebra back to the original one."""
    m = src.m
    px, py = weight_parity(x, m), weight_parity(y, m)
    tj = src.diagram.parities[j - 1]
    aij = src.diagram.gram[i - 1][j - 1]

    def gen(kind, idx, exp=1):
        return element_from_generator(src, kind, idx, exp)

    images = {
        ("k", i): gen("k", i, -1),
        ("k", j): gen("k", i) * gen("k", j),
        ("e", i): gen("k", i, -b) * gen("f", i),
        ("f", i): (gen("e", i) * gen("k", i, b)).scale((-1) ** ti),
    }
    se = xy * (-1) ** (
        ti * (ti + tj) + (1 if b == -1 else 0) + (1 if b * aij == 1 else 0)
    )
    images[("e", j)] = q_bracket(gen("e", j), gen("e", i), b * aij).scale(se)
    sf = (-1) ** (1 + ti * tj + (1 if b == 1 else 0) + (1 if b * aij == -1 else 0))
    images[("f", j)] = q_bracket(gen("f", i), gen("f", j), -b * aij).scale(sf)
    return AlgebraMorphism(tgt, src, images, name=f"Tinv[{i},{src.d}]")


def apply_morphism(mo: AlgebraMorphism, a: AlgebraElement) -> AlgebraElement:
    return mo.apply(a)


def verify_isomorphism(mo: AlgebraMorphism, inverse: AlgebraMorphism) -> Report:
    rep = Report()
    params = {"name": mo.name, "d": mo.source.d, "p": mo.source.p}
    for name, poly in mo.source.defining_relations():
        img = mo.apply_poly(poly)
        rep.add(
            "lusztig.relation_image_zero",
            {**params, "relation": name},
            img.is_zero(),
            witness=img.render(),
        )
    both = inverse.compose(mo)
    rep.add("lusztig.left_inverse", params, both.is_identity_table())
    both = mo.compose(inverse)
    rep.add("lusztig.right_inverse", params, both.is_identity_table())
    ok = rep.all_pass()
    mo.verified = ok
    if ok:
        mo.inverse = inverse
    return rep


def verify_all_edges(m: int, n: int, p: int) -> Report:
    """Every generator map of the groupoid is an isomorphism, its closed
    inverse formulas agree with the reflected-edge maps, and the two
    map families are mutually inverse."""
    rep = Report()
    g = build_algebra(m, n, p, 1).groupoid
    for (d, i) in sorted(g.edges):
        T = t_map(m, n, p, i, d, "T")
        target = g.edge(d, i).target
        Tminus_back = t_map(m, n, p, i, target, "T-")
        rep.extend(verify_isomorphism(T, Tminus_back))
        Tinv = t_map(m, n, p, i, d, "Tinv")
        rep.add(
            "lusztig.remark_inverse_matches",
            {"d": d, "i": i, "p": p},
            Tinv.same_images(Tminus_back),
        )
        Tm = t_map(m, n, p, i, d, "T-")
        T_back = t_map(m, n, p, i, target, "T")
        rep.add(
            "lusztig.tminus_isomorphism",
            {"d": d, "i": i, "p": p},
            Tm.compose(T_back).is_identity_table()
            and T_back.compose(Tm).is_identity_table(),
        )
    return rep


def functor_generator(m: int, n: int, p: int, d: int, i: int) -> AlgebraMorphism:
    """The functor's image of the generator at the directed edge (d, i).

    Each undirected edge carries the T formulas in one orientation and the
    inverse map (the T- formulas) in the other; here the orientation with
    the smaller source label carries T.  With T used in both directions the
    3-fold and 6-fold relations fail from the all-grey diagrams, so the
    oriented assignment is the one under which the generator maps represent
    the groupoid."""
    target = build_algebra(m, n, p, d).groupoid.edge(d, i).target
    return t_map(m, n, p, i, d, "T" if d < target else "T-")


def word_morphism(m: int, n: int, p: int, d: int, indices) -> AlgebraMorphism:
    """Composite of the functor's generator maps along a word from d."""
    cfg = build_algebra(m, n, p, d)
    out = identity_morphism(cfg)
    cur = d
    for i in indices:
        step = functor_generator(m, n, p, cur, i)
        out = step.compose(out)
        cur = step.target.d
    return out


def functor_apply(m: int, n: int, p: int, word: GroupoidWord) -> AlgebraMorphism:
    cur = word.source
    for d, i in word.steps:
        if d != cur:
            raise ValueError("ill-composed groupoid word")
        cur = build_algebra(m, n, p, d).groupoid.edge(d, i).target
    return word_morphism(m, n, p, word.source, [i for _, i in word.steps])


def verify_braid(m: int, n: int, p: int) -> Report:
    """Braid relations of the generator maps: inverse pairs on every edge,
    the 3-fold relation where the two node parities agree, the 6-fold
    relation from every base diagram, and the identity of the full hexagon
    loop (the groupoid is simply connected, so every loop must act
    trivially)."""
    rep = Report()
    g = build_algebra(m, n, p, 1).groupoid
    for (d, i) in sorted(g.edges):
        fwd = functor_generator(m, n, p, d, i)
        back = functor_generator(m, n, p, g.edge(d, i).target, i)
        ok = back.compose(fwd).is_identity_table() and fwd.compose(back).is_identity_table()
        rep.add("lusztig.br_inverse", {"d": d, "i": i, "p": p}, ok)
    for d in sorted(g.diagrams):
        par = g.diagrams[d].parities
        if par[0] == par[1]:
            lhs = word_morphism(m, n, p, d, [1, 2, 1])
            rhs = word_morphism(m, n, p, d, [2, 1, 2])
            rep.add(
                "lusztig.br_threefold",
                {"d": d, "p": p},
                lhs.target is rhs.target and lhs.same_images(rhs),
            )
        lhs = word_morphism(m, n, p, d, [1, 2, 1, 2, 1, 2])
        rhs = word_morphism(m, n, p, d, [2, 1, 2, 1, 2, 1])
        rep.add(
            "lusztig.br_sixfold",
            {"d": d, "p": p},
            lhs.target is rhs.target and lhs.same_images(rhs),
        )
        rep.add("lusztig.hexagon_identity", {"d": d, "p": p}, lhs.is_identity_table())
    return rep


def isomorphism_between(m: int, n: int, p: int, d1: int, d2: int) -> AlgebraMorphism:
    """A verified isomorphism along a shortest groupoid path d1 -> d2."""
    g = build_algebra(m, n, p, d1).groupoid
    word = g.path_between(d1, d2)
    mo = functor_apply(m, n, p, word)
    back = g.path_between(d2, d1)
    inv = functor_apply(m, n, p, back)
    ok = inv.compose(mo).is_identity_table() and mo.compose(inv).is_identity_table()
    mo.verified = ok
    if ok:
        mo.inverse = inv
    return mo
