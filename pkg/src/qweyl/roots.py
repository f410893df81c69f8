"""Type-A super root systems for sl(m|n) with m != n: weights, Dynkin
diagrams, reflections, and enumeration of the Weyl groupoid.

Weights live in the free Z-module on eps_1..eps_m, delta_1..delta_n and are
stored as integer coordinate vectors of length m+n; slot i carries sign +1
for i <= m and -1 beyond, which defines the invariant bilinear form.  Roots
are the vectors eps_i - eps_j (two nonzero entries +1/-1); a root is odd iff
its two indices straddle the m boundary.

Objects of the groupoid are Dynkin diagrams, identified with orderings
(permutations) of the m+n basis vectors; the generator at simple-root
position i reflects to the diagram with the two indices of that root
transposed.  Enumeration is BFS from the distinguished diagram with
generator index ascending, which fixes the diagram labels d = 1, 2, ...
deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .reports import Report

Weight = tuple  # tuple[int, ...] of length m+n


class UnsupportedConfigError(ValueError):
    """Raised for m == n or other configurations outside the engine's scope."""


def basis_weight(index: int, total: int) -> Weight:
    return tuple(1 if j == index else 0 for j in range(total))


def root_weight(a: int, b: int, total: int) -> Weight:
    """eps-bar_a - eps-bar_b with 1-based indices."""
    return tuple(
        (1 if j == a - 1 else 0) - (1 if j == b - 1 else 0) for j in range(total)
    )


def add_weights(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub_weights(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale_weight(c: int, x: Weight) -> Weight:
    return tuple(c * a for a in x)


def bilinear_form(x: Weight, y: Weight, m: int) -> int:
    """Sum of coordinate products, signed -1 on the delta slots."""
    return sum((1 if i < m else -1) * a * b for i, (a, b) in enumerate(zip(x, y)))


def weight_parity(x: Weight, m: int) -> int:
    """Parity of a root: odd iff exactly one index exceeds m."""
    return sum(abs(c) for c in x[m:]) % 2


def root_indices(x: Weight) -> tuple[int, int]:
    """The (a, b) with x = eps-bar_a - eps-bar_b, 1-based."""
    a = b = 0
    for j, c in enumerate(x):
        if c == 1:
            a = j + 1
        elif c == -1:
            b = j + 1
        elif c != 0:
            raise ValueError(f"not a root: {x}")
    if not a or not b:
        raise ValueError(f"not a root: {x}")
    return a, b


def all_roots(m: int, n: int) -> list[Weight]:
    t = m + n
    return [root_weight(a, b, t) for a in range(1, t + 1) for b in range(1, t + 1) if a != b]


def cartan_integer(alpha: Weight, beta: Weight, delta: set[Weight]) -> int:
    """-max{k >= 0 : beta + k*alpha is a root}, with value 2 on the diagonal."""
    if alpha == beta:
        return 2
    k = 0
    cur = beta
    while True:
        nxt = add_weights(cur, alpha)
        if nxt in delta:
            k += 1
            cur = nxt
        else:
            return -k


@dataclass(frozen=True)
class DynkinDiagram:
    """A labeled object of the groupoid for sl(m|n).

    perm orders the m+n basis indices; the simple roots are consecutive
    differences tau_k = eps-bar_{perm[k]} - eps-bar_{perm[k+1]}.
    """

    d: int
    m: int
    n: int
    perm: tuple
    tau: tuple
    gram: tuple
    cartan: tuple
    parities: tuple

    @property
    def rank(self) -> int:
        return self.m + self.n - 1

    def colors(self) -> tuple[int, int]:
        """(number of white nodes, number of grey nodes)."""
        grey = sum(self.parities)
        return (self.rank - grey, grey)

    def label_text(self) -> str:
        marks = []
        for alpha, par in zip(self.tau, self.parities):
            a, b = root_indices(alpha)
            names = []
            for idx in (a, b):
                names.append(f"e{idx}" if idx <= self.m else f"d{idx - self.m}")
            marks.append(("(x)" if par else "o") + f" {names[0]}-{names[1]}")
        return ", ".join(marks)


def make_diagram(d: int, m: int, n: int, perm: tuple, delta: set[Weight]) -> DynkinDiagram:
    t = m + n
    tau = tuple(root_weight(perm[k], perm[k + 1], t) for k in range(t - 1))
    gram = tuple(
        tuple(bilinear_form(a, b, m) for b in tau) for a in tau
    )
    cartan = tuple(tuple(cartan_integer(a, b, delta) for b in tau) for a in tau)
    parities = tuple(weight_parity(a, m) for a in tau)
    return DynkinDiagram(d, m, n, perm, tau, gram, cartan, parities)


def reflection_images(diagram: DynkinDiagram, i: int, delta: set[Weight]) -> tuple:
    """Images of the simple roots under the reflection at tau[i-1],
    computed from the Cartan integers (beta - c_{alpha,beta} * alpha)."""
    alpha = diagram.tau[i - 1]
    out = []
    for k, beta in enumerate(diagram.tau):
        c = diagram.cartan[i - 1][k]
        out.append(sub_weights(beta, scale_weight(c, alpha)))
    return tuple(out)


@dataclass(frozen=True)
class GroupoidEdge:
    source: int
    index: int  # simple-root position, 1-based
    target: int
    root: Weight
    transposition: tuple  # the two 1-based basis indices swapped
    parity: int  # parity of the generator, metadata only


class Groupoid:
    """The finite groupoid of Dynkin diagrams of sl(m|n), m != n."""

    def __init__(self, m: int, n: int):
        if m == n:
            raise UnsupportedConfigError("m = n is not supported")
        if m < 1 or n < 1:
            raise UnsupportedConfigError("m, n must be >= 1")
        self.m, self.n = m, n
        self.delta = set(all_roots(m, n))
        self.diagrams: dict[int, DynkinDiagram] = {}
        self.edges: dict[tuple, GroupoidEdge] = {}
        self._by_perm: dict[tuple, int] = {}
        self._enumerate()

    def _enumerate(self):
        t = self.m + self.n
        start = tuple(range(1, t + 1))
        self._by_perm[start] = 1
        self.diagrams[1] = make_diagram(1, self.m, self.n, start, self.delta)
        queue = [1]
        next_id = 2
        while queue:
            d = queue.pop(0)
            diag = self.diagrams[d]
            for i in range(1, t):
                alpha = diag.tau[i - 1]
                a, b = root_indices(alpha)
                pos_a = diag.perm.index(a)
                pos_b = diag.perm.index(b)
                perm2 = list(diag.perm)
                perm2[pos_a], perm2[pos_b] = perm2[pos_b], perm2[pos_a]
                perm2 = tuple(perm2)
                if perm2 not in self._by_perm:
                    self._by_perm[perm2] = next_id
                    self.diagrams[next_id] = make_diagram(
                        next_id, self.m, self.n, perm2, self.delta
                    )
                    queue.append(next_id)
                    next_id += 1
                d2 = self._by_perm[perm2]
                # the reflection must act on the simple roots exactly as the
                # transposition of the two basis indices of alpha
                images = reflection_images(diag, i, self.delta)
                target_tau = self.diagrams[d2].tau
                if images != target_tau:
                    raise AssertionError(
                        f"reflection images disagree with transposition at d={d}, i={i}"
                    )
                self.edges[(d, i)] = GroupoidEdge(
                    d, i, d2, alpha, (a, b), weight_parity(alpha, self.m)
                )

    def reflect(self, d: int, i: int) -> int:
        if (d, i) not in self.edges:
            raise IndexError(f"no generator (d={d}, i={i})")
        return self.edges[(d, i)].target

    def edge(self, d: int, i: int) -> GroupoidEdge:
        if (d, i) not in self.edges:
            raise IndexError(f"no generator (d={d}, i={i})")
        return self.edges[(d, i)]

    def reverse_index(self, d: int, i: int) -> int:
        """The generator index at the target diagram whose root is the
        reflected root; composing the two reflections is the identity."""
        e = self.edges[(d, i)]
        target = self.diagrams[e.target]
        neg = scale_weight(-1, e.root)
        return target.tau.index(neg) + 1

    def word_path(self, start: int, indices: list[int]) -> "GroupoidWord":
        steps = []
        d = start
        for i in indices:
            e = self.edge(d, i)
            steps.append((d, i))
            d = e.target
        return GroupoidWord(start, tuple(steps), d)

    def path_between(self, d1: int, d2: int) -> "GroupoidWord":
        """A shortest generator word d1 -> d2 (BFS)."""
        if d1 == d2:
            return GroupoidWord(d1, (), d1)
        prev = {d1: None}
        queue = [d1]
        while queue:
            d = queue.pop(0)
            for i in range(1, self.m + self.n):
                d2_ = self.edges[(d, i)].target
                if d2_ not in prev:
                    prev[d2_] = (d, i)
                    if d2_ == d2:
                        steps = []
                        cur = d2
                        while prev[cur] is not None:
                            p, i = prev[cur]
                            steps.append((p, i))
                            cur = p
                        return GroupoidWord(d1, tuple(reversed(steps)), d2)
                    queue.append(d2_)
        raise AssertionError("groupoid is connected; unreachable")

    def permutation_of_word(self, word: "GroupoidWord") -> tuple:
        """The composed action on the m+n basis indices (1-based mapping)."""
        t = self.m + self.n
        mapping = list(range(t + 1))  # mapping[j] = image of j
        for d, i in word.steps:
            a, b = self.edges[(d, i)].transposition
            for j in range(1, t + 1):
                if mapping[j] == a:
                    mapping[j] = b
                elif mapping[j] == b:
                    mapping[j] = a
        return tuple(mapping[1:])


@dataclass(frozen=True)
class GroupoidWord:
    source: int
    steps: tuple  # ((diagram id, generator index), ...)
    target: int


def enumerate_groupoid(m: int, n: int) -> Groupoid:
    return Groupoid(m, n)


# ---------------------------------------------------------------------------
# verification


def verify_cartan_scheme(g: Groupoid) -> Report:
    rep = Report()
    rank = g.m + g.n - 1
    for d, diag in g.diagrams.items():
        c = diag.cartan
        ok = all(c[i][i] == 2 for i in range(rank))
        rep.add("cartan.diagonal", {"d": d}, ok, witness=str(c))
        ok = all(c[i][j] <= 0 for i in range(rank) for j in range(rank) if i != j)
        rep.add("cartan.offdiag_nonpositive", {"d": d}, ok, witness=str(c))
        ok = all(
            (c[i][j] == 0) == (c[j][i] == 0) for i in range(rank) for j in range(rank)
        )
        rep.add("cartan.zero_symmetric", {"d": d}, ok, witness=str(c))
    for (d, i), e in g.edges.items():
        j = g.reverse_index(d, i)
        back = g.edges[(e.target, j)]
        ok = back.target == d and set(back.transposition) == set(e.transposition)
        rep.add("cartan.inverse_pairing", {"d": d, "i": i}, ok, witness=str(back))
        # reindexing: the Cartan matrix read through the reflection agrees
        c1 = g.diagrams[d].cartan
        c2 = g.diagrams[e.target].cartan
        ok = c1 == c2
        rep.add("cartan.reindexing", {"d": d, "i": i}, ok, witness=f"{c1} vs {c2}")
    return rep


def _apply_transposition(w: Weight, a: int, b: int) -> Weight:
    out = list(w)
    out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
    return tuple(out)


def verify_root_system(g: Groupoid, delta: set[Weight] | None = None) -> Report:
    rep = Report()
    delta = g.delta if delta is None else delta
    t = g.m + g.n
    positive = {w for w in delta if root_indices(w)[0] < root_indices(w)[1]}
    ok = delta == positive | {scale_weight(-1, w) for w in positive}
    rep.add("roots.positive_decomposition", {"m": g.m, "n": g.n}, ok)
    ok = True
    witness = None
    for alpha in delta:
        multiples = {w for w in delta if _is_multiple(w, alpha)}
        if multiples != {alpha, scale_weight(-1, alpha)}:
            ok, witness = False, str(alpha)
            break
    rep.add("roots.integer_multiples", {"m": g.m, "n": g.n}, ok, witness)
    for (d, i), e in g.edges.items():
        a, b = e.transposition
        image = {_apply_transposition(w, a, b) for w in delta}
        rep.add("roots.reflection_stable", {"d": d, "i": i}, image == delta)
    # only identity loops: the holonomy around each fundamental cycle of the
    # edge graph must be the identity permutation
    tree_prev = {1: None}
    order = [1]
    queue = [1]
    while queue:
        d = queue.pop(0)
        for i in range(1, t):
            d2 = g.edges[(d, i)].target
            if d2 not in tree_prev:
                tree_prev[d2] = (d, i)
                order.append(d2)
                queue.append(d2)

    def tree_word(d: int) -> list:
        steps = []
        while tree_prev[d] is not None:
            p, i = tree_prev[d]
            steps.append((p, i))
            d = p
        return list(reversed(steps))

    def invert_steps(steps):
        out = []
        for d, i in reversed(steps):
            e = g.edges[(d, i)]
            out.append((e.target, g.reverse_index(d, i)))
        return out

    identity = tuple(range(1, t + 1))
    for (d, i), e in g.edges.items():
        loop = tree_word(d) + [(d, i)] + invert_steps(tree_word(e.target))
        word = GroupoidWord(1, tuple(loop), 1)
        perm = g.permutation_of_word(word)
        rep.add(
            "roots.simply_connected_loop",
            {"edge": [d, i]},
            perm == identity,
            witness=str(perm),
        )
    # counts |Delta ∩ (N0 a + N0 b)| per object, recorded but driving no logic
    for d, diag in g.diagrams.items():
        counts = {}
        for ii, a in enumerate(diag.tau):
            for jj, b in enumerate(diag.tau):
                if ii < jj:
                    counts[f"{ii + 1},{jj + 1}"] = _cone_count(a, b, delta)
        rep.add("roots.cone_counts", {"d": d, "counts": counts}, True)
    return rep


def _is_multiple(w: Weight, alpha: Weight) -> bool:
    # roots have entries in {-1,0,1}; the only candidates are +-alpha
    return w == alpha or w == scale_weight(-1, alpha)


def _cone_count(a: Weight, b: Weight, delta: set[Weight]) -> int:
    count = 0
    for w in delta:
        for s in range(0, 5):
            for t in range(0, 5):
                if (s or t) and w == add_weights(scale_weight(s, a), scale_weight(t, b)):
                    count += 1
                    break
            else:
                continue
            break
    return count


def braid_relation_instances(g: Groupoid):
    """All applicable (kind, d, i, j) for the groupoid's braid relations:
    2-fold and 4-fold for |i-j| >= 2, 3-fold and 6-fold for |i-j| = 1."""
    rank = g.m + g.n - 1
    for d, diag in g.diagrams.items():
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if i == j:
                    continue
                pi, pj = diag.parities[i - 1], diag.parities[j - 1]
                if abs(i - j) >= 2:
                    if pi == 0 and pj == 0:
                        yield ("2-fold", d, i, j)
                    yield ("4-fold", d, i, j)
                else:
                    if pi == pj:
                        yield ("3-fold", d, i, j)
                    yield ("6-fold", d, i, j)


def _alternating_word(g: Groupoid, d: int, first: int, second: int, length: int) -> GroupoidWord:
    indices = [first if k % 2 == 0 else second for k in range(length)]
    return g.word_path(d, indices)


def verify_braid_relations(g: Groupoid) -> Report:
    rep = Report()
    for (d, i), e in g.edges.items():
        j = g.reverse_index(d, i)
        w = g.word_path(d, [i, j])
        ok = w.target == d and g.permutation_of_word(w) == tuple(
            range(1, g.m + g.n + 1)
        )
        rep.add("braid.involution", {"d": d, "i": i}, ok)
    lengths = {"2-fold": 2, "3-fold": 3, "4-fold": 4, "6-fold": 6}
    for kind, d, i, j in braid_relation_instances(g):
        ln = lengths[kind]
        lhs = _alternating_word(g, d, i, j, ln)
        rhs = _alternating_word(g, d, j, i, ln)
        ok = (
            lhs.target == rhs.target
            and g.permutation_of_word(lhs) == g.permutation_of_word(rhs)
        )
        rep.add(
            "braid.relation",
            {"kind": kind, "d": d, "i": i, "j": j},
            ok,
            witness=f"{g.permutation_of_word(lhs)} vs {g.permutation_of_word(rhs)}",
        )
    return rep


def diagram_graph_iso(d1: DynkinDiagram, d2: DynkinDiagram) -> bool:
    """Diagrams are isomorphic as colored graphs iff the white/grey node
    counts agree (type-A chains of equal length)."""
    return d1.colors() == d2.colors()


def to_dot(g: Groupoid) -> str:
    lines = ["digraph groupoid {"]
    for d, diag in sorted(g.diagrams.items()):
        label = f"d={d}: {diag.label_text()}"
        lines.append(f'  n{d} [label="{label}"];')
    for (d, i), e in sorted(g.edges.items()):
        a, b = root_indices(e.root)
        m = g.m
        names = [f"e{x}" if x <= m else f"d{x - m}" for x in (a, b)]
        lines.append(
            f'  n{d} -> n{e.target} [label="sigma_{{{names[0]}-{names[1]}}}^{d}"];'
        )
    lines.append("}")
    return "\n".join(lines)
