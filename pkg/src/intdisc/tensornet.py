"""Tensor networks of form vertices and antisymmetric epsilon vertices.

A ContractionDiagram records vertices (form / deriv / eps / eps_star), an
edge pairing of their index slots, and any free slots.  Contraction runs a
planned sequence of pairwise merges; the same engine evaluates numerically
(float or Fraction entries) and symbolically (SparsePoly entries), which is
how the printed invariant expansions are generated and cross-checked.

Epsilon vertices are realized as explicit permutation-sign tensors, so all
closed diagrams built from them and from form vertices are SL(n) invariant
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .errors import InputError
from .forms import FormShape, SymmetricForm, multinomial, svar_name
from .polyalg import SparsePoly

FORM = "form"
DERIV = "deriv"
EPS = "eps"
EPS_STAR = "eps_star"

Slot = tuple[int, int]  # (node index, slot index)


@dataclass(frozen=True)
class ContractionDiagram:
    """Vertices with valences, an edge pairing, and ordered free slots.

    `norm` rescales the raw contraction into the catalogue's reference
    normalization; distinct index pairings of one and the same invariant
    differ by such constants, and the catalogue pins them so that each
    named diagram evaluates to its reference expansion exactly.
    """

    name: str
    n: int                      # epsilon valence / variable count
    r: int                      # form valence
    kinds: tuple[str, ...]      # per node
    edges: tuple[tuple[Slot, Slot], ...]
    free_slots: tuple[Slot, ...] = ()
    norm: Fraction = Fraction(1)

    def __post_init__(self):
        seen = {}
        for e, (a, b) in enumerate(self.edges):
            for slot in (a, b):
                self._check_slot(slot)
                if slot in seen:
                    raise InputError(f"slot {slot} used twice in diagram {self.name}")
                seen[slot] = e
        for slot in self.free_slots:
            self._check_slot(slot)
            if slot in seen:
                raise InputError(f"free slot {slot} also appears in an edge")
            seen[slot] = None
        for node, kind in enumerate(self.kinds):
            for s in range(self.valence(node)):
                if (node, s) not in seen:
                    raise InputError(
                        f"slot ({node},{s}) of diagram {self.name} is unaccounted for"
                    )

    def _check_slot(self, slot: Slot):
        node, s = slot
        if not (0 <= node < len(self.kinds)):
            raise InputError(f"bad node in slot {slot}")
        if not (0 <= s < self.valence(node)):
            raise InputError(f"bad slot index in {slot}")

    def valence(self, node: int) -> int:
        return self.r if self.kinds[node] in (FORM, DERIV) else self.n

    def form_node_count(self) -> int:
        return sum(1 for k in self.kinds if k == FORM)

    def eps_node_count(self) -> int:
        return sum(1 for k in self.kinds if k in (EPS, EPS_STAR))


@dataclass
class ContractionPlan:
    """Pairwise merge schedule; ranks are the merged components' open slots."""

    steps: list[tuple[int, int, int]] = field(default_factory=list)  # (comp_a, comp_b, rank)

    def max_intermediate_rank(self) -> int:
        return max((rank for _, _, rank in self.steps), default=0)


# -- small dense tensors with generic scalars ---------------------------------


class _Tensor:
    __slots__ = ("n", "rank", "data")

    def __init__(self, n, rank, data):
        self.n = n
        self.rank = rank
        self.data = data  # flat list, row-major

    @classmethod
    def scalar(cls, n, value):
        return cls(n, 0, [value])


def _eps_entries(n: int) -> dict[tuple[int, ...], int]:
    out = {}
    for p in permutations(range(n)):
        sign = 1
        q = list(p)
        for i in range(n):
            while q[i] != i:
                j = q[i]
                q[i], q[j] = q[j], q[i]
                sign = -sign
        out[p] = sign
    return out


@lru_cache(maxsize=None)
def _eps_tensor_int(n: int) -> tuple:
    entries = _eps_entries(n)
    data = [0] * (n ** n)
    for idx, sign in entries.items():
        flat = 0
        for i in idx:
            flat = flat * n + i
        data[flat] = sign
    return tuple(data)


def _form_tensor(f: SymmetricForm) -> _Tensor:
    n, r = f.shape.n, f.shape.r
    data = []
    for idx in product(range(n), repeat=r):
        a = [0] * n
        for i in idx:
            a[i] += 1
        data.append(f.coeff(tuple(a)) / multinomial(r, tuple(a)))
    return _Tensor(n, r, data)


def _symbolic_form_tensor(shape: FormShape) -> _Tensor:
    n, r = shape.n, shape.r
    names = tuple(sorted(svar_name(a) for a in shape.monomials()))
    data = []
    for idx in product(range(n), repeat=r):
        a = [0] * n
        for i in idx:
            a[i] += 1
        a = tuple(a)
        exps = tuple(1 if v == svar_name(a) else 0 for v in names)
        data.append(SparsePoly(names, {exps: Fraction(1, multinomial(r, a))}))
    return _Tensor(n, r, data)


def _merge(A: _Tensor, B: _Tensor, pairs: list[tuple[int, int]]) -> _Tensor:
    """Contract axes of A against axes of B as given by (axisA, axisB) pairs.

    Output axes: A's remaining axes in order, then B's remaining axes.
    """
    n = A.n
    ca = [i for i, _ in pairs]
    cb = [j for _, j in pairs]
    fa = [i for i in range(A.rank) if i not in ca]
    fb = [j for j in range(B.rank) if j not in cb]
    out_rank = len(fa) + len(fb)

    def strides(rank):
        s = [0] * rank
        acc = 1
        for i in range(rank - 1, -1, -1):
            s[i] = acc
            acc *= n
        return s

    sa, sb = strides(A.rank), strides(B.rank)
    out_size = n ** out_rank
    data = [None] * out_size
    ktuples = list(product(range(n), repeat=len(pairs)))
    for out_flat in range(out_size):
        # decode output into axis values
        rem = out_flat
        vals = []
        for _ in range(out_rank):
            vals.append(0)
        for i in range(out_rank - 1, -1, -1):
            vals[i] = rem % n
            rem //= n
        base_a = 0
        for axis, v in zip(fa, vals[: len(fa)]):
            base_a += sa[axis] * v
        base_b = 0
        for axis, v in zip(fb, vals[len(fa):]):
            base_b += sb[axis] * v
        acc = None
        for kt in ktuples:
            ia = base_a
            ib = base_b
            for (axa, axb), v in zip(pairs, kt):
                ia += sa[axa] * v
                ib += sb[axb] * v
            term = A.data[ia] * B.data[ib]
            acc = term if acc is None else acc + term
        data[out_flat] = acc
    return _Tensor(n, out_rank, data)


# -- planning ------------------------------------------------------------------


def plan_order(d: ContractionDiagram) -> ContractionPlan:
    """Greedy merge order minimizing the merged component's open-slot count.

    Components are identified by the smallest node index they contain; ties
    are broken by component ids, so the plan is deterministic.
    """
    comp = {i: {i} for i in range(len(d.kinds))}
    open_slots = {i: d.valence(i) for i in range(len(d.kinds))}
    # edge multiplicity between components
    links: dict[tuple[int, int], int] = {}

    def owner(node):
        for cid, nodes in comp.items():
            if node in nodes:
                return cid
        raise AssertionError

    for (a, b) in d.edges:
        ca, cb = owner(a[0]), owner(b[0])
        if ca == cb:
            raise InputError(f"diagram {d.name} has a self-loop at node {a[0]}")
        key = (min(ca, cb), max(ca, cb))
        links[key] = links.get(key, 0) + 1

    plan = ContractionPlan()
    while links:
        best = None
        for (ca, cb), mult in sorted(links.items()):
            rank = open_slots[ca] + open_slots[cb] - 2 * mult
            cost = (rank, ca, cb)
            if best is None or cost < best[0]:
                best = (cost, ca, cb, mult)
        _, ca, cb, mult = best
        rank = open_slots[ca] + open_slots[cb] - 2 * mult
        plan.steps.append((ca, cb, rank))
        comp[ca] = comp[ca] | comp[cb]
        del comp[cb]
        open_slots[ca] = rank
        del open_slots[cb]
        del links[(ca, cb)]
        moved = [(k, v) for k, v in links.items() if cb in k]
        for (x, y), v in moved:
            del links[(x, y)]
            other = x if y == cb else y
            key = (min(ca, other), max(ca, other))
            links[key] = links.get(key, 0) + v
    # disconnected leftovers (scalar factors): merge in id order
    ids = sorted(comp)
    while len(ids) > 1:
        ca, cb = ids[0], ids[1]
        rank = open_slots[ca] + open_slots[cb]
        plan.steps.append((ca, cb, rank))
        open_slots[ca] = rank
        ids.pop(1)
    return plan


# -- execution -----------------------------------------------------------------


def _node_tensor(d: ContractionDiagram, node: int, binding, symbolic: bool) -> _Tensor:
    kind = d.kinds[node]
    if kind == FORM:
        if symbolic:
            return _symbolic_form_tensor(binding)
        return _form_tensor(binding)
    if kind in (EPS, EPS_STAR):
        data = list(_eps_tensor_int(d.n))
        if symbolic:
            data = [SparsePoly.constant(v) if v else SparsePoly.zero() for v in data]
        elif isinstance(binding, SymmetricForm) and binding.kind == "rational":
            data = [Fraction(v) for v in data]
        return _Tensor(d.n, d.n, data)
    raise InputError(f"cannot contract a {kind!r} vertex; bind it to an operator instead")


def _execute(d: ContractionDiagram, binding, symbolic: bool):
    plan = plan_order(d)
    tensors: dict[int, _Tensor] = {}
    # slot order per component: list of (node, slot) in tensor-axis order
    axes: dict[int, list[Slot]] = {}
    members: dict[int, set[int]] = {}
    for i in range(len(d.kinds)):
        tensors[i] = _node_tensor(d, i, binding, symbolic)
        axes[i] = [(i, s) for s in range(d.valence(i))]
        members[i] = {i}
    edge_lookup = {}
    for a, b in d.edges:
        edge_lookup.setdefault(a[0], []).append((a, b))
        edge_lookup.setdefault(b[0], []).append((a, b))

    def contracted_pairs(ca, cb):
        pairs = []
        nodes_a, nodes_b = members[ca], members[cb]
        for a, b in d.edges:
            if a[0] in nodes_a and b[0] in nodes_b:
                pairs.append((axes[ca].index(a), axes[cb].index(b)))
            elif b[0] in nodes_a and a[0] in nodes_b:
                pairs.append((axes[ca].index(b), axes[cb].index(a)))
        return pairs

    for ca, cb, _rank in plan.steps:
        pairs = contracted_pairs(ca, cb)
        merged = _merge(tensors[ca], tensors[cb], pairs)
        removed_a = {i for i, _ in pairs}
        removed_b = {j for _, j in pairs}
        new_axes = [s for k, s in enumerate(axes[ca]) if k not in removed_a]
        new_axes += [s for k, s in enumerate(axes[cb]) if k not in removed_b]
        tensors[ca] = merged
        axes[ca] = new_axes
        members[ca] |= members[cb]
        del tensors[cb], axes[cb], members[cb]

    (cid,) = tensors
    result = tensors[cid]
    order = axes[cid]
    scale = d.norm if d.norm != 1 else None
    if not d.free_slots:
        v = result.data[0]
        return v * scale if scale is not None else v
    # permute axes into the diagram's declared free-slot order
    perm = [order.index(s) for s in d.free_slots]
    n = d.n
    out = {}
    for idx in product(range(n), repeat=len(d.free_slots)):
        flat = 0
        src = [0] * len(order)
        for axis, v in zip(perm, idx):
            src[axis] = v
        for v in src:
            flat = flat * n + v
        entry = result.data[flat]
        out[idx] = entry * scale if scale is not None else entry
    return out


def contract_numeric(d: ContractionDiagram, binding: SymmetricForm):
    """Contract with the given form bound to every form vertex.

    Returns a scalar for closed diagrams, or a dict indexed by free-slot
    values (0-based) otherwise.
    """
    if binding.shape.n != d.n or binding.shape.r != d.r:
        raise InputError(
            f"diagram {d.name} needs a {d.n}|{d.r} form, got "
            f"{binding.shape.n}|{binding.shape.r}"
        )
    return _execute(d, binding, symbolic=False)


def contract_symbolic(d: ContractionDiagram, shape: FormShape | None = None):
    """Contract with symbolic coefficients; exact SparsePoly in s-coordinates."""
    shape = shape or FormShape(d.n, d.r)
    if shape.n != d.n or shape.r != d.r:
        raise InputError(f"shape {shape} does not match diagram {d.name}")
    return _execute(d, shape, symbolic=True)


def contract_naive(d: ContractionDiagram, binding: SymmetricForm):
    """Reference evaluation: plain sum over all edge index assignments."""
    if d.free_slots:
        raise InputError("naive contraction implemented for closed diagrams only")
    tensors = [_node_tensor(d, i, binding, symbolic=False) for i in range(len(d.kinds))]
    n = d.n
    total = None
    for assign in product(range(n), repeat=len(d.edges)):
        slot_val = {}
        for (a, b), v in zip(d.edges, assign):
            slot_val[a] = v
            slot_val[b] = v
        term = None
        for node, t in enumerate(tensors):
            flat = 0
            for s in range(d.valence(node)):
                flat = flat * n + slot_val[(node, s)]
            v = t.data[flat]
            term = v if term is None else term * v
        total = term if total is None else total + term
    return total * d.norm if d.norm != 1 else total


# -- the catalogue ---------------------------------------------------------------


def _pair_diagram(name, n, r, form_count, eps_slots, free=(), norm=1):
    """eps_slots: list of ((node, slot), (node, slot)) in form-node numbering."""
    kinds = (FORM,) * form_count + (EPS,) * len(eps_slots)
    edges = []
    for e, (sa, sb) in enumerate(eps_slots):
        eps_node = form_count + e
        edges.append(((eps_node, 0), sa))
        edges.append(((eps_node, 1), sb))
    edges = tuple(edges)
    return ContractionDiagram(name, n, r, kinds, edges, tuple(free), Fraction(norm))


def _catalogue() -> dict[str, ContractionDiagram]:
    cat = {}

    # determinant patterns:  eps^{i1..in} eps^{j1..jn} S_{i1 j1} ... S_{in jn}
    for n in (2, 3):
        form_count = n
        kinds = (FORM,) * n + (EPS, EPS_STAR)
        edges = []
        for k in range(n):
            edges.append(((n, k), (k, 0)))      # eps slot k -> S_k first index
            edges.append(((n + 1, k), (k, 1)))  # eps* slot k -> S_k second index
        cat[f"det{n}"] = ContractionDiagram(f"det{n}", n, 2, kinds, tuple(edges))

    # I4 (2|3): eps pairs (i1j1)(i2j2)(k1l1)(k2l2)(i3k3)(j3l3); nodes i,j,k,l=0..3
    cat["I4_23"] = _pair_diagram(
        "I4_23", 2, 3, 4,
        [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((2, 0), (3, 0)),
         ((2, 1), (3, 1)), ((0, 2), (2, 2)), ((1, 2), (3, 2))],
        norm=-1,
    )

    # I2 (2|4): (i1j1)(i2j2)(i3j3)(i4j4)
    cat["I2_24"] = _pair_diagram(
        "I2_24", 2, 4, 2,
        [((0, k), (1, k)) for k in range(4)],
    )

    # I3 (2|4): (i1j1)(i2j2)(i3k1)(i4k2)(j3k3)(j4k4)
    cat["I3_24"] = _pair_diagram(
        "I3_24", 2, 4, 3,
        [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (2, 0)),
         ((0, 3), (2, 1)), ((1, 2), (2, 2)), ((1, 3), (2, 3))],
    )

    # I4 (2|5): (i1j1)(i2j2)(i3j3)(i4k4)(i5k5)(j4l4)(j5l5)(k1l1)(k2l2)(k3l3)
    cat["I4_25"] = _pair_diagram(
        "I4_25", 2, 5, 4,
        [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2)),
         ((0, 3), (2, 3)), ((0, 4), (2, 4)), ((1, 3), (3, 3)),
         ((1, 4), (3, 4)), ((2, 0), (3, 0)), ((2, 1), (3, 1)),
         ((2, 2), (3, 2))],
        norm=-1,
    )

    # P_ab (2|5): six 5-valent forms (i,j,k,l,m,s = nodes 0..5), free a=(0,0), b=(5,4)
    # eps pairs: (i2j2)(i3j3)(i4k4)(i5k5)(k1l1)(k2l2)(j4m4)(j5m5)(m1s1)(m2s2)
    #            (l3s3)(l4s4)(j1k3)(l5m3)
    cat["P_25"] = _pair_diagram(
        "P_25", 2, 5, 6,
        [((0, 1), (1, 1)), ((0, 2), (1, 2)), ((0, 3), (2, 3)),
         ((0, 4), (2, 4)), ((2, 0), (3, 0)), ((2, 1), (3, 1)),
         ((1, 3), (4, 3)), ((1, 4), (4, 4)), ((4, 0), (5, 0)),
         ((4, 1), (5, 1)), ((3, 2), (5, 2)), ((3, 3), (5, 3)),
         ((1, 0), (2, 2)), ((3, 4), (4, 2))],
        free=[(0, 0), (5, 4)],
        norm=-1,
    )

    # I4 (3|3): eps triples (i1j1k1)(i2j2l2)(i3k3l3)(l1k2j3); nodes i,j,k,l=0..3
    def triple(name, form_count, eps_triples, norm=1):
        kinds = (FORM,) * form_count + (EPS,) * len(eps_triples)
        edges = []
        for e, slots in enumerate(eps_triples):
            for pos, slot in enumerate(slots):
                edges.append(((form_count + e, pos), slot))
        return ContractionDiagram(name, 3, 3, kinds, tuple(edges), norm=Fraction(norm))

    cat["I4_33"] = triple(
        "I4_33", 4, norm=Fraction(-1, 4), eps_triples=
        [((0, 0), (1, 0), (2, 0)),
         ((0, 1), (1, 1), (3, 1)),
         ((0, 2), (2, 2), (3, 2)),
         ((3, 0), (2, 1), (1, 2))],
    )

    # I6 (3|3): (i1k1l1)(i2j2s2)(j1k2m1)(l2m2k3)(m3s3j3)(l3i3s1)
    cat["I6_33"] = triple(
        "I6_33", 6, norm=-1, eps_triples=
        [((0, 0), (2, 0), (3, 0)),
         ((0, 1), (1, 1), (5, 1)),
         ((1, 0), (2, 1), (4, 0)),
         ((3, 1), (4, 1), (2, 2)),
         ((4, 2), (5, 2), (1, 2)),
         ((3, 2), (0, 2), (5, 0))],
    )

    return cat


_CATALOGUE = None


def catalogue_names() -> tuple[str, ...]:
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _catalogue()
    return tuple(sorted(_CATALOGUE))


def builtin_diagram(name: str) -> ContractionDiagram:
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _catalogue()
    try:
        return _CATALOGUE[name]
    except KeyError:
        raise InputError(
            f"unknown diagram {name!r}; available: {', '.join(sorted(_CATALOGUE))}"
        ) from None
