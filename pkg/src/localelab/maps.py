"""Frame homomorphisms, localic maps (their right Galois adjoints), and
continuous point maps with their open-preimage homs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainMismatch, NotContinuous, NotLocalic, SizeLimit
from .lattice import FiniteSpace, Frame, frame_of_space


@dataclass(frozen=True)
class HomReport:
    ok: bool
    law: str | None = None
    witness: tuple | None = None

    def to_json(self):
        return {"ok": self.ok, "law": self.law, "witness": self.witness}


def check_frame_hom(source: Frame, target: Frame, table) -> HomReport:
    """Does table: source -> target preserve top, bottom, binary meets, binary joins?

    Reports the first violated law with an element-label witness.
    """
    t = tuple(table)
    if len(t) != source.n or any(not 0 <= v < target.n for v in t):
        return HomReport(False, "totality", (len(t),))
    if t[source.top] != target.top:
        return HomReport(False, "top", (source.labels[source.top],))
    if t[source.bottom] != target.bottom:
        return HomReport(False, "bottom", (source.labels[source.bottom],))
    for a in range(source.n):
        for b in range(a, source.n):
            if t[source.meet(a, b)] != target.meet(t[a], t[b]):
                return HomReport(False, "meet", (source.labels[a], source.labels[b]))
            if t[source.join(a, b)] != target.join(t[a], t[b]):
                return HomReport(False, "join", (source.labels[a], source.labels[b]))
    return HomReport(True)


@dataclass(frozen=True)
class FrameHom:
    """A validated frame homomorphism source -> target."""

    source: Frame
    target: Frame
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        rep = check_frame_hom(self.source, self.target, self.table)
        if not rep.ok:
            raise ValueError(f"not a frame homomorphism: {rep.law} law fails at {rep.witness}")

    def __call__(self, a: int) -> int:
        return self.table[a]

    def describe(self) -> dict:
        return {
            self.source.labels[i]: self.target.labels[v] for i, v in enumerate(self.table)
        }


@dataclass(frozen=True)
class LocalicMap:
    """A localic map source -> target: the right Galois adjoint of a frame hom
    target -> source. Preserves top and all meets."""

    source: Frame
    target: Frame
    table: tuple
    adjoint: FrameHom  # target -> source

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        f, h = self.table, self.adjoint
        if h.source != self.target or h.target != self.source:
            raise ValueError("adjoint frames do not match")
        for m in range(self.target.n):
            for x in range(self.source.n):
                if self.source.le(h(m), x) != self.target.le(m, f[x]):
                    raise ValueError(
                        f"adjunction fails at ({self.target.labels[m]}, {self.source.labels[x]})"
                    )

    def __call__(self, x: int) -> int:
        return self.table[x]

    def describe(self) -> dict:
        return {
            self.source.labels[i]: self.target.labels[v] for i, v in enumerate(self.table)
        }


def right_adjoint(h: FrameHom) -> LocalicMap:
    """The localic map f: target(h) -> source(h) with f(x) = v{m : h(m) <= x}."""
    L, M = h.target, h.source
    table = []
    for x in range(L.n):
        acc = M.bottom
        for m in range(M.n):
            if L.le(h(m), x):
                acc = M.join(acc, m)
        table.append(acc)
    return LocalicMap(L, M, tuple(table), h)


def left_adjoint(source: Frame, target: Frame, table) -> FrameHom:
    """Candidate left adjoint h(m) = ^{x : m <= f(x)} of f = table: source -> target.

    Succeeds iff h is a frame hom and the adjunction holds; this is the
    is-localic test. Raises NotLocalic with a witness otherwise.
    """
    f = tuple(table)
    if len(f) != source.n or any(not 0 <= v < target.n for v in f):
        raise NotLocalic("table is not a total map into the target", witness=("totality",))
    for a in range(source.n):
        for b in range(a, source.n):
            if f[source.meet(a, b)] != target.meet(f[a], f[b]):
                raise NotLocalic(
                    f"does not preserve the meet of ({source.labels[a]}, {source.labels[b]})",
                    witness=("map-meet", source.labels[a], source.labels[b]),
                )
    if f[source.top] != target.top:
        raise NotLocalic("does not preserve the top", witness=("map-top",))
    adj = []
    for m in range(target.n):
        acc = source.top
        for x in range(source.n):
            if target.le(m, f[x]):
                acc = source.meet(acc, x)
        adj.append(acc)
    rep = check_frame_hom(target, source, adj)
    if not rep.ok:
        raise NotLocalic(
            f"candidate adjoint fails the {rep.law} law at {rep.witness}",
            witness=("adjoint-" + str(rep.law),) + tuple(rep.witness or ()),
        )
    for m in range(target.n):
        for x in range(source.n):
            if source.le(adj[m], x) != target.le(m, f[x]):
                raise NotLocalic(
                    f"adjunction fails at ({target.labels[m]}, {source.labels[x]})",
                    witness=("adjunction", target.labels[m], source.labels[x]),
                )
    return FrameHom(target, source, tuple(adj))


def localic_map(source: Frame, target: Frame, table) -> LocalicMap:
    """Build a localic map from an element table, running the is-localic test."""
    return LocalicMap(source, target, tuple(table), left_adjoint(source, target, table))


def identity_localic(frame: Frame) -> LocalicMap:
    ident = tuple(range(frame.n))
    return LocalicMap(frame, frame, ident, FrameHom(frame, frame, ident))


def compose_localic(g: LocalicMap, f: LocalicMap) -> LocalicMap:
    """g after f: needs target(f) = source(g); adjoints compose the other way."""
    if f.target != g.source:
        raise DomainMismatch(
            f"cannot compose: middle frames differ ({f.target.key()} vs {g.source.key()})",
            witness=(f.target.key(), g.source.key()),
        )
    table = tuple(g(f(x)) for x in range(f.source.n))
    adj = tuple(f.adjoint(g.adjoint(n)) for n in range(g.target.n))
    return LocalicMap(f.source, g.target, table, FrameHom(g.target, f.source, adj))


def enumerate_frame_homs(source: Frame, target: Frame, budget: int = 200_000):
    """All frame homs source -> target as tables, by brute enumeration."""
    total = target.n ** source.n
    if total > budget:
        raise SizeLimit(
            f"{total} candidate maps exceed the enumeration budget {budget}",
            witness=(source.n, target.n),
        )
    out = []
    for cand in product(range(target.n), repeat=source.n):
        if cand[source.top] != target.top or cand[source.bottom] != target.bottom:
            continue
        if check_frame_hom(source, target, cand).ok:
            out.append(cand)
    return out


@dataclass(frozen=True)
class ContinuousMap:
    """A continuous point map between finite spaces."""

    source: FiniteSpace
    target: FiniteSpace
    point_table: tuple

    def __post_init__(self):
        object.__setattr__(self, "point_table", tuple(self.point_table))
        t = self.point_table
        if len(t) != self.source.n_points or any(
            not 0 <= v < self.target.n_points for v in t
        ):
            raise ValueError("point table is not a total map into the target")
        for v in self.target.opens:
            if self.preimage_mask(v) not in set(self.source.opens):
                raise NotContinuous(
                    f"preimage of {self.target.open_label(v)} is not open",
                    witness=(self.target.open_label(v),),
                )

    def preimage_mask(self, open_mask: int) -> int:
        m = 0
        for p, q in enumerate(self.point_table):
            if open_mask >> q & 1:
                m |= 1 << p
        return m

    def __call__(self, p: int) -> int:
        return self.point_table[p]


def omega_of_map(c: ContinuousMap) -> FrameHom:
    """The open-preimage frame hom Omega(target) -> Omega(source)."""
    oy = frame_of_space(c.target)
    ox = frame_of_space(c.source)
    ox_index = {m: i for i, m in enumerate(c.source.opens)}
    table = tuple(ox_index[c.preimage_mask(v)] for v in c.target.opens)
    return FrameHom(oy, ox, table)
