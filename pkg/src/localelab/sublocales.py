"""Sublocales of a finite frame and the coframe S_l(L).

A sublocale is a subset containing the top, closed under binary meets, and
closed under Heyting arrows from arbitrary elements. Subsets are bitmasks
over element indices throughout; `Frame.arrows_into` makes the arrow-closure
test one mask comparison per member.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import HostMismatch, NotMeetClosed, SizeLimit
from .lattice import Frame, bits, set_label
from .maps import LocalicMap

DEFAULT_SIZE_LIMIT = 12


def size_limit() -> int:
    return int(os.environ.get("LOCALELAB_SIZE_LIMIT", str(DEFAULT_SIZE_LIMIT)))


def as_mask(frame: Frame, members) -> int:
    """Coerce a member collection (bitmask, indices, or labels) to a bitmask."""
    if isinstance(members, int):
        if not 0 <= members <= frame.full_mask:
            raise ValueError(f"mask {members:#x} out of range for |L|={frame.n}")
        return members
    m = 0
    for x in members:
        m |= 1 << (frame.index[x] if isinstance(x, str) else int(x))
    return m


@dataclass(frozen=True)
class SubReport:
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def to_json(self):
        return {"ok": self.ok, "condition": self.condition, "witness": self.witness}


def is_sublocale(frame: Frame, members) -> SubReport:
    """First violated sublocale condition (top / meet / arrow) with witness."""
    mask = as_mask(frame, members)
    if not mask >> frame.top & 1:
        return SubReport(False, "top", (frame.labels[frame.top],))
    mem = list(bits(mask))
    for i, a in enumerate(mem):
        for b in mem[i:]:
            if not mask >> frame.meet(a, b) & 1:
                return SubReport(False, "meet", (frame.labels[a], frame.labels[b]))
    for s in mem:
        if frame.arrows_into[s] & ~mask:
            for x in range(frame.n):
                if not mask >> frame.imp(x, s) & 1:
                    return SubReport(
                        False,
                        "arrow",
                        (frame.labels[x], frame.labels[s], frame.labels[frame.imp(x, s)]),
                    )
    return SubReport(True)


@dataclass(frozen=True)
class Sublocale:
    host: Frame
    mask: int

    def __post_init__(self):
        rep = is_sublocale(self.host, self.mask)
        if not rep.ok:
            raise ValueError(f"not a sublocale: {rep.condition} fails at {rep.witness}")

    @property
    def members(self) -> tuple:
        return tuple(bits(self.mask))

    def member_labels(self) -> list:
        return [self.host.labels[i] for i in self.members]

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __le__(self, other: "Sublocale") -> bool:
        return self.host == other.host and not self.mask & ~other.mask

    def label(self) -> str:
        return set_label(self.host.labels, self.mask)


def sublocale(frame: Frame, members) -> Sublocale:
    return Sublocale(frame, as_mask(frame, members))


def sloc_core(frame: Frame, members) -> Sublocale:
    """Largest sublocale inside a meet-closed, top-containing subset.

    Greatest-fixpoint iteration of G(A) = {a in A : every x -> a lands in A}.
    """
    mask = as_mask(frame, members)
    if not mask >> frame.top & 1:
        raise NotMeetClosed(
            "input does not contain the top element", witness=(frame.labels[frame.top],)
        )
    mem = list(bits(mask))
    for i, a in enumerate(mem):
        for b in mem[i:]:
            if not mask >> frame.meet(a, b) & 1:
                raise NotMeetClosed(
                    f"meet of ({frame.labels[a]}, {frame.labels[b]}) escapes the input",
                    witness=(frame.labels[a], frame.labels[b]),
                )
    cur = mask
    while True:
        nxt = 0
        for a in bits(cur):
            if not frame.arrows_into[a] & ~cur:
                nxt |= 1 << a
        if nxt == cur:
            return Sublocale(frame, cur)
        cur = nxt


def sub_join_mask(frame: Frame, masks) -> int:
    """Meet-closure of a union of sublocale masks; empty family gives {top}."""
    cur = 1 << frame.top
    for m in masks:
        cur |= m
    while True:
        add = 0
        mem = list(bits(cur))
        for i, a in enumerate(mem):
            for b in mem[i + 1:]:
                add |= 1 << frame.meet(a, b)
        if not add & ~cur:
            return cur
        cur |= add


def sub_join(frame: Frame, family) -> Sublocale:
    """Join in S_l(L): the meet-closure of the union of the family."""
    for s in family:
        if s.host != frame:
            raise HostMismatch(
                f"sublocale of {s.host.key()} joined inside {frame.key()}",
                witness=(s.host.key(), frame.key()),
            )
    return Sublocale(frame, sub_join_mask(frame, [s.mask for s in family]))


def closed_sub(frame: Frame, a: int) -> Sublocale:
    """The closed sublocale: the up-set of a."""
    return Sublocale(frame, frame.up[a])


def open_sub_mask(frame: Frame, a: int) -> int:
    m = 0
    for x in range(frame.n):
        m |= 1 << frame.imp(a, x)
    return m


def open_sub(frame: Frame, a: int) -> Sublocale:
    """The open sublocale: all arrows out of a."""
    return Sublocale(frame, open_sub_mask(frame, a))


class SublocaleLattice:
    """The coframe S_l(L), fully enumerated in (cardinality, bit pattern) order.

    Meets are intersections; joins are computed on demand and memoized, since
    eager |S_l|^2 tables are wasteful on chain-like hosts.
    """

    def __init__(self, host: Frame, masks):
        self.host = host
        self.masks = tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))
        self.n = len(self.masks)
        self.index = {m: i for i, m in enumerate(self.masks)}
        self.bottom = self.index[1 << host.top]
        self.top = self.index[host.full_mask]
        self._join_memo: dict = {}
        self._complement_memo: dict = {}
        self.open_index = {}
        self.closed_index = {}
        for a in range(host.n):
            self.open_index.setdefault(self.index[open_sub_mask(host, a)], a)
            self.closed_index.setdefault(self.index[host.up[a]], a)

    def sub(self, i: int) -> Sublocale:
        return Sublocale(self.host, self.masks[i])

    def label(self, i: int) -> str:
        return set_label(self.host.labels, self.masks[i])

    def le(self, i: int, j: int) -> bool:
        return not self.masks[i] & ~self.masks[j]

    def meet(self, i: int, j: int) -> int:
        return self.index[self.masks[i] & self.masks[j]]

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        got = self._join_memo.get((i, j))
        if got is None:
            got = self.index[sub_join_mask(self.host, (self.masks[i], self.masks[j]))]
            self._join_memo[(i, j)] = got
        return got

    def meet_many(self, idxs) -> int:
        m = self.host.full_mask
        for i in idxs:
            m &= self.masks[i]
        return self.index[m]

    def join_many(self, idxs) -> int:
        return self.index[sub_join_mask(self.host, [self.masks[i] for i in idxs])]

    def complement(self, i: int):
        """Index of the unique complement, or None."""
        if i in self._complement_memo:
            return self._complement_memo[i]
        out = None
        for j in range(self.n):
            if self.meet(i, j) == self.bottom and self.join(i, j) == self.top:
                out = j
                break
        self._complement_memo[i] = out
        return out

    def is_open(self, i: int) -> bool:
        return i in self.open_index

    def is_closed(self, i: int) -> bool:
        return i in self.closed_index

    def __len__(self) -> int:
        return self.n


@lru_cache(maxsize=None)
def _enumerate(host: Frame, bound: int) -> SublocaleLattice:
    if host.n > bound:
        raise SizeLimit(
            f"|L| = {host.n} exceeds the sublocale enumeration bound {bound}",
            witness=(host.n, bound),
        )
    top_bit = 1 << host.top
    rest = [i for i in range(host.n) if i != host.top]
    found = []
    for sel in range(1 << len(rest)):
        mask = top_bit
        for b, i in enumerate(rest):
            if sel >> b & 1:
                mask |= 1 << i
        mem = list(bits(mask))
        ok = True
        for ii, a in enumerate(mem):
            if not ok:
                break
            if host.arrows_into[a] & ~mask:
                ok = False
                break
            for b in mem[ii:]:
                if not mask >> host.meet(a, b) & 1:
                    ok = False
                    break
        if ok:
            found.append(mask)
    return SublocaleLattice(host, found)


def enumerate_sublocales(host: Frame, limit: int | None = None) -> SublocaleLattice:
    """All sublocales of the host; SizeLimit if |L| exceeds the bound.

    The bound is `limit` when given, else LOCALELAB_SIZE_LIMIT (default 12).
    """
    return _enumerate(host, size_limit() if limit is None else limit)


# -- images and preimages -----------------------------------------------------

def image(f: LocalicMap, s: Sublocale) -> Sublocale:
    """Pointwise image f[S]; the result is asserted to be a sublocale."""
    if s.host != f.source:
        raise HostMismatch(
            "sublocale does not live in the map's source frame",
            witness=(s.host.key(), f.source.key()),
        )
    m = 0
    for x in bits(s.mask):
        m |= 1 << f(x)
    return Sublocale(f.target, m)


def preimage(f: LocalicMap, t: Sublocale) -> Sublocale:
    """Largest sublocale inside the set preimage f^-1[T]."""
    if t.host != f.target:
        raise HostMismatch(
            "sublocale does not live in the map's target frame",
            witness=(t.host.key(), f.target.key()),
        )
    m = 0
    for x in range(f.source.n):
        if f(x) in t:
            m |= 1 << x
    return sloc_core(f.source, m)


@dataclass(frozen=True)
class AdjReport:
    ok: bool
    pairs: int
    witness: tuple | None = None

    def to_json(self):
        return {"ok": self.ok, "pairs": self.pairs, "witness": self.witness}


def check_adjunction(f: LocalicMap, limit: int | None = None) -> AdjReport:
    """Verify f[S] <= T iff S <= f_-1[T] over all sublocale pairs."""
    t = SublocaleTransfer.build(f, limit)
    pairs = 0
    for i in range(t.source_lattice.n):
        for j in range(t.target_lattice.n):
            pairs += 1
            lhs = t.target_lattice.le(t.image_table[i], j)
            rhs = t.source_lattice.le(i, t.preimage_table[j])
            if lhs != rhs:
                return AdjReport(
                    False,
                    pairs,
                    (t.source_lattice.label(i), t.target_lattice.label(j), lhs, rhs),
                )
    return AdjReport(True, pairs)


@dataclass(frozen=True)
class GenReport:
    ok: bool
    expected: tuple
    computed: tuple

    def to_json(self):
        return {"ok": self.ok, "expected": self.expected, "computed": self.computed}


def generation_check(sl: SublocaleLattice, s: Sublocale) -> GenReport:
    """Is S the intersection of the open-join-closed sublocales above it?

    Computes the meet of every o(x) v c(y) containing S.
    """
    host = sl.host
    acc = host.full_mask
    for x in range(host.n):
        ox = open_sub_mask(host, x)
        for y in range(host.n):
            j = sub_join_mask(host, (ox, host.up[y]))
            if not s.mask & ~j:
                acc &= j
    return GenReport(
        acc == s.mask,
        tuple(s.member_labels()),
        tuple(host.labels[i] for i in bits(acc)),
    )


@dataclass(frozen=True)
class SublocaleTransfer:
    """A localic map with both sublocale lattices and its image/preimage tables."""

    map: LocalicMap
    source_lattice: SublocaleLattice
    target_lattice: SublocaleLattice
    image_table: tuple
    preimage_table: tuple

    @staticmethod
    def build(f: LocalicMap, limit: int | None = None) -> "SublocaleTransfer":
        sl = enumerate_sublocales(f.source, limit)
        tl = enumerate_sublocales(f.target, limit)
        img = []
        for m in sl.masks:
            out = 0
            for x in bits(m):
                out |= 1 << f(x)
            img.append(tl.index[out])
        pre = []
        for tm in tl.masks:
            raw = 0
            for x in range(f.source.n):
                if tm >> f(x) & 1:
                    raw |= 1 << x
            pre.append(sl.index[sloc_core(f.source, raw).mask])
        return SublocaleTransfer(f, sl, tl, tuple(img), tuple(pre))

    def image_of(self, i: int) -> int:
        return self.image_table[i]

    def preimage_of(self, j: int) -> int:
        return self.preimage_table[j]


@lru_cache(maxsize=None)
def _transfer_cached(f: LocalicMap, bound: int) -> SublocaleTransfer:
    return SublocaleTransfer.build(f, bound)


def transfer_of(f: LocalicMap, limit: int | None = None) -> SublocaleTransfer:
    """Memoized SublocaleTransfer; operator checks call this in tight loops."""
    return _transfer_cached(f, size_limit() if limit is None else limit)


# -- display-form cross-check -------------------------------------------------

def join_formula_report(frame: Frame, family) -> dict:
    """Compare the implemented meet-form join against the sup-form readings.

    The meet-form must equal the least sublocale containing the union
    (computed here against enumerate_sublocales as the oracle). Each sup-form
    reading ({vM : M nonempty} with or without the empty join) is reported as
    holding or falsified with the reason.
    """
    union = 0
    for s in family:
        union |= s.mask
    meet_form = sub_join_mask(frame, [s.mask for s in family])
    sl = enumerate_sublocales(frame)
    containing = [m for m in sl.masks if not union & ~m]
    least = containing[0]
    for m in containing:
        if m.bit_count() < least.bit_count():
            least = m
    assert all(not least & ~m for m in containing)
    assert meet_form == least

    def closure_by_joins(start: int) -> int:
        cur = start
        while True:
            add = 0
            mem = list(bits(cur))
            for i, a in enumerate(mem):
                for b in mem[i + 1:]:
                    add |= 1 << frame.join(a, b)
            if not add & ~cur:
                return cur
            cur |= add

    out = {
        "meet_form": set_label(frame.labels, meet_form),
        "least_containing": set_label(frame.labels, least),
        "readings": {},
    }
    for name, start in (
        ("sup-form", closure_by_joins(union)),
        ("sup-form-with-empty-join", closure_by_joins(union | 1 << frame.bottom)),
    ):
        rep = is_sublocale(frame, start)
        if not rep.ok:
            status = {"status": "falsified", "reason": "not-a-sublocale",
                      "witness": rep.to_json(), "set": set_label(frame.labels, start)}
        elif start != least:
            status = {"status": "falsified", "reason": "not-the-least",
                      "set": set_label(frame.labels, start)}
        else:
            status = {"status": "holds", "set": set_label(frame.labels, start)}
        out["readings"][name] = status
    return out
