"""Finite frames: bounded distributive lattices with their Heyting structure.

Elements are canonical indices 0..n-1. Subsets of a frame (and of a poset)
are int bitmasks: bit i set means element i belongs to the subset. All
tables are validated eagerly at construction, so a Frame that exists is a
frame.
"""
from __future__ import annotations

import hashlib
import json

import numpy as np

from .errors import NoMeetOrJoin, NotAPoset, NotASpace, NotDistributive


def bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def set_label(labels, mask: int) -> str:
    """Render a bitmask over `labels` as a set-style label like {a,b}."""
    return "{" + ",".join(labels[i] for i in bits(mask)) + "}"


class Poset:
    """A finite poset: labels plus a reflexive, transitive, antisymmetric bool matrix."""

    def __init__(self, labels, le: np.ndarray):
        self.labels = tuple(str(x) for x in labels)
        self.n = len(self.labels)
        le = np.asarray(le, dtype=bool)
        if le.shape != (self.n, self.n):
            raise ValueError("le matrix shape does not match label count")
        le.setflags(write=False)
        self.le_matrix = le
        # dn[j] = bitmask of {i : i <= j}, up[i] = bitmask of {j : i <= j}
        self.dn = tuple(mask_of(np.nonzero(le[:, j])[0]) for j in range(self.n))
        self.up = tuple(mask_of(np.nonzero(le[i, :])[0]) for i in range(self.n))
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != self.n:
            raise ValueError("duplicate labels")

    @staticmethod
    def from_pairs(labels, pairs) -> "Poset":
        """Build from generating <=-pairs of labels; closes reflexively and transitively.

        Raises NotAPoset with the offending pair when the closure has a cycle.
        """
        labels = tuple(str(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("duplicate labels")
        n = len(labels)
        rows = [1 << i for i in range(n)]
        for a, b in pairs:
            if str(a) not in index or str(b) not in index:
                raise ValueError(f"unknown label in pair ({a!r}, {b!r})")
            rows[index[str(a)]] |= 1 << index[str(b)]
        # transitive closure, Warshall on bitmask rows
        for k in range(n):
            rk = rows[k]
            for i in range(n):
                if rows[i] >> k & 1:
                    rows[i] |= rk
        for i in range(n):
            for j in bits(rows[i]):
                if i != j and rows[j] >> i & 1:
                    raise NotAPoset(
                        f"cycle: {labels[i]} <= {labels[j]} and {labels[j]} <= {labels[i]}",
                        witness=(labels[i], labels[j]),
                    )
        le = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in bits(rows[i]):
                le[i, j] = True
        return Poset(labels, le)

    def validate(self) -> None:
        """Re-check reflexivity/antisymmetry/transitivity (for matrices built directly)."""
        le = self.le_matrix
        if not le.diagonal().all():
            i = int(np.nonzero(~le.diagonal())[0][0])
            raise NotAPoset(f"not reflexive at {self.labels[i]}", witness=(self.labels[i],))
        sym = le & le.T
        np.fill_diagonal(sym, False)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise NotAPoset(
                f"cycle: {self.labels[i]} <= {self.labels[j]} and back",
                witness=(self.labels[i], self.labels[j]),
            )
        closure = (le.astype(np.uint8) @ le.astype(np.uint8)) > 0
        if (closure & ~le).any():
            i, j = map(int, np.argwhere(closure & ~le)[0])
            raise NotAPoset(
                f"not transitive: {self.labels[i]} .. {self.labels[j]}",
                witness=(self.labels[i], self.labels[j]),
            )

    def leq(self, a: int, b: int) -> bool:
        return bool(self.dn[b] >> a & 1)

    def covers(self):
        """List of (lower, upper) cover pairs."""
        out = []
        for a in range(self.n):
            for b in bits(self.up[a] & ~(1 << a)):
                between = self.up[a] & self.dn[b] & ~(1 << a) & ~(1 << b)
                if between == 0:
                    out.append((a, b))
        return out

    def heights(self):
        """Longest-chain height of every element (minimal elements at 0)."""
        h = [0] * self.n
        order = sorted(range(self.n), key=lambda i: self.dn[i].bit_count())
        for i in order:
            below = self.dn[i] & ~(1 << i)
            h[i] = 1 + max((h[j] for j in bits(below)), default=-1)
        return h

    def key(self) -> str:
        digest = hashlib.sha256(
            json.dumps(self.labels).encode() + self.le_matrix.tobytes()
        ).hexdigest()[:10]
        return f"p{self.n}-{digest}"

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and np.array_equal(self.le_matrix, other.le_matrix)
        )

    def __hash__(self):
        return hash((self.labels, self.le_matrix.tobytes()))


class Frame:
    """A finite frame: validated distributive lattice with Heyting tables."""

    def __init__(self, poset: Poset, meet, join, imp, bottom: int, top: int):
        self.poset = poset
        self.labels = poset.labels
        self.n = poset.n
        self.meet_table = meet
        self.join_table = join
        self.imp_table = imp
        self.bottom = bottom
        self.top = top
        self.full_mask = (1 << self.n) - 1
        self.dn = poset.dn
        self.up = poset.up
        self.index = poset.index
        # arrows_into[s] = bitmask of {x -> s : x in L}; the sublocale machinery
        # leans on this: a subset A is arrow-closed iff arrows_into[s] <= A for s in A.
        self.arrows_into = tuple(
            mask_of(imp[x][s] for x in range(self.n)) for s in range(self.n)
        )

    # -- element operations -------------------------------------------------
    def le(self, a: int, b: int) -> bool:
        return bool(self.dn[b] >> a & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def imp(self, a: int, b: int) -> int:
        """Heyting arrow a -> b: the largest c with c & a <= b."""
        return self.imp_table[a][b]

    def neg(self, a: int) -> int:
        """Pseudocomplement: a -> bottom."""
        return self.imp_table[a][self.bottom]

    def meet_mask(self, mask: int) -> int:
        """Meet of a subset given as bitmask; empty meet is the top."""
        out = self.top
        for i in bits(mask):
            out = self.meet_table[out][i]
        return out

    def join_mask(self, mask: int) -> int:
        """Join of a subset given as bitmask; empty join is the bottom."""
        out = self.bottom
        for i in bits(mask):
            out = self.join_table[out][i]
        return out

    def label(self, i: int) -> str:
        return self.labels[i]

    def covers(self):
        return self.poset.covers()

    def key(self) -> str:
        return "f" + self.poset.key()

    def __eq__(self, other):
        return isinstance(other, Frame) and self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    def __repr__(self):
        return f"Frame({self.n} elements, key={self.key()})"

    # -- construction -------------------------------------------------------
    @staticmethod
    def from_order(poset: Poset) -> "Frame":
        """Validate lattice structure on a poset and build all tables."""
        n = poset.n
        if n == 0:
            raise NoMeetOrJoin("empty carrier has no bounds", witness=())
        dn, up = poset.dn, poset.up
        labels = poset.labels

        def glb(a, b):
            cand = dn[a] & dn[b]
            for m in bits(cand):
                if cand & ~dn[m] == 0:
                    return m
            return None

        def lub(a, b):
            cand = up[a] & up[b]
            for m in bits(cand):
                if cand & ~up[m] == 0:
                    return m
            return None

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = glb(a, b)
                if m is None:
                    raise NoMeetOrJoin(
                        f"no meet for ({labels[a]}, {labels[b]})", witness=(labels[a], labels[b])
                    )
                j = lub(a, b)
                if j is None:
                    raise NoMeetOrJoin(
                        f"no join for ({labels[a]}, {labels[b]})", witness=(labels[a], labels[b])
                    )
                meet[a][b] = meet[b][a] = m
                join[a][b] = join[b][a] = j

        bottom = 0
        top = 0
        for i in range(n):
            bottom = meet[bottom][i]
            top = join[top][i]

        for a in range(n):
            ma, ja = meet[a], join[a]
            for b in range(n):
                ab = ma[b]
                for c in range(b, n):
                    if ma[join[b][c]] != join[ab][ma[c]]:
                        raise NotDistributive(
                            f"{labels[a]} & ({labels[b]} | {labels[c]}) != "
                            f"({labels[a]} & {labels[b]}) | ({labels[a]} & {labels[c]})",
                            witness=(labels[a], labels[b], labels[c]),
                        )

        # Heyting arrow: distributivity makes the join of candidates a candidate.
        imp = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                best = bottom
                ok = dn[b]
                for c in range(n):
                    if ok >> meet[c][a] & 1:
                        best = join[best][c]
                imp[a][b] = best
        for a in range(n):
            for b in range(n):
                r = imp[a][b]
                for c in range(n):
                    if (dn[b] >> meet[c][a] & 1) != (dn[r] >> c & 1):
                        raise AssertionError(
                            f"heyting adjunction broken at ({labels[a]},{labels[b]},{labels[c]})"
                        )
        return Frame(poset, tuple(map(tuple, meet)), tuple(map(tuple, join)),
                     tuple(map(tuple, imp)), bottom, top)


def build_frame(labels, le_pairs) -> Frame:
    """Construct a frame from labels and generating <=-pairs.

    Raises NotAPoset / NoMeetOrJoin / NotDistributive with witnesses.
    """
    return Frame.from_order(Poset.from_pairs(labels, le_pairs))


def heyting(frame: Frame, a: int, b: int) -> int:
    """The largest c with c & a <= b."""
    return frame.imp(a, b)


def pseudocomplement(frame: Frame, a: int) -> int:
    return frame.neg(a)


def _frame_of_mask_family(masks, labels) -> Frame:
    n = len(masks)
    le = np.zeros((n, n), dtype=bool)
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            le[i, j] = mi & ~mj == 0
    return Frame.from_order(Poset(labels, le))


def downset_frame(poset: Poset) -> Frame:
    """The frame of down-closed subsets of a poset, ordered by inclusion."""
    downs = []
    for m in range(1 << poset.n):
        if all(poset.dn[i] & ~m == 0 for i in bits(m)):
            downs.append(m)
    downs.sort(key=lambda m: (m.bit_count(), m))
    labels = [set_label(poset.labels, m) for m in downs]
    return _frame_of_mask_family(downs, labels)


class FiniteSpace:
    """A finite topological space: point labels plus an open-set family."""

    def __init__(self, points, opens):
        self.points = tuple(str(p) for p in points)
        self.n_points = len(self.points)
        self.point_index = {p: i for i, p in enumerate(self.points)}
        if len(self.point_index) != self.n_points:
            raise ValueError("duplicate point labels")
        self.opens = tuple(sorted(set(int(o) for o in opens), key=lambda m: (m.bit_count(), m)))
        self.full = (1 << self.n_points) - 1
        self.validate()

    @staticmethod
    def from_sets(points, open_sets) -> "FiniteSpace":
        points = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(points)}
        masks = []
        for s in open_sets:
            m = 0
            for p in s:
                if str(p) not in index:
                    raise ValueError(f"open set mentions unknown point {p!r}")
                m |= 1 << index[str(p)]
            masks.append(m)
        return FiniteSpace(points, masks)

    def validate(self) -> None:
        opens = set(self.opens)
        if 0 not in opens:
            raise NotASpace("empty set is not open", witness=())
        if self.full not in opens:
            raise NotASpace("whole space is not open", witness=())
        for u in self.opens:
            for v in self.opens:
                if u | v not in opens:
                    raise NotASpace(
                        f"union of {self.open_label(u)} and {self.open_label(v)} is not open",
                        witness=(u, v, "union"),
                    )
                if u & v not in opens:
                    raise NotASpace(
                        f"intersection of {self.open_label(u)} and {self.open_label(v)} is not open",
                        witness=(u, v, "intersection"),
                    )

    def open_label(self, mask: int) -> str:
        return set_label(self.points, mask)

    def key(self) -> str:
        digest = hashlib.sha256(
            json.dumps([self.points, list(self.opens)]).encode()
        ).hexdigest()[:10]
        return f"x{self.n_points}-{digest}"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSpace)
            and self.points == other.points
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.points, self.opens))


def frame_of_space(space: FiniteSpace) -> Frame:
    """Open-set frame of a finite space; meet/join coincide with set operations."""
    labels = [space.open_label(m) for m in space.opens]
    return _frame_of_mask_family(space.opens, labels)


def order_iso(f: Frame, g: Frame):
    """Find an order isomorphism f -> g as an index tuple, or None.

    Backtracking with (|down-set|, |up-set|, height) invariants; meant for the
    small frames used in tests and fixtures.
    """
    if f.n != g.n:
        return None

    def profile(fr):
        h = fr.poset.heights()
        return [
            (fr.dn[i].bit_count(), fr.up[i].bit_count(), h[i]) for i in range(fr.n)
        ]

    pf, pg = profile(f), profile(g)
    if sorted(pf) != sorted(pg):
        return None
    cands = [
        [j for j in range(g.n) if pg[j] == pf[i]] for i in range(f.n)
    ]
    order = sorted(range(f.n), key=lambda i: len(cands[i]))
    assign = [-1] * f.n
    used = [False] * g.n

    def back(k):
        if k == f.n:
            return True
        i = order[k]
        for j in cands[i]:
            if used[j]:
                continue
            ok = True
            for i2 in order[:k]:
                j2 = assign[i2]
                if f.le(i, i2) != g.le(j, j2) or f.le(i2, i) != g.le(j2, j):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if back(k + 1):
                    return True
                assign[i] = -1
                used[j] = False
        return False

    return tuple(assign) if back(0) else None


def heyting_identity_report(frame: Frame, max_exhaustive: int = 8) -> dict:
    """Check the complete-Heyting identities over all subsets A and elements b.

    Two valid identities are asserted; the sup-arrow display form
    (vA) -> b = v(a -> b) is searched for a counterexample and reported as
    falsified when one exists (the corrected form uses the meet).
    """
    n = frame.n
    if n > max_exhaustive:
        return {"status": "skip", "reason": f"|L|={n} exceeds exhaustive bound {max_exhaustive}"}
    frame_dist_ok = True
    arrow_meet_ok = True
    arrow_sup_ok = True
    display_witness = None
    cases = 0
    for amask in range(1 << n):
        ja = frame.join_mask(amask)
        ma = frame.meet_mask(amask)
        for b in range(n):
            cases += 1
            # (vA) & b = v(a & b)
            acc = frame.bottom
            for a in bits(amask):
                acc = frame.join(acc, frame.meet(a, b))
            if frame.meet(ja, b) != acc:
                frame_dist_ok = False
            # b -> (^A) = ^(b -> a)
            acc = frame.top
            for a in bits(amask):
                acc = frame.meet(acc, frame.imp(b, a))
            if frame.imp(b, ma) != acc:
                arrow_meet_ok = False
            # corrected form: (vA) -> b = ^(a -> b)
            acc = frame.top
            for a in bits(amask):
                acc = frame.meet(acc, frame.imp(a, b))
            if frame.imp(ja, b) != acc:
                arrow_sup_ok = False
            # display form: (vA) -> b = v(a -> b); falsified in general.
            # Prefer a witness with nonempty A over the empty-join artifact.
            if display_witness is None or (display_witness["A"] == [] and amask):
                acc = frame.bottom
                for a in bits(amask):
                    acc = frame.join(acc, frame.imp(a, b))
                if frame.imp(ja, b) != acc:
                    display_witness = {
                        "A": [frame.label(a) for a in bits(amask)],
                        "b": frame.label(b),
                        "lhs": frame.label(frame.imp(ja, b)),
                        "rhs": frame.label(acc),
                    }
    return {
        "status": "pass" if (frame_dist_ok and arrow_meet_ok and arrow_sup_ok) else "fail",
        "cases": cases,
        "join_meet_distribution": frame_dist_ok,
        "arrow_preserves_meets": arrow_meet_ok,
        "sup_arrow_meet_form": arrow_sup_ok,
        "sup_arrow_display_form": (
            {"status": "falsified", "witness": display_witness}
            if display_witness
            else {"status": "not-falsified-here"}
        ),
    }
