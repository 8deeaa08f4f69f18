"""The symmetry group of the construction acting on six-tuples.

Generators are the four point-swap transformations (linear in the twelve
tuple coordinates) and GL(2, Z/n) acting diagonally on all six slots.
Both kinds are stored as 12x12 matrices.

The swap formulas use the loop relation u1+..+v3 = 0, so as literal
matrices they are involutions only on the sum-zero subspace that carries
the actual cover data (admissible tuples all lie in it).  Group identity
is therefore defined by the action on that subspace: two elements are
equal when their matrices agree on every sum-zero vector.  With this
convention the four swaps close into a group of order 120 and the full
closure has order 57600, both computed here by plain breadth-first
multiplication of matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import gf
from .covers import SixTuple, admissible_array, encode_rows
from .gf import DEFAULT_MODULUS, Mat


@lru_cache(maxsize=None)
def _sum_zero_basis(n):
    """(B, P): columns of B span the sum-zero subspace, parameterized by
    the first ten coordinates; P projects onto those coordinates."""
    b = np.zeros((12, 10), dtype=np.int64)
    b[:10] = np.eye(10, dtype=np.int64)
    b[10, 0::2] = n - 1
    b[11, 1::2] = n - 1
    p = np.zeros((10, 12), dtype=np.int64)
    p[:, :10] = np.eye(10, dtype=np.int64)
    return b, p


def _restricted(mat: Mat) -> bytes:
    """Key of the action on the sum-zero subspace (a 10x10 matrix)."""
    b, p = _sum_zero_basis(mat.n)
    r = p @ mat.array.astype(np.int64) @ b % mat.n
    return r.astype(np.int16).tobytes()


@dataclass(frozen=True, eq=False)
class SymmetryElement:
    """A symmetry as a 12x12 matrix over Z/n plus an optional provenance
    tag (generator name or defining GL(2) block)."""

    mat: Mat
    provenance: str | None = None

    def apply(self, t: SixTuple) -> SixTuple:
        return SixTuple.from_residues(self.mat.apply(t.residues))

    def __mul__(self, other: "SymmetryElement") -> "SymmetryElement":
        return SymmetryElement(self.mat * other.mat)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetryElement)
            and self.mat.n == other.mat.n
            and _restricted(self.mat) == _restricted(other.mat)
        )

    def __hash__(self):
        return hash(_restricted(self.mat))

    def __repr__(self):
        tag = self.provenance or "element"
        return f"SymmetryElement({tag} mod {self.mat.n})"


# Slot-level coefficient rows of the four swaps, acting on
# (u1, u2, u3, v1, v2, v3).  Swap (0h) exchanges the slot of each line
# through the h-th point with the matching exceptional slot:
#   (01): u2<->e3, u3<->e2, v1<->e0     (02): u1<->e3, u3<->e1, v2<->e0
#   (03): u1<->e2, u2<->e1, v3<->e0     (04): v1<->e1, v2<->e2, v3<->e3
# with e0 = u1+u2+u3 and ei = ui+vj+vk substituted on the right.
_SWAP_SLOTS = {
    "(01)": ((1, 0, 0, 0, 0, 0), (0, 0, 1, 1, 1, 0), (0, 1, 0, 1, 0, 1),
             (1, 1, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)),
    "(02)": ((0, 0, 1, 1, 1, 0), (0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 1, 1),
             (0, 0, 0, 1, 0, 0), (1, 1, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)),
    "(03)": ((0, 1, 0, 1, 0, 1), (1, 0, 0, 0, 1, 1), (0, 0, 1, 0, 0, 0),
             (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (1, 1, 1, 0, 0, 0)),
    "(04)": ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 1), (0, 1, 0, 1, 0, 1), (0, 0, 1, 1, 1, 0)),
}


def _expand_slots(slot_rows, n) -> Mat:
    out = np.zeros((12, 12), dtype=np.int64)
    for i, row in enumerate(slot_rows):
        for j, c in enumerate(row):
            out[2 * i, 2 * j] = c
            out[2 * i + 1, 2 * j + 1] = c
    return Mat(out, n)


def s5_generators(n=DEFAULT_MODULUS) -> tuple[SymmetryElement, ...]:
    """The four point swaps as matrices; they generate a group of order
    120 on the sum-zero subspace."""
    return tuple(
        SymmetryElement(_expand_slots(rows, n), name)
        for name, rows in _SWAP_SLOTS.items()
    )


def gl2_action(m, n=DEFAULT_MODULUS) -> SymmetryElement:
    """GL(2, Z/n) element applied to each of the six slots."""
    block = m if isinstance(m, Mat) else Mat(m, n)
    if block.size != 2:
        raise ValueError("expected a 2x2 matrix")
    if block.det() == 0:
        raise ValueError(f"singular matrix {block!r} does not act")
    rows = ",".join(str(int(x)) for x in block.array.ravel())
    return SymmetryElement(Mat.block_diagonal(block.array, 6, n), f"gl2[{rows}]")


def default_generators(n=DEFAULT_MODULUS) -> tuple[SymmetryElement, ...]:
    """Generating set of the full symmetry group: the four swaps plus a
    generating set of GL(2, Z/n) acting blockwise."""
    return s5_generators(n) + tuple(gl2_action(g, n) for g in gf.gl2_generators(n))


def mulclose(gens) -> dict[bytes, Mat]:
    """Multiplicative closure of 12x12 matrices keyed by their action on
    the sum-zero subspace; values are representative matrices."""
    mats = [g.mat if isinstance(g, SymmetryElement) else g for g in gens]
    els = {}
    for g in mats:
        els.setdefault(_restricted(g), g)
    boundary = list(els.values())
    while boundary:
        fresh = []
        for a in mats:
            for b in boundary:
                c = a * b
                k = _restricted(c)
                if k not in els:
                    els[k] = c
                    fresh.append(c)
        boundary = fresh
    return els


class GroupClosure(NamedTuple):
    order: int
    s5_order: int
    gl2_order: int
    elements: tuple[SymmetryElement, ...]
    s5_elements: tuple[SymmetryElement, ...]


@lru_cache(maxsize=None)
def group_closure(n=DEFAULT_MODULUS) -> GroupClosure:
    """Closure of {four swaps} united with {GL(2) block generators} under
    multiplication, and the closure of the swaps alone."""
    swaps = s5_generators(n)
    s5 = mulclose(swaps)
    full = mulclose(default_generators(n))
    gl2_order = len(gf.gl2_enumerate(n))
    return GroupClosure(
        order=len(full),
        s5_order=len(s5),
        gl2_order=gl2_order,
        elements=tuple(SymmetryElement(m) for m in full.values()),
        s5_elements=tuple(SymmetryElement(m) for m in s5.values()),
    )


class Orbit(NamedTuple):
    """One orbit of the symmetry group on a closed set of six-tuples."""

    representative: SixTuple
    size: int
    stabilizer_order: int
    member_indices: np.ndarray


def orbits(tuples, n=DEFAULT_MODULUS, generators=None) -> list[Orbit]:
    """Partition of a closed tuple set into symmetry orbits.

    Breadth-first closure under the generator matrices, hash-indexed via
    base-n codes of the rows.  The outer scan runs in lexicographic
    order, so each orbit's representative is its lexicographically
    minimal member.  Raises if a generator leaves the input set.
    """
    if isinstance(tuples, np.ndarray):
        rows = np.asarray(tuples, dtype=np.int64) % n
    else:
        rows = np.array([t.residues for t in tuples], dtype=np.int64) % n
    if len(rows) == 0:
        return []
    gens = list(generators) if generators is not None else list(default_generators(n))
    codes = encode_rows(rows, n)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    if (np.diff(sorted_codes.astype(np.int64)) == 0).any():
        raise ValueError("input tuples contain duplicates")

    group_order = group_closure(n).order
    labels = np.full(len(rows), -1, dtype=np.int32)
    out = []
    for seed in order:
        if labels[seed] != -1:
            continue
        oid = len(out)
        labels[seed] = oid
        frontier = np.array([seed])
        while len(frontier):
            targets = []
            for g in gens:
                imgs = rows[frontier] @ g.mat.array.T.astype(np.int64) % n
                img_codes = encode_rows(imgs, n)
                pos = np.searchsorted(sorted_codes, img_codes)
                bad = (pos >= len(sorted_codes)) | (sorted_codes[np.minimum(pos, len(sorted_codes) - 1)] != img_codes)
                if bad.any():
                    stray = SixTuple.from_residues(imgs[bad.argmax()])
                    raise ValueError(
                        f"generator {g.provenance or g!r} maps a member to "
                        f"{stray.format()} outside the input set"
                    )
                targets.append(order[pos])
            hit = np.unique(np.concatenate(targets))
            fresh = hit[labels[hit] == -1]
            labels[fresh] = oid
            frontier = fresh
        members = np.flatnonzero(labels == oid)
        if group_order % len(members):
            raise AssertionError("orbit size does not divide the group order")
        out.append(
            Orbit(
                representative=SixTuple.from_residues(rows[seed]),
                size=len(members),
                stabilizer_order=group_order // len(members),
                member_indices=members,
            )
        )
    return out


class OrbitPartition(NamedTuple):
    """Orbit decomposition of the full admissible set, with a label per
    tuple (aligned with the lexicographic admissible array)."""

    orbits: tuple[Orbit, ...]
    labels: np.ndarray

    def orbit_of(self, t: SixTuple, n=DEFAULT_MODULUS) -> int:
        rows = admissible_array(n)
        codes = encode_rows(rows, n)
        c = encode_rows(np.array([t.residues], dtype=np.int64), n)[0]
        pos = int(np.searchsorted(codes, c))
        if pos >= len(codes) or codes[pos] != c:
            raise ValueError(f"{t.format()} is not an admissible tuple")
        return int(self.labels[pos])


@lru_cache(maxsize=None)
def orbit_partition(n=DEFAULT_MODULUS) -> OrbitPartition:
    """Cached orbit decomposition of all admissible tuples."""
    rows = admissible_array(n)
    parts = orbits(rows, n)
    labels = np.full(len(rows), -1, dtype=np.int32)
    for i, orb in enumerate(parts):
        labels[orb.member_indices] = i
    labels.flags.writeable = False
    return OrbitPartition(tuple(parts), labels)
