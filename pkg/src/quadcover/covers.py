"""Six-tuples of branch data, admissibility, and exhaustive enumeration.

A six-tuple (u1, u2, u3, v1, v2, v3) of vectors in (Z/n)^2 assigns images
to small loops around the six line components of the quadrangle; the
images of the exceptional loops are forced by the homology relations

    e0 = u1 + u2 + u3,      ei = ui + vj + vk  ({i,j,k} = {1,2,3}).

A tuple is admissible when (0) the six entries sum to zero, (1) all ten
loop images are nonzero, and (2) the images at each of the 15 incident
curve pairs are linearly independent.  Admissible tuples correspond to
smooth degree-n^2 abelian covers branched exactly on the configuration.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .gf import DEFAULT_MODULUS, Vec2, is_independent, nonzero_vectors, require_prime, vadd
from .picard import CURVE_LABELS, incidences


class SixTuple(NamedTuple):
    u1: Vec2
    u2: Vec2
    u3: Vec2
    v1: Vec2
    v2: Vec2
    v3: Vec2

    @classmethod
    def from_residues(cls, res) -> "SixTuple":
        res = tuple(int(x) for x in res)
        if len(res) != 12:
            raise ValueError(f"expected 12 residues, got {len(res)}")
        if any(x < 0 for x in res):
            raise ValueError(f"residues must be nonnegative, got {res}")
        return cls(*((res[2 * i], res[2 * i + 1]) for i in range(6)))

    @classmethod
    def parse(cls, text: str) -> "SixTuple":
        """Parse '1,0,1,0,0,1,4,1,3,2,1,1' (12 comma-separated residues)."""
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError as err:
            raise ValueError(f"cannot parse six-tuple {text!r}: {err}") from None
        return cls.from_residues(parts)

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(x for v in self for x in v)

    def format(self) -> str:
        return ",".join(str(x) for x in self.residues)


class LoopImages(NamedTuple):
    u1: Vec2
    u2: Vec2
    u3: Vec2
    v1: Vec2
    v2: Vec2
    v3: Vec2
    e0: Vec2
    e1: Vec2
    e2: Vec2
    e3: Vec2


def loop_images(t: SixTuple, n=DEFAULT_MODULUS) -> LoopImages:
    """Images of loops around all ten branch curves, in configuration order."""
    u1, u2, u3, v1, v2, v3 = ((x % n, y % n) for x, y in t)
    e0 = vadd(u1, u2, u3, n=n)
    e1 = vadd(u1, v2, v3, n=n)
    e2 = vadd(u2, v1, v3, n=n)
    e3 = vadd(u3, v1, v2, n=n)
    return LoopImages(u1, u2, u3, v1, v2, v3, e0, e1, e2, e3)


class AdmissibilityCheck(NamedTuple):
    """Outcome of the admissibility test, with a stable reason code.

    condition is 0 (sum), 1 (a zero loop image) or 2 (a dependent incident
    pair); curves names the offending curve(s).  Truthiness is `ok`.
    """

    ok: bool
    condition: int | None = None
    curves: tuple[str, ...] | None = None

    def __bool__(self):
        return self.ok

    @property
    def reason(self) -> str:
        if self.ok:
            return "admissible"
        if self.condition == 0:
            return "condition 0: entries do not sum to zero"
        if self.condition == 1:
            return f"condition 1: zero loop image at {self.curves[0]}"
        return "condition 2: dependent images at ({}, {})".format(*self.curves)


def check_admissibility(t: SixTuple, n=DEFAULT_MODULUS) -> AdmissibilityCheck:
    total = vadd(*t, n=n)
    if total != (0, 0):
        return AdmissibilityCheck(False, 0, None)
    images = loop_images(t, n)
    for label, img in zip(CURVE_LABELS, images):
        if img == (0, 0):
            return AdmissibilityCheck(False, 1, (label,))
    for i, j in sorted(incidences()):
        if not is_independent(images[i], images[j], n):
            return AdmissibilityCheck(False, 2, (CURVE_LABELS[i], CURVE_LABELS[j]))
    return AdmissibilityCheck(True)


def is_admissible(t: SixTuple, n=DEFAULT_MODULUS) -> bool:
    return bool(check_admissibility(t, n))


def is_totally_ramified(t: SixTuple, n=DEFAULT_MODULUS) -> bool:
    """Whether the ten loop images span (Z/n)^2 (no unramified subcover)."""
    images = [img for img in loop_images(t, n) if img != (0, 0)]
    return any(
        is_independent(v, w, n) for i, v in enumerate(images) for w in images[i + 1:]
    )


# --- bulk operations -------------------------------------------------------

# rows of the linear map from the 12 tuple coordinates to the 20
# coordinates of the ten loop images (pairs, configuration order)
@lru_cache(maxsize=1)
def _image_map():
    rows = np.zeros((20, 12), dtype=np.int64)
    for slot in range(6):  # u1..v3 pass through
        rows[2 * slot, 2 * slot] = 1
        rows[2 * slot + 1, 2 * slot + 1] = 1
    sums = {6: (0, 1, 2), 7: (0, 4, 5), 8: (1, 3, 5), 9: (2, 3, 4)}
    for img, slots in sums.items():
        for s in slots:
            rows[2 * img, 2 * s] = 1
            rows[2 * img + 1, 2 * s + 1] = 1
    rows.flags.writeable = False
    return rows


def loop_image_rows(rows, n=DEFAULT_MODULUS) -> np.ndarray:
    """(N, 12) residue rows -> (N, 10, 2) loop images."""
    rows = np.asarray(rows, dtype=np.int64)
    flat = rows @ _image_map().T % n
    return flat.reshape(len(rows), 10, 2)


def admissibility_mask(rows, n=DEFAULT_MODULUS) -> np.ndarray:
    """Vectorized admissibility over an (N, 12) array of residue rows."""
    rows = np.asarray(rows, dtype=np.int64) % n
    pairs = rows.reshape(len(rows), 6, 2)
    ok = (pairs.sum(axis=1) % n == 0).all(axis=1)
    images = loop_image_rows(rows, n)
    ok &= (images != 0).any(axis=2).all(axis=1)
    for i, j in sorted(incidences()):
        det = images[:, i, 0] * images[:, j, 1] - images[:, i, 1] * images[:, j, 0]
        ok &= det % n != 0
    return ok


def encode_rows(rows, n=DEFAULT_MODULUS) -> np.ndarray:
    """Pack residue rows into base-n codes; numeric order = lex order."""
    rows = np.asarray(rows, dtype=np.uint64)
    weights = (np.uint64(n) ** np.arange(11, -1, -1, dtype=np.uint64))
    return rows @ weights


def _enumerate_chunk(i1, n):
    """Admissible rows with first entry nz[i1]; conditions vectorized.

    The candidate set is compressed after every rejection step, so the
    dependent-pair checks run on rapidly shrinking arrays.
    """
    nz = np.array(nonzero_vectors(n), dtype=np.int32)
    m = len(nz)
    grid = np.indices((m, m, m, m)).reshape(4, -1)
    u1 = np.broadcast_to(nz[i1], (grid.shape[1], 2))
    u2, u3, v1, v2 = (nz[g] for g in grid)
    v3 = -(u1 + u2 + u3 + v1 + v2) % n
    keep = (v3 != 0).any(axis=1)
    rows = np.concatenate([u1, u2, u3, v1, v2, v3], axis=1)[keep]
    images = (rows @ _image_map().T.astype(np.int32) % n).reshape(len(rows), 10, 2)
    ok = (images != 0).any(axis=2).all(axis=1)
    rows, images = rows[ok], images[ok]
    for i, j in sorted(incidences()):
        det = images[:, i, 0] * images[:, j, 1] - images[:, i, 1] * images[:, j, 0]
        ok = det % n != 0
        rows, images = rows[ok], images[ok]
    return rows.astype(np.int16)


@lru_cache(maxsize=None)
def admissible_array(n=DEFAULT_MODULUS) -> np.ndarray:
    """All admissible tuples as a read-only (N, 12) array sorted
    lexicographically by the 12 residues.

    The search iterates over the five free nonzero entries and solves the
    sum condition for v3, pruning the twelve-fold loop to ~24^5 candidates
    at n=5.  QC_THREADS > 1 splits the outer loop across a thread pool;
    the merged result is sorted, so the output does not depend on it.
    """
    require_prime(n)
    m = len(nonzero_vectors(n))
    workers = int(os.environ.get("QC_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda i: _enumerate_chunk(i, n), range(m)))
    else:
        chunks = [_enumerate_chunk(i1, n) for i1 in range(m)]
    rows = np.vstack(chunks)
    order = np.argsort(encode_rows(rows, n), kind="stable")
    rows = rows[order]
    rows.flags.writeable = False
    return rows


def enumerate_admissible(n=DEFAULT_MODULUS) -> list[SixTuple]:
    """All admissible six-tuples, lexicographically ordered."""
    return [SixTuple.from_residues(row) for row in admissible_array(n)]
