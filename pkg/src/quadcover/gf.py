"""Exact arithmetic over Z/nZ: scalars, 2-vectors, and small matrices.

The default modulus is 5.  Scalars are plain Python ints reduced to the
fixed representative system {0, ..., n-1}; 2-vectors are pairs of such
ints.  Matrices are immutable, hashable wrappers around small numpy
arrays, suitable as elements of multiplicative closures.
"""

from __future__ import annotations

import numpy as np

Vec2 = tuple[int, int]

DEFAULT_MODULUS = 5


def require_prime(n):
    if n < 2 or any(n % d == 0 for d in range(2, int(n ** 0.5) + 1)):
        raise ValueError(f"modulus {n} is not prime")
    return n


def reduce_vec(v, n=DEFAULT_MODULUS) -> Vec2:
    return (v[0] % n, v[1] % n)


def vadd(*vectors, n=DEFAULT_MODULUS) -> Vec2:
    x = sum(v[0] for v in vectors) % n
    y = sum(v[1] for v in vectors) % n
    return (x, y)


def chi_eval(chi, v, n=DEFAULT_MODULUS) -> int:
    """Pairing [a*x + b*y] of a character chi=(a,b) with a vector v=(x,y)."""
    return (chi[0] * v[0] + chi[1] * v[1]) % n


def is_independent(v, w, n=DEFAULT_MODULUS) -> bool:
    """True iff {v, w} spans (Z/n)^2, i.e. the 2x2 determinant is nonzero."""
    return (v[0] * w[1] - v[1] * w[0]) % n != 0


def vectors(n=DEFAULT_MODULUS) -> tuple[Vec2, ...]:
    """All of (Z/n)^2 in lexicographic order."""
    return tuple((x, y) for x in range(n) for y in range(n))


def nonzero_vectors(n=DEFAULT_MODULUS) -> tuple[Vec2, ...]:
    return tuple(v for v in vectors(n) if v != (0, 0))


class Mat:
    """Immutable k x k matrix over Z/n, hashable, with entries in {0,..,n-1}.

    Supports * (matrix product mod n) and application to coordinate
    vectors, which is all the closure and orbit machinery needs.
    """

    __slots__ = ("array", "n", "_key")

    def __init__(self, entries, n=DEFAULT_MODULUS):
        a = np.asarray(entries, dtype=np.int64) % n
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        a = a.astype(np.int16)
        a.flags.writeable = False
        self.array = a
        self.n = n
        self._key = (n, a.shape[0], a.tobytes())

    @classmethod
    def identity(cls, k, n=DEFAULT_MODULUS):
        return cls(np.eye(k, dtype=np.int16), n)

    @classmethod
    def block_diagonal(cls, block, copies, n=DEFAULT_MODULUS):
        b = np.asarray(block, dtype=np.int16)
        k = b.shape[0]
        out = np.zeros((k * copies, k * copies), dtype=np.int16)
        for i in range(copies):
            out[i * k:(i + 1) * k, i * k:(i + 1) * k] = b
        return cls(out, n)

    @property
    def size(self):
        return self.array.shape[0]

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("modulus mismatch")
        return Mat(self.array.astype(np.int64) @ other.array, self.n)

    def apply(self, coords):
        """Image of a coordinate vector (length = matrix size) as a tuple."""
        v = np.asarray(coords, dtype=np.int64) % self.n
        return tuple(int(x) for x in (self.array.astype(np.int64) @ v) % self.n)

    def apply_rows(self, rows):
        """Apply to every row of an (N, k) array; returns an (N, k) array."""
        return np.asarray(rows, dtype=np.int64) @ self.array.T.astype(np.int64) % self.n

    def det(self) -> int:
        if self.size != 2:
            raise ValueError("det is only provided for 2x2 matrices")
        a = self.array
        return int(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]) % self.n

    def is_invertible(self) -> bool:
        return rank_mod(self.array, self.n) == self.size

    def __eq__(self, other):
        return isinstance(other, Mat) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        rows = ",".join("[" + " ".join(str(int(x)) for x in r) + "]" for r in self.array)
        return f"Mat({rows} mod {self.n})"


def rank_mod(a, n) -> int:
    """Rank of an integer matrix over the field Z/n (n prime)."""
    require_prime(n)
    m = np.asarray(a, dtype=np.int64) % n
    m = m.copy()
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, c] % n:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, c]), -1, n)
        m[rank] = m[rank] * inv % n
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] = (m[r] - m[r, c] * m[rank]) % n
        rank += 1
        if rank == rows:
            break
    return rank


def gl2_enumerate(n=DEFAULT_MODULUS) -> list[Mat]:
    """All invertible 2x2 matrices over Z/n (n prime), each exactly once.

    Brute force over the n^4 candidates; the count is (n^2-1)(n^2-n).
    """
    require_prime(n)
    out = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if (a * d - b * c) % n:
                        out.append(Mat([[a, b], [c, d]], n))
    return out


def primitive_root(n) -> int:
    """Smallest generator of the multiplicative group of Z/n, n prime."""
    require_prime(n)
    if n == 2:
        return 1
    for g in range(2, n):
        seen = set()
        x = 1
        for _ in range(n - 1):
            x = x * g % n
            seen.add(x)
        if len(seen) == n - 1:
            return g
    raise AssertionError("no primitive root found")


def gl2_generators(n=DEFAULT_MODULUS) -> tuple[Mat, ...]:
    """A small generating set of GL(2, Z/n): a scaling by a primitive
    root, a transvection, and the coordinate swap."""
    r = primitive_root(n)
    gens = [Mat([[r, 0], [0, 1]], n), Mat([[1, 1], [0, 1]], n), Mat([[0, 1], [1, 0]], n)]
    return tuple(dict.fromkeys(gens))
