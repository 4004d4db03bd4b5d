"""Exact dense linear algebra over prime fields.

Everything here works with plain Python ints reduced mod p, so results are
exact for any prime that fits in memory.  Matrices are immutable; row data is
stored as tuples.  The sizes that show up in practice are tiny (a Hom module
of length 15 gives at most a 225-dimensional ambient space), so the naive
cubic algorithms are fine and easy to audit.

>>> A = PrimeFieldMatrix([[1, 2], [3, 4]], 5)
>>> (A * A).rows
((2, 0), (0, 2))
>>> A.rank()
2
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n.

    >>> next_prime(1), next_prime(2), next_prime(13)
    (2, 3, 17)
    """
    m = n + 1
    while not is_prime(m):
        m += 1
    return m


def poly_eval(coeffs: list[int], x: int, p: int) -> int:
    """Evaluate sum(coeffs[i] * x^i) mod p, Horner style."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


class Echelon:
    """A growing row space over F_p with coordinate tracking.

    Rows are kept in echelon form.  Each accepted row remembers how it was
    built from the original inserted vectors, so express() can write any
    member of the span as a combination of the accepted originals.
    """

    __slots__ = ("width", "p", "rows", "originals")

    def __init__(self, width: int, p: int):
        self.width = width
        self.p = p
        self.rows: list[tuple[int, list[int], list[int]]] = []
        self.originals = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: list[int], combo: list[int], sign: int) -> None:
        p = self.p
        for pivot, rvec, rcombo in self.rows:
            c = vec[pivot]
            if not c:
                continue
            for i, e in enumerate(rvec):
                if e:
                    vec[i] = (vec[i] - c * e) % p
            for i, e in enumerate(rcombo):
                if e:
                    combo[i] = (combo[i] + sign * c * e) % p

    def insert(self, vec: list[int]) -> bool:
        """Add vec to the span; True if the dimension grew."""
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        p = self.p
        work = [e % p for e in vec]
        combo = [0] * self.originals + [1]
        self._reduce(work, combo, -1)
        pivot = next((i for i, e in enumerate(work) if e), None)
        if pivot is None:
            return False
        inv = pow(work[pivot], p - 2, p)
        work = [(e * inv) % p for e in work]
        combo = [(e * inv) % p for e in combo]
        self.rows.append((pivot, work, combo))
        self.originals += 1
        return True

    def express(self, vec: list[int]) -> list[int] | None:
        """Coordinates of vec over the accepted originals, or None."""
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        p = self.p
        work = [e % p for e in vec]
        combo = [0] * self.originals
        self._reduce(work, combo, +1)
        if any(work):
            return None
        return combo

    def __contains__(self, vec: list[int]) -> bool:
        return self.express(vec) is not None


class PrimeFieldMatrix:
    """Immutable matrix over F_p."""

    __slots__ = ("p", "rows", "nrows", "ncols")

    def __init__(self, rows, p: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        data = tuple(tuple(e % p for e in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "PrimeFieldMatrix":
        return cls([[0] * cols for _ in range(rows)], p)

    @classmethod
    def identity(cls, n: int, p: int) -> "PrimeFieldMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeFieldMatrix)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix({[list(r) for r in self.rows]!r}, {self.p})"

    def _check_same_shape(self, other: "PrimeFieldMatrix") -> None:
        if self.p != other.p or self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape or modulus mismatch")

    def __add__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_shape(other)
        p = self.p
        return PrimeFieldMatrix(
            [
                [(a + b) % p for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            p,
        )

    def __sub__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_shape(other)
        p = self.p
        return PrimeFieldMatrix(
            [
                [(a - b) % p for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            p,
        )

    def __neg__(self) -> "PrimeFieldMatrix":
        p = self.p
        return PrimeFieldMatrix([[-e % p for e in row] for row in self.rows], p)

    def __rmul__(self, scalar: int) -> "PrimeFieldMatrix":
        p = self.p
        return PrimeFieldMatrix(
            [[(scalar * e) % p for e in row] for row in self.rows], p
        )

    def __mul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        if isinstance(other, int):
            return self.__rmul__(other)
        if self.p != other.p or self.ncols != other.nrows:
            raise ValueError("shape or modulus mismatch")
        p = self.p
        cols = other.ncols
        out = []
        for row in self.rows:
            acc = [0] * cols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = other.rows[k]
                for j in range(cols):
                    acc[j] += a * orow[j]
            out.append([e % p for e in acc])
        return PrimeFieldMatrix(out, p)

    def __pow__(self, k: int) -> "PrimeFieldMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers not supported")
        result = PrimeFieldMatrix.identity(self.nrows, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(list(zip(*self.rows)) if self.rows else [], self.p)

    def trace(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows)) % self.p

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in row) for row in self.rows)

    def flatten(self) -> list[int]:
        return [e for row in self.rows for e in row]

    def apply(self, vec: list[int]) -> list[int]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        p = self.p
        return [sum(a * v for a, v in zip(row, vec)) % p for row in self.rows]

    def rref(self) -> tuple["PrimeFieldMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        p = self.p
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            sel = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = pow(rows[r][c], p - 2, p)
            rows[r] = [(e * inv) % p for e in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return PrimeFieldMatrix(rows, p), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "PrimeFieldMatrix":
        """Two-sided inverse; raises ValueError on a singular matrix."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(row) + [1 if i == j else 0 for j in range(n)]
               for i, row in enumerate(self.rows)]
        red, pivots = PrimeFieldMatrix(aug, self.p).rref()
        if pivots != tuple(range(n)):
            raise ValueError("matrix is singular")
        return PrimeFieldMatrix([row[n:] for row in red.rows], self.p)

    def nullspace(self) -> list[list[int]]:
        """Basis of the right kernel, one vector per free column."""
        p = self.p
        red, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for j in range(self.ncols):
            if j in pivot_set:
                continue
            vec = [0] * self.ncols
            vec[j] = 1
            for i, c in enumerate(pivots):
                vec[c] = -red.rows[i][j] % p
            basis.append(vec)
        return basis

    def minimal_polynomial(self) -> list[int]:
        """Monic minimal polynomial as coefficients c[0..d], c[d] = 1.

        Powers of the matrix are flattened and fed to an eliminator until
        the first linear dependency appears; the tracked combination is the
        minimal polynomial.  Cayley-Hamilton bounds the degree by nrows.
        """
        if self.nrows != self.ncols:
            raise ValueError("minimal polynomial of a non-square matrix")
        n, p = self.nrows, self.p
        ech = Echelon(n * n, p)
        power = PrimeFieldMatrix.identity(n, p)
        for k in range(n + 1):
            flat = power.flatten()
            coeffs = ech.express(flat)
            if coeffs is not None:
                # power_k = sum(coeffs[i] * power_i): move left, monic in x^k
                out = [-c % p for c in coeffs] + [1]
                return out
            ech.insert(flat)
            power = power * self
        raise AssertionError("Cayley-Hamilton bound exceeded")
