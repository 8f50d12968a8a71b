"""Hermitian n-qubit Pauli operators in binary symplectic form.

An operator is stored as two length-n bit vectors (x, z) plus a sign in
{+1, -1} and denotes ``sign * prod_q P_q`` where P_q is the literal
Hermitian Pauli on qubit q (Y with its usual +i convention baked into the
single-qubit matrix).  Bare imaginary phases never appear on a stored
operator: products that would be anti-Hermitian are divided by i, so
``X * Z == -Y`` on a single qubit.  That convention is what all sign
assertions in this package rely on.
"""

from __future__ import annotations

import numpy as np

# i-exponent of the product of two Hermitian single-qubit Paulis, indexed by
# the code x + 2z (0=I, 1=X, 2=Z, 3=Y).  E.g. X*Z = -i Y -> exponent 3.
_PHASE = np.zeros((4, 4), dtype=np.int64)
_PHASE[1, 3] = 1  # X*Y = iZ
_PHASE[3, 2] = 1  # Y*Z = iX
_PHASE[2, 1] = 1  # Z*X = iY
_PHASE[3, 1] = 3  # Y*X = -iZ
_PHASE[2, 3] = 3  # Z*Y = -iX
_PHASE[1, 2] = 3  # X*Z = -iY

_CHAR = {0: "I", 1: "X", 2: "Z", 3: "Y"}
_CODE = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


class PauliError(ValueError):
    pass


class PauliOperator:
    """A signed Hermitian Pauli on n qubits."""

    __slots__ = ("n", "x", "z", "sign")

    def __init__(self, n, x=None, z=None, sign=1):
        self.n = int(n)
        self.x = np.zeros(n, dtype=np.uint8) if x is None else np.asarray(x, dtype=np.uint8) % 2
        self.z = np.zeros(n, dtype=np.uint8) if z is None else np.asarray(z, dtype=np.uint8) % 2
        if self.x.shape != (self.n,) or self.z.shape != (self.n,):
            raise PauliError("bit vectors must have length n")
        if sign not in (1, -1):
            raise PauliError("sign must be +1 or -1")
        self.sign = int(sign)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls(n)

    @classmethod
    def single(cls, n, qubit, kind, sign=1):
        """Single-qubit X, Y or Z embedded in n qubits."""
        op = cls(n, sign=sign)
        xb, zb = _CODE[kind]
        op.x[qubit] = xb
        op.z[qubit] = zb
        return op

    @classmethod
    def from_support(cls, n, qubits, kind, sign=1):
        """Uniform-type Pauli (e.g. a face stabilizer) on the given qubits."""
        op = cls(n, sign=sign)
        xb, zb = _CODE[kind]
        for q in qubits:
            op.x[q] = xb
            op.z[q] = zb
        return op

    @classmethod
    def from_string(cls, s, sign=1):
        """Parse a string like 'XIZY' (qubit 0 first)."""
        s = s.strip()
        op = cls(len(s), sign=sign)
        for q, ch in enumerate(s):
            try:
                xb, zb = _CODE[ch.upper()]
            except KeyError:
                raise PauliError(f"bad Pauli character {ch!r}")
            op.x[q], op.z[q] = xb, zb
        return op

    # -- algebra -----------------------------------------------------------

    def copy(self):
        return PauliOperator(self.n, self.x.copy(), self.z.copy(), self.sign)

    @property
    def weight(self):
        return int(np.count_nonzero(self.x | self.z))

    def support(self):
        return [int(q) for q in np.nonzero(self.x | self.z)[0]]

    def is_identity(self):
        return self.weight == 0 and self.sign == 1

    def kind_on(self, q):
        return _CHAR[int(self.x[q]) + 2 * int(self.z[q])]

    def symplectic(self):
        """Length-2n GF(2) vector (x | z)."""
        return np.concatenate([self.x, self.z])

    def __mul__(self, other):
        return pauli_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, PauliOperator)
            and self.n == other.n
            and self.sign == other.sign
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self):
        return hash((self.n, self.sign, self.x.tobytes(), self.z.tobytes()))

    def __repr__(self):
        body = "".join(_CHAR[int(xb) + 2 * int(zb)] for xb, zb in zip(self.x, self.z))
        return ("+" if self.sign == 1 else "-") + (body or "I")


def pauli_mul(p, q):
    """Product P*Q with the sign convention documented in the module header.

    For anticommuting P, Q the exact product is anti-Hermitian; the returned
    operator is (P*Q)/i, which is Hermitian with a definite sign.
    """
    if p.n != q.n:
        raise PauliError(f"length mismatch: {p.n} != {q.n}")
    m = int(_PHASE[p.x + 2 * p.z, q.x + 2 * q.z].sum()) % 4
    sign = p.sign * q.sign
    if m % 2 == 0:
        sign *= (-1) ** (m // 2)
    else:
        sign *= (-1) ** ((m - 1) // 2)
    return PauliOperator(p.n, p.x ^ q.x, p.z ^ q.z, sign)


def phase_exponent(p, q):
    """Exponent m of i in P*Q = i^m * (XZ-string); even iff P, Q commute."""
    if p.n != q.n:
        raise PauliError(f"length mismatch: {p.n} != {q.n}")
    return int(_PHASE[p.x + 2 * p.z, q.x + 2 * q.z].sum()) % 4


def commutes(p, q):
    """True iff the symplectic product <P,Q> vanishes mod 2."""
    if p.n != q.n:
        raise PauliError(f"length mismatch: {p.n} != {q.n}")
    return (int(np.dot(p.x, q.z)) + int(np.dot(p.z, q.x))) % 2 == 0


# -- GF(2) linear algebra on symplectic rows -------------------------------


def rref(mat):
    """Reduced row echelon form over GF(2).

    Returns (reduced matrix, pivot column list).  The input is not modified.
    """
    a = np.array(mat, dtype=np.uint8, copy=True) % 2
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hit = np.nonzero(a[r:, c])[0]
        if hit.size == 0:
            continue
        p = r + int(hit[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        mask = a[:, c].astype(bool)
        mask[r] = False
        a[mask] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def gf2_rank(mat):
    if len(mat) == 0:
        return 0
    return rref(mat)[0].shape[0]


def solve_gf2(rows, target):
    """Find c with sum_i c_i * rows_i = target over GF(2), or None.

    `rows` is an (m, k) matrix, `target` a length-k vector; the solution is a
    length-m uint8 vector selecting a subset of rows.
    """
    rows = np.asarray(rows, dtype=np.uint8) % 2
    target = np.asarray(target, dtype=np.uint8) % 2
    m = rows.shape[0]
    if m == 0:
        return np.zeros(0, dtype=np.uint8) if not target.any() else None
    # Row-reduce [rows^T | target] and read the combination off the identity
    # columns we append to track operations.
    aug = np.concatenate([rows, np.eye(m, dtype=np.uint8)], axis=1)
    red, pivots = rref(aug)
    k = rows.shape[1]
    residual = target.copy()
    combo = np.zeros(m, dtype=np.uint8)
    for i, c in enumerate(pivots):
        if c >= k:
            continue
        if residual[c]:
            residual ^= red[i, :k]
            combo ^= red[i, k:]
    if residual.any():
        return None
    return combo


def nullspace_gf2(mat):
    """Basis (rows) of {v : mat @ v = 0 mod 2}."""
    a = np.asarray(mat, dtype=np.uint8) % 2
    rows, cols = a.shape
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            if red[r, f]:
                basis[i, p] = 1
    return basis


def symplectic_product_matrix(rows_a, rows_b):
    """Matrix of pairwise symplectic products between two sets of (x|z) rows."""
    a = np.asarray(rows_a, dtype=np.uint8)
    b = np.asarray(rows_b, dtype=np.uint8)
    n = a.shape[1] // 2
    ax, az = a[:, :n], a[:, n:]
    bx, bz = b[:, :n], b[:, n:]
    return (ax @ bz.T + az @ bx.T) % 2


# -- generator sets --------------------------------------------------------

MEMBER_WITH_SIGN = "member_with_sign"
MEMBER_UP_TO_SIGN = "member_up_to_sign"
NOT_MEMBER = "not_member"


class GeneratorSet:
    """An abelian group of Paulis given by a generator list.

    Membership queries run Gaussian elimination on the symplectic vectors and
    then recompute the exact sign of the matching product, distinguishing
    member_with_sign from member_up_to_sign.
    """

    def __init__(self, generators, check_abelian=True):
        self.generators = list(generators)
        if not self.generators:
            raise PauliError("need at least one generator")
        self.n = self.generators[0].n
        for g in self.generators:
            if g.n != self.n:
                raise PauliError("generator length mismatch")
        if check_abelian:
            rows = self.matrix()
            prod = symplectic_product_matrix(rows, rows)
            if prod.any():
                i, j = np.argwhere(prod)[0]
                raise PauliError(f"generators {i} and {j} anticommute")

    def matrix(self):
        return np.array([g.symplectic() for g in self.generators], dtype=np.uint8)

    def contains(self, p):
        """Return (verdict, combination-or-None)."""
        combo = solve_gf2(self.matrix(), p.symplectic())
        if combo is None:
            return NOT_MEMBER, None
        acc = PauliOperator.identity(self.n)
        for i in np.nonzero(combo)[0]:
            acc = pauli_mul(acc, self.generators[int(i)])
        verdict = MEMBER_WITH_SIGN if acc.sign == p.sign else MEMBER_UP_TO_SIGN
        return verdict, combo


def in_group(g, p):
    """Membership verdict of Pauli `p` in the abelian group `g`."""
    return g.contains(p)[0]
