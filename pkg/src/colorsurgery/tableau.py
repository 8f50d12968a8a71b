"""Stabilizer-state simulation in full tableau (stabilizer + destabilizer) form.

Internally a row (x, z, r) denotes i^r * prod_q X_q^{x_q} Z_q^{z_q}; the
phase r lives mod 4.  Stabilizer rows always carry an even effective phase
(they are +/- a Hermitian Pauli); destabilizer phases are physically
irrelevant and simply tracked.  Measurement follows the usual
Aaronson-Gottesman update with all row operations vectorized over numpy,
which keeps a single measurement at O(n^2) byte operations.

Randomness is injected: every nondeterministic measurement consumes one bit
from a caller-supplied numpy Generator, so runs are reproducible from a seed.
"""

from __future__ import annotations

import numpy as np

from .pauli import PauliOperator, PauliError


class TableauError(RuntimeError):
    pass


def _sign_fixer(done, g, n):
    """A Pauli anticommuting with g but commuting with all of `done`."""
    from .pauli import solve_gf2

    ops = done + [g]
    # pairing vector of operator o is (z | x); rows of A are those vectors
    a = np.array([np.concatenate([o.z, o.x]) for o in ops], dtype=np.uint8)
    b = np.zeros(len(ops), dtype=np.uint8)
    b[-1] = 1
    x = solve_gf2(a.T, b)
    if x is None:
        return None
    return PauliOperator(n, x[:n], x[n:], 1)


def _row_phase_of(p):
    """Phase exponent of a Hermitian PauliOperator in XZ-string form."""
    n_y = int(np.count_nonzero(p.x & p.z))
    return (n_y + (0 if p.sign == 1 else 2)) % 4


class StabilizerTableau:
    """n destabilizers + n stabilizers over n qubits."""

    def __init__(self, n):
        self.n = int(n)
        self.X = np.zeros((2 * n, n), dtype=np.uint8)
        self.Z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.int64)
        # |0...0>: destabilizer i = X_i, stabilizer i = Z_i.
        for i in range(n):
            self.X[i, i] = 1
            self.Z[n + i, i] = 1

    @classmethod
    def from_stabilizers(cls, generators, n=None):
        """Build a state stabilized by the given signed generators.

        Starts from |0...0> and projects each generator onto its +1 outcome.
        A deterministic wrong-sign projection is repaired with a Pauli frame
        flip that commutes with every generator already imposed; only truly
        inconsistent (dependent, contradictory) generator lists raise.
        """
        if n is None:
            n = generators[0].n
        t = cls(n)
        done = []
        for g in generators:
            outcome, det = t.measure(g, rng=None, force=+1)
            if outcome != +1:
                corr = _sign_fixer(done, g, n)
                if corr is None:
                    raise TableauError(f"inconsistent stabilizer {g!r}")
                t.apply_pauli(corr)
                outcome, _ = t.measure(g, rng=None, force=+1)
                if outcome != +1:
                    raise TableauError(f"inconsistent stabilizer {g!r}")
            done.append(g)
        return t

    def apply_pauli(self, p):
        """Conjugate the state by a Pauli: rows anticommuting with p flip sign."""
        anti = self._anticommute_mask(p)
        self.r = (self.r + 2 * anti) % 4

    def copy(self):
        t = StabilizerTableau.__new__(StabilizerTableau)
        t.n = self.n
        t.X = self.X.copy()
        t.Z = self.Z.copy()
        t.r = self.r.copy()
        return t

    # -- row helpers -------------------------------------------------------

    def _rowsum_into(self, targets, src):
        """row_t := row_src * row_t for every t in targets (vectorized)."""
        if len(targets) == 0:
            return
        zs = self.Z[src]
        phase = 2 * (self.X[targets] @ zs.astype(np.int64))
        self.r[targets] = (self.r[targets] + self.r[src] + phase) % 4
        self.X[targets] ^= self.X[src]
        self.Z[targets] ^= self.Z[src]

    def _anticommute_mask(self, p):
        return ((self.X @ p.z.astype(np.int64)) + (self.Z @ p.x.astype(np.int64))) % 2

    def row_operator(self, i):
        """Row i as a Hermitian PauliOperator (stabilizer rows only)."""
        x, z = self.X[i], self.Z[i]
        n_y = int(np.count_nonzero(x & z))
        ph = (int(self.r[i]) - n_y) % 4
        if ph % 2:
            raise TableauError("row is not Hermitian")
        return PauliOperator(self.n, x.copy(), z.copy(), 1 if ph == 0 else -1)

    def stabilizers(self):
        return [self.row_operator(self.n + i) for i in range(self.n)]

    # -- measurement -------------------------------------------------------

    def measure(self, p, rng, force=None):
        """Measure the Hermitian Pauli p; returns (outcome, deterministic).

        `rng` supplies the random bit for nondeterministic outcomes; `force`
        overrides it (used for state preparation by projection).  Tableau
        invariants are preserved by construction.
        """
        if p.n != self.n:
            raise PauliError(f"operator on {p.n} qubits, tableau has {self.n}")
        anti = self._anticommute_mask(p)
        stab_anti = np.nonzero(anti[self.n:])[0]
        rp = _row_phase_of(p)
        if stab_anti.size:
            piv = self.n + int(stab_anti[0])
            others = np.nonzero(anti)[0]
            others = others[others != piv]
            self._rowsum_into(others, piv)
            dest = piv - self.n
            self.X[dest] = self.X[piv]
            self.Z[dest] = self.Z[piv]
            self.r[dest] = self.r[piv]
            if force is None:
                outcome = 1 if int(rng.integers(0, 2)) == 0 else -1
            else:
                outcome = int(force)
            self.X[piv] = p.x
            self.Z[piv] = p.z
            self.r[piv] = rp if outcome == 1 else (rp + 2) % 4
            return outcome, False
        outcome = self._deterministic_value(p, anti, rp)
        if force is not None and outcome != int(force):
            return outcome, True
        return outcome, True

    def _deterministic_value(self, p, anti, rp):
        rows = np.nonzero(anti[: self.n])[0]
        acc_x = np.zeros(self.n, dtype=np.uint8)
        acc_z = np.zeros(self.n, dtype=np.uint8)
        phase = 0
        for j in rows:
            s = self.n + int(j)
            phase = (phase + int(self.r[s]) + 2 * int(self.Z[s] @ acc_x.astype(np.int64))) % 4
            acc_x ^= self.X[s]
            acc_z ^= self.Z[s]
        if not (np.array_equal(acc_x, p.x) and np.array_equal(acc_z, p.z)):
            raise TableauError("deterministic accumulation did not reproduce operator")
        diff = (phase - rp) % 4
        if diff == 0:
            return +1
        if diff == 2:
            return -1
        raise TableauError("odd phase in deterministic measurement")

    def expectation_deterministic(self, p):
        """+1 / -1 if the state fixes p, else 'undetermined'.  Non-destructive."""
        if p.n != self.n:
            raise PauliError(f"operator on {p.n} qubits, tableau has {self.n}")
        anti = self._anticommute_mask(p)
        if anti[self.n:].any():
            return "undetermined"
        return self._deterministic_value(p, anti, _row_phase_of(p))

    # -- invariants --------------------------------------------------------

    def check_invariants(self):
        """Assert mutual commutation, destabilizer pairing, and full rank."""
        n = self.n
        xz = np.concatenate([self.X, self.Z], axis=1).astype(np.int64)
        sx, sz = self.X[n:], self.Z[n:]
        dx, dz = self.X[:n], self.Z[:n]
        ss = (sx @ sz.T + sz @ sx.T) % 2
        if ss.any():
            raise TableauError("stabilizer rows do not mutually commute")
        ds = (dx @ sz.T + dz @ sx.T) % 2
        if not np.array_equal(ds, np.eye(n, dtype=np.int64)):
            raise TableauError("destabilizer pairing broken")
        from .pauli import gf2_rank

        if gf2_rank(xz % 2) != 2 * n:
            raise TableauError("tableau rows are not full rank")
        for i in range(n):
            self.row_operator(n + i)  # raises if a stabilizer phase is odd
        return True
