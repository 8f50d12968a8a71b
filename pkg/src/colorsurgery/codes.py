"""Code patches: triangular color codes and the thin two-qubit code.

The triangular patch of odd distance d is the region {c : c_k <= (d-1)/2}
of the global lattice, translated so its lowest qubit row always merges
through a green face row.  It has (3 d^2 + 1)/4 qubits, one boundary of
each color, and encodes one logical qubit whose canonical X and Z both live
on the d qubits of the bottom (green) boundary.

The thin code is a parallelogram with Pauli-type boundaries: faces cut by
the top and bottom edges keep only their X stabilizer and the boundary-row
qubit pairs gain weight-2 XX stabilizers (and symmetrically in Z on the
left and right edges), so X-type strings terminate on the top/bottom
boundaries and Z-type strings on the left/right ones.  Heights and widths
follow h = (3 d_x - 1)/2, w = (3 d_z - 1)/2, giving k = 2 with independent
X- and Z-distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .lattice import (
    Boundary,
    ColorLattice,
    Face,
    LatticeError,
    center_color,
    edge_color,
    face_sites,
    is_center,
    is_qubit_site,
    level,
    neighbors,
    triangular_region,
    trimmed_faces,
)
from .pauli import PauliOperator, commutes, gf2_rank, nullspace_gf2, rref


@dataclass
class CodePatch:
    """A lattice plus its logical generators."""

    lattice: ColorLattice
    logical_x: list  # one PauliOperator per logical qubit
    logical_z: list
    distance: tuple  # (d_x, d_z); equal for the triangular code

    @property
    def k(self):
        return len(self.logical_x)

    @property
    def n(self):
        return self.lattice.n

    def check(self):
        stabs = self.lattice.stabilizer_operators()
        mat = self.lattice.stabilizer_matrix()
        k = self.n - gf2_rank(mat)
        if k != self.k:
            raise LatticeError(f"rank gives k={k}, expected {self.k}")
        for lx, lz in zip(self.logical_x, self.logical_z):
            for s in stabs:
                if not (commutes(lx, s) and commutes(lz, s)):
                    raise LatticeError("logical operator anticommutes with a stabilizer")
            if commutes(lx, lz):
                raise LatticeError("conjugate logicals commute")
        for i, li in enumerate(self.logical_x):
            for j, lj in enumerate(self.logical_z):
                if i != j and not commutes(li, lj):
                    raise LatticeError("cross-pair logicals anticommute")
        return True


def build_triangular_code(d):
    """Triangular 6.6.6 patch: one boundary per color, k=1, distance d."""
    sites, centers = triangular_region(d)
    faces = trimmed_faces(sites, centers)
    lo = min(level(p) for p in sites)
    t = (d - 1) // 2

    def side(keyfun):
        m = max(keyfun(p) for p in sites)
        return sorted(p for p in sites if keyfun(p) == m)

    sides = {
        "b": side(lambda p: p[0]),       # u-cut misses blue
        "r": side(lambda p: p[1]),       # v-cut misses red
        "g": side(lambda p: -level(p)),  # bottom misses green
    }
    boundaries = [Boundary(label=c, sites=s) for c, s in sides.items()]
    lat = ColorLattice(sites=sites, faces=faces, boundaries=boundaries, name=f"triangular-d{d}")

    bottom = sides["g"]
    idx = [lat.index[p] for p in bottom]
    lx = PauliOperator.from_support(lat.n, idx, "X")
    lz = PauliOperator.from_support(lat.n, idx, "Z")
    patch = CodePatch(lattice=lat, logical_x=[lx], logical_z=[lz], distance=(d, d))
    patch.check()
    return patch


def _thin_region(h, w):
    lv0, lv1, u0, u1 = 1, 1 + h, 0, w
    sites, centers = [], []
    for u in range(u0 - 2, u1 + 3):
        for v in range(lv0 - u - 2, lv1 - u + 3):
            p = (u, v)
            if u0 <= u <= u1 and lv0 <= level(p) <= lv1:
                (centers if is_center(p) else sites).append(p)
    return sorted(sites), sorted(centers), (lv0, lv1, u0, u1)


def build_thin_code(d_x, d_z):
    """Thin color code: k=2 with independent X and Z distances."""
    for d in (d_x, d_z):
        if d < 3 or d % 2 == 0:
            raise LatticeError(f"distances must be odd and >= 3, got {d}")
    h = (3 * d_x - 1) // 2
    w = (3 * d_z - 1) // 2
    sites, centers, (lv0, lv1, u0, u1) = _thin_region(h, w)
    site_set = set(sites)
    faces = []
    for c in centers:
        supp = sorted(p for p in face_sites(c) if p in site_set)
        if len(supp) < 2:
            continue
        cut_tb = any(not (lv0 <= level(p) <= lv1) for p in face_sites(c))
        cut_lr = any(not (u0 <= p[0] <= u1) for p in face_sites(c))
        if cut_tb and cut_lr:
            continue  # corner faces carry no stabilizer
        if cut_tb:
            kinds = ("X",)
        elif cut_lr:
            kinds = ("Z",)
        else:
            kinds = ("X", "Z")
        faces.append(Face(center=c, color=center_color(c), sites=supp, kinds=kinds))

    def row(keyfun, val):
        return sorted(p for p in sites if keyfun(p) == val)

    rows = {
        "bottom": row(level, lv0),
        "top": row(level, lv1),
        "left": row(lambda p: p[0], u0),
        "right": row(lambda p: p[0], u1),
    }
    for side, kind in (("bottom", "X"), ("top", "X"), ("left", "Z"), ("right", "Z")):
        line = rows[side]
        lineset = set(line)
        for p in line:
            for q in neighbors(p):
                if q in lineset and p < q:
                    faces.append(
                        Face(center=p, color=edge_color(p, q), sites=[p, q], kinds=(kind,))
                    )
    boundaries = [
        Boundary(label="pauli-X", sites=rows["bottom"]),
        Boundary(label="pauli-X", sites=rows["top"]),
        Boundary(label="pauli-Z", sites=rows["left"]),
        Boundary(label="pauli-Z", sites=rows["right"]),
    ]
    lat = ColorLattice(sites=sites, faces=faces, boundaries=boundaries,
                       name=f"thin-dx{d_x}-dz{d_z}")

    # logical representatives: two X strings crossing vertically, two Z strings
    # crossing horizontally, read off the stabilizer kernel
    lx = _sector_logicals(lat, "X")
    lz = _sector_logicals(lat, "Z")
    if len(lx) != 2 or len(lz) != 2:
        raise LatticeError(f"thin code has {len(lx)} X / {len(lz)} Z logicals, expected 2")
    lz = _pair_conjugates(lx, lz)
    patch = CodePatch(lattice=lat, logical_x=lx, logical_z=lz, distance=(d_x, d_z))
    patch.check()
    return patch


def _sector_mats(lat):
    n = lat.n
    hx, hz = [], []
    for f in lat.faces:
        v = np.zeros(n, dtype=np.uint8)
        for p in f.sites:
            v[lat.index[p]] = 1
        if "X" in f.kinds:
            hx.append(v)
        if "Z" in f.kinds:
            hz.append(v)
    hx = np.array(hx, np.uint8) if hx else np.zeros((0, n), np.uint8)
    hz = np.array(hz, np.uint8) if hz else np.zeros((0, n), np.uint8)
    return hx, hz


def _sector_logicals(lat, kind):
    """Independent single-type logical operators of one CSS sector."""
    hx, hz = _sector_mats(lat)
    own, other = (hx, hz) if kind == "X" else (hz, hx)
    ker = nullspace_gf2(other)
    red, piv = rref(own) if own.shape[0] else (np.zeros((0, lat.n), np.uint8), [])
    out_rows = []
    for v in ker:
        w = v.copy()
        for rrow, c in zip(red, piv):
            if w[c]:
                w ^= rrow
        for prev in out_rows:
            # reduce against already chosen logicals to keep them independent
            pass
        if w.any():
            cand = np.vstack(out_rows + [v]) if out_rows else v[None, :]
            stack = np.vstack([own, cand]) if own.shape[0] else cand
            if gf2_rank(stack) == gf2_rank(own) + len(out_rows) + 1:
                out_rows.append(v)
    ops = []
    for v in out_rows:
        supp = [int(i) for i in np.nonzero(v)[0]]
        ops.append(PauliOperator.from_support(lat.n, supp, kind))
    return ops


def _pair_conjugates(lx, lz):
    """Reorder/reshape Z logicals so that lz[i] anticommutes only with lx[i]."""
    lz = list(lz)
    out = []
    for i, x in enumerate(lx):
        j = next(j for j, z in enumerate(lz) if not commutes(x, z))
        z = lz.pop(j)
        fixed = []
        for other in lz:
            fixed.append(other if commutes(other, x) else other * z)
        lz = fixed
        out.append(z)
    # make later X logicals commute with earlier Z picks
    for i in range(len(out)):
        for j in range(len(lx)):
            if j != i and not commutes(lx[j], out[i]):
                lx[j] = lx[j] * lx[i]
    return out


# -- brute-force distance oracles -------------------------------------------


def min_weight_logical(lat, kind, max_weight, batch=1 << 17):
    """Smallest-weight single-type logical found by exhaustive search.

    Returns (weight, support) or None if nothing logical exists up to the
    bound.  Used as the independent oracle for distance claims; the search
    enumerates every support of each weight, filtered in numpy batches.
    """
    hx, hz = _sector_mats(lat)
    own, other = (hx, hz) if kind == "X" else (hz, hx)
    n = lat.n
    red, piv = rref(own) if own.shape[0] else (np.zeros((0, n), np.uint8), [])
    other_t = other.T.astype(np.int64)
    for wgt in range(1, max_weight + 1):
        it = combinations(range(n), wgt)
        while True:
            chunk = list(__import__("itertools").islice(it, batch))
            if not chunk:
                break
            idx = np.array(chunk, dtype=np.intp)
            vmat = np.zeros((len(chunk), n), dtype=np.uint8)
            rows = np.repeat(np.arange(len(chunk)), wgt)
            vmat[rows, idx.ravel()] = 1
            ok = ~(vmat @ other_t % 2).any(axis=1)
            for v in vmat[ok]:
                w = v.copy()
                for rrow, c in zip(red, piv):
                    if w[c]:
                        w ^= rrow
                if w.any():
                    return wgt, [int(i) for i in np.nonzero(v)[0]]
    return None


def kernel_distance(lat, kind, max_kernel_dim=24):
    """Exact single-type distance by enumerating the full syndrome kernel."""
    hx, hz = _sector_mats(lat)
    own, other = (hx, hz) if kind == "X" else (hz, hx)
    n = lat.n
    ker = nullspace_gf2(other)
    dim = ker.shape[0]
    if dim == 0 or dim > max_kernel_dim:
        raise LatticeError(f"kernel dimension {dim} out of range for enumeration")
    red, piv = rref(own) if own.shape[0] else (np.zeros((0, n), np.uint8), [])
    best = None
    total = 1 << dim
    for start in range(0, total, 1 << 18):
        stop = min(start + (1 << 18), total)
        idxs = np.arange(start, stop, dtype=np.uint64)
        bits = ((idxs[:, None] >> np.arange(dim, dtype=np.uint64)[None, :]) & 1).astype(np.uint8)
        vmat = bits @ ker % 2
        if len(piv):
            wmat = vmat ^ (vmat[:, piv] @ red % 2)
        else:
            wmat = vmat
        nz = wmat.any(axis=1)
        wts = vmat[nz].sum(axis=1)
        if wts.size:
            m = int(wts.min())
            if best is None or m < best:
                best = m
    return best


def sector_distance(lat, kind, max_weight):
    """Exact single-type distance if it is <= max_weight, else None."""
    hit = min_weight_logical(lat, kind, max_weight)
    return None if hit is None else hit[0]
