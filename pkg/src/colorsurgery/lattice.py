"""Three-colorable lattices: geometry, validation and JSON round-tripping.

All constructions live on one global lattice.  Points (u, v) in Z^2 are
sorted into classes by (u - v) mod 3: class-1 points are hexagon centers,
the rest are qubit sites (the two honeycomb sublattices).  A center's color
is fixed by its level u + v mod 3, so face rows cycle blue, green, red as
the level increases.  Edges join qubit sites that differ by a unit step and
are colored by the face color adjacent to neither endpoint-sharing face.
Red edges form a perfect matching of the qubit sites; the Bell pairs of the
surgery ancilla live on them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .pauli import PauliOperator, gf2_rank

UNITS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]

RED, GREEN, BLUE = "r", "g", "b"
COLORS = (RED, GREEN, BLUE)
_LEVEL_COLOR = {2: RED, 1: GREEN, 0: BLUE}


class LatticeError(ValueError):
    pass


def is_center(pt):
    u, v = pt
    return (u - v) % 3 == 1


def is_qubit_site(pt):
    return not is_center(pt)


def center_color(pt):
    if not is_center(pt):
        raise LatticeError(f"{pt} is not a face center")
    return _LEVEL_COLOR[(pt[0] + pt[1]) % 3]


def level(pt):
    return pt[0] + pt[1]


def neighbors(pt):
    u, v = pt
    return [(u + du, v + dv) for du, dv in UNITS]


def face_sites(center):
    """The six qubit sites of the full hexagon around a center."""
    return [p for p in neighbors(center)]


def red_partner(pt):
    """The qubit site Bell-paired with pt along its unique red edge."""
    u, v = pt
    res = (u % 3, v % 3)
    # source sublattices (class 0) and their red directions
    if res == (0, 0):
        return (u, v + 1)
    if res == (1, 1):
        return (u + 1, v - 1)
    if res == (2, 2):
        return (u - 1, v)
    # target sublattices (class 2): invert the map
    if res == (0, 1):
        return (u, v - 1)
    if res == (2, 0):
        return (u - 1, v + 1)
    if res == (1, 2):
        return (u + 1, v)
    raise LatticeError(f"{pt} is not a qubit site")


def edge_color(a, b):
    """Color of the lattice edge between adjacent qubit sites a and b."""
    diff = (b[0] - a[0], b[1] - a[1])
    if diff not in UNITS:
        raise LatticeError(f"{a} and {b} are not adjacent")
    shared = [p for p in neighbors(a) if p in set(neighbors(b)) and is_center(p)]
    if len(shared) != 2:
        raise LatticeError(f"edge {a}-{b} does not separate two faces")
    c1, c2 = center_color(shared[0]), center_color(shared[1])
    (third,) = set(COLORS) - {c1, c2}
    return third


@dataclass
class Face:
    """A colored face; `kinds` lists the Pauli types it stabilizes."""

    center: tuple
    color: str
    sites: list
    kinds: tuple = ("X", "Z")


@dataclass
class Boundary:
    """A labeled boundary segment; label is a color or a Pauli type."""

    label: str
    sites: list


@dataclass
class ColorLattice:
    """Qubits on vertices, colored faces and edges, labeled boundaries."""

    sites: list  # ordered qubit sites (u, v)
    faces: list  # Face
    boundaries: list = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self.index = {p: i for i, p in enumerate(self.sites)}

    @property
    def n(self):
        return len(self.sites)

    def edges(self):
        """All lattice edges between present qubit sites, with colors."""
        seen = set()
        out = []
        siteset = set(self.sites)
        for p in self.sites:
            for q in neighbors(p):
                if q in siteset and is_qubit_site(q) and frozenset((p, q)) not in seen:
                    seen.add(frozenset((p, q)))
                    out.append((p, q, edge_color(p, q)))
        return out

    def red_edges(self):
        """The red perfect-matching edges fully contained in the lattice."""
        siteset = set(self.sites)
        out = []
        for p in self.sites:
            q = red_partner(p)
            if q in siteset and (q, p) not in out:
                if (p, q) not in out:
                    out.append((p, q))
        return [e for e in out]

    def stabilizer_operators(self):
        """One PauliOperator per (face, kind)."""
        ops = []
        for f in self.faces:
            idx = [self.index[p] for p in f.sites]
            for kind in f.kinds:
                ops.append(PauliOperator.from_support(self.n, idx, kind))
        return ops

    def stabilizer_matrix(self):
        return np.array([s.symplectic() for s in self.stabilizer_operators()], dtype=np.uint8)

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {
            "name": self.name,
            "sites": [list(p) for p in self.sites],
            "faces": [
                {
                    "center": list(f.center),
                    "color": f.color,
                    "sites": [list(p) for p in f.sites],
                    "kinds": list(f.kinds),
                }
                for f in self.faces
            ],
            "boundaries": [
                {"label": b.label, "sites": [list(p) for p in b.sites]} for b in self.boundaries
            ],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            sites=[tuple(p) for p in d["sites"]],
            faces=[
                Face(
                    center=tuple(f["center"]),
                    color=f["color"],
                    sites=[tuple(p) for p in f["sites"]],
                    kinds=tuple(f["kinds"]),
                )
                for f in d["faces"]
            ],
            boundaries=[
                Boundary(label=b["label"], sites=[tuple(p) for p in b["sites"]])
                for b in d.get("boundaries", [])
            ],
            name=d.get("name", ""),
        )

    def to_json(self, path=None):
        text = json.dumps(self.to_dict(), indent=1, sort_keys=True)
        if path is not None:
            with open(path, "w") as fh:
                fh.write(text)
        return text

    @classmethod
    def from_json(cls, source):
        if isinstance(source, (str, bytes)) and not source.lstrip().startswith("{"):
            with open(source) as fh:
                return cls.from_dict(json.load(fh))
        return cls.from_dict(json.loads(source))


@dataclass
class LatticeReport:
    violations: list
    single_type_faces: list

    @property
    def ok(self):
        return not self.violations


def verify_lattice(lat):
    """Check all ColorLattice invariants; violations are reported, not raised."""
    violations = []
    single = []
    site_set = set(lat.sites)

    by_pair = {}
    for f in lat.faces:
        if f.color not in COLORS:
            violations.append(f"face {f.center}: unknown color {f.color!r}")
        if set(f.kinds) not in ({"X"}, {"Z"}, {"X", "Z"}):
            violations.append(f"face {f.center}: bad kinds {f.kinds}")
        if len(set(f.kinds)) == 1:
            single.append(f.center)
        for p in f.sites:
            if p not in site_set:
                violations.append(f"face {f.center}: site {p} missing from lattice")
        for a in f.sites:
            for b in f.sites:
                if a < b:
                    by_pair.setdefault((a, b), []).append(f)

    # adjacent faces (sharing an edge, i.e. two sites) must differ in color
    for (a, b), fs in by_pair.items():
        if len(fs) > 1:
            for i in range(len(fs)):
                for j in range(i + 1, len(fs)):
                    if fs[i].color == fs[j].color:
                        violations.append(
                            f"faces {fs[i].center} and {fs[j].center} share an edge "
                            f"but are both {fs[i].color!r}"
                        )

    # an edge between two full faces carries the third color
    centers = {f.center: f for f in lat.faces}
    for p, q, col in lat.edges():
        adj = [c for c in neighbors(p) if c in centers and q in set(neighbors(c))]
        cols = {centers[c].color for c in adj}
        if col in cols:
            violations.append(f"edge {p}-{q}: color {col!r} equals an adjacent face color")

    # colored boundaries support no face of their own color
    for b in lat.boundaries:
        if b.label not in COLORS:
            continue
        for f in lat.faces:
            if f.color == b.label and set(f.sites) & set(b.sites):
                violations.append(
                    f"boundary {b.label!r} touches face {f.center} of the same color"
                )

    # all stabilizers must commute
    mat = lat.stabilizer_matrix().astype(np.int64)
    n = mat.shape[1] // 2
    x, z = mat[:, :n], mat[:, n:]
    bad = np.argwhere((x @ z.T + z @ x.T) % 2)
    for i, j in bad:
        if i < j:
            violations.append(f"stabilizers {i} and {j} anticommute")

    return LatticeReport(violations=violations, single_type_faces=single)


# -- triangular code region -------------------------------------------------


def triangular_region(d, align_green=True):
    """Qubit sites and centers of the distance-d triangular patch.

    The region is {c : c_k <= (d-1)/2} in the three-coordinate picture,
    translated so that the boundary row that would sit just below the lowest
    qubit row is a green center row (the surgery module merges through it).
    """
    if d < 3 or d % 2 == 0:
        raise LatticeError(f"distance must be odd and >= 3, got {d}")
    t = (d - 1) // 2
    pts = []
    for u in range(-2 * t, t + 1):
        for v in range(-2 * t, t + 1):
            if u <= t and v <= t and -(u + v) <= t:
                pts.append((u, v))
    if align_green:
        lo = min(level(p) for p in pts)
        # shift levels so the excluded row below the patch is green (level % 3 == 1)
        for a in range(3):
            if (lo - 1 + 2 * a) % 3 == 1:
                break
        pts = [(u + a, v + a) for (u, v) in pts]
    sites = sorted(p for p in pts if is_qubit_site(p))
    centers = sorted(p for p in pts if is_center(p))
    return sites, centers


def trimmed_faces(sites, centers, min_weight=3):
    """Faces for a region: each center keeps its in-region hexagon sites."""
    site_set = set(sites)
    faces = []
    for c in centers:
        supp = [p for p in face_sites(c) if p in site_set]
        if len(supp) < min_weight:
            raise LatticeError(f"face {c} has support {len(supp)} < {min_weight}")
        faces.append(Face(center=c, color=center_color(c), sites=sorted(supp)))
    return faces
