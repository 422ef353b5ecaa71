"""Junction geometry and tight-binding Hamiltonian.

The junction is a simple-cubic tip stack and substrate patch (lattice
constant ``l0``, nearest-neighbour coupling ``gamma0``) with a ten-site
naphthalene molecule (bond length ``lm``, coupling ``gamma_m``) suspended
between them.  Tip-molecule and molecule-substrate couplings decay
exponentially with the pair distance,

    t(r) = gamma_t * exp(-beta (r - l_t) / l_t),

with gamma_t = (gamma0 + gamma_m)/2 and l_t = (l0 + lm)/2.

Molecule site numbering (long axis along x, site 1 at the -x end):

        3       7
      /   \\   /   \\
     1     5       9
     |     |       |
     2     6       10
      \\   /   \\   /
        4       8

Sites 1,2 and 9,10 are the two ends entering the charge-imbalance signal;
site 8 is the perimeter site next to the 9/10 end where the tip apex sits
by default.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConstructionError, GeometryError

# canonical bond list of the ten-site naphthalene graph (1-based pairs)
NAPHTHALENE_BONDS = (
    (1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 6),
    (5, 7), (6, 8), (7, 9), (8, 10), (9, 10),
)

REGION_SUBSTRATE = 0
REGION_MOLECULE = 1
REGION_TIP = 2
REGION_NAMES = {REGION_SUBSTRATE: "substrate", REGION_MOLECULE: "molecule",
                REGION_TIP: "tip"}


@dataclass(frozen=True)
class GeometrySpec:
    """Geometry and coupling parameters of the junction."""

    l0: float = 1.0            # cubic lattice constant, Ang
    lm: float = 1.42           # molecule bond length, Ang
    d_ms: float = 2.5          # molecule-substrate separation, Ang
    d_gap: float = 2.0         # tip apex-molecule gap, Ang
    tip_x: float | None = None  # apex lateral position; None = above site 8
    tip_y: float | None = None
    tip_layers: tuple[int, ...] = (1, 3, 5)   # edge lengths, apex first
    substrate_shape: tuple[int, int, int] = (7, 9, 1)  # nx, ny, nz
    beta: float = 3.0          # dimensionless decay exponent
    eps_onsite: float = 0.0    # eV
    gamma0: float = -2.0       # eV, cubic-lattice NN coupling
    gamma_m: float = -2.7      # eV, molecule bond coupling
    coupling_cutoff: float = 1e-6  # eV, |t| below this is dropped

    def __post_init__(self):
        for name in ("l0", "lm", "d_ms", "d_gap", "beta"):
            if getattr(self, name) <= 0:
                raise GeometryError(f"{name} must be positive, got {getattr(self, name)}")
        if any(n <= 0 for n in self.tip_layers):
            raise GeometryError("tip layer sizes must be positive")
        if any(n <= 0 for n in self.substrate_shape):
            raise GeometryError("substrate shape must be positive")

    @property
    def gamma_t(self) -> float:
        return 0.5 * (self.gamma0 + self.gamma_m)

    @property
    def l_t(self) -> float:
        return 0.5 * (self.l0 + self.lm)


def pair_coupling(r, spec: GeometrySpec):
    """Distance-dependent tip-molecule / molecule-substrate coupling (eV)."""
    r = np.asarray(r, dtype=float)
    return spec.gamma_t * np.exp(-spec.beta * (r - spec.l_t) / spec.l_t)


def molecule_positions(spec: GeometrySpec) -> np.ndarray:
    """Canonical naphthalene site positions, molecule plane z = d_ms."""
    c = spec.lm * np.sqrt(3.0) / 2.0
    h = spec.lm / 2.0
    xy = np.array([
        (-2 * c, +h), (-2 * c, -h),
        (-c, +spec.lm), (-c, -spec.lm),
        (0.0, +h), (0.0, -h),
        (+c, +spec.lm), (+c, -spec.lm),
        (+2 * c, +h), (+2 * c, -h),
    ])
    pos = np.zeros((10, 3))
    pos[:, :2] = xy
    pos[:, 2] = spec.d_ms
    return pos


def _tip_positions(spec: GeometrySpec, apex_xy: tuple[float, float]) -> np.ndarray:
    """Tip stack sites, apex first, layers stacked upward from the molecule."""
    z0 = spec.d_ms + spec.d_gap
    out = []
    for il, edge in enumerate(spec.tip_layers):
        z = z0 + il * spec.l0
        offs = (np.arange(edge) - (edge - 1) / 2.0) * spec.l0
        for dy in offs:
            for dx in offs:
                out.append((apex_xy[0] + dx, apex_xy[1] + dy, z))
    return np.array(out)


def _substrate_positions(spec: GeometrySpec) -> np.ndarray:
    """Substrate patch sites, top layer at z = 0, centred under the molecule."""
    nx, ny, nz = spec.substrate_shape
    xs = (np.arange(nx) - (nx - 1) / 2.0) * spec.l0
    ys = (np.arange(ny) - (ny - 1) / 2.0) * spec.l0
    out = []
    for iz in range(nz):
        for y in ys:
            for x in xs:
                out.append((x, y, -iz * spec.l0))
    return np.array(out)


@dataclass(frozen=True)
class DeviceModel:
    """Assembled device: site list, Hamiltonian, lead attachment maps."""

    spec: GeometrySpec
    positions: np.ndarray          # (N, 3) Ang
    region: np.ndarray             # (N,) int codes
    hamiltonian: np.ndarray        # (N, N) real symmetric, eV
    molecule_sites: np.ndarray     # (10,) device indices, canonical order
    tip_boundary: np.ndarray       # sites coupling to the tip lead
    sub_boundary: np.ndarray       # sites coupling to the substrate lead

    @property
    def n_sites(self) -> int:
        return self.hamiltonian.shape[0]

    def region_sites(self, code: int) -> np.ndarray:
        return np.flatnonzero(self.region == code)

    def molecule_block(self) -> np.ndarray:
        idx = self.molecule_sites
        return self.hamiltonian[np.ix_(idx, idx)]

    def to_json(self) -> str:
        h = self.hamiltonian
        ii, jj = np.nonzero(np.triu(np.abs(h) > 0, k=0))
        entries = [[int(i), int(j), float(h[i, j])] for i, j in zip(ii, jj)]
        doc = {
            "n_sites": int(self.n_sites),
            "sites": [
                {"x": round(float(p[0]), 12), "y": round(float(p[1]), 12),
                 "z": round(float(p[2]), 12), "region": REGION_NAMES[int(r)]}
                for p, r in zip(self.positions, self.region)
            ],
            "molecule_sites": [int(i) for i in self.molecule_sites],
            "tip_boundary": [int(i) for i in self.tip_boundary],
            "sub_boundary": [int(i) for i in self.sub_boundary],
            "hamiltonian_entries": entries,
        }
        return json.dumps(doc, sort_keys=True)


def _nearest_neighbor_pairs(pos: np.ndarray, a: float, tol: float = 1e-6):
    """Index pairs at distance a (within tol)."""
    d = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
    ii, jj = np.nonzero(np.abs(d - a) < tol)
    keep = ii < jj
    return ii[keep], jj[keep]


def _check_molecule_graph(pos: np.ndarray, lm: float):
    ii, jj = _nearest_neighbor_pairs(pos, lm)
    bonds = {(int(i) + 1, int(j) + 1) for i, j in zip(ii, jj)}
    if bonds != set(NAPHTHALENE_BONDS):
        raise ConstructionError(
            f"molecule bond graph does not match naphthalene: got {sorted(bonds)}")


def build_device(spec: GeometrySpec) -> DeviceModel:
    """Assemble the full junction Hamiltonian from a geometry spec."""
    mol_pos = molecule_positions(spec)
    _check_molecule_graph(mol_pos, spec.lm)

    if spec.tip_x is None or spec.tip_y is None:
        apex_xy = (float(mol_pos[7, 0]), float(mol_pos[7, 1]))  # above site 8
    else:
        apex_xy = (spec.tip_x, spec.tip_y)

    sub_pos = _substrate_positions(spec)
    tip_pos = _tip_positions(spec, apex_xy)

    pos = np.vstack([sub_pos, mol_pos, tip_pos])
    region = np.concatenate([
        np.full(len(sub_pos), REGION_SUBSTRATE),
        np.full(10, REGION_MOLECULE),
        np.full(len(tip_pos), REGION_TIP),
    ])

    dmat = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
    np.fill_diagonal(dmat, np.inf)
    if dmat.min() < 0.1:
        i, j = np.unravel_index(np.argmin(dmat), dmat.shape)
        raise GeometryError(f"overlapping atoms {i} and {j}: r = {dmat[i, j]:.3g} Ang")

    n = len(pos)
    h = np.zeros((n, n))
    np.fill_diagonal(h, spec.eps_onsite)

    sub_idx = np.flatnonzero(region == REGION_SUBSTRATE)
    mol_idx = np.flatnonzero(region == REGION_MOLECULE)
    tip_idx = np.flatnonzero(region == REGION_TIP)

    for idx in (sub_idx, tip_idx):
        ii, jj = _nearest_neighbor_pairs(pos[idx], spec.l0)
        h[idx[ii], idx[jj]] = spec.gamma0
        h[idx[jj], idx[ii]] = spec.gamma0

    for a, b in NAPHTHALENE_BONDS:
        i, j = mol_idx[a - 1], mol_idx[b - 1]
        h[i, j] = h[j, i] = spec.gamma_m

    _fill_interface(h, pos, tip_idx, mol_idx, spec)
    _fill_interface(h, pos, mol_idx, sub_idx, spec)

    # lead attachment: top tip layer and bottom substrate layer
    tip_top = tip_idx[np.isclose(pos[tip_idx, 2], pos[tip_idx, 2].max())]
    sub_bot = sub_idx[np.isclose(pos[sub_idx, 2], pos[sub_idx, 2].min())]

    return DeviceModel(
        spec=spec, positions=pos, region=region, hamiltonian=h,
        molecule_sites=mol_idx, tip_boundary=tip_top, sub_boundary=sub_bot,
    )


def _fill_interface(h, pos, idx_a, idx_b, spec: GeometrySpec):
    d = np.linalg.norm(pos[idx_a][:, None, :] - pos[idx_b][None, :, :], axis=-1)
    t = pair_coupling(d, spec)
    t[np.abs(t) < spec.coupling_cutoff] = 0.0
    h[np.ix_(idx_a, idx_b)] = t
    h[np.ix_(idx_b, idx_a)] = t.T


def place_tip(model: DeviceModel, x: float, y: float, gap: float) -> DeviceModel:
    """Return a copy of the model with the tip stack moved to (x, y, gap).

    Only tip positions and the tip-molecule coupling block change; every
    other Hamiltonian entry is carried over bitwise.
    """
    if gap <= 0:
        raise GeometryError(f"gap must be positive, got {gap}")
    spec = replace(model.spec, tip_x=x, tip_y=y, d_gap=gap)
    pos = model.positions.copy()
    tip_idx = model.region_sites(REGION_TIP)
    pos[tip_idx] = _tip_positions(spec, (x, y))
    h = model.hamiltonian.copy()
    mol_idx = model.molecule_sites
    h[np.ix_(tip_idx, mol_idx)] = 0.0
    h[np.ix_(mol_idx, tip_idx)] = 0.0
    _fill_interface(h, pos, tip_idx, mol_idx, spec)
    return DeviceModel(
        spec=spec, positions=pos, region=model.region, hamiltonian=h,
        molecule_sites=model.molecule_sites, tip_boundary=model.tip_boundary,
        sub_boundary=model.sub_boundary,
    )


@dataclass(frozen=True)
class OrbitalTable:
    """Eigenpairs of the isolated molecule block, sorted ascending."""

    energies: np.ndarray   # (10,) eV
    orbitals: np.ndarray   # (10, 10), column k is the k-th orbital
    homo: int = 4          # index at half filling
    lumo: int = 5

    def weights(self, k: int) -> np.ndarray:
        """Site weights |c_i|^2 of orbital k."""
        return np.abs(self.orbitals[:, k]) ** 2


def molecular_orbitals(model: DeviceModel) -> OrbitalTable:
    """Diagonalize the isolated 10-site molecule block."""
    evals, evecs = np.linalg.eigh(model.molecule_block())
    return OrbitalTable(energies=evals, orbitals=evecs)
