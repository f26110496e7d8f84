"""Fourier analysis on a finite inverse semigroup.

The semigroup algebra splits, class by class, into matrix algebras over
the maximal subgroup algebras.  The forward transform therefore runs in
two stages: a fast zeta transform into the groupoid basis, then one
group Fourier transform per D-class and idempotent pair.  The inverse
runs the stages backwards.  Also here: the direct per-element inversion
formulas, convolution (naive and spectral), and JSON artifacts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .elements import decode, encode
from .errors import CapabilityError, ContractError, DomainError
from .fast_transforms import OpCounter, fast_mobius, fast_zeta
from .group_harmonics import (GroupRepSet, cyclic_ft_fast, cyclic_ift_fast,
                              repset_for_subgroup)
from .structure import (GROUPOID, SEMIGROUP, FunctionOnS, SemigroupStructure,
                        mobius_naive, zeta_naive)


def default_irreps(S: SemigroupStructure) -> list[GroupRepSet]:
    """One built-in complete irreducible set per D-class maximal subgroup."""
    return [repset_for_subgroup(S, dc) for dc in S.d_classes]


@dataclass(frozen=True)
class InducedEntry:
    class_index: int
    rep_index: int
    label: str
    group_dim: int
    dim: int          # r_k * group_dim
    offset: int       # position in the flat block list


@dataclass
class InducedRepSet:
    structure: SemigroupStructure
    class_repsets: list[GroupRepSet]
    entries: list[InducedEntry] = field(default_factory=list)

    def __post_init__(self):
        S = self.structure
        if len(self.class_repsets) != len(S.d_classes):
            raise ContractError("need one representation set per D-class")
        self.entries = []
        total = 0
        for dc, rs in zip(S.d_classes, self.class_repsets):
            if rs.group is not dc.subgroup and rs.group.keys != dc.subgroup.keys:
                raise ContractError(
                    f"class {dc.index}: representation set is for another group")
            if sum(d * d for d in rs.dims) != len(dc.subgroup):
                raise ContractError(
                    f"class {dc.index}: incomplete representation set")
            r = dc.num_idempotents
            for j, rep in enumerate(rs.reps):
                self.entries.append(InducedEntry(
                    dc.index, j, f"D{dc.index}:{rep.label}", rep.dim,
                    r * rep.dim, len(self.entries)))
                total += (r * rep.dim) ** 2
        if total != len(S):
            raise ContractError(
                f"induced dimensions square-sum to {total}, |S| = {len(S)}")

    @property
    def dims(self) -> list[int]:
        return [e.dim for e in self.entries]


def induce(S: SemigroupStructure,
           class_repsets: list[GroupRepSet] | None = None) -> InducedRepSet:
    return InducedRepSet(S, class_repsets if class_repsets is not None
                         else default_irreps(S))


@dataclass
class FourierCoefficients:
    repset: InducedRepSet
    blocks: list[np.ndarray]

    def __post_init__(self):
        if len(self.blocks) != len(self.repset.entries):
            raise ContractError("one matrix per induced representation required")
        for entry, blk in zip(self.repset.entries, self.blocks):
            if blk.shape != (entry.dim, entry.dim):
                raise ContractError(f"block {entry.label}: wrong shape {blk.shape}")

    @staticmethod
    def zeros(Y: InducedRepSet) -> "FourierCoefficients":
        return FourierCoefficients(
            Y, [np.zeros((e.dim, e.dim), dtype=complex) for e in Y.entries])

    def block(self, entry: InducedEntry, a: int, b: int) -> np.ndarray:
        d = entry.group_dim
        return self.blocks[entry.offset][a * d:(a + 1) * d, b * d:(b + 1) * d]

    def copy(self) -> "FourierCoefficients":
        return FourierCoefficients(self.repset, [b.copy() for b in self.blocks])


def _coord_grid(S: SemigroupStructure) -> dict[tuple[int, int, int], list[int]]:
    """(class, ran position, dom position) -> element ids ordered by the
    local subgroup index of y = p_ran^-1 s p_dom."""
    if getattr(S, "_coord_grid", None) is None:
        grid: dict[tuple[int, int, int], list[int]] = {}
        for dc in S.d_classes:
            g = len(dc.subgroup)
            for a in range(dc.num_idempotents):
                for b in range(dc.num_idempotents):
                    grid[(dc.index, a, b)] = [0] * g
        for i, (k, a, b, y) in enumerate(S.element_coords):
            grid[(k, a, b)][y] = i
        S._coord_grid = grid
    return S._coord_grid


def _entries_of_class(Y: InducedRepSet, k: int) -> list[InducedEntry]:
    return [e for e in Y.entries if e.class_index == k]


# -- forward and inverse pipelines -----------------------------------------

def fft(f: FunctionOnS, Y: InducedRepSet,
        counter: OpCounter | None = None) -> FourierCoefficients:
    """Fast zeta into the groupoid basis, then per-pair group transforms."""
    S = f.structure
    if S is not Y.structure:
        raise ContractError("function and representation set disagree on S")
    if f.basis != SEMIGROUP:
        raise ContractError("fft expects the semigroup basis")
    counter = counter if counter is not None else OpCounter()
    try:
        g = fast_zeta(f, counter)
    except CapabilityError:
        g = zeta_naive(f)
    grid = _coord_grid(S)
    out = FourierCoefficients.zeros(Y)
    for dc, rs in zip(S.d_classes, Y.class_repsets):
        k = dc.index
        order = len(dc.subgroup)
        cls_entries = _entries_of_class(Y, k)
        for a in range(dc.num_idempotents):
            for b in range(dc.num_idempotents):
                ids = grid[(k, a, b)]
                vals = g.values[np.array(ids)]
                if rs.cyclic_exponents is not None:
                    by_exp = np.zeros(order, dtype=complex)
                    by_exp[rs.cyclic_exponents] = vals
                    spectrum = cyclic_ft_fast(by_exp, counter)
                    for j, entry in enumerate(cls_entries):
                        out.blocks[entry.offset][a, b] = spectrum[j]
                else:
                    for entry in cls_entries:
                        rep = rs.reps[entry.rep_index]
                        d = rep.dim
                        blk = np.einsum("g,gij->ij", vals, rep.matrices)
                        out.blocks[entry.offset][a * d:(a + 1) * d,
                                                 b * d:(b + 1) * d] = blk
                        counter.multiplications += order * d * d
                        counter.additions += (order - 1) * d * d
    return out


def ifft(c: FourierCoefficients,
         counter: OpCounter | None = None) -> FunctionOnS:
    """Per-block group inversion, then the fast Mobius transform."""
    Y = c.repset
    S = Y.structure
    counter = counter if counter is not None else OpCounter()
    grid = _coord_grid(S)
    gvals = np.zeros(len(S), dtype=complex)
    for dc, rs in zip(S.d_classes, Y.class_repsets):
        k = dc.index
        order = len(dc.subgroup)
        cls_entries = _entries_of_class(Y, k)
        for a in range(dc.num_idempotents):
            for b in range(dc.num_idempotents):
                ids = grid[(k, a, b)]
                if rs.cyclic_exponents is not None:
                    spectrum = np.array([c.blocks[e.offset][a, b]
                                         for e in cls_entries])
                    by_exp = cyclic_ift_fast(spectrum, counter)
                    gvals[np.array(ids)] = by_exp[rs.cyclic_exponents]
                else:
                    vals = np.zeros(order, dtype=complex)
                    for entry in cls_entries:
                        rep = rs.reps[entry.rep_index]
                        blk = c.block(entry, a, b)
                        for y in range(order):
                            vals[y] += rep.dim * np.trace(
                                blk @ rep.matrices[rs.group.inv(y)])
                        counter.multiplications += order * rep.dim ** 3
                        counter.additions += order * rep.dim ** 2
                    gvals[np.array(ids)] = vals / order
                    counter.multiplications += order
    g = FunctionOnS(S, GROUPOID, gvals)
    try:
        return fast_mobius(g, counter)
    except CapabilityError:
        return mobius_naive(g)


def naive_ft(f: FunctionOnS, Y: InducedRepSet) -> FourierCoefficients:
    """Direct sum of f(s) times the induced representation of s.

    The natural-basis matrix of s expands over the order ideal below s,
    and each groupoid term lands in exactly one block.  Quadratic; the
    ground truth for fft.
    """
    S = f.structure
    if S is not Y.structure:
        raise ContractError("function and representation set disagree on S")
    if f.basis != SEMIGROUP:
        raise ContractError("naive_ft expects the semigroup basis")
    out = FourierCoefficients.zeros(Y)
    down = S.downsets()
    for s in range(len(S)):
        fs = f.values[s]
        if fs == 0:
            continue
        for t in down[s]:
            k, a, b, y = S.element_coords[t]
            for entry in _entries_of_class(Y, k):
                rep = Y.class_repsets[k].reps[entry.rep_index]
                d = rep.dim
                out.blocks[entry.offset][a * d:(a + 1) * d,
                                         b * d:(b + 1) * d] += fs * rep.matrices[y]
    return out


# -- Steinberg's isomorphism on a single class ------------------------------

def steinberg_phi(x: FunctionOnS, k: int) -> np.ndarray:
    """Matrix-over-group-algebra image of a groupoid-basis function on D_k.

    Returns an (r, r, |G_k|) array: entry (a, b) is the coefficient vector
    in the group algebra of the class subgroup.
    """
    S = x.structure
    if x.basis != GROUPOID:
        raise ContractError("steinberg_phi expects the groupoid basis")
    dc = S.d_classes[k]
    support = np.flatnonzero(x.values)
    if any(S.class_of[i] != k for i in support):
        raise ContractError(f"support must lie inside D-class {k}")
    r = dc.num_idempotents
    out = np.zeros((r, r, len(dc.subgroup)), dtype=complex)
    for i in support:
        _, a, b, y = S.element_coords[i]
        out[a, b, y] += x.values[i]
    return out


def steinberg_phi_inverse(S: SemigroupStructure, k: int,
                          mat: np.ndarray) -> FunctionOnS:
    dc = S.d_classes[k]
    r = dc.num_idempotents
    if mat.shape != (r, r, len(dc.subgroup)):
        raise ContractError("matrix shape does not fit the class")
    grid = _coord_grid(S)
    vals = np.zeros(len(S), dtype=complex)
    for a in range(r):
        for b in range(r):
            vals[np.array(grid[(k, a, b)])] = mat[a, b]
    return FunctionOnS(S, GROUPOID, vals)


# -- direct inversion formulas ---------------------------------------------

def invert_groupoid_local(c: FourierCoefficients, s: int) -> complex:
    """g(s) from the single block the groupoid coefficient of s lives in."""
    Y = c.repset
    S = Y.structure
    k, a, b, y = S.element_coords[s]
    rs = Y.class_repsets[k]
    y_inv = rs.group.inv(y)
    acc = 0j
    for entry in _entries_of_class(Y, k):
        rep = rs.reps[entry.rep_index]
        acc += rep.dim * np.trace(c.block(entry, a, b) @ rep.matrices[y_inv])
    return acc / len(rs.group)


@dataclass
class ConjugatedRepSet:
    """An equivalent irreducible set: each induced rep conjugated by a
    fixed invertible matrix.  Realizes the 'any complete set' freedom in
    the inversion formulas."""
    base: InducedRepSet
    mats: list[np.ndarray]
    mats_inv: list[np.ndarray]
    _cache: dict = field(default_factory=dict, repr=False)

    @staticmethod
    def identity(Y: InducedRepSet) -> "ConjugatedRepSet":
        eyes = [np.eye(e.dim, dtype=complex) for e in Y.entries]
        return ConjugatedRepSet(Y, eyes, [m.copy() for m in eyes])

    @staticmethod
    def random(Y: InducedRepSet, seed: int,
               cond_cap: float = 1e3) -> "ConjugatedRepSet":
        rng = np.random.default_rng(seed)
        mats, invs = [], []
        for e in Y.entries:
            for _ in range(100):
                A = rng.normal(size=(e.dim, e.dim)) \
                    + 1j * rng.normal(size=(e.dim, e.dim))
                if np.linalg.cond(A) <= cond_cap:
                    break
            else:
                raise ContractError("could not draw a well-conditioned basis change")
            mats.append(A)
            invs.append(np.linalg.inv(A))
        return ConjugatedRepSet(Y, mats, invs)

    def spectrum(self, c: FourierCoefficients) -> list[np.ndarray]:
        if c.repset is not self.base:
            raise ContractError("spectrum built against another representation set")
        return [A @ blk @ Ai
                for A, Ai, blk in zip(self.mats, self.mats_inv, c.blocks)]

    def groupoid_matrix(self, entry: InducedEntry, t: int) -> np.ndarray:
        """rho-tilde of the groupoid basis element of t (zero off-class)."""
        key = ("groupoid", entry.offset, t)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        S = self.base.structure
        out = np.zeros((entry.dim, entry.dim), dtype=complex)
        k, a, b, y = S.element_coords[t]
        if k == entry.class_index:
            rep = self.base.class_repsets[k].reps[entry.rep_index]
            d = rep.dim
            out[a * d:(a + 1) * d, b * d:(b + 1) * d] = rep.matrices[y]
        A, Ai = self.mats[entry.offset], self.mats_inv[entry.offset]
        result = A @ out @ Ai
        self._cache[key] = result
        return result

    def natural_matrix(self, entry: InducedEntry, v: int) -> np.ndarray:
        """rho-tilde of the natural basis element v: sum over the ideal below."""
        key = ("natural", entry.offset, v)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        S = self.base.structure
        out = np.zeros((entry.dim, entry.dim), dtype=complex)
        k = entry.class_index
        rep = self.base.class_repsets[k].reps[entry.rep_index]
        d = rep.dim
        for t in S.downsets()[v]:
            ck, a, b, y = S.element_coords[t]
            if ck == k:
                out[a * d:(a + 1) * d, b * d:(b + 1) * d] += rep.matrices[y]
        A, Ai = self.mats[entry.offset], self.mats_inv[entry.offset]
        result = A @ out @ Ai
        self._cache[key] = result
        return result


def invert_equivalent_reps(c: FourierCoefficients, s: int,
                           X: ConjugatedRepSet) -> complex:
    """g(s) via the conjugated class representations; basis-choice invariant."""
    Y = X.base
    S = Y.structure
    k = S.class_of[s]
    s_inv = S.inv(s)
    spectra = X.spectrum(c)
    acc = 0j
    for entry in _entries_of_class(Y, k):
        acc += entry.group_dim * np.trace(
            spectra[entry.offset] @ X.groupoid_matrix(entry, s_inv))
    return acc / len(S.d_classes[k].subgroup)


def invert_uniform(c: FourierCoefficients, s: int,
                   X: ConjugatedRepSet) -> complex:
    """g(s) with the uniform 1/(r |G|) weight and full induced dimensions."""
    Y = X.base
    S = Y.structure
    dc = S.d_classes[S.class_of[s]]
    s_inv = S.inv(s)
    spectra = X.spectrum(c)
    acc = 0j
    for entry in _entries_of_class(Y, dc.index):
        acc += entry.dim * np.trace(
            spectra[entry.offset] @ X.groupoid_matrix(entry, s_inv))
    return acc / (dc.num_idempotents * len(dc.subgroup))


def invert_semigroup_basis(c: FourierCoefficients, s: int,
                           X: ConjugatedRepSet) -> complex:
    """f(s) directly from the spectrum, via a double Mobius sum.

    Outer sum over t >= s; inner sum over v with v^-1 below t^-1 in the
    natural order, evaluating every representation of X on the natural
    basis element v^-1.  Quadratic per element; small instances only.
    """
    Y = X.base
    S = Y.structure
    spectra = X.spectrum(c)
    acc = 0j
    for t in S.upsets()[s]:
        dc = S.d_classes[S.class_of[t]]
        t_inv = S.inv(t)
        inner = 0j
        for v_inv in S.downsets()[t_inv]:
            trace_sum = 0j
            for entry in Y.entries:
                trace_sum += entry.dim * np.trace(
                    spectra[entry.offset] @ X.natural_matrix(entry, v_inv))
            inner += S.mobius(v_inv, t_inv) * trace_sum
        acc += S.mobius(s, t) * inner / (dc.num_idempotents * len(dc.subgroup))
    return acc


# -- convolution -----------------------------------------------------------

def convolve_naive(f: FunctionOnS, g: FunctionOnS) -> FunctionOnS:
    S = f.structure
    if g.structure is not S:
        raise ContractError("convolution operands live on different semigroups")
    if f.basis != SEMIGROUP or g.basis != SEMIGROUP:
        raise ContractError("convolution expects the semigroup basis")
    out = np.zeros(len(S), dtype=complex)
    fs = np.flatnonzero(f.values)
    gs = np.flatnonzero(g.values)
    for i in fs:
        for j in gs:
            out[S.mul(i, j)] += f.values[i] * g.values[j]
    return FunctionOnS(S, SEMIGROUP, out)


def multiply_spectra(c1: FourierCoefficients,
                     c2: FourierCoefficients) -> FourierCoefficients:
    if c1.repset is not c2.repset:
        raise ContractError("spectra built against different representation sets")
    return FourierCoefficients(
        c1.repset, [a @ b for a, b in zip(c1.blocks, c2.blocks)])


def convolve_fft(f: FunctionOnS, g: FunctionOnS, Y: InducedRepSet,
                 counter: OpCounter | None = None) -> FunctionOnS:
    return ifft(multiply_spectra(fft(f, Y, counter), fft(g, Y, counter)),
                counter)


# -- JSON artifacts --------------------------------------------------------

def function_to_json(f: FunctionOnS) -> dict:
    S = f.structure
    values = {}
    for i in np.flatnonzero(f.values):
        z = f.values[i]
        values[encode(S.elements[i])] = [z.real, z.imag]
    return {"family": S.family, "n": S.n, "basis": f.basis, "values": values}


def function_from_json(S: SemigroupStructure, data: dict) -> FunctionOnS:
    if data.get("family") != S.family or int(data.get("n", -1)) != S.n:
        raise ContractError("function file is for a different semigroup")
    basis = data.get("basis", SEMIGROUP)
    vals = np.zeros(len(S), dtype=complex)
    for key, (re, im) in data.get("values", {}).items():
        vals[S.id_of(decode(key, S.n))] = complex(re, im)
    return FunctionOnS(S, basis, vals)


def spectrum_to_json(c: FourierCoefficients) -> dict:
    Y = c.repset
    S = Y.structure
    blocks = []
    for entry, blk in zip(Y.entries, c.blocks):
        dc = S.d_classes[entry.class_index]
        rep = Y.class_repsets[entry.class_index].reps[entry.rep_index]
        data = []
        for row in blk:
            for z in row:
                data.extend([z.real, z.imag])
        blocks.append({"class": entry.class_index, "rep": rep.label,
                       "rows": list(dc.idempotent_ids),
                       "cols": list(dc.idempotent_ids),
                       "data": data})
    return {"family": S.family, "n": S.n, "blocks": blocks}


def spectrum_from_json(Y: InducedRepSet, data: dict) -> FourierCoefficients:
    S = Y.structure
    if data.get("family") != S.family or int(data.get("n", -1)) != S.n:
        raise ContractError("spectrum file is for a different semigroup")
    raw = data.get("blocks", [])
    if len(raw) != len(Y.entries):
        raise ContractError("spectrum file has the wrong number of blocks")
    blocks = []
    for entry, item in zip(Y.entries, raw):
        rep = Y.class_repsets[entry.class_index].reps[entry.rep_index]
        if item.get("class") != entry.class_index or item.get("rep") != rep.label:
            raise ContractError("spectrum blocks out of order")
        flat = item["data"]
        if len(flat) != 2 * entry.dim ** 2:
            raise ContractError(f"block {rep.label}: wrong data length")
        arr = np.array(flat[0::2]) + 1j * np.array(flat[1::2])
        blocks.append(arr.reshape(entry.dim, entry.dim))
    return FourierCoefficients(Y, blocks)


def repset_to_json(rs: GroupRepSet) -> dict:
    reps = []
    for rep in rs.reps:
        mats = []
        for m in rep.matrices:
            flat = []
            for row in m:
                for z in row:
                    flat.extend([z.real, z.imag])
            mats.append(flat)
        reps.append({"label": rep.label, "dim": rep.dim, "matrices": mats})
    return {"group": rs.group.name, "order": len(rs.group), "reps": reps}


def dump_json(data: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
