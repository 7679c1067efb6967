"""Dense state vectors, subset states, and pure-state distance identities.

A subset state over dimension d is the uniform superposition over an index
set S: amplitude 1/sqrt(|S|) on every member of S and 0 elsewhere.  These
are the witnesses the rest of the package approximates with, simulates,
and searches over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ParseError

# Tolerance for "this vector is normalized"; double precision accumulation
# over <= 2^20 entries stays well inside it.
NORM_ATOL = 1e-9

# Agreement required between the closed-form trace distance and the
# eigenvalue-based trace norm.
TRACE_NORM_ATOL = 1e-8

DEFAULT_DIM_CAP = 4096


@dataclass(frozen=True, eq=False)
class DenseState:
    """A complex amplitude vector, unit 2-norm unless constructed raw.

    ``normalized=False`` admits arbitrary nonzero vectors; the subset
    approximation routines are stated for those as well.
    """

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).ravel()
        if amps.size < 1:
            raise ValueError("state needs at least one amplitude")
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if self.normalized:
            nrm = np.linalg.norm(amps)
            if abs(nrm - 1.0) > NORM_ATOL:
                raise ValueError(f"vector norm {nrm!r} is not 1 within {NORM_ATOL}")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def num_qubits(self) -> int:
        """Qubit count; defined only when the dimension is a power of two."""
        n = self.dim.bit_length() - 1
        if 1 << n != self.dim:
            raise ValueError(f"dimension {self.dim} is not a power of two")
        return n

    @classmethod
    def basis(cls, dim: int, index: int) -> "DenseState":
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @classmethod
    def raw(cls, amplitudes) -> "DenseState":
        """Construct without the unit-norm check (nonzero is still required)."""
        state = cls(amplitudes, normalized=False)
        if np.linalg.norm(state.amplitudes) == 0.0:
            raise ValueError("zero vector")
        return state

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def isclose(self, other: "DenseState", atol: float = 1e-9) -> bool:
        return self.dim == other.dim and bool(
            np.allclose(self.amplitudes, other.amplitudes, atol=atol, rtol=0.0)
        )


@dataclass(frozen=True)
class SubsetState:
    """A nonempty index set S inside [0, dim), denoting the uniform
    superposition over its members."""

    dim: int
    indices: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if len(idx) != len(tuple(self.indices)):
            raise ValueError("indices must be distinct")
        if not idx:
            raise ValueError("subset must be nonempty")
        if idx[0] < 0 or idx[-1] >= self.dim:
            raise ValueError(f"indices must lie in [0, {self.dim})")
        object.__setattr__(self, "indices", idx)

    @property
    def size(self) -> int:
        return len(self.indices)

    def to_vector(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[list(self.indices)] = 1.0 / math.sqrt(self.size)
        return v

    def tensor(self, other: "SubsetState") -> "SubsetState":
        """Product index set: the tensor of two subset states is again a
        subset state of the product space."""
        idx = tuple(
            i * other.dim + j for i in self.indices for j in other.indices
        )
        return SubsetState(self.dim * other.dim, idx)

    def tensor_power(self, t: int) -> "SubsetState":
        if t < 1:
            raise ValueError("tensor power needs t >= 1")
        out = self
        for _ in range(t - 1):
            out = out.tensor(self)
        return out

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


def _amps(v) -> np.ndarray:
    if isinstance(v, DenseState):
        return v.amplitudes
    return np.asarray(v, dtype=complex).ravel()


def densify(s: SubsetState) -> DenseState:
    """The unit vector with 1/sqrt(|S|) on each member index of S."""
    return DenseState(s.to_vector())


def overlap(v, w) -> complex:
    """Inner product <v|w>, conjugating the first argument."""
    a, b = _amps(v), _amps(w)
    if a.size != b.size:
        raise ValueError(f"dimension mismatch: {a.size} vs {b.size}")
    return complex(np.vdot(a, b))


def trace_distance_pure(v, w) -> float:
    """Trace norm of |v><v| - |w><w| via the closed form 2*sqrt(1-|<v|w>|^2).

    Both inputs must be normalized.
    """
    a, b = _amps(v), _amps(w)
    for x in (a, b):
        if abs(np.linalg.norm(x) - 1.0) > NORM_ATOL:
            raise ValueError("trace_distance_pure requires normalized states")
    o2 = min(abs(overlap(a, b)) ** 2, 1.0)
    return 2.0 * math.sqrt(1.0 - o2)


def max_povm_advantage(v, w, dim_cap: int = DEFAULT_DIM_CAP) -> float:
    """Best two-outcome measurement advantage between |v><v| and |w><w|.

    Computed as the sum of positive eigenvalues of the difference operator
    (a dense eigendecomposition), and checked against half the closed-form
    trace distance; the two must agree within 1e-8.
    """
    a, b = _amps(v), _amps(w)
    if a.size != b.size:
        raise ValueError(f"dimension mismatch: {a.size} vs {b.size}")
    if a.size > dim_cap:
        raise CapExceededError(
            f"dimension {a.size} exceeds eigendecomposition cap {dim_cap}"
        )
    delta = np.outer(a, a.conj()) - np.outer(b, b.conj())
    eigs = np.linalg.eigvalsh(delta)
    advantage = float(eigs[eigs > 0.0].sum())
    half_closed_form = 0.5 * trace_distance_pure(a, b)
    if abs(advantage - half_closed_form) > TRACE_NORM_ATOL:
        raise ArithmeticError(
            f"eigenvalue trace norm {advantage} disagrees with closed form "
            f"{half_closed_form}"
        )
    return advantage


def staircase_state(n: int) -> DenseState:
    """The n-qubit state whose amplitudes halve in norm over dyadic blocks.

    Index 0 carries amplitude 0; index i >= 1 carries
    1/(sqrt(n) * sqrt(2^floor(log2 i))).  Each of the n blocks holds exactly
    1/n of the total weight, which makes the state the worst case for
    subset-state overlap: no subset does better than (2+sqrt(2))/sqrt(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 1 << n
    amps = np.zeros(d, dtype=complex)
    i = np.arange(1, d)
    block = np.floor(np.log2(i))
    amps[1:] = 1.0 / (math.sqrt(n) * np.sqrt(np.exp2(block)))
    return DenseState(amps)


def random_state(dim: int, rng: np.random.Generator) -> DenseState:
    """Haar-ish random unit vector: complex standard normals, normalized.

    This is the generator behind every seeded experiment in the package;
    fixing the seed fixes the state exactly.
    """
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return DenseState(v / np.linalg.norm(v))


# ---------------------------------------------------------------------------
# File formats.
#
# State file: header line "dim <d>", then one "re im" pair of decimal floats
# per amplitude.  Subset file: header "dim <d>", then one index per line.
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> list:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_dim_header(lines: list, what: str) -> int:
    if not lines:
        raise ParseError(f"empty {what} file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim":
        raise ParseError(f"{what} file must start with 'dim <d>', got {lines[0]!r}")
    try:
        dim = int(head[1])
    except ValueError:
        raise ParseError(f"bad dimension {head[1]!r}") from None
    if dim < 1:
        raise ParseError(f"dimension must be positive, got {dim}")
    return dim


def parse_state_text(text: str) -> DenseState:
    lines = _content_lines(text)
    dim = _parse_dim_header(lines, "state")
    body = lines[1:]
    if len(body) != dim:
        raise ParseError(f"expected {dim} amplitude lines, found {len(body)}")
    amps = np.empty(dim, dtype=complex)
    for i, line in enumerate(body):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"amplitude line {i + 1} is not 're im': {line!r}")
        try:
            amps[i] = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise ParseError(f"bad amplitude on line {i + 1}: {line!r}") from None
    nrm = np.linalg.norm(amps)
    if nrm == 0.0:
        raise ParseError("state file holds the zero vector")
    return DenseState(amps, normalized=abs(nrm - 1.0) <= NORM_ATOL)


def format_state_text(state: DenseState) -> str:
    lines = [f"dim {state.dim}"]
    for a in state.amplitudes:
        lines.append(f"{a.real!r} {a.imag!r}")
    return "\n".join(lines) + "\n"


def parse_subset_text(text: str) -> SubsetState:
    lines = _content_lines(text)
    dim = _parse_dim_header(lines, "subset")
    try:
        indices = tuple(int(line) for line in lines[1:])
    except ValueError:
        raise ParseError("subset file lines must be integers") from None
    if not indices:
        raise ParseError("subset file lists no indices")
    try:
        return SubsetState(dim, indices)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_subset_text(s: SubsetState) -> str:
    lines = [f"dim {s.dim}"]
    lines.extend(str(i) for i in s.indices)
    return "\n".join(lines) + "\n"


def read_state(path) -> DenseState:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_state_text(fh.read())


def write_state(state: DenseState, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_state_text(state))


def read_subset(path) -> SubsetState:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_subset_text(fh.read())


def write_subset(s: SubsetState, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_subset_text(s))
