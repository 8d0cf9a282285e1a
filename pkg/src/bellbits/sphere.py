"""Haar-uniform sampling and deterministic quadrature on the unit sphere S^(n-1).

The quadrature routines are the independent numerical side of every exact
bound in :mod:`bellbits.exact_bounds`: they never touch the recurrence, only
scipy's adaptive Gauss-Kronrod integrator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

__all__ = [
    "NORM_TOL",
    "QuadratureError",
    "UnitVector",
    "RandomStream",
    "sample_uniform",
    "sample_uniform_batch",
    "abs_coord_integral_quad",
    "max_two_integral",
]

NORM_TOL = 1e-12

# redraw threshold for degenerate Gaussian draws; hit with probability ~0
_ZERO_NORM = 1e-150

_QUAD_TARGET = 1e-12


class QuadratureError(RuntimeError):
    """Adaptive quadrature missed its tolerance; carries the achieved error estimate."""

    def __init__(self, message: str, achieved_error: float):
        super().__init__(f"{message} (achieved error estimate {achieved_error:.3e})")
        self.achieved_error = achieved_error


@dataclass(frozen=True, eq=False)
class UnitVector:
    """A point on S^(n-1), n >= 2; the norm must already be 1 to within 1e-12."""

    components: np.ndarray

    def __post_init__(self):
        arr = np.array(self.components, dtype=float)
        if arr.ndim != 1 or arr.shape[0] < 2:
            raise ValueError("a unit vector needs at least 2 components")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"vector norm {norm!r} is not 1 within {NORM_TOL}")
        arr.flags.writeable = False
        object.__setattr__(self, "components", arr)

    @classmethod
    def normalized(cls, values) -> "UnitVector":
        """Rescale an arbitrary nonzero vector onto the sphere."""
        arr = np.asarray(values, dtype=float)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(arr / norm)

    @classmethod
    def basis(cls, n: int, k: int) -> "UnitVector":
        """Standard basis vector e_k (0-based) in dimension n."""
        if not 0 <= k < n:
            raise ValueError(f"basis index {k} out of range for dimension {n}")
        arr = np.zeros(n)
        arr[k] = 1.0
        return cls(arr)

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    def dot(self, other) -> float:
        vec = other.components if isinstance(other, UnitVector) else np.asarray(other, dtype=float)
        return float(self.components @ vec)

    def __len__(self) -> int:
        return self.dim


@dataclass
class RandomStream:
    """Reproducible randomness: (seed, stream_index) fully determines the sequence.

    Distinct stream indices are derived through numpy's SeedSequence
    spawning, so parallel workers can each own an independent substream of
    one experiment seed.
    """

    seed: int
    stream_index: int = 0
    _generator: np.random.Generator | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        for name, value in (("seed", self.seed), ("stream_index", self.stream_index)):
            if not 0 <= value < 2 ** 64:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {value}")

    @property
    def generator(self) -> np.random.Generator:
        if self._generator is None:
            sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_index,))
            self._generator = np.random.Generator(np.random.PCG64(sequence))
        return self._generator


def _require_dimension(n: int) -> None:
    if n < 2:
        raise ValueError(f"sphere dimension must be >= 2, got {n}")


def sample_uniform(n: int, stream: RandomStream) -> UnitVector:
    """One Haar-uniform point on S^(n-1): n standard normals, normalized."""
    return UnitVector(sample_uniform_batch(n, 1, stream)[0])


def sample_uniform_batch(n: int, count: int, stream: RandomStream) -> np.ndarray:
    """(count, n) array whose rows are i.i.d. Haar-uniform unit vectors.

    Draws advance the stream's generator, so successive calls continue the
    same reproducible sequence.  Zero-norm draws are redrawn.
    """
    _require_dimension(n)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    gen = stream.generator
    rows = gen.standard_normal((count, n))
    norms = np.linalg.norm(rows, axis=1)
    while True:
        bad = norms < _ZERO_NORM
        if not bad.any():
            break
        rows[bad] = gen.standard_normal((int(bad.sum()), n))
        norms[bad] = np.linalg.norm(rows[bad], axis=1)
    return rows / norms[:, None]


def _quad(f, lo: float, hi: float, points=None) -> float:
    result = integrate.quad(
        f, lo, hi, points=points, epsabs=1e-13, epsrel=1e-13, limit=300, full_output=True
    )
    value, abserr = result[0], result[1]
    if abserr > _QUAD_TARGET:
        raise QuadratureError("quadrature did not converge below 1e-12", abserr)
    return value


def abs_coord_integral_quad(n: int) -> float:
    """Mean of |a_1| over S^(n-1) by pure 1D quadrature.

    Reduces to latitude form: int |cos t| sin^(n-2) t dt / int sin^(n-2) t dt
    over [0, pi].  Serves as the independent oracle for the exact kappa(n).
    """
    _require_dimension(n)
    power = n - 2
    numerator = _quad(
        lambda t: abs(math.cos(t)) * math.sin(t) ** power,
        0.0,
        math.pi,
        points=[math.pi / 2],
    )
    denominator = _quad(lambda t: math.sin(t) ** power, 0.0, math.pi)
    return numerator / denominator


def max_two_integral(n: int, theta: float) -> float:
    """Mean of max(|z'.a|, |z''.a|) over S^(n-1).

    Here z' = (sin theta, cos theta, 0, ...) and z'' = (-sin theta,
    cos theta, 0, ...).  Writing the projection of a onto the first
    coordinate plane as r*(cos p, sin p), the two dot products are
    r*sin(p + theta) and r*sin(p - theta), so the integrand is r times a
    function of the planar angle alone -- exactly like |a_1| = r*|cos p|.
    The shared radial factor cancels in the ratio against the mean |a_1|,
    leaving

        result = abs_coord_integral_quad(n) * angular / 4,

    where ``angular`` integrates max(|sin(p+theta)|, |sin(p-theta)|) over
    the full circle and 4 is the circle integral of |cos p|.
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")

    def integrand(p: float) -> float:
        return max(abs(math.sin(p + theta)), abs(math.sin(p - theta)))

    # integrand kinks: zeros of either sine (p = -theta, theta mod pi) and
    # crossings |sin(p+theta)| = |sin(p-theta)| at multiples of pi/2
    breakpoints = sorted(
        {
            theta,
            math.pi - theta,
            math.pi + theta,
            2 * math.pi - theta,
            math.pi / 2,
            math.pi,
            3 * math.pi / 2,
        }
        - {0.0, 2 * math.pi}
    )
    angular = _quad(integrand, 0.0, 2 * math.pi, points=breakpoints)
    return abs_coord_integral_quad(n) * angular / 4.0
