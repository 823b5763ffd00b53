"""Real spherical-harmonic basis with analytic first and second derivatives.

The basis is the real split of the complex harmonics: for degree n the
ordering is sine parts (most negative order first), the zonal element, then
cosine parts in ascending order.  Flat indices are 1-based.  theta is the
azimuth, phi the polar angle.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidOrderError, PoleProximityError

DEFAULT_POLE_BAND = 1.0e-6
_SQRT2 = np.sqrt(2.0)


def basis_size(max_degree: int) -> int:
    return (max_degree + 1) ** 2


def index_map(n: int, m: int) -> int:
    """Flat 1-based index of degree n, order m."""
    if n < 0 or abs(m) > n:
        raise InvalidOrderError(f"order m={m} invalid for degree n={n}")
    return n * n + n + m + 1


def flat_to_nm(i: int) -> tuple[int, int]:
    """Inverse of index_map."""
    if i < 1:
        raise InvalidOrderError(f"flat index must be >= 1, got {i}")
    n = int(np.sqrt(i - 1))
    m = (i - 1) - n * n - n
    return n, m


def degrees_orders(max_degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays of (n, m) for every flat index up to max_degree."""
    n = np.repeat(np.arange(max_degree + 1), 2 * np.arange(max_degree + 1) + 1)
    i = np.arange(basis_size(max_degree))
    m = i - n * n - n
    return n, m


def _legendre_tables(max_degree: int, cosphi: np.ndarray, sinphi: np.ndarray) -> np.ndarray:
    """L2-normalized associated Legendre values, Condon-Shortley phase included.

    Returns P with P[..., n, m] = sqrt((2n+1)(n-m)!/(4 pi (n+m)!)) P^m_n(cosphi)
    for 0 <= m <= n; other entries zero.
    """
    N = max_degree
    P = np.zeros(cosphi.shape + (N + 1, N + 1))
    pmm = np.full(cosphi.shape, 1.0 / np.sqrt(4.0 * np.pi))
    P[..., 0, 0] = pmm
    for m in range(1, N + 1):
        pmm = pmm * (-np.sqrt((2.0 * m + 1.0) / (2.0 * m))) * sinphi
        P[..., m, m] = pmm
    for m in range(0, N + 1):
        if m + 1 <= N:
            P[..., m + 1, m] = np.sqrt(2.0 * m + 3.0) * cosphi * P[..., m, m]
        for n in range(m + 2, N + 1):
            a = np.sqrt((4.0 * n * n - 1.0) / (n * n - m * m))
            b = np.sqrt(((n - 1.0) ** 2 - m * m) / (4.0 * (n - 1.0) ** 2 - 1.0))
            P[..., n, m] = a * (cosphi * P[..., n - 1, m] - b * P[..., n - 2, m])
    return P


def _ladder(n: np.ndarray, m: np.ndarray) -> np.ndarray:
    # sqrt((n - m)(n + m + 1)), the order-raising coefficient
    return np.sqrt(np.maximum((n - m) * (n + m + 1.0), 0.0))


def _assemble(radial: np.ndarray, theta: np.ndarray, max_degree: int,
              norms: np.ndarray | None, swap_cs: bool = False) -> np.ndarray:
    """Gather flat basis columns from per-(n, |m|) radial tables.

    Column (n, m) is radial[..., n, |m|] times cos(m theta) for m >= 0 and
    sin(|m| theta) for m < 0 (swapped, and sign-adjusted, for swap_cs which
    implements the theta derivative).  Orders m != 0 carry sqrt(2).
    """
    theta = np.asarray(theta, dtype=float)
    npts_shape = theta.shape
    M = basis_size(max_degree)
    n_of, m_of = degrees_orders(max_degree)
    mu = np.abs(m_of)
    morders = np.arange(max_degree + 1)
    ct = np.cos(theta[..., None] * morders)
    st = np.sin(theta[..., None] * morders)
    V = radial[..., n_of, mu].reshape(npts_shape + (M,)).copy()
    if not swap_cs:
        az = np.where(m_of >= 0, ct[..., mu], st[..., mu])
        V *= az
    else:
        # d/dtheta: cos(m t) -> -m sin(m t), sin(|m| t) -> |m| cos(|m| t)
        az = np.where(m_of >= 0, -mu * st[..., mu], mu * ct[..., mu])
        V *= az
    scale = np.where(m_of == 0, 1.0, _SQRT2)
    V *= scale
    if norms is not None:
        V = V / norms
    return V


def _check_pole(phi: np.ndarray, pole_band: float) -> None:
    phi = np.asarray(phi, dtype=float)
    dist = np.minimum(phi, np.pi - phi)
    if np.any(dist < pole_band):
        raise PoleProximityError(
            f"polar angle within {pole_band:g} rad of a pole; "
            "evaluate in the other chart"
        )


def eval_basis(max_degree: int, theta, phi, norms: np.ndarray | None = None) -> np.ndarray:
    """Values of the (N+1)^2 real basis functions at (theta, phi).

    With norms=None the basis is orthonormal in the exact L2 inner product;
    passing the discrete norms of a quadrature grid rescales to the
    grid-normalized basis.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    P = _legendre_tables(max_degree, np.cos(phi), np.sin(phi))
    return _assemble(P, theta, max_degree, norms)


def eval_basis_dtheta(max_degree: int, theta, phi, norms: np.ndarray | None = None) -> np.ndarray:
    """Azimuthal derivatives; exactly representable in the same basis."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    P = _legendre_tables(max_degree, np.cos(phi), np.sin(phi))
    return _assemble(P, theta, max_degree, norms, swap_cs=True)


def _dphi_radial(P: np.ndarray, max_degree: int, cotphi: np.ndarray) -> np.ndarray:
    """Radial factor of the polar derivative: m cot(phi) P[n, m] + c(n, m) P[n, m+1]."""
    N = max_degree
    F = np.zeros_like(P)
    for m in range(0, N + 1):
        ni = np.arange(m, N + 1)
        F[..., ni, m] = m * cotphi[..., None] * P[..., ni, m]
        if m + 1 <= N:
            nn = np.arange(m + 1, N + 1)
            F[..., nn, m] += _ladder(nn.astype(float), float(m)) * P[..., nn, m + 1]
    return F


def eval_basis_dphi(max_degree: int, theta, phi, norms: np.ndarray | None = None,
                    pole_band: float = DEFAULT_POLE_BAND) -> np.ndarray:
    """Polar derivatives via the order-raising recurrence (pointwise exact)."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    _check_pole(phi, pole_band)
    sp = np.sin(phi)
    P = _legendre_tables(max_degree, np.cos(phi), sp)
    F = _dphi_radial(P, max_degree, np.cos(phi) / sp)
    return _assemble(F, theta, max_degree, norms)


def eval_basis_dphiphi(max_degree: int, theta, phi, norms: np.ndarray | None = None,
                       pole_band: float = DEFAULT_POLE_BAND) -> np.ndarray:
    """Second polar derivatives, from differentiating the recurrence once more."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    _check_pole(phi, pole_band)
    sp, cp = np.sin(phi), np.cos(phi)
    cot = cp / sp
    csc2 = 1.0 / (sp * sp)
    N = max_degree
    P = _legendre_tables(N, cp, sp)
    F = np.zeros_like(P)
    for m in range(0, N + 1):
        ni = np.arange(m, N + 1)
        F[..., ni, m] = (m * m * cot[..., None] ** 2 - m * csc2[..., None]) * P[..., ni, m]
        if m + 1 <= N:
            nn = np.arange(m + 1, N + 1)
            c1 = _ladder(nn.astype(float), float(m))
            F[..., nn, m] += (2.0 * m + 1.0) * cot[..., None] * c1 * P[..., nn, m + 1]
        if m + 2 <= N:
            nn = np.arange(m + 2, N + 1)
            c1 = _ladder(nn.astype(float), float(m))
            c2 = _ladder(nn.astype(float), float(m + 1))
            F[..., nn, m] += c1 * c2 * P[..., nn, m + 2]
    return _assemble(F, theta, N, norms)


def theta_closure_coeffs(max_degree: int, norms: np.ndarray | None = None):
    """Index permutation and factors realizing d/dtheta on coefficient vectors.

    Returns (src, dst, fac): a coefficient vector c maps to the derivative
    coefficients d with d[dst] = fac * c[src]; all other entries are zero.
    """
    n_of, m_of = degrees_orders(max_degree)
    nz = m_of != 0
    src = np.nonzero(nz)[0]
    n, m = n_of[src], m_of[src]
    dst = n * n + n - m  # 0-based index of (n, -m)
    # d/dt of a cosine column lands on its sine partner with factor -m,
    # of a sine column on its cosine partner with factor |m| = -m.
    fac = -m.astype(float)
    if norms is not None:
        fac = fac * norms[dst] / norms[src]
    return src, dst, fac


def apply_theta_derivative(coeffs: np.ndarray, max_degree: int,
                           norms: np.ndarray | None = None) -> np.ndarray:
    """Coefficients of the azimuthal derivative of a spectral field."""
    src, dst, fac = theta_closure_coeffs(max_degree, norms)
    out = np.zeros_like(coeffs)
    out[dst] = fac * coeffs[src]
    return out
