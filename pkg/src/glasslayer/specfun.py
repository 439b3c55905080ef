"""Special functions for the analytic conformal map.

Complete elliptic integrals via the arithmetic-geometric mean, Jacobi
elliptic functions sn/cn/dn for complex argument via a descending
Landen/AGM amplitude recursion combined with the exact addition
identities, and the principal-branch complex arcsine.

All routines are pure and accept scalars or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "EllipticModulus",
    "complete_elliptic_K",
    "complete_elliptic_E",
    "jacobi_sn_cn_dn",
    "complex_arcsin",
]

_AGM_MAX_ITER = 40


@dataclass(frozen=True)
class EllipticModulus:
    """Elliptic parameter m in (0,1) with its complement mc = 1 - m."""

    m: float
    mc: float = field(init=False)

    def __post_init__(self):
        if not 0.0 < self.m < 1.0:
            raise ValueError(f"elliptic parameter must lie in (0,1), got m={self.m}")
        object.__setattr__(self, "mc", 1.0 - self.m)

    @classmethod
    def from_sech2(cls, arg: float) -> "EllipticModulus":
        """Modulus m = sech^2(arg), the form used by the wedge map."""
        return cls(1.0 / np.cosh(arg) ** 2)


def _agm_chain(m: float):
    """AGM sequence (a_i, b_i, c_i) for parameter m, c_0 = sqrt(m)."""
    a, b, c = 1.0, np.sqrt(1.0 - m), np.sqrt(m)
    a_seq, c_seq = [a], [c]
    for _ in range(_AGM_MAX_ITER):
        a, b, c = 0.5 * (a + b), np.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
        if abs(c) <= np.finfo(float).eps * abs(a):
            break
    return a_seq, c_seq


def complete_elliptic_K(m: EllipticModulus | float) -> float:
    """Complete elliptic integral of the first kind K(m), 0 < m < 1."""
    m_val = m.m if isinstance(m, EllipticModulus) else float(m)
    if not 0.0 < m_val < 1.0:
        raise ValueError(f"complete_elliptic_K requires m in (0,1), got {m_val}")
    a_seq, _ = _agm_chain(m_val)
    return np.pi / (2.0 * a_seq[-1])


def complete_elliptic_E(m: EllipticModulus | float) -> float:
    """Complete elliptic integral of the second kind E(m), 0 < m < 1."""
    m_val = m.m if isinstance(m, EllipticModulus) else float(m)
    if not 0.0 < m_val < 1.0:
        raise ValueError(f"complete_elliptic_E requires m in (0,1), got {m_val}")
    a_seq, c_seq = _agm_chain(m_val)
    k_val = np.pi / (2.0 * a_seq[-1])
    c_sum = sum(2.0 ** (i - 1) * c * c for i, c in enumerate(c_seq))
    return k_val * (1.0 - c_sum)


def _real_sn_cn_dn(x: np.ndarray, m: float):
    """sn, cn, dn for real argument via the descending amplitude recursion."""
    x = np.asarray(x, dtype=float)
    if m < 4.0 * np.finfo(float).eps:
        sn = np.sin(x)
        return sn, np.cos(x), np.sqrt(1.0 - m * sn * sn)
    a_seq, c_seq = _agm_chain(m)
    n_level = len(a_seq) - 1
    phi = (2.0**n_level) * a_seq[-1] * x
    for i in range(n_level, 0, -1):
        ratio = np.clip(c_seq[i] / a_seq[i] * np.sin(phi), -1.0, 1.0)
        phi = 0.5 * (phi + np.arcsin(ratio))
    sn = np.sin(phi)
    cn = np.cos(phi)
    # dn > 0 for real argument; the subtraction keeps ~1e-12 relative
    # accuracy for every m bounded away from 1 by more than ~1e-10.
    dn = np.sqrt(1.0 - m * sn * sn)
    return sn, cn, dn


def jacobi_sn_cn_dn(u, m: EllipticModulus):
    """Jacobi elliptic functions sn(u|m), cn(u|m), dn(u|m) for complex u.

    The real and imaginary parts are evaluated with the real-argument
    Landen/AGM recursion at parameters m and 1-m, then combined through
    the exact addition identities. Valid for |Im u| strictly inside the
    pole-free strip |Im u| < K(1-m).
    """
    u = np.asarray(u, dtype=complex)
    x, y = u.real, u.imag
    k_comp = complete_elliptic_K(m.mc)
    if np.any(np.abs(y) >= k_comp * (1.0 - 1e-12)):
        raise ValueError(
            f"argument reaches the pole line |Im u| = K(1-m) = {k_comp:.6g}"
        )
    s, c, d = _real_sn_cn_dn(x, m.m)
    s1, c1, d1 = _real_sn_cn_dn(y, m.mc)
    denom = c1 * c1 + m.m * (s * s1) ** 2
    sn = (s * d1 + 1j * c * d * s1 * c1) / denom
    cn = (c * c1 - 1j * s * d * s1 * d1) / denom
    dn = (d * c1 * d1 - 1j * m.m * s * c * s1) / denom
    if u.ndim == 0:
        return complex(sn), complex(cn), complex(dn)
    return sn, cn, dn


def complex_arcsin(w):
    """Principal-branch arcsin for complex w.

    Real-valued on [-1, 1], odd, image strip Re in [-pi/2, pi/2].  On the
    cuts (-inf,-1] and [1,inf) the value is the limit from the upper half
    plane, which is the side the wedge-map rectangle approaches.
    """
    w = np.asarray(w, dtype=complex)
    on_cut = (w.imag == 0.0) & (np.abs(w.real) > 1.0)
    w_eval = np.where(on_cut, w.real + 1e-300j, w)
    result = -1j * np.log(1j * w_eval + np.sqrt(1.0 - w_eval * w_eval))
    if result.ndim == 0:
        return complex(result)
    return result
