"""Closed-form predictions for teleporting a pure entangled pair via Werner channels.

``e12`` is the entanglement of the unknown pure pair, ``ew`` the entanglement
of each Werner channel. None of these functions touch the brute-force
simulator; agreement with it is checked by the test-suite and ``verify``.
"""
import math

from .errors import DomainError

_EDGE = 1e-12


def _unit(name, x):
    if not -_EDGE <= x <= 1.0 + _EDGE:
        raise DomainError(f"{name}={x} outside [0, 1]")
    return min(1.0, max(0.0, float(x)))


def kappa(ew):
    """Channel contraction factor (2 ew + 1) / 3."""
    ew = _unit("ew", ew)
    return (2.0 * ew + 1.0) / 3.0


def fidelity_classical(ew):
    ew = _unit("ew", ew)
    return (ew + 2.0) ** 2 / 9.0


def fidelity_quantum(ew):
    ew = _unit("ew", ew)
    return (2.0 * ew + 1.0) * (ew - 1.0) / 9.0


def fidelity_formula(e12, ew):
    """Average fidelity of the replica: F_c + F_q * e12^2 (F_q <= 0)."""
    e12 = _unit("e12", e12)
    return fidelity_classical(ew) + fidelity_quantum(ew) * e12**2


def replica_bracket(e12, ew):
    """Unclamped (1/9)[(2 ew^2 + 2 ew - 4) + (1 + 2 ew)^2 e12]; its sign decides entanglement."""
    e12 = _unit("e12", e12)
    ew = _unit("ew", ew)
    return ((2.0 * ew**2 + 2.0 * ew - 4.0) + (1.0 + 2.0 * ew) ** 2 * e12) / 9.0


def replica_entanglement_formula(e12, ew):
    return max(0.0, replica_bracket(e12, ew))


def critical_channel_entanglement(e12):
    """Channel entanglement below which the replica is separable.

    At ``e12 = 0`` this evaluates to 1: no channel transfers entanglement.
    """
    e12 = _unit("e12", e12)
    r = math.sqrt(2.0 * e12 + 1.0)
    return (3.0 - r) / (2.0 * r)


def correlation_transfer(ic12, ew):
    """Correlation information after teleporting both particles: kappa^4 * ic12."""
    if not -_EDGE <= ic12 <= 2.0 + _EDGE:
        raise DomainError(f"ic12={ic12} outside [0, 2]")
    return kappa(ew) ** 4 * ic12


def correlation_two_step(ic12, ew):
    """(ic72, ic78) for teleporting particle 1 and then particle 2, each a kappa^2 step."""
    k2 = kappa(ew) ** 2
    ic72 = k2 * ic12
    return ic72, k2 * ic72


def _linear_coefficient(ew, form):
    if form == "published":
        return 1.0 - ew
    if form == "exact":
        # 1 - kappa
        return 2.0 * (1.0 - ew) / 3.0
    raise ValueError(f"form must be 'published' or 'exact', got {form!r}")


def _entangled_channel(ew):
    ew = _unit("ew", ew)
    if ew <= 0.0:
        raise DomainError("intermediate-state relations need an entangled channel (ew > 0)")
    return ew


def intermediate_correlation(e72, ew, form="published"):
    """Correlation information of rho_72 written through its entanglement e72.

    ``form="published"`` uses the published relation with linear term (1 - ew);
    ``form="exact"`` uses (1 - kappa) = 2 (1 - ew) / 3, which is what the
    brute-force simulator obeys for Schmidt inputs.
    """
    ew = _entangled_channel(ew)
    if e72 < 0.0:
        raise DomainError(f"e72={e72} is negative")
    y = e72 * (e72 + _linear_coefficient(ew, form)) / (ew * (2.0 + ew))
    return 2.0 * kappa(ew) ** 2 * (4.0 - 3.0 * y) * y


def intermediate_quadratic(e72, e12, ew, form="published"):
    """Residual of e72^2 + L e72 - ew (2 + ew) e12^2 / 3, L the form's linear coefficient."""
    ew = _entangled_channel(ew)
    e12 = _unit("e12", e12)
    return e72**2 + _linear_coefficient(ew, form) * e72 - ew * (2.0 + ew) * e12**2 / 3.0


def intermediate_entanglement(e12, ew, form="published"):
    """Positive root e72 of :func:`intermediate_quadratic` (entanglement after one teleport)."""
    ew = _entangled_channel(ew)
    e12 = _unit("e12", e12)
    lin = _linear_coefficient(ew, form)
    const = ew * (2.0 + ew) * e12**2 / 3.0
    # stable form of (-lin + sqrt(lin^2 + 4 const)) / 2
    disc = math.sqrt(lin * lin + 4.0 * const)
    return 2.0 * const / (lin + disc) if lin + disc > 0.0 else 0.0
