"""A two-parameter family of filtration-preserving ring automorphisms.

For a full-family ring whose Q is the pure power Y^m and whose f_{d-1}
vanishes, the assignments

    x -> lam*x
    s -> mu*s + x^(n+e)*a(x)
    y -> (mu^d/lam^n)*y + W
    z -> (mu^(d*m)/lam^(n*m+e))*z + N / (lam^e*x^e)

define a ring automorphism whenever

    mu^(d*m-1) == lam^(n*m)   and
    f_{d-i}(lam*X) == mu^i * f_{d-i}(X)  modulo X^(n+e)   for i = 2..d,

where a(x) is an arbitrary polynomial,

    W = (P(lam*x, mu*s + x^(n+e)*a(x)) - mu^d * P(x, s)) / (lam^n * x^n),
    N = ((mu^d/lam^n)*y + W)^m - (mu^(d*m)/lam^(n*m))*y^m - x^(n+e)*a(x).

Both divisions are exact precisely under the stated congruences; build_auto
performs them as exact polynomial divisions and fails loudly otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .checks import CheckReport
from .derivations import canonical_derivation
from .polynomials import MultiPoly, VarSet, parse_poly
from .rings import QuotElem, RingPresentation, evaluate_in_ring

_X_ONLY = VarSet(("X",))


def _coerce_scalar(value: int | str | Fraction, what: str) -> Fraction:
    if isinstance(value, str):
        value = Fraction(value)
    value = Fraction(value)
    if value == 0:
        raise ValueError(f"{what} must be a nonzero rational")
    return value


@dataclass(frozen=True)
class AutParams:
    """(lam, mu, a): the scaling pair and the free shift polynomial a(X)."""

    lam: Fraction
    mu: Fraction
    a: MultiPoly

    @classmethod
    def make(cls, lam: int | str | Fraction, mu: int | str | Fraction, a: str | MultiPoly = "0") -> AutParams:
        if isinstance(a, str):
            a = parse_poly(a, _X_ONLY)
        if a.varset != _X_ONLY:
            raise ValueError("the shift polynomial must be univariate in X")
        return cls(_coerce_scalar(lam, "lambda"), _coerce_scalar(mu, "mu"), a)

    def to_json_dict(self) -> dict:
        return {"lambda": str(self.lam), "mu": str(self.mu), "a": str(self.a)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> AutParams:
        try:
            return cls.make(data["lambda"], data["mu"], data.get("a", "0"))
        except KeyError as missing:
            raise ValueError(f"parameter JSON lacks key {missing}") from None

    @classmethod
    def from_json(cls, text: str) -> AutParams:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise ValueError(f"bad parameter JSON: {err}") from None
        if not isinstance(data, dict):
            raise ValueError("parameter JSON must be an object")
        return cls.from_json_dict(data)


def _require_normalized(ring: RingPresentation) -> None:
    if ring.family != "full":
        raise ValueError("the automorphism family lives on the full family")
    if ring.cylinder:
        raise ValueError("automorphisms act on the base ring, not its cylinder")
    if any(not g.is_zero() for g in ring.q_coeffs):
        raise ValueError("the automorphism family needs Q = Y^m (all g_j = 0)")
    if not ring.p_coeffs[ring.d - 1].is_zero():
        raise ValueError("the automorphism family needs f_{d-1} = 0")


def check_params(ring: RingPresentation, params: AutParams) -> list[str]:
    """Violated constraints (empty list when the parameters are admissible)."""
    _require_normalized(ring)
    n, e, d, m = ring.n, ring.e, ring.d, ring.m
    violations: list[str] = []
    if params.mu ** (d * m - 1) != params.lam ** (n * m):
        violations.append(
            f"mu^(d*m-1) = {params.mu ** (d * m - 1)} differs from "
            f"lam^(n*m) = {params.lam ** (n * m)}"
        )
    x = MultiPoly.variable(_X_ONLY, "X")
    for i in range(2, d + 1):
        f = ring.p_coeffs[d - i]
        if f.is_zero():
            continue
        shifted = f.substitute({"X": params.lam * x})
        residual = shifted - params.mu ** i * f
        if any(exps[0] < n + e for exps in residual.terms):
            violations.append(
                f"f_{d - i}(lam*X) - mu^{i}*f_{d - i}(X) = {residual} "
                f"is nonzero modulo X^{n + e}"
            )
    return violations


class RingAutomorphism:
    """A ring automorphism stored by its generator images."""

    __slots__ = ("ring", "params", "images")

    def __init__(self, ring: RingPresentation, params: AutParams, images: dict[str, QuotElem]):
        self.ring = ring
        self.params = params
        self.images = images

    def apply(self, a: QuotElem) -> QuotElem:
        if a.ring != self.ring:
            raise ValueError("element belongs to a different ring")
        return evaluate_in_ring(a.rep, self.images)

    def __call__(self, a: QuotElem) -> QuotElem:
        return self.apply(a)

    def compose(self, inner: RingAutomorphism) -> RingAutomorphism:
        """self after inner, with the matching composed parameters."""
        if inner.ring != self.ring:
            raise ValueError("cannot compose automorphisms of different rings")
        images = {nm: self.apply(img) for nm, img in inner.images.items()}
        return RingAutomorphism(self.ring, compose_params(self.ring, self.params, inner.params), images)

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.ring.varset.names),
            "images": {nm: str(self.images[nm]) for nm in self.ring.varset.names},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def build_auto(ring: RingPresentation, params: AutParams) -> RingAutomorphism:
    """Materialize the automorphism; raises on inadmissible parameters."""
    violations = check_params(ring, params)
    if violations:
        raise ValueError("; ".join(violations))
    n, e, d, m = ring.n, ring.e, ring.d, ring.m
    lam, mu = params.lam, params.mu
    vs = ring.varset
    x = MultiPoly.variable(vs, "X")
    s = MultiPoly.variable(vs, "S")
    y = MultiPoly.variable(vs, "Y")
    z = MultiPoly.variable(vs, "Z")
    a_here = params.a.rename(vs)
    s_image = mu * s + x ** (n + e) * a_here

    p = ring.p_poly()
    shifted_p = p.substitute({"X": lam * x, "S": s_image, "Y": y, "Z": z})
    w = (shifted_p - mu ** d * p).divide_exact(lam ** n * x ** n)
    c = mu ** d / lam ** n
    y_image = c * y + w

    numerator = y_image ** m - c ** m * y ** m - x ** (n + e) * a_here
    if e:
        tail = numerator.divide_exact(Fraction(lam) ** e * x ** e)
    else:
        tail = numerator
    z_image = mu ** (d * m) / lam ** (n * m + e) * z + tail

    images = {
        "X": ring.element(lam * x),
        "S": ring.element(s_image),
        "Y": ring.element(y_image),
        "Z": ring.element(z_image),
    }
    return RingAutomorphism(ring, params, images)


def inverse_params(ring: RingPresentation, params: AutParams) -> AutParams:
    """Parameters of the inverse automorphism."""
    n, e = ring.n, ring.e
    lam_inv = 1 / params.lam
    mu_inv = 1 / params.mu
    x = MultiPoly.variable(_X_ONLY, "X")
    a_inv = -mu_inv * lam_inv ** (n + e) * params.a.substitute({"X": lam_inv * x})
    return AutParams(lam_inv, mu_inv, a_inv)


def compose_params(ring: RingPresentation, outer: AutParams, inner: AutParams) -> AutParams:
    """Parameters of outer after inner."""
    n, e = ring.n, ring.e
    x = MultiPoly.variable(_X_ONLY, "X")
    a = inner.mu * outer.a + outer.lam ** (n + e) * inner.a.substitute({"X": outer.lam * x})
    return AutParams(outer.lam * inner.lam, outer.mu * inner.mu, a)


def verify_auto(ring: RingPresentation, params: AutParams) -> CheckReport:
    """Full verification: relations, degree preservation, two-sided inverse."""
    witnesses: list[str] = []
    try:
        auto = build_auto(ring, params)
    except ValueError as err:
        return CheckReport(
            check="automorphism",
            ring=ring.fingerprint(),
            bound=0,
            passed=False,
            witnesses=[str(err)],
        )
    poly_images = {nm: auto.images[nm].rep for nm in ring.varset.names}
    for rel in ring.relation_polys():
        residual = ring.normal_form(rel.substitute(poly_images))
        if not residual.is_zero():
            witnesses.append(f"relation {rel} maps to {residual}")

    D = canonical_derivation(ring)
    expected = {"X": 0, "S": 1, "Y": ring.d, "Z": ring.m * ring.d}
    for nm, want in expected.items():
        got = D.degree(auto.images[nm])
        if got != want:
            witnesses.append(f"degree of image of {nm} is {got}, expected {want}")

    inv = build_auto(ring, inverse_params(ring, params))
    for nm in ring.varset.names:
        gen = ring.generator(nm)
        if inv.apply(auto.images[nm]) != gen:
            witnesses.append(f"inverse fails on {nm} (left)")
        if auto.apply(inv.images[nm]) != gen:
            witnesses.append(f"inverse fails on {nm} (right)")
    return CheckReport(
        check="automorphism",
        ring=ring.fingerprint(),
        bound=0,
        passed=not witnesses,
        witnesses=witnesses,
    )
