"""Combinatorial model of hyperelliptic directed broken Lefschetz
fibrations over the 2-sphere, and their exact invariants.

A fibration is described by the higher-side fiber (a list of component
genera), an ordered Hurwitz system of Lefschetz data over the north disk,
and an ordered list of round regions (fold circles) crossed on the way to
the south disk.  Each Lefschetz datum is the twist along a vanishing cycle
of type I or II_h, given as a conjugate w t w^-1 of the standard twist of
its type; each round region names the component carrying the fold, the
vanishing-cycle type, and the monodromy along the north boundary of its
annulus, written in the generators of the stabiliser of the cycle.

Two signature pipelines are provided: the localized formula

    Sign M = sum_i h(round monodromy_i) + sum_j sigma_loc(fiber_j)

and an independent assembly through the Meyer cobounding function and the
round-cobordism signatures.  Validation is homological (the symplectic
representation cannot distinguish a mapping class from its product with
the involution, hence the mod -1 comparisons); combinatorially consistent
but geometrically impossible input is caught by the integrality of the
total signature.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from . import locsig, meyer, ratlin, surface
from .locsig import CycleContext
from .surface import CurveDescriptor, TypeI, TypeII
from .words import ChainTwist, SeparatingTwist, Word, gen_word, parse_word, format_word

SPEC_VERSION = 1


class ConsistencyError(ValueError):
    """Input data that cannot come from an actual fibration."""


# -- data model ---------------------------------------------------------------

def chain_twist_conjugator(i: int, g: int) -> Word:
    """Word w with w t_{2g+1} w^-1 = t_i, built from braid moves:
    t_j = (t_{j+1} t_j) t_{j+1} (t_{j+1} t_j)^-1 applied down the chain."""
    surface.check_genus(g)
    if not 1 <= i <= 2 * g + 1:
        raise ValueError(f"chain index {i} out of range")
    items = []
    for j in range(i, 2 * g + 1):
        items += [(ChainTwist(j + 1), 1), (ChainTwist(j), 1)]
    return Word(g, tuple(items))


@dataclass(frozen=True)
class LefschetzDatum:
    """One Lefschetz singularity: the twist w t w^-1 along a conjugate of
    the standard vanishing cycle of the given type."""
    cycle: CurveDescriptor
    conjugator: Word

    @property
    def genus(self) -> int:
        return self.conjugator.genus

    def standard_twist(self) -> Word:
        g = self.genus
        if isinstance(self.cycle, TypeI):
            return gen_word(g, ChainTwist(2 * g + 1))
        return gen_word(g, SeparatingTwist(self.cycle.h))

    def word(self) -> Word:
        """The full twist word w t w^-1."""
        w = self.conjugator
        return w * self.standard_twist() * w.inverse()


def chain_twist_datum(i: int, g: int) -> LefschetzDatum:
    """The Lefschetz datum whose twist is the chain twist t_i."""
    return LefschetzDatum(TypeI(), chain_twist_conjugator(i, g))


@dataclass(frozen=True)
class RoundRegion:
    """A fold circle: which higher-side component it lives on, the type of
    its vanishing cycle, and the monodromy along the north boundary."""
    component: int
    cycle: CurveDescriptor
    monodromy: Word


@dataclass(frozen=True)
class FibrationSpec:
    higher_fiber: tuple[int, ...]
    lefschetz: tuple[LefschetzDatum, ...] = ()
    rounds: tuple[RoundRegion, ...] = ()
    spin: bool = False
    simply_connected: bool = False

    def active_component(self) -> int:
        """The component carrying the Lefschetz data (and the first fold)."""
        return self.rounds[0].component if self.rounds else 0

    def active_genus(self) -> int:
        return self.higher_fiber[self.active_component()]


def component_stages(spec: FibrationSpec) -> list[list[int]]:
    """Component genera before each round region and at the south disk.

    Type I folds drop the component's genus by one; type II_h folds split
    it into genus h (in place) and genus g-h (appended).
    """
    genera = list(spec.higher_fiber)
    stages = [list(genera)]
    for k, r in enumerate(spec.rounds):
        if not 0 <= r.component < len(genera):
            raise ConsistencyError(f"round {k}: component {r.component} does not exist")
        g = genera[r.component]
        if isinstance(r.cycle, TypeI):
            if g < 1:
                raise ConsistencyError(f"round {k}: type I fold on a genus-0 component")
            genera[r.component] = g - 1
        else:
            h = r.cycle.h
            if not 0 <= h <= g:
                raise ConsistencyError(f"round {k}: II_{h} fold on a genus-{g} component")
            genera[r.component] = h
            genera.append(g - h)
        stages.append(list(genera))
    return stages


def hurwitz_word(spec: FibrationSpec) -> Word:
    """Product of all Lefschetz twists, the boundary monodromy of the
    north disk."""
    g = spec.active_genus()
    w = Word(g)
    for d in spec.lefschetz:
        w = w * d.word()
    return w


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class ValidationIssue:
    where: str
    message: str

    def __str__(self):
        return f"{self.where}: {self.message}"


@dataclass
class ValidationReport:
    issues: list[ValidationIssue] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, where: str, message: str):
        self.issues.append(ValidationIssue(where, message))


def _matches_mod_sign(A: np.ndarray, B: np.ndarray) -> str | None:
    """'+' if A == B, '-' if A == -B, None otherwise."""
    if A.shape != B.shape:
        return None
    if (A == B).all():
        return "+"
    if (A == -B).all():
        return "-"
    return None


def _is_positive_transvection(M: np.ndarray, g: int) -> bool:
    """True when M is x -> x + <x, v> v for some integer vector v
    (a conjugate of a right-handed twist along a non-separating cycle)."""
    D = M - ratlin.identity(2 * g)
    if ratlin.rank(D) != 1:
        return False
    v = None
    for j in range(2 * g):
        col = D[:, j]
        if any(x != 0 for x in col):
            d = 0
            for x in col:
                d = gcd(d, int(x))
            v = np.array([int(x) // d for x in col], dtype=object)
            break
    return v is not None and (surface.twist_matrix(v, g) == M).all()


def validate(spec: FibrationSpec) -> ValidationReport:
    """Homological consistency checks; every failure is itemized."""
    report = ValidationReport()
    try:
        stages = component_stages(spec)
    except ConsistencyError as e:
        report.add("components", str(e))
        return report

    g_active = spec.active_genus()
    if g_active < 1:
        if spec.lefschetz or spec.rounds:
            report.add("components", "active component must have genus >= 1")
            return report

    # (a') Lefschetz data are conjugated twists of the right kind
    for j, d in enumerate(spec.lefschetz):
        where = f"lefschetz[{j}]"
        if d.genus != g_active:
            report.add(where, f"word genus {d.genus} != fiber genus {g_active}")
            continue
        if isinstance(d.cycle, TypeII) and not 1 <= d.cycle.h <= g_active - 1:
            report.add(where, f"II_{d.cycle.h} is not essential at genus {g_active}")
            continue
        M = surface.word_to_matrix(d.word())
        if isinstance(d.cycle, TypeI):
            if not _is_positive_transvection(M, g_active):
                report.add(where, "matrix is not a conjugated right-handed transvection")
        else:
            if _matches_mod_sign(M, ratlin.identity(2 * g_active)) is None:
                report.add(where, "separating twist should act as +-identity on homology")

    # (a) round monodromies are words in the stabiliser generators
    contexts = []
    for k, r in enumerate(spec.rounds):
        where = f"rounds[{k}]"
        g_k = stages[k][r.component]
        try:
            ctx = CycleContext(g_k, r.cycle)
            locsig.validate_word(r.monodromy, ctx)
            contexts.append(ctx)
        except (ValueError, locsig.ContextError) as e:
            report.add(where, str(e))
            return report  # later checks need well-formed contexts

    # (b) homological action on the vanishing cycle
    for k, (r, ctx) in enumerate(zip(spec.rounds, contexts)):
        where = f"rounds[{k}]"
        cls = surface.cycle_class(r.cycle, ctx.genus)
        act = surface.curve_action(surface.word_to_matrix(r.monodromy), cls)
        if isinstance(r.cycle, TypeI):
            if act == 0:
                report.add(where, "monodromy does not preserve the vanishing cycle class")
        else:
            report.notes.append(
                f"{where}: separating cycle is invisible to homology (vacuous "
                "action check); orientation preservation is enforced by the "
                "generating set")

    # (c)+(d) boundary monodromies match across the base decomposition,
    # modulo the involution (+-identity on homology)
    tracked: dict[int, Word] = {}
    if g_active >= 1:
        tracked[spec.active_component()] = hurwitz_word(spec)
    for k, (r, ctx) in enumerate(zip(spec.rounds, contexts)):
        where = f"rounds[{k}]"
        expected = tracked.pop(r.component, Word(ctx.genus))
        sign = _matches_mod_sign(surface.word_to_matrix(r.monodromy),
                                 surface.word_to_matrix(expected))
        if sign is None:
            report.add(where, "monodromy does not match the incoming boundary "
                              "monodromy on homology (even mod the involution)")
        elif sign == "-":
            report.notes.append(f"{where}: matches incoming monodromy only up to "
                                "the involution; homology cannot resolve the sign")
        pushed = locsig.push_forward(r.monodromy, ctx)
        if isinstance(r.cycle, TypeI):
            if ctx.genus - 1 >= 1:
                tracked[r.component] = pushed
        else:
            side1, side2 = pushed
            if side1.genus >= 1:
                tracked[r.component] = side1
            if side2.genus >= 1:
                tracked[len(stages[k])] = side2  # appended component index
    # south disk: whatever monodromy survives must bound a trivial bundle
    # (for a pure Lefschetz fibration this is the Hurwitz product itself)
    for comp, w in tracked.items():
        g_low = stages[-1][comp] if comp < len(stages[-1]) else None
        if g_low is None or g_low < 1:
            continue
        sign = _matches_mod_sign(surface.word_to_matrix(w),
                                 ratlin.identity(2 * g_low))
        if sign is None:
            report.add("south disk",
                       f"component {comp}: residual monodromy is not homologically "
                       "trivial, the south-side bundle cannot be trivial")
        elif sign == "-":
            report.notes.append(f"south disk: component {comp} trivial only up to "
                                "the involution")
    report.notes.append("membership checks are homological (necessary conditions); "
                        "geometric isotopy is the caller's responsibility")
    return report


# -- invariants ---------------------------------------------------------------

def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(
            f"{what} came out {x}, not an integer: the input data is not "
            "realizable by a fibration")
    return int(x)


@dataclass(frozen=True)
class SignatureBreakdown:
    sigma_terms: tuple[tuple[str, Fraction], ...]
    h_terms: tuple[tuple[str, Fraction], ...]

    @property
    def total(self) -> Fraction:
        return (sum((v for _, v in self.sigma_terms), Fraction(0))
                + sum((v for _, v in self.h_terms), Fraction(0)))


def signature_breakdown(spec: FibrationSpec) -> SignatureBreakdown:
    g = spec.active_genus()
    stages = component_stages(spec)
    sigma_terms = tuple(
        (f"sigma_loc[{j}]({d.cycle})", locsig.sigma_loc(d.cycle, g))
        for j, d in enumerate(spec.lefschetz))
    h_terms = []
    for k, r in enumerate(spec.rounds):
        ctx = CycleContext(stages[k][r.component], r.cycle)
        h_terms.append((f"h[{k}](g={ctx.genus}, {r.cycle})",
                        locsig.h_word(r.monodromy, ctx)))
    return SignatureBreakdown(sigma_terms, tuple(h_terms))


def total_signature(spec: FibrationSpec) -> int:
    """Signature by the localized formula; raises ConsistencyError when the
    rational total is not an integer (unrealizable input)."""
    return _as_integer(signature_breakdown(spec).total, "total signature")


def signature_meyer_path(spec: FibrationSpec) -> int:
    """Signature assembled from the cobounding function, the round-cobordism
    signatures, and the fiber-neighborhood signatures (0 for type I, -1 for
    type II); an independent route that must agree with total_signature."""
    stages = component_stages(spec)
    total = Fraction(0)
    for k, r in enumerate(spec.rounds):
        ctx = CycleContext(stages[k][r.component], r.cycle)
        total += locsig.s_word(r.monodromy, ctx)
    if spec.active_genus() >= 1:
        boundary = hurwitz_word(spec)
        total += -meyer.phi(boundary.inverse())
    for d in spec.lefschetz:
        total += -meyer.phi(d.word())
        if isinstance(d.cycle, TypeII):
            total += -1
    return _as_integer(total, "Meyer-path signature")


def euler_characteristic(spec: FibrationSpec) -> int:
    """chi = chi(north fiber) + #Lefschetz + chi(south fiber); round regions
    contribute zero."""
    stages = component_stages(spec)
    chi_top = sum(2 - 2 * n for n in stages[0])
    chi_bottom = sum(2 - 2 * n for n in stages[-1])
    return chi_top + len(spec.lefschetz) + chi_bottom


# -- homeomorphism type -------------------------------------------------------

# standard building blocks and their (b2+, b2-)
_DISPLAY = {
    "CP2": "CP²",
    "CP2bar": "CP̄²",
    "S2xS2": "S²×S²",
    "E2": "E(2)",
}
_B2 = {"CP2": (1, 0), "CP2bar": (0, 1), "S2xS2": (1, 1), "E2": (3, 19)}
_PAREN_IN_SUMS = {"S2xS2"}


@dataclass(frozen=True)
class HomeoReport:
    status: str                      # "ok" or "indeterminate"
    summands: tuple[tuple[int, str], ...] = ()
    display: str = ""
    notes: tuple[str, ...] = ()


def _format_summands(summands) -> str:
    if not summands:
        return "S⁴"
    multi = sum(k for k, _ in summands) > 1
    parts = []
    for k, block in summands:
        name = _DISPLAY[block]
        if block in _PAREN_IN_SUMS and multi:
            name = f"({name})"
        parts.append(f"{k}{name}" if k > 1 else name)
    text = " # ".join(parts)
    if summands[0][0] > 1:
        text = "#" + text
    return text


def _recompose_check(summands, sig: int, euler: int) -> None:
    b2p = sum(k * _B2[b][0] for k, b in summands)
    b2m = sum(k * _B2[b][1] for k, b in summands)
    count = sum(k for k, _ in summands)
    chi = 2 + b2p + b2m  # connected sum of count blocks: chi = sum chi_i - 2(count-1)
    if b2p - b2m != sig or chi != euler:
        raise ConsistencyError(
            f"decomposition recomposes to (sig, chi) = ({b2p - b2m}, {chi}), "
            f"wanted ({sig}, {euler})")


def homeomorphism_report(sig: int, euler: int, spin: bool,
                         simply_connected: bool) -> HomeoReport:
    """Connected-sum decomposition of the homeomorphism type of a closed
    simply connected 4-manifold with the given invariants."""
    if not simply_connected:
        return HomeoReport(status="indeterminate",
                           notes=("homeomorphism type requires a simply "
                                  "connected total space",))
    b2 = euler - 2
    if b2 < 0 or (b2 + sig) % 2 or (b2 - sig) % 2:
        raise ConsistencyError(f"(sig, euler) = ({sig}, {euler}) admits no "
                               "closed simply connected manifold")
    b2p, b2m = (b2 + sig) // 2, (b2 - sig) // 2
    if b2p < 0 or b2m < 0:
        raise ConsistencyError(f"negative b2+ or b2-: ({b2p}, {b2m})")
    notes = ()
    if not spin:
        summands = []
        if b2p:
            summands.append((b2p, "CP2"))
        if b2m:
            summands.append((b2m, "CP2bar"))
        summands = tuple(summands)
    else:
        if sig % 16:
            raise ConsistencyError(
                f"a smooth closed spin 4-manifold needs 16 | signature, got {sig}")
        if sig > 0:
            raise ConsistencyError("positive-signature spin decompositions are "
                                   "not modelled")
        a = -sig // 16
        # chi = 22a + 2b + 2 for a E(2) summands and b copies of S2xS2
        rem = euler - 2 - 22 * a
        if rem < 0 or rem % 2:
            raise ConsistencyError(
                f"no spin decomposition: euler {euler} incompatible with {a} E(2) summands")
        b = rem // 2
        summands = []
        if a:
            summands.append((a, "E2"))
        if b:
            summands.append((b, "S2xS2"))
        summands = tuple(summands)
    _recompose_check(summands, sig, euler)
    return HomeoReport(status="ok", summands=summands,
                       display=_format_summands(summands), notes=notes)


# -- built-in families --------------------------------------------------------

def family_spec(family: str, g: int, n: int) -> FibrationSpec:
    """The two built-in families of simplified fibrations.

    "mgn": Hurwitz system (t_{2g} ... t_2 t_1^2 t_2 ... t_{2g})^{2n}, one
    type I fold with monodromy t_{2g+1}^{-4n}; signature -4gn, spin iff g
    and n are both even.

    "mgn_tilde": the same system followed by (t_1 ... t_{2g-2})^{2(2g-1)n},
    fold monodromy (t_{2g+1}^{-2} iota)^{2n} (t_1 ... t_{2g-2})^{2(2g-1)n};
    signature -4g^2n, spin iff g is even.
    """
    name = family.replace("-", "_")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if name == "mgn":
        if g < 1:
            raise ValueError(f"family mgn needs g >= 1, got {g}")
        indices = list(range(2 * g, 0, -1)) + [1] + list(range(2, 2 * g + 1))
        data = tuple(chain_twist_datum(i, g) for _ in range(2 * n) for i in indices)
        mono = gen_word(g, ChainTwist(2 * g + 1), -4 * n)
        rounds = (RoundRegion(0, TypeI(), mono),)
        return FibrationSpec((g,), data, rounds,
                             spin=(g % 2 == 0 and n % 2 == 0), simply_connected=True)
    if name == "mgn_tilde":
        if g < 2:
            raise ValueError(f"family mgn_tilde needs g >= 2, got {g}")
        indices = list(range(2 * g, 0, -1)) + [1] + list(range(2, 2 * g + 1))
        data = [chain_twist_datum(i, g) for _ in range(2 * n) for i in indices]
        tail = list(range(1, 2 * g - 1))
        data += [chain_twist_datum(i, g)
                 for _ in range(2 * (2 * g - 1) * n) for i in tail]
        from .words import IOTA, chain_word
        mono = ((gen_word(g, ChainTwist(2 * g + 1), -2) * gen_word(g, IOTA)) ** (2 * n)
                * chain_word(g, tail, 2 * (2 * g - 1) * n))
        rounds = (RoundRegion(0, TypeI(), mono),)
        return FibrationSpec((g,), tuple(data), rounds,
                             spin=(g % 2 == 0), simply_connected=True)
    raise ValueError(f"unknown family {family!r} (use mgn or mgn-tilde)")


# -- abelianization of the stabiliser -----------------------------------------

def separating_torsion(g: int, h: int) -> int:
    """Torsion order of H_1 of the stabiliser of a type II_h curve, computed
    as the Smith normal form of the presentation
    (Z + Z) / <(4h(2h+1), -4(g-h)(2(g-h)+1))>."""
    if not (g >= 2 and 1 <= h <= g - 1):
        raise ValueError(f"type II_h abelianization needs g >= 2, 1 <= h <= g-1")
    rel = [[4 * h * (2 * h + 1)], [-4 * (g - h) * (2 * (g - h) + 1)]]
    _, D, _ = ratlin.smith_normal_form(rel)
    return int(D[0, 0])


def abelianization(g: int, cycle: CurveDescriptor) -> str:
    """H_1 of the subgroup of the hyperelliptic mapping class group
    preserving a curve of the given type (with orientation, when
    separating)."""
    surface.check_genus(g)
    if isinstance(cycle, TypeI):
        return "Z ⊕ Z/2" if g == 1 else "Z ⊕ (Z/2)²"
    d = separating_torsion(g, cycle.h)
    return f"Z ⊕ Z/{d}"


# -- full report --------------------------------------------------------------

@dataclass
class InvariantReport:
    spec: FibrationSpec
    validation: ValidationReport
    signature: int
    euler: int
    breakdown: SignatureBreakdown
    meyer_path_signature: int
    two_paths_agree: bool
    homeomorphism: HomeoReport
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "signature": self.signature,
            "euler_characteristic": self.euler,
            "sigma_terms": [[k, str(v)] for k, v in self.breakdown.sigma_terms],
            "h_terms": [[k, str(v)] for k, v in self.breakdown.h_terms],
            "meyer_path_signature": self.meyer_path_signature,
            "two_paths_agree": self.two_paths_agree,
            "validation": {
                "ok": self.validation.ok,
                "issues": [str(i) for i in self.validation.issues],
                "notes": list(self.validation.notes),
            },
            "homeomorphism": {
                "status": self.homeomorphism.status,
                "summands": [[k, b] for k, b in self.homeomorphism.summands],
                "display": self.homeomorphism.display,
            },
            "flags": {"spin": self.spec.spin,
                      "simply_connected": self.spec.simply_connected},
            "notes": list(self.notes),
        }


def compute_report(spec: FibrationSpec) -> InvariantReport:
    validation = validate(spec)
    if not validation.ok:
        raise ConsistencyError("validation failed: "
                               + "; ".join(str(i) for i in validation.issues))
    breakdown = signature_breakdown(spec)
    sig = _as_integer(breakdown.total, "total signature")
    euler = euler_characteristic(spec)
    meyer_sig = signature_meyer_path(spec)
    homeo = homeomorphism_report(sig, euler, spec.spin, spec.simply_connected)
    notes = []
    if (sig - euler) % 2:
        notes.append("signature and Euler characteristic have opposite parity; "
                     "check the simply-connected flag")
    touched = {r.component for r in spec.rounds} | {spec.active_component()}
    idle = [c for c in range(len(spec.higher_fiber)) if c not in touched]
    if idle:
        notes.append(f"components {idle} carry no folds or Lefschetz data: "
                     "assumed trivial bundles, contributing only to the Euler "
                     "characteristic")
    notes.append("spin and simply-connected flags are caller-asserted inputs")
    return InvariantReport(spec=spec, validation=validation, signature=sig,
                           euler=euler, breakdown=breakdown,
                           meyer_path_signature=meyer_sig,
                           two_paths_agree=(meyer_sig == sig),
                           homeomorphism=homeo, notes=tuple(notes))


# -- JSON serialization -------------------------------------------------------

def _cycle_to_json(cycle: CurveDescriptor) -> dict:
    if isinstance(cycle, TypeI):
        return {"type": "I"}
    return {"type": "II", "h": cycle.h}


def _cycle_from_json(doc: dict) -> CurveDescriptor:
    if doc["type"] == "I":
        return TypeI()
    if doc["type"] == "II":
        return TypeII(int(doc["h"]))
    raise ValueError(f"unknown cycle type {doc!r}")


def spec_to_json(spec: FibrationSpec) -> dict:
    stages = component_stages(spec)
    rounds = []
    for k, r in enumerate(spec.rounds):
        rounds.append({"component": r.component,
                       "cycle": _cycle_to_json(r.cycle),
                       "monodromy": format_word(r.monodromy)})
    lefschetz = []
    for d in spec.lefschetz:
        doc = _cycle_to_json(d.cycle)
        if d.conjugator.items:
            doc["conjugator"] = format_word(d.conjugator)
        lefschetz.append(doc)
    return {
        "spec_version": SPEC_VERSION,
        "higher_fiber": [{"genus": n} for n in spec.higher_fiber],
        "lefschetz": lefschetz,
        "rounds": rounds,
        "flags": {"spin": spec.spin, "simply_connected": spec.simply_connected},
    }


def spec_from_json(doc: dict) -> FibrationSpec:
    version = doc.get("spec_version")
    if version != SPEC_VERSION:
        raise ValueError(f"unsupported spec_version {version!r}")
    higher = tuple(int(c["genus"]) for c in doc["higher_fiber"])
    rounds_doc = doc.get("rounds", [])
    active = int(rounds_doc[0]["component"]) if rounds_doc else 0
    if not 0 <= active < len(higher):
        raise ValueError(f"active component {active} does not exist")
    g_active = higher[active]
    lefschetz = []
    for entry in doc.get("lefschetz", []):
        cycle = _cycle_from_json(entry)
        conj = parse_word(entry.get("conjugator", ""), g_active)
        lefschetz.append(LefschetzDatum(cycle, conj))
    # genera evolve as rounds are applied; parse each monodromy at the genus
    # of its component at that stage
    genera = list(higher)
    rounds = []
    for k, entry in enumerate(rounds_doc):
        comp = int(entry["component"])
        if not 0 <= comp < len(genera):
            raise ValueError(f"rounds[{k}]: component {comp} does not exist")
        cycle = _cycle_from_json(entry["cycle"])
        g_k = genera[comp]
        mono = parse_word(entry["monodromy"], g_k)
        rounds.append(RoundRegion(comp, cycle, mono))
        if isinstance(cycle, TypeI):
            genera[comp] = g_k - 1
        else:
            genera[comp] = cycle.h
            genera.append(g_k - cycle.h)
    flags = doc.get("flags", {})
    return FibrationSpec(higher, tuple(lefschetz), tuple(rounds),
                         spin=bool(flags.get("spin", False)),
                         simply_connected=bool(flags.get("simply_connected", False)))


def load_spec(path: str) -> FibrationSpec:
    with open(path) as fh:
        return spec_from_json(json.load(fh))
