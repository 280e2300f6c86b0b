"""Stable-base-locus chambers of the effective cone, n = 3.

The effective cone of the space of complete quadric surfaces is cut into
eight regions; inside each, the stable base locus of every divisor is the
same configuration of boundary divisors.  Each region is the cone over a
triangle of named generators, with half-open walls deciding ownership of
shared faces.  The classifier solves exactly for the coordinates of a
divisor in each candidate triple and applies the sign conditions, so wall
points resolve deterministically.

The duality involution (H1 <-> H3, E1 <-> E3) permutes the regions as
(3 4)(6 7) and fixes the rest; the region data below is arranged so the
classification commutes with it everywhere, including on walls and rays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import InconsistentSystem, solve_exact
from .picard import (
    DivisorClass,
    E1_3,
    E2_3,
    E3_3,
    H1_3,
    H2_3,
    H3_3,
    class_P,
    cone_membership,
    convert,
    curves_x3,
    pair,
    xi,
)

GENERATORS = {
    "H1": H1_3,
    "H2": H2_3,
    "H3": H3_3,
    "P": class_P(),
    "E1": E1_3,
    "E2": E2_3,
    "E3": E3_3,
}

_GEN_ORDER = ("H1", "H2", "H3", "P", "E1", "E2", "E3")
_GEN_H = {name: convert(d, "H").coeffs for name, d in GENERATORS.items()}

# locus pieces; E13 stands for the surface E1 n E3 inside either divisor
LOCUS_PIECES = ("E1", "E2", "E3", "E13")

_LOCUS_LABEL = {
    frozenset(): "empty",
    frozenset({"E13"}): "E1 cap E3",
    frozenset({"E1"}): "E1",
    frozenset({"E3"}): "E3",
    frozenset({"E2"}): "E2",
    frozenset({"E1", "E3"}): "E1 cup E3",
    frozenset({"E2", "E3"}): "E2 cup E3",
    frozenset({"E1", "E2"}): "E1 cup E2",
}


def locus_label(pieces) -> str:
    return _LOCUS_LABEL[frozenset(pieces)]


def locus_subset(forced, reported) -> bool:
    """Containment of locus unions as point sets, not as piece sets.

    E13 lies inside both E1 and E3, so a forced E13 is covered by either;
    a full divisor piece is only covered by itself.
    """
    rep = frozenset(reported)
    for piece in forced:
        if piece in rep:
            continue
        if piece == "E13" and ("E1" in rep or "E3" in rep):
            continue
        return False
    return True


@dataclass(frozen=True)
class RegionSpec:
    chamber_id: int
    # acceptance cones: tuples (generator names, per-coordinate flags),
    # flag ">=" closed or ">" strict; a point is accepted by the region if
    # some cone accepts it (and, for the last region, it is not nef)
    cones: tuple
    position_basis: tuple  # generator names used only for reporting
    base_locus: frozenset
    exclude_nef: bool = False


REGIONS = (
    RegionSpec(1, ((("H1", "H2", "H3"), (">=", ">=", ">=")),), ("H1", "H2", "H3"), frozenset()),
    RegionSpec(2, ((("H1", "H3", "P"), (">=", ">=", ">")),), ("H1", "H3", "P"), frozenset({"E13"})),
    RegionSpec(3, ((("H3", "E3", "P"), (">=", ">", ">=")),), ("H3", "E3", "P"), frozenset({"E3"})),
    RegionSpec(4, ((("H1", "E1", "P"), (">=", ">", ">=")),), ("H1", "E1", "P"), frozenset({"E1"})),
    RegionSpec(5, ((("P", "E1", "E3"), (">=", ">", ">")),), ("P", "E1", "E3"), frozenset({"E1", "E3"})),
    RegionSpec(6, ((("H3", "E2", "E3"), (">=", ">", ">")),), ("H3", "E2", "E3"), frozenset({"E2", "E3"})),
    RegionSpec(7, ((("H1", "E1", "E2"), (">=", ">", ">")),), ("H1", "E1", "E2"), frozenset({"E1", "E2"})),
    RegionSpec(
        8,
        ((("H1", "H2", "E2"), (">=", ">=", ">=")), (("H2", "H3", "E2"), (">=", ">=", ">="))),
        ("H1", "H3", "E2"),
        frozenset({"E2"}),
        exclude_nef=True,
    ),
)

MODEL_X3 = "X3"
MODEL_P9 = "P9 = Hilb^((x+1)^2)(P3)"
MODEL_P9_DUAL = "P9*"
MODEL_CHOW = "Chow2(1,X3)"
MODEL_SMALL = "C/(Z/2)"
MODEL_FLIP = "X3+ (flip)"
MODEL_P_RAY = "G(2,5)/(Z/2)"


@dataclass(frozen=True)
class ChamberReport:
    chamber_id: int
    position: str  # "interior", "ray X" or "wall X,Y" in the region's triple
    base_locus: frozenset
    base_locus_label: str
    model_label: str | None
    notes: tuple = ()
    certificate: dict | None = None

    def to_json(self) -> dict:
        return {
            "chamber": self.chamber_id,
            "position": self.position,
            "base_locus_pieces": sorted(self.base_locus),
            "base_locus": self.base_locus_label,
            "model": self.model_label,
            "notes": list(self.notes),
            "certificate": self.certificate,
        }


def _coords_in(d: DivisorClass, gens) -> tuple | None:
    h = convert(d, "H").coeffs
    matrix = [[_GEN_H[g][i] for g in gens] for i in range(3)]
    try:
        return tuple(solve_exact(matrix, list(h)))
    except InconsistentSystem:
        return None


def _cone_accepts(d: DivisorClass, gens, flags) -> bool:
    coords = _coords_in(d, gens)
    if coords is None:
        return False
    for value, flag in zip(coords, flags):
        if flag == ">=" and value < 0:
            return False
        if flag == ">" and value <= 0:
            return False
    return True


def _is_nef(d: DivisorClass) -> bool:
    return cone_membership(d, "nef").contains


def region_accepts(spec: RegionSpec, d: DivisorClass) -> bool:
    if spec.exclude_nef and _is_nef(d):
        return False
    return any(_cone_accepts(d, gens, flags) for gens, flags in spec.cones)


def accepting_regions(d: DivisorClass) -> list:
    return [spec.chamber_id for spec in REGIONS if region_accepts(spec, d)]


def _position(spec: RegionSpec, d: DivisorClass) -> str:
    coords = _coords_in(d, spec.position_basis)
    support = [g for g, c in zip(spec.position_basis, coords) if c != 0]
    if len(support) == 3:
        return "interior"
    if len(support) == 1:
        return "ray %s" % support[0]
    support.sort(key=_GEN_ORDER.index)
    return "wall %s,%s" % (support[0], support[1])


_NEF_MODELS = {
    "interior": MODEL_X3,
    "ray H1": MODEL_P9,
    "ray H2": MODEL_CHOW,
    "ray H3": MODEL_P9_DUAL,
    "wall H1,H3": MODEL_SMALL,
}


def _report_for(spec: RegionSpec, d: DivisorClass) -> ChamberReport:
    position = _position(spec, d)
    model = None
    notes = ()
    certificate = None
    if spec.chamber_id == 1:
        model = _NEF_MODELS.get(position)
        if position == "wall H1,H3":
            cert_value = pair(curves_x3()["C12"], d)
            certificate = {"pair(C12,D)": str(cert_value)}
            notes = ("small contraction; exceptional locus is E1 cap E3",)
        elif model is None:
            notes = ("nef boundary face; the induced contraction is not named here",)
    elif spec.chamber_id == 2:
        if position == "ray P":
            model = MODEL_P_RAY
            notes = (
                "base locus value on this ray taken from the surrounding region; "
                "the covering-curve pairings force the same locus here",
            )
        elif position == "interior":
            model = MODEL_FLIP
    return ChamberReport(
        chamber_id=spec.chamber_id,
        position=position,
        base_locus=spec.base_locus,
        base_locus_label=locus_label(spec.base_locus),
        model_label=model,
        notes=notes,
        certificate=certificate,
    )


def classify(d: DivisorClass) -> ChamberReport:
    """Locate an effective divisor class in the chamber decomposition."""
    if d.n != 3:
        raise ValueError("chamber decomposition is for the n = 3 space")
    if not any(d.coeffs):
        raise ValueError("zero class has no chamber")
    if not cone_membership(d, "eff").contains:
        raise ValueError("class is not effective")
    for spec in REGIONS:
        if region_accepts(spec, d):
            return _report_for(spec, d)
    raise RuntimeError("effective class escaped the chamber cover: %r" % (d,))


def classify_segment(t) -> ChamberReport:
    """Report for t*H1 + (1-t)*H3 on the closed segment 0 <= t <= 1.

    The open part is the small-contraction wall; the endpoints hand off to
    the ray reports of H1 and H3.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    d = DivisorClass(3, "H", (t, 0, 1 - t))
    return classify(d)


# covering curves and the locus piece each one sweeps
FORCING_CURVES = (
    ("C1", "E1"),
    ("C1star", "E1"),
    ("C3", "E3"),
    ("C2", "E2"),
    ("L2", "E2"),
    ("C12", "E13"),
)


def forced_base_loci(d: DivisorClass) -> frozenset:
    """Locus pieces forced into the base locus by negative curve pairings.

    Each listed curve moves in a family covering its locus, so a divisor
    pairing negatively with it must contain the whole locus.
    """
    curves = curves_x3()
    forced = set()
    for curve_name, piece in FORCING_CURVES:
        if pair(curves[curve_name], d) < 0:
            forced.add(piece)
    return frozenset(forced)


_XI_GEN = {"H1": "H3", "H3": "H1", "E1": "E3", "E3": "E1"}
_XI_CHAMBER = {1: 1, 2: 2, 3: 4, 4: 3, 5: 5, 6: 7, 7: 6, 8: 8}
_XI_MODEL = {MODEL_P9: MODEL_P9_DUAL, MODEL_P9_DUAL: MODEL_P9}


def _xi_pieces(pieces) -> frozenset:
    swap = {"E1": "E3", "E3": "E1"}
    return frozenset(swap.get(p, p) for p in pieces)


def _xi_position(position: str) -> str:
    if position == "interior":
        return position
    kind, _, names = position.partition(" ")
    mapped = [_XI_GEN.get(g, g) for g in names.split(",")]
    mapped.sort(key=_GEN_ORDER.index)
    return "%s %s" % (kind, ",".join(mapped))


def _sample_region(rng, chamber_id: int) -> DivisorClass:
    spec = REGIONS[chamber_id - 1]
    gens, flags = spec.cones[rng.randrange(len(spec.cones))]
    while True:
        coeffs = []
        for flag in flags:
            low = 1 if flag == ">" else 0
            coeffs.append(Fraction(rng.randint(low, 6), rng.choice((1, 1, 2))))
        if spec.chamber_id == 1 and not any(coeffs):
            continue
        if spec.exclude_nef and coeffs[2] == 0:
            continue  # the E2 coordinate must be positive to leave the nef cone
        h = [sum(c * _GEN_H[g][i] for c, g in zip(coeffs, gens)) for i in range(3)]
        return DivisorClass(3, "H", tuple(h))


def _sample_effective(rng) -> DivisorClass:
    while True:
        coeffs = tuple(
            Fraction(0) if rng.random() < 0.15 else Fraction(rng.randint(1, 12), rng.choice((1, 1, 3)))
            for _ in range(3)
        )
        if any(coeffs):
            return DivisorClass(3, "E", coeffs)


def chamber_census(samples: int, seed: int) -> dict:
    """Classify seeded random effective classes and verify the partition.

    Alternates region-targeted samples (so every chamber is exercised) with
    uniform effective samples.  For each class it checks that exactly one
    region accepts, that classification commutes with the duality
    involution, that curve-forced loci are contained in the reported locus,
    and that the locus is empty exactly on the nef cone.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    counts = {cid: 0 for cid in range(1, 9)}
    for i in range(samples):
        if i % 2 == 0:
            d = _sample_region(rng, (i // 2) % 8 + 1)
        else:
            d = _sample_effective(rng)
        accepted = accepting_regions(d)
        if len(accepted) != 1:
            raise AssertionError("regions %r accept %r" % (accepted, d))
        report = classify(d)
        counts[report.chamber_id] += 1

        mirror = classify(xi(d))
        if mirror.chamber_id != _XI_CHAMBER[report.chamber_id]:
            raise AssertionError("duality maps chamber %d to %d at %r" % (report.chamber_id, mirror.chamber_id, d))
        if mirror.base_locus != _xi_pieces(report.base_locus):
            raise AssertionError("duality breaks base locus at %r" % (d,))
        if mirror.position != _xi_position(report.position):
            raise AssertionError("duality breaks position at %r" % (d,))
        if mirror.model_label != _XI_MODEL.get(report.model_label, report.model_label):
            raise AssertionError("duality breaks model label at %r" % (d,))

        if not locus_subset(forced_base_loci(d), report.base_locus):
            raise AssertionError("forced locus exceeds reported locus at %r" % (d,))
        if (report.base_locus == frozenset()) != _is_nef(d):
            raise AssertionError("empty locus must coincide with nef at %r" % (d,))
    result = {
        "samples": samples,
        "chamber_counts": {str(cid): counts[cid] for cid in range(1, 9)},
        "all_eight_hit": all(counts[cid] > 0 for cid in range(1, 9)),
    }
    if samples >= 1000 and not result["all_eight_hit"]:
        raise AssertionError("some chamber was never sampled: %r" % (counts,))
    return result
