"""Closed-form Picard groups and Pi-Picard sets, with membership tests."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .cocycle import PI, build_system, solve_pi
from .errors import (InadmissibleInput, LengthMismatch, NotAnElement, OutOfRange,
                     SuperpicError)
from .factor import factorize
from .fan import check_decorations, classical_pic_rank, normal_fan
from .polytope import (is_qgr_kind, parallel_component_number,
                       pc_witness_classes, validate_edge_directions)
from .superalg import render_poly

CLOSED_FORM = "closed_form"
COCYCLE_ORACLE = "cocycle_oracle"

TRIVIAL = "trivial"
FULL = "full_Z_plus_C"
CONSTRAINED = "constrained"

CONSTRAINT_TEXT = "at most one c_i != 0; c_i^2 = l_i whenever d_i > 1"


@dataclass(frozen=True)
class PicReport:
    rank: int
    witness_classes: tuple = ()
    method: str = CLOSED_FORM

    def to_json(self):
        return {"rank": self.rank, "witness_classes": [list(d) for d in self.witness_classes],
                "method": self.method}


@dataclass(frozen=True)
class PiPicReport:
    simplex_factors: tuple
    structure: str
    thick_rank: int
    constraints: str = ""
    ansatz_relative: bool = False
    residual: tuple = field(default=())    # rendered equations (ansatz-relative reports)

    def to_json(self):
        out = {"simplex_factors": list(self.simplex_factors), "structure": self.structure,
               "thick_rank": self.thick_rank, "constraints": self.constraints}
        if self.ansatz_relative:
            out["label"] = "ansatz-relative"
            out["residual"] = list(self.residual)
        return out


@dataclass(frozen=True)
class SqrtMarker:
    """Stands for +sqrt(l) or -sqrt(l) when the root is not rational."""
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __str__(self):
        return ("" if self.sign > 0 else "-") + "sqrt(l)"


@dataclass(frozen=True, eq=False)
class PiSheafClass:
    factor_index: int
    ell: int
    c: Union[Fraction, SqrtMarker] = Fraction(0)

    def satisfies(self, d):
        if d <= 1 or isinstance(self.c, SqrtMarker):
            return True
        return Fraction(self.c) ** 2 == self.ell

    def _iso_key(self):
        # negating the odd involution gives an isomorphic sheaf
        if isinstance(self.c, SqrtMarker):
            return (self.factor_index, self.ell, "sqrt")
        return (self.factor_index, self.ell, abs(Fraction(self.c)))

    def __eq__(self, other):
        if not isinstance(other, PiSheafClass):
            return NotImplemented
        if isinstance(self.c, SqrtMarker) != isinstance(other.c, SqrtMarker):
            return (self.ell == other.ell and self.factor_index == other.factor_index
                    and _square(self.c, self.ell) == _square(other.c, other.ell))
        return self._iso_key() == other._iso_key()

    def __hash__(self):
        return hash((self.factor_index, self.ell))

    def to_json(self):
        c = str(self.c) if isinstance(self.c, SqrtMarker) else str(Fraction(self.c))
        return {"factor_index": self.factor_index, "l": self.ell, "c": c}


def _square(c, ell):
    return Fraction(ell) if isinstance(c, SqrtMarker) else Fraction(c) ** 2


def _check_range(r, n):
    if not (isinstance(r, int) and isinstance(n, int)) or n < 0 or not 0 <= r <= n:
        raise OutOfRange(f"need 0 <= r <= n, got r={r}, n={n}")


# ---------------------------------------------------------------- Grassmannians

def qgr_pic(r, n):
    """Picard group of QGr(r, n): Z only for the Pi-projective line."""
    _check_range(r, n)
    if (r, n) == (1, 2):
        return PicReport(1, ((1, -1),))
    return PicReport(0)


def qgr_pi_pic(r, n):
    _check_range(r, n)
    thick = 1 if 0 < r < n else 0
    if (r, n) == (1, 2):
        return PiPicReport((1,), FULL, thick, "")
    if n > 2 and r in (1, n - 1):
        return PiPicReport((n - 1,), CONSTRAINED, thick, CONSTRAINT_TEXT)
    return PiPicReport((), TRIVIAL, thick, "")


# ---------------------------------------------------------------- polytopes

def _admissible(p):
    rep = validate_edge_directions(p)
    if not rep.ok:
        raise InadmissibleInput(f"edges with inadmissible directions: {list(rep.offending)}")
    dec = check_decorations(normal_fan(p))
    if not dec.ok:
        raise InadmissibleInput(f"decoration violations in cones: {[v[0] for v in dec.violations]}")


def pic_of_polytope(p):
    """Rank pc(P) with its witness classes."""
    if p.num_vertices == 1:
        return PicReport(0)
    _admissible(p)
    witnesses = tuple(sorted(pc_witness_classes(p)))
    rank = parallel_component_number(p)
    if rank != len(witnesses):
        raise SuperpicError("witness count disagrees with pc")
    return PicReport(rank, witnesses)


def _thick_rank(p):
    if p.num_vertices == 1:
        return 0
    return classical_pic_rank(normal_fan(p))


def pi_pic_of_polytope(p):
    if p.num_vertices == 1:
        return PiPicReport((), TRIVIAL, 0, "")
    rep = validate_edge_directions(p)
    if not rep.ok:
        raise InadmissibleInput(f"edges with inadmissible directions: {list(rep.offending)}")
    fact = factorize(p)
    dims = tuple(fact.simplex_dims)
    thick = _thick_rank(p)
    if not is_qgr_kind(p):
        return _ansatz_report(p, fact, dims, thick)
    if not dims:
        return PiPicReport((), TRIVIAL, thick, "")
    nonpoint = fact.nonpoint_factors()
    if len(nonpoint) == 1 and nonpoint[0][2] == 1:
        return PiPicReport(dims, FULL, thick, "")
    return PiPicReport(dims, CONSTRAINED, thick, CONSTRAINT_TEXT)


def _ansatz_report(p, fact, dims, thick):
    sol = solve_pi(build_system(p, PI))
    if sol.is_trivial:
        return PiPicReport(dims, TRIVIAL, thick, "", True)
    nonpoint = fact.nonpoint_factors()
    if len(nonpoint) == 1 and nonpoint[0][2] == 1 and not sol.residual:
        return PiPicReport(dims, FULL, thick, "", True)
    return PiPicReport(dims, CONSTRAINED, thick, "see residual", True,
                       tuple(render_poly(r) for r in sol.residual))


# ---------------------------------------------------------------- membership

def is_pi_element(report, assignment):
    """assignment: one (l_i, c_i) per simplex factor."""
    assignment = list(assignment)
    if len(assignment) != len(report.simplex_factors):
        raise LengthMismatch(f"{len(report.simplex_factors)} factors, {len(assignment)} pairs")
    if report.structure == TRIVIAL:
        return all(l == 0 and _is_zero(c) for l, c in assignment)
    if report.structure == FULL:
        return True
    nonzero = [k for k, (_, c) in enumerate(assignment) if not _is_zero(c)]
    if len(nonzero) > 1:
        return False
    for d, (l, c) in zip(report.simplex_factors, assignment):
        if d > 1 and _square(c, l) != l:
            return False
    return True


def _is_zero(c):
    return not isinstance(c, SqrtMarker) and Fraction(c) == 0


_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_ORDINALS = ["first", "second", "third", "fourth", "fifth", "sixth"]


def _pspace(d):
    return "P_Π" + str(d).translate(_SUP)


def _ordinal(k):
    return _ORDINALS[k] if k < len(_ORDINALS) else f"{k + 1}th"


def _line(ell):
    return "O" if ell == 0 else f"O({ell})"


def _coef(c):
    return str(c) if isinstance(c, SqrtMarker) else str(Fraction(c))


def tensor_description(p, assignment, report=None):
    """Readable decomposition of a Pi-invertible sheaf class."""
    report = report or pi_pic_of_polytope(p)
    if not is_pi_element(report, assignment):
        raise NotAnElement(f"{assignment} is not in the Pi-Picard set")
    assignment = list(assignment)
    dims = report.simplex_factors
    if not dims:
        return "trivial"
    carrier = next((k for k, (_, c) in enumerate(assignment) if not _is_zero(c)), None)
    if carrier is None and all(d == 1 for d in dims):
        return "⊠".join(_line(l) for l, _ in assignment) + " with trivial odd part"
    seg_rank = {}
    for k, d in enumerate(dims):
        if d == 1:
            seg_rank[k] = len(seg_rank)
    pieces = []
    if carrier is not None:
        l, c = assignment[carrier]
        d = dims[carrier]
        if d > 1:
            pieces.append(f"O_Π({l}) on the {_pspace(d)} factor")
        else:
            head = f"{_line(l)} with " if l else ""
            pieces.append(f"{head}continuous-family class c={_coef(c)} on {_ordinal(seg_rank[carrier])} {_pspace(1)}")
    for k, (l, c) in enumerate(assignment):
        if k == carrier:
            continue
        d = dims[k]
        if d == 1:
            where = f"{_ordinal(seg_rank[k])} {_pspace(1)}" if len(seg_rank) > 1 else _pspace(1)
            if l:
                pieces.append(f"O({l}) on {where}")
            elif carrier is None or dims[carrier] > 1:
                pieces.append(f"trivial on {where}")
        else:
            pieces.append(f"trivial on the {_pspace(d)} factor")
    return " ⊗ ".join(pieces)
