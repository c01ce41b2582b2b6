"""The catalog: fraction entries, determinant entries and derivation scripts."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Fr
from typing import Callable

from ..contfrac import CFPattern, X
from ..errors import UnknownId
from ..perms import exp_pattern, flajolet_pattern
from . import patterns as P
from .determinants import CLOSED_FORMS, ResidueForm
from .displayed import DISPLAYED, STATED_FIRST_VALUES

R_VALUES = (1, 2, 3, 4)


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    kind: str  # "fraction" | "determinant"
    target: str
    pattern: Callable[..., CFPattern] | None = None
    closed_form: ResidueForm | None = None
    fraction_class: str = "H"  # S | J | H | general
    delta: int = 2
    r_values: tuple = (None,)
    displayed: dict = field(default_factory=dict)
    stated_first: dict = field(default_factory=dict)

    @property
    def parameterized(self) -> bool:
        return self.r_values != (None,)

    def build(self, r=None) -> CFPattern:
        if self.pattern is None:
            raise UnknownId(f"{self.id} has no fraction pattern")
        return self.pattern(r) if self.parameterized else self.pattern()

    def first_values(self, r=None) -> dict:
        """Explicit first values of the pattern, as auditable data."""
        cf = self.build(r)
        out = {("b", 0): cf.b0}
        out.update({("a", j): v for j, v in cf.a_first.items()})
        out.update({("b", j): v for j, v in cf.b_first.items()})
        return out


def _frac(id_, target, pattern, cls, r=False, delta=2):
    return FormulaEntry(id_, "fraction", target, pattern=pattern, fraction_class=cls, delta=delta,
                        r_values=R_VALUES if r else (None,), displayed=DISPLAYED.get(id_, {}),
                        stated_first=STATED_FIRST_VALUES.get(id_, {}))


def _det(id_, target, r=False):
    return FormulaEntry(id_, "determinant", target, closed_form=CLOSED_FORMS[id_],
                        r_values=R_VALUES if r else (None,))


_FRACTIONS = [
    _frac("Thm1.1", "E", P.thm1_1, "H"),
    _frac("Eq3", "E_even", P.secant_j, "J"),
    _frac("Eq4", "E_odd", P.tangent_j, "H"),
    _frac("Eq21", "E", P.super1, "general", delta=1),
    _frac("Eq22", "E", P.one_plus, "H"),
    _frac("Eq23", "E_from1", P.from_one, "H"),
    _frac("F1", "Er_interleaved", P.f1, "J", r=True),
    _frac("F1z", "Er_packed", P.f1z, "J", r=True),
    _frac("F2", "Er_packed", P.f2, "J", r=True),
    _frac("F3", "Er_packed_from1", P.f3, "J", r=True),
    _frac("F4", "E_odd_interleaved", P.f4, "J"),
    _frac("F4x", "E_odd_packed", P.f4x, "J"),
    _frac("F5", "E_odd_packed", P.f5, "J"),
    _frac("F6", "E_odd_packed_from3", P.f6, "J"),
    _frac("F7", "E_shift1", P.f7, "J"),
    _frac("F8pre", "Er_over_r_odd", P.f8_pre, "H", r=True),
    _frac("F8", "Er_over_r_odd", P.f8, "H", r=True),
    _frac("F9", "E_odd", P.f9, "H"),
    _frac("Enp2_xx", "E_shift2", P.shift2_linear_start, "H"),
    _frac("Enp2_notsuper1", "E_shift2", P.shift2_not_super1, "H"),
    _frac("F10", "E_shift2", P.f10, "H"),
    _frac("F11", "E_odd_from3_odd", P.f11, "H"),
    _frac("Lambert_tan", "tan", P.lambert_tan, "H"),
    _frac("Lambert_tanh", "tanh", P.lambert_tanh, "H"),
    _frac("F12", "e_odd_interleaved", P.f12, "J"),
    _frac("f13", "e_odd_packed", P.f13_pre, "J"),
    _frac("F13", "e_odd_packed", P.f13, "J"),
    _frac("F14", "e_odd_from3_odd", P.f14, "H"),
    _frac("F15", "tan", P.f15, "H"),
    _frac("F16", "e_shift1", P.f16, "J"),
    _frac("f17", "e", P.f17_pre, "J"),
    _frac("F17", "e", P.f17, "J"),
    _frac("f18", "e_shift2", P.f18_pre, "J"),
    _frac("F18", "e_shift2", P.f18, "J"),
    _frac("f19", "e_shift3", P.f19_pre, "J"),
    _frac("F19", "e_shift3", P.f19, "J"),
    _frac("F20", "e_shift4", P.f20, "J"),
    _frac("F21", "e_odd_from3_interleaved", P.f21, "J"),
    _frac("f22", "e_odd_packed_from3", P.f22_pre, "J"),
    _frac("F22", "e_odd_packed_from3", P.f22, "J"),
    _frac("f23", "e_odd_packed_from5", P.f23_pre, "J"),
    _frac("F23", "e_odd_packed_from5", P.f23, "J"),
    _frac("F24", "e_odd_packed_from7", P.f24, "J"),
]

_DETERMINANTS = [
    _det("Thm1.2", "E"),
    _det("H1", "Er_interleaved", r=True),
    _det("H2", "Er_packed", r=True),
    _det("H3", "Er_packed_from1", r=True),
    _det("H4", "E_odd_interleaved"),
    _det("H5", "E_odd_packed"),
    _det("H6", "E_odd_packed_from3"),
    _det("H7", "E_shift1"),
    _det("H8", "Er_over_r_odd", r=True),
    _det("H9", "E_odd"),
    _det("H10", "E_shift2"),
    _det("H11", "E_odd_from3_odd"),
    _det("H12", "e_odd_interleaved"),
    _det("H13", "e_odd_packed"),
    _det("H14", "e_odd_from3_odd"),
    _det("H15", "tan"),
    _det("H16", "e_shift1"),
    _det("H17", "e"),
    _det("H18", "e_shift2"),
    _det("H19", "e_shift3"),
    _det("H20", "e_shift4"),
    _det("H21", "e_odd_from3_interleaved"),
    _det("H22", "e_odd_packed_from3"),
    _det("H23", "e_odd_packed_from5"),
    _det("H24", "e_odd_packed_from7"),
]

ENTRIES: dict[str, FormulaEntry] = {e.id: e for e in _FRACTIONS + _DETERMINANTS}


# -- derivation scripts --------------------------------------------------------
#
# A step is a tuple (op, *args).  The string "r" as an argument is replaced
# by the entry parameter.  Ops: even, odd, chop(p), chop_chain(start),
# haircut(alpha, p), normalize, add(c), divide(c), divide_x(k),
# multiply_x(k), compose_power(k), contract_power(k).

@dataclass(frozen=True)
class Derivation:
    id: str
    source: str  # catalog id, or a key of EXTRA_SOURCES
    steps: tuple
    target: str  # catalog id
    depth: int = 40  # materialized source levels
    compare: int = 12  # leading levels compared structurally
    target_steps: tuple = ()
    r_values: tuple = (None,)
    source_r: object = "r"  # parameter passed to the source ("r" = same as target)


EXTRA_SOURCES: dict[str, Callable[[], CFPattern]] = {
    "flajolet(1,1/2,0,1)": lambda: flajolet_pattern(1, Fr(1, 2), 0, 1),
    "exp(1,1/2,0,1)": lambda: exp_pattern(1, Fr(1, 2), 0, 1),
}


def _d(id_, source, steps, target, r=False, **kw):
    return Derivation(id_, source, tuple(steps), target, r_values=R_VALUES if r else (None,), **kw)


_ODD_SHIFT = (("odd",), ("add", -1), ("divide_x", 1))

DERIVATIONS: dict[str, Derivation] = {d.id: d for d in [
    _d("Eq21->Thm1.1", "Eq21", [("even",)], "Thm1.1", depth=44, compare=20),
    _d("Eq21->Eq22", "Eq21", [("chop", 1), ("chop_chain", 2)], "Eq22", depth=60, compare=12),
    _d("flajolet->Eq23", "flajolet(1,1/2,0,1)", [], "Eq23"),
    _d("Eq23->Eq22", "Eq23", [("add", 1)], "Eq22"),
    _d("Eq22->F7", "Eq22", [("add", -1), ("divide_x", 1)], "F7"),
    _d("Eq4->F4", "Eq4", [("divide_x", 1)], "F4"),
    _d("F1->Eq3", "F1", [], "Eq3", source_r=1),
    _d("F1->F1z", "F1", [("contract_power", 2)], "F1z", r=True),
    _d("F1->F2", "F1", [("contract_power", 2), ("even",)], "F2", r=True),
    _d("F1->F3", "F1", [("contract_power", 2), *_ODD_SHIFT], "F3", r=True),
    _d("F4->F4x", "F4", [("contract_power", 2)], "F4x"),
    _d("F4->F5", "F4", [("contract_power", 2), ("even",)], "F5"),
    _d("F4->F6", "F4", [("contract_power", 2), *_ODD_SHIFT], "F6"),
    _d("F1->F8pre", "F1", [("chop", 1), ("add", -1), ("divide", "r"), ("divide_x", 1)], "F8pre", r=True),
    _d("F1->F8", "F1", [("chop", 1), ("add", -1), ("divide", "r"), ("divide_x", 1), ("even",)], "F8",
       r=True),
    _d("F8->F9", "F8", [], "F9", source_r=0),
    _d("F7->Enp2_xx", "F7", [("haircut", 1, 1), ("normalize",), ("add", -1), ("divide_x", 1)], "Enp2_xx"),
    _d("Enp2_notsuper1->Enp2_xx", "Enp2_notsuper1", [("chop_chain", 3)], "Enp2_xx", depth=60),
    _d("Enp2_notsuper1->F10", "Enp2_notsuper1", [("even",)], "F10"),
    _d("F6->F11", "F6", [("compose_power", 2), ("multiply_x", 1)], "F11"),
    _d("Lambert->F12", "Lambert_tan", [("normalize",), ("divide_x", 1)], "F12"),
    _d("F12->f13", "F12", [("contract_power", 2)], "f13"),
    _d("f13->F13", "f13", [("even",)], "F13"),
    _d("F12->F14", "F12", list(_ODD_SHIFT), "F14"),
    _d("F13->F15", "F13", [("compose_power", 2), ("multiply_x", 1)], "F15"),
    _d("exp->F16", "exp(1,1/2,0,1)", [("divide_x", 1), ("normalize",)], "F16"),
    _d("f17->F16", "f17", list(_ODD_SHIFT), "F16"),
    _d("f17->F17", "f17", [("even",)], "F17"),
    _d("f18->F18", "f18", [("even",)], "F18"),
    _d("f18->F19", "f18", [("odd",), ("add", Fr(-1, 2)), ("divide_x", 1)], "F19"),
    _d("f19->F19", "f19", [("even",)], "F19"),
    _d("f19->F20", "f19", [("odd",), ("add", Fr(-1, 3)), ("divide_x", 1)], "F20"),
    _d("F21->F14", "F21", [("even",)], "F14", target_steps=(("divide_x", 1),)),
    _d("F14->F22", "F14", [("divide_x", 1), ("contract_power", 2)], "F22"),
    _d("F21->f22", "F21", [("contract_power", 2)], "f22"),
    _d("f22->F23", "f22", [("odd",), ("add", Fr(-1, 3)), ("divide_x", 1)], "F23"),
    _d("f23->F23", "f23", [("even",)], "F23"),
    _d("f23->F24", "f23", [("odd",), ("add", Fr(-2, 15)), ("divide_x", 1)], "F24"),
]}


def lookup(id_: str) -> FormulaEntry:
    try:
        return ENTRIES[id_]
    except KeyError:
        raise UnknownId(f"no catalog entry {id_!r}") from None


def lookup_derivation(id_: str) -> Derivation:
    try:
        return DERIVATIONS[id_]
    except KeyError:
        raise UnknownId(f"no derivation {id_!r}") from None
