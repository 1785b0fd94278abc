"""sulvalab: exact-arithmetic laboratory for Sulvasutra constructions.

The package decides every geometric claim with exact constructible-real
arithmetic and reports every transcendental comparison as a certified
interval.  Entry points:

- :mod:`sulvalab.exactreal`: quadratic-tower numbers, pi-linear
  quantities, certified dyadic enclosures, decimal rendering.
- :mod:`sulvalab.geom`: exact points, segments, squares, circles and the
  cord-geometry primitives built on them.
- :mod:`sulvalab.catalog`: the named construction rules with citations.
- :mod:`sulvalab.analysis`: implied pi, signed relative errors, rankings.
- :mod:`sulvalab.sulvascript`: the .sulva construction-script language.
- :mod:`sulvalab.svg_render`: deterministic SVG figures.
- :mod:`sulvalab.cli`: the ``sulva`` command.
"""

from .analysis import compare_rules, implied_pi, full_table, relative_error
from .catalog import CATALOG, Rule, RuleOutput, lookup, rule_ids
from .exactreal import (
    CapacityError,
    ConstructibleReal,
    DomainError,
    Interval,
    PI,
    Quantity,
    UnsupportedQuantityError,
    constructible,
    enclose,
    from_rational,
    pi_enclosure,
    sign,
    sqrt,
    to_decimal,
)
from .geom import Circle, Point, Segment, Square
from .sulvascript import evaluate, format_script, parse

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CapacityError",
    "Circle",
    "ConstructibleReal",
    "DomainError",
    "Interval",
    "PI",
    "Point",
    "Quantity",
    "Rule",
    "RuleOutput",
    "Segment",
    "Square",
    "UnsupportedQuantityError",
    "__version__",
    "compare_rules",
    "constructible",
    "enclose",
    "evaluate",
    "format_script",
    "from_rational",
    "implied_pi",
    "lookup",
    "full_table",
    "parse",
    "pi_enclosure",
    "relative_error",
    "rule_ids",
    "sign",
    "sqrt",
    "to_decimal",
]
