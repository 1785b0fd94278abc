"""A walk through the exact-arithmetic core.

Every number below is exact: square roots live in a tower of quadratic
extensions, comparisons are decided by sign tests rather than tolerances,
and anything involving pi is reported as a certified interval.

Run with:  python3 demos/tour_exact_arithmetic.py
"""

from fractions import Fraction

from sulvalab import (
    PI,
    Quantity,
    enclose,
    from_rational,
    pi_enclosure,
    sqrt,
    to_decimal,
)

print("== exact square roots ==")
s2 = sqrt(2)
print(f"sqrt(2)            = {s2}  ~ {to_decimal(s2, 12)}")
print(f"sqrt(2)*sqrt(2)    = {s2 * s2}  (exactly)")
print(f"sqrt(8)            = {sqrt(8)}  (normalized, no new tower level)")
print(f"sqrt(3 + 2*sqrt2)  = {sqrt(3 + 2 * s2)}  (found inside the tower)")
print()

print("== exact comparisons ==")
working_value = from_rational(17, 12)
print(f"17/12 > sqrt(2)?   {working_value > s2}  (decided exactly)")
gap = working_value - s2
print(f"overshoot          = {to_decimal(gap, 9)}  = {gap}")
print()

print("== certified enclosures ==")
radius = (2 + s2) / 6
print(f"(2 + sqrt(2))/6 at 20 bits:  {enclose(radius, 20)}")
print(f"(2 + sqrt(2))/6 at 80 bits:  {enclose(radius, 80)}")
print(f"pi at 64 bits:               {pi_enclosure(64)}")
print()

print("== quantities: c0 + c1*pi ==")
circle_area = Quantity(0, radius * radius)
print(f"area of that circle   = {circle_area}")
print(f"                      ~ {to_decimal(circle_area, 12)}")
print(f"greater than 1?       {circle_area > 1}  (the circling overshoots)")
print(f"pi itself             = {to_decimal(PI, 15)}")
print()

print("== decimal rendering is honest ==")
print(f"1/4 renders exactly:      {to_decimal(Fraction(1, 4), 12)}")
print(f"13/15 rounds and marks:   {to_decimal(Fraction(13, 15), 6)}")
print(f"sqrt(17)/3:               {to_decimal(sqrt(17) / 3, 6)}")
