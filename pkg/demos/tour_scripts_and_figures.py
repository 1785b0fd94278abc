"""Construction scripts and deterministic figures.

Parses the shipped dani_circle.sulva script, evaluates it with exact
assertion checking, prints the report, and writes the figure as SVG
(byte-identical on every run).

Run with:  python3 demos/tour_scripts_and_figures.py [output.svg]
"""

import sys
from pathlib import Path

from sulvalab.sulvascript import evaluate, extract_figures, parse, render_report
from sulvalab.svg_render import to_svg

script_path = Path(__file__).resolve().parent / "dani_circle.sulva"
source = script_path.read_text(encoding="utf-8")

parsed = parse(source)
assert parsed.ok, [str(d) for d in parsed.diagnostics]
print(f"parsed {script_path.name}: {len(parsed.script.statements)} statements")

result = evaluate(parsed.script)
for diagnostic in result.diagnostics:
    print(f"{script_path.name}:{diagnostic}")
print(f"assertions hold: {result.ok}")
print()
print(render_report(result, digits=12), end="")

figures = extract_figures(result)
document = to_svg(figures)
target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("dani_circle.svg")
target.write_text(document, encoding="utf-8", newline="")
print()
print(f"wrote {len(figures)} figures to {target} ({len(document)} bytes)")
