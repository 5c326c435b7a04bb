"""
Drawing the tessellation
========================

Writes tessellation.svg next to this script.
"""
from fractions import Fraction
from pathlib import Path

from hurwitz_relation.svg import DEFAULT_VIEWPORT, svg_render

# %% Default window, words up to length 4
out = Path(__file__).with_name("tessellation.svg")
out.write_text(svg_render(DEFAULT_VIEWPORT, 4))
print("wrote", out)

# %% A narrower window reaching below y = 1, where the translation strips show up
doc = svg_render((Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(3)), 7, scale=120)
print(doc.count('class="triangle"'), "triangles in the zoomed window")
