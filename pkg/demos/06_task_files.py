"""
Task files and reports
======================

Verification tasks are written in a small line-oriented language; the
built-in catalog is itself such a file.
"""

import io

from mod2coh import parse, render_tsv, run_suite, serialize
from mod2coh.catalog import builtin_catalog
from mod2coh.cli import main

SOURCE = """
space RP2 gens (x:1:3) cap 2
space RP4 gens (x:1:5) cap 4
bundle nu over RP2 rank 2 sw "1 + x^2"
map f : RP2 -> RP4 codim 2 pullback (x = "x") umkehr1 "x^2" normal nu
task a.thom thom f
task b.equiv equivariant f ell 3
task c.adem adem 2 3 on RP4 upto 4
# a wrong normal bundle gives a witness
bundle bad over RP2 rank 2 sw "1"
map g : RP2 -> RP4 codim 2 pullback (x = "x") umkehr1 "x^2" normal bad
task d.thom thom g
"""

tf = parse(SOURCE)
print(render_tsv(run_suite(tf.tasks, tf)))

# %%
# Canonical form
print(serialize(tf))

# %%
# The whole catalog through the command line front-end
cat = builtin_catalog()
print(len(cat.spaces), "spaces,", len(cat.maps), "maps,", len(cat.tasks), "tasks")
out = io.StringIO()
code = main(["check", "--builtin-catalog"], out=out)
print("exit status", code, "|", out.getvalue().splitlines()[-1])
