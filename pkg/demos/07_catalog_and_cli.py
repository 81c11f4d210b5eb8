"""
Example catalog and the command line
====================================

The same reports are available from the ``hpdcalc`` command.
"""

import io
import json

from hpdcalc import hpd_engine as hpd
from hpdcalc.cli import run

for name in hpd.CATALOG:
    rep = hpd.example_catalog(name)
    print(f"{name:24s} passed={rep.all_passed} total rank={rep.total_rank}")
    for note in rep.annotations:
        print("    ", note)

for n in (1, 2, 3):
    rank = hpd.example_catalog("quadric_even", n).block_of("HPD_CATEGORY").rank
    print(f"Q^{2 * n}: rank C = {rank}")

# Equivalent to: hpdcalc hpd2 --m 5 --d 3 --ell 1 --format json
out = io.StringIO()
code = run(["hpd2", "--m", "5", "--d", "3", "--ell", "1"], stdout=out)
report = json.loads(out.getvalue())
print("\nexit", code, [(b["label"], b["rank"]) for b in report["blocks"]])

# A sweep over ell, as a block table
out = io.StringIO()
run(["hpd2", "--m", "5", "--d", "3", "--ell", "1", "--sweep", "ell=1:3", "--format", "tsv"], stdout=out)
print(out.getvalue())
