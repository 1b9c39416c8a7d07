# Mod-p Betti numbers of B(2e,e,r) against the printed tables and the closed-form series.
import numpy as np

from braidhom import compute
from braidhom.cli import table_audit
from braidhom.series import f2_series, stable_series

# Direct computation: rows are r, columns are degrees
e = 2
dims = np.zeros((9, 10), dtype=int)
for r in range(1, 9):
    d = compute("salvetti", {"r": r, "e": e}, "F2", audit=False).degrees
    dims[r, : len(d)] = d
print("dim H_i(B(4,2,r); F2)")
print(dims[1:, :9])

# The two-variable F2 series, read one power of v higher, reproduces these numbers
closed = f2_series(e, 8, 8, v_offset=1)
print("closed form agrees:", all(closed.column(r)[: r + 1] == list(dims[r, : r + 1]) for r in range(2, 9)))

# Stable range
print("stable F2 series:", stable_series(2, 8))
print("stable F3 series:", stable_series(3, 8))

# Printed table entries that disagree, with the theorem checks each one fails
for p in (2, 3):
    for entry in table_audit(p, 8):
        if not entry["match"]:
            print(f"F{p} r={entry['r']} col={entry['column']:>6} e={entry['e']} i={entry['i']}: "
                  f"table {entry['table']} computed {entry['computed']} {entry['theorem_violations']}")
