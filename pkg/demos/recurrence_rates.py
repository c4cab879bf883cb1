"""
Recurrence rates along a Sturmian word
======================================

For each depth n we take the length-n prefix of the word, find the
smallest gap between two of its occurrences, and divide by n.  For the
golden-angle word that ratio keeps oscillating: it dips below 1 and
climbs back above 7/5 forever, so liminf and limsup disagree.
"""

from subrec import rate_series
from subrec.presets import get_preset

src = get_preset("fibonacci")
rs = rate_series(src, 200)

# the tail (n > depth/2) is the part the summaries are computed from
print("depth      :", rs.depth)
print("tail starts:", rs.tail_start)
print("tail min   :", rs.tail_min(), "=", float(rs.tail_min()))
print("tail max   :", rs.tail_max(), "=", float(rs.tail_max()))
print("stabilized :", rs.stabilized_fraction())

# the dips land where n passes a continued-fraction denominator; print
# the depths where the running minimum drops
mins = rs.running_min()
print("\nrecord lows:")
prev = None
for entry, rm in zip(rs.entries, mins):
    if rm != prev:
        print("  n=%-4d tau=%-5d tau/n=%s" % (entry.n, entry.tau, entry.ratio))
        prev = rm

# same machinery on a periodic word for contrast: tau is constant, so
# tau/n just decays like 2/n and the liminf is 0
per = rate_series(get_preset("periodic01"), 200)
print("\nperiodic tail min:", per.tail_min())

rs.to_csv()  # returns the CSV text; the CLI writes the same table
