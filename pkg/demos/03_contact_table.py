"""The per-type contact table.

For every Picard-one adjoint variety at desk scale: contact numerics, the
exterior square of the twisted conormal of the contact distribution, and the
section counts of twisted 2-forms obtained through the contact sequences.
The comparison column records where the derived decompositions disagree with
previously printed weights (documented suspected typos) - nothing is
silently overridden.
"""

from adjvar.adjoint import section4_table

rows = section4_table(max_classical_rank=7, compare_paper=True)

header = (
    f"{'type':>5} {'dim X':>6} {'m':>3} {'index':>6} {'dim g':>6} "
    f"{'h0 O2(1)':>9} {'h0 O2(2)':>9}  {'vs printed':>10}"
)
print(header)
print("-" * len(header))
for row in rows:
    h1 = row["h0_omega2_1"]
    h1txt = (
        str(h1["value"])
        if "value" in h1
        else f"[{h1['bounds'][0]},{h1['bounds'][1]}]->{h1['adjudicated']}"
    )
    print(
        f"{row['type']:>5} {row['dim_X']:>6} {row['m']:>3} {row['index']:>6} "
        f"{row['dim_g']:>6} {h1txt:>9} {row['h0_omega2_2']['value']:>9}  "
        f"{row['comparison']['flag']:>10}"
    )

print()
print("Pieces of wedge^2 D^vee(2), with bundle ranks:")
for row in rows:
    pieces = ", ".join(
        f"E_{p['weight']}(t={p['twist']}) rank {p['dim']}"
        for p in row["wedge2_Ddual_2"]["pieces"]
    )
    print(f"  {row['type']:>3}: {pieces}")

print()
print("Recorded notes on printed-weight discrepancies:")
for row in rows:
    for note in row["comparison"]["notes"]:
        print(f"  {row['type']:>3}: {note}")
