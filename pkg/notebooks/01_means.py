"""Special means of two positive numbers.

For 0 < a < b the harmonic, geometric, logarithmic, identric and arithmetic
means are strictly ordered H < G < L < I < A.  This script prints the table
for a few pairs and shows how the p-logarithmic mean moves between them.
"""

from pompeiu_ostrowski.means import PositivePair, chain_holds, means_table, p_logarithmic_mean

for a, b in [(1, 2), (1, 4), (0.5, 10), (3, 3.0001)]:
    pair = PositivePair(a, b)
    table = means_table(pair)
    cells = "  ".join(f"{k}={v:.6f}" for k, v in table.items())
    print(f"({a}, {b})  {cells}  chain={chain_holds(pair)}")

# L_p sweeps through familiar means as p varies:
# p = -2 gives G, p = -1 gives L, p -> 0 gives I and p = 1 gives A.
pair = PositivePair(1, 4)
for p in (-2, -1, -1e-12, 0.5, 1, 2):
    print(f"L_{p}(1, 4) = {p_logarithmic_mean(pair, p):.9f}")
