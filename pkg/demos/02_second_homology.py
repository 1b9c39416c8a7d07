# Integral H_2 of B(e,e,r) from the Dehornoy-Lafont complex, and of B(2e,e,r) from Salvetti.
from braidhom import compute
from braidhom.expected import h2_b2eer, h2_beer

print("B(e,e,r), Dehornoy-Lafont complex over Z")
for r in (2, 3, 4, 5):
    row = []
    for e in range(2, 7):
        h = compute("dl", {"preset": "cp", "e": e, "r": r}, "Z", max_degree=2).degrees[2]
        row.append(f"{str(h):>14}{'' if h == h2_beer(e, r) else ' (!)'}")
    print(f"r={r}", *row)

print()
print("B(2e,e,r), Salvetti complex with coefficients k[t]/(1-(-t)^e)")
for r in range(2, 7):
    row = []
    for e in range(1, 5):
        h = compute("salvetti", {"r": r, "e": e}, "Z", max_degree=2).degrees[2]
        row.append(f"{str(h):>14}{'' if h == h2_b2eer(e, r) else ' (!)'}")
    print(f"r={r}", *row)

# Full integral homology of B(16,8,8): look for 4-torsion in degree 7
res = compute("salvetti", {"r": 8, "e": 8}, "Z")
for i, h in enumerate(res.degrees):
    print(f"H_{i}(B(16,8,8)) = {h}")
print("audits:", res.audits)
