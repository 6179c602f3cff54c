"""Leaves grow like 3^k at fixed n; the planar leaf cost stays polynomial."""

from onepmaxcut.bench import format_table, run_bench

rows = run_bench(nodes=16, kmax=6, seed=5, reps=5, workers=4)
print(format_table(rows))

for r in rows[1:]:
    prev = next(p for p in rows if p.k == r.k - 1)
    print(f"k={r.k}: leaves x{r.mean_leaves / prev.mean_leaves:.2f}, time x{r.mean_ms / prev.mean_ms:.2f}")
