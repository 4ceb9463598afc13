#!/usr/bin/env python3
"""Smoke tests for the ndqueens python module (run through ctest with
PYTHONPATH pointing at the built extension)."""
import sys

import ndqueens as q


def check(name, cond):
    print(f"{'ok' if cond else 'FAIL'}: {name}")
    if not cond:
        sys.exit(1)


spec = q.BoardSpec(4, 3)
check("spec fields", spec.n == 4 and spec.d == 3 and spec.square_count() == 64)

check("direction count", len(q.directions(3)) == 13)
check("attacks diagonal", q.attacks(q.BoardSpec(3, 2), [1, 1], [2, 2]))
check("attacks mismatch", not q.attacks(q.BoardSpec(3, 3), [1, 1, 1], [2, 3, 2]))
check("lines 3x3", len(q.attack_lines(q.BoardSpec(3, 2))) == 12)
check("neighbors center", len(q.attack_neighbors(q.BoardSpec(3, 2), [2, 2])) == 8)

r = q.solve(spec, time_limit=120)
check("solve (4,3) optimal 7", r["status"] == "optimal" and r["primal"] == 7)
check("solve certificate size", len(r["queens"]) == 7)
check("solve certificate valid", q.verify(spec, r["queens"]) == [])

check("known exact", q.known(7, 3) == {"status": "exact", "value": 32})
check("known lower", q.known(14, 3) == {"status": "lower_bound", "value": 172})
check("known unknown", q.known(99, 9) == {"status": "unknown"})

conflicts = q.verify(q.BoardSpec(3, 2), [[1, 1], [2, 2]])
check("verify reports the diagonal pair", conflicts == [([1, 1], [2, 2])])

lp1 = q.emit_lp(q.BoardSpec(3, 2))
lp2 = q.emit_lp(q.BoardSpec(3, 2))
check("lp deterministic", lp1 == lp2 and lp1.startswith("Maximize"))
lp_inf = q.emit_lp(q.BoardSpec(5, 3), infeasibility_at=14)
check("inf lp has cardinality", " card_0: " in lp_inf and " = 14" in lp_inf)
check("dimacs header", q.emit_dimacs(q.BoardSpec(2, 2)).startswith("p edge 4 6"))

scheme = q.search_scheme(5, 2)
check("scheme found", scheme == {"coeffs": [2], "offset": 0})
queens = q.modular_construct(5, 2, [2])
check("scheme placement", len(queens) == 5 and q.verify(q.BoardSpec(5, 2), queens) == [])
check("no scheme for 4x4", q.search_scheme(4, 2) is None)

check("warmstart entries",
      q.emit_warmstart(q.BoardSpec(5, 2), queens).count(" 1\n") == 5)

inf = q.prove_infeasible(q.BoardSpec(3, 3), 5)
check("prove_infeasible", inf["verdict"] == "infeasible")
check("aggregation refuted", q.aggregation_presolve(q.BoardSpec(11, 3), 122))
check("aggregation inconclusive", not q.aggregation_presolve(q.BoardSpec(5, 3), 14))

greedy = q.greedy_random(q.BoardSpec(3, 3), seed=0, restarts=50)
check("greedy valid", q.verify(q.BoardSpec(3, 3), greedy) == [] and len(greedy) <= 4)

cert = q.write_certificate(spec, r["queens"])
back = q.read_certificate(cert)
check("certificate round trip", back["n"] == 4 and back["d"] == 3 and
      len(back["queens"]) == 7)

print("all smoke tests passed")
