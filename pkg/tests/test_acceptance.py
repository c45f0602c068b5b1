"""Acceptance criteria.  Each test records one PASS/FAIL line, shown in the
terminal summary under "acceptance criteria".  All comparisons are exact.
"""
import io
import json
import random
import time
from collections import Counter

from conftest import ACCEPTANCE_LINES
from nfpart.cli import main
from nfpart.enumeration import enumerate_totally_positive
from nfpart.field import QuadField
from nfpart.ideals import (GlaisherData, hnf, ideal_from_generators, in_glaisher_S, principal,
                           valuation)
from nfpart.partitions import (count_chain, count_partitions, count_weighted_solutions,
                               enumerate_chains, enumerate_weighted_solutions, phi, psi)
from nfpart.qsum import QSum, partition_genfun, weighted_solutions_genfun
from nfpart.theorems import (verify_chain_theorem, verify_glaisher, verify_ideal_theorem,
                             verify_remark_counterexample)
from oracles import int_partitions, paper_tuple, pentagonal_p

Q, Q2, Q3, Q5 = (QuadField(d) for d in (1, 2, 3, 5))


def record(n, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}"
    if detail:
        line += f" -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def cli_partitions(*argv):
    out = io.StringIO()
    assert main(["count", "--json", "--list", *argv], out=out) == 0
    rec = json.loads(out.getvalue())
    field = QuadField(rec["field"])
    got = Counter(tuple(sorted((field(*c) for c in p), key=lambda a: a.sort_key()))
                  for p in rec["partitions"])
    return rec["count"], got


def as_multisets(field, rows):
    return Counter(tuple(sorted(paper_tuple(field, r), key=lambda a: a.sort_key())) for r in rows)


# tables transcribed from the worked examples

EX1_ALL = ["(6+2√2)", "(5+2√2,1)", "(4+2√2,2)", "(4+2√2,1,1)", "(3+2√2,3)", "(3+2√2,2,1)",
           "(3+2√2,1,1,1)", "(4+√2,2+√2)", "(3+√2,3+√2)", "(3+√2,2+√2,1)",
           "(2+√2,2+√2,2)", "(2+√2,2+√2,1,1)"]
EX1_NOT_IN = ["(5+2√2,1)", "(3+2√2,3)", "(3+2√2,1,1,1)", "(3+√2,3+√2)"]
EX1_S = ["(6+2√2)", "(5+2√2,1)", "(3+2√2,3)", "(3+2√2,2,1)"]

EX3_ALL = ["(7+4√2)", "(6+4√2,1)", "(5+3√2,2+√2)", "(4+2√2,3+2√2)", "(3+2√2,3+2√2,1)",
           "(3+2√2,2+√2,2+√2)"]
EX3_ODD = ["(7+4√2)", "(5+3√2,2+√2)", "(3+2√2,3+2√2,1)", "(3+2√2,2+√2,2+√2)"]
EX3_DISTINCT = ["(7+4√2)", "(6+4√2,1)", "(5+3√2,2+√2)", "(4+2√2,3+2√2)"]

SEC5_CHAINS = {1: ["(7+2√3)"],
               2: ["(6+2√3,1)", "(5+√3,2+√3)", "(4+√3,3+√3)"],
               3: ["(5+2√3,1,1)", "(3+√3,3+√3,1)"]}
SEC5_SOLUTIONS = {1: ["(7+2√3)"],
                  2: ["(5+2√3,1)", "(1,3+√3)", "(3,2+√3)"],
                  3: ["(4+2√3,0,1)", "(0,2+√3,1)"]}
# phi images of the listed 3-part chains, as paired in the worked example
SEC5_PHI = {"(3+√3,3+√3,1)": "(0,2+√3,1)", "(5+2√3,1,1)": "(4+2√3,0,1)"}


def test_criterion_1_example_one():
    t0 = time.perf_counter()
    n_all, all_parts = cli_partitions("--field", "2", "--delta", "6,2")
    n_not, not_in = cli_partitions("--field", "2", "--delta", "6,2", "--not-in-ideal", "w")
    n_s, s_parts = cli_partitions("--field", "2", "--delta", "6,2", "--glaisher-S", "w",
                                  "--modulus", "2", "--mult-bound", "1")
    elapsed = time.perf_counter() - t0
    ok = ((n_all, n_not, n_s) == (12, 4, 4)
          and all_parts == as_multisets(Q2, EX1_ALL)
          and not_in == as_multisets(Q2, EX1_NOT_IN)
          and s_parts == as_multisets(Q2, EX1_S)
          and elapsed < 1.0)
    assert record(1, "Example 1 over Q(√2): p = 12 / 4 / 4 with the tabulated partitions", ok,
                  f"counts {(n_all, n_not, n_s)}, {elapsed:.3f}s")


def test_criterion_2_example_three():
    t0 = time.perf_counter()
    n_all, all_parts = cli_partitions("--field", "2", "--delta", "7,4")
    n_odd, odd = cli_partitions("--field", "2", "--delta", "7,4", "--not-in-ideal", "2")
    n_dis, dis = cli_partitions("--field", "2", "--delta", "7,4", "--mult-bound", "1")
    elapsed = time.perf_counter() - t0
    ok = ((n_all, n_odd, n_dis) == (6, 4, 4)
          and all_parts == as_multisets(Q2, EX3_ALL)
          and odd == as_multisets(Q2, EX3_ODD)
          and dis == as_multisets(Q2, EX3_DISTINCT)
          and elapsed < 1.0)
    assert record(2, "Example 3 over Q(√2): p = 6 / 4 / 4 with the tabulated partitions", ok,
                  f"counts {(n_all, n_odd, n_dis)}, {elapsed:.3f}s")


def test_criterion_3_chain_example():
    t0 = time.perf_counter()
    delta = Q3(7, 2)
    # the worked table lists, for each m, the chains with exactly m parts and the
    # solutions whose last variable is nonzero
    counts = tuple(count_chain(delta, m, exact=True) for m in (1, 2, 3))
    at_most = tuple(count_chain(delta, m) for m in (1, 2, 3))
    chains_ok = all(
        Counter(tuple(sorted(c, key=lambda a: a.sort_key())) for c in enumerate_chains(delta, m, exact=True))
        == as_multisets(Q3, rows)
        for m, rows in SEC5_CHAINS.items())
    sols_ok = all(
        {s.xs for s in enumerate_weighted_solutions(delta, m, exact=True)}
        == {paper_tuple(Q3, r) for r in rows}
        for m, rows in SEC5_SOLUTIONS.items())
    qsum_ok = all(count_weighted_solutions(delta, m, exact=True) == len(SEC5_SOLUTIONS[m])
                  for m in (1, 2, 3))
    phi_ok = all(phi(paper_tuple(Q3, c)[::-1], 3).xs == paper_tuple(Q3, s)
                 for c, s in SEC5_PHI.items())
    trips_ok = all(psi(phi(c, 3)) == c for c in enumerate_chains(delta, 3))
    elapsed = time.perf_counter() - t0
    ok = (counts == (1, 3, 2) and at_most == (1, 4, 6) and chains_ok and sols_ok
          and qsum_ok and phi_ok and trips_ok and elapsed < 1.0)
    assert record(3, "chain table for 7+2√3 over Q(√3): (1, 3, 2), solutions and phi images", ok,
                  f"exactly-m {counts}, at-most-m {at_most}, {elapsed:.3f}s")


def test_criterion_4_remark():
    rep = verify_remark_counterexample()
    got = {tuple(r["delta"]): (r["distinct"], r["avoiding"]) for r in rep.rows}
    want = {(1, 0): (1, 1), (7, 2): (4, 4), (9, 2): (7, 5)}
    ok = got == want
    assert record(4, "Remark: distinct vs (1+√3)-avoiding chains = (4,4) at 7+2√3, (7,5) at 9+2√3",
                  ok, f"enumerated {got[(7, 2)]} at 7+2√3, {got[(9, 2)]} at 9+2√3"), (
        f"enumeration gives {got}, claimed {want}")


def test_criterion_5_theorem_suites():
    results = []

    def timed(label, fn):
        t0 = time.perf_counter()
        rep = fn()
        dt = time.perf_counter() - t0
        results.append((label, rep.passed and dt < 30.0, dt, rep.summary()))

    timed("ideal (√2), d=2", lambda: verify_ideal_theorem(GlaisherData(principal(Q2(0, 1)), 2), 12))
    timed("ideal (3√2), d=6", lambda: verify_ideal_theorem(GlaisherData(principal(Q2(0, 3)), 6), 12))
    for field in (Q2, Q3, Q5):
        for d in (2, 3):
            timed(f"glaisher {field} d={d}", lambda f=field, k=d: verify_glaisher(f, k, 12))
        timed(f"chain {field}", lambda f=field: verify_chain_theorem(f, 12, 6))
    bad = [r for r in results if not r[1]]
    slowest = max(r[2] for r in results)
    ok = not bad
    assert record(5, f"theorem suites: {len(results)} reports, zero failures, each < 30 s", ok,
                  f"slowest {slowest:.2f}s" + (f"; {bad[0][3]}" if bad else "")), bad


def _classes(field):
    two, three = principal(2, field), principal(3, field)
    out = {
        "all": (None, None),
        "all <=1": (None, 1),
        "all <=2": (None, 2),
        "not div 2": (lambda a: not two.contains(a), None),
        "not div 3": (lambda a: not three.contains(a), None),
    }
    if field.d == 2:
        r2, r32 = principal(field(0, 1)), principal(field(0, 3))
        g1, g2 = GlaisherData(r2, 2), GlaisherData(r32, 6)
        out.update({
            "not in (√2)": (lambda a: not r2.contains(a), None),
            "S((√2),2) <=1": (lambda a: in_glaisher_S(g1, a), 1),
            "not in (3√2)": (lambda a: not r32.contains(a), None),
            "S((3√2),6) <=5": (lambda a: in_glaisher_S(g2, a), 5),
        })
    if field.d == 3:
        p = principal(field(1, 1))
        out["not in (1+√3)"] = (lambda a: not p.contains(a), None)
    return out


def test_criterion_6_oracle_equivalence():
    mismatches = []
    checks = 0
    for field in (Q2, Q3, Q5):
        window = enumerate_totally_positive(field, 12)
        for name, (pred, bound) in _classes(field).items():
            gf = partition_genfun(field, pred, bound, 12)
            for delta in window:
                checks += 1
                if gf.coefficient(delta) != count_partitions(delta, pred, bound):
                    mismatches.append((str(field), name, str(delta)))
        for m in range(1, 7):
            for exact in (False, True):
                gf = weighted_solutions_genfun(field, m, 12, exact=exact)
                for delta in window:
                    checks += 1
                    if gf.coefficient(delta) != count_chain(delta, m, exact=exact):
                        mismatches.append((str(field), f"chain m={m} exact={exact}", str(delta)))
    ok = not mismatches
    assert record(6, "brute force == q-sum coefficients on every class, trace <= 12", ok,
                  f"{checks} comparisons" + (f"; first mismatch {mismatches[0]}" if mismatches else "")), mismatches[:5]


def test_criterion_7_classical_regression():
    ref = pentagonal_p(20)
    unrestricted = all(count_partitions(Q(n)) == ref[n] for n in range(1, 21))
    anchors = count_partitions(Q(5)) == 7 and count_partitions(Q(6)) == 11
    euler_direct = all(
        sum(1 for _ in int_partitions(n, allowed=lambda k: k % 2 == 1))
        == sum(1 for _ in int_partitions(n, max_mult=1))
        == count_partitions(Q(n), lambda a: a.x % 2 == 1)
        for n in range(1, 21))
    glaisher_direct = all(
        sum(1 for _ in int_partitions(n, allowed=lambda k: k % 3 != 0))
        == sum(1 for _ in int_partitions(n, max_mult=2))
        == count_partitions(Q(n), None, 2)
        for n in range(1, 21))
    euler_rep = verify_glaisher(Q, 2, 20).passed
    glaisher_rep = verify_glaisher(Q, 3, 20).passed
    ok = unrestricted and anchors and euler_direct and glaisher_direct and euler_rep and glaisher_rep
    assert record(7, "classical regression over Q for n <= 20 (p(n), Euler, Glaisher d=3)", ok)


def test_criterion_8_properties():
    rng = random.Random(20261019)
    failures = []
    fields = (Q2, Q3, Q5)

    # q-sum ring laws
    for _ in range(60):
        field = rng.choice(fields)
        keys = [field.zero] + enumerate_totally_positive(field, 8)

        def rand_qs():
            return QSum(field, 8, {rng.choice(keys): rng.randint(-4, 4) for _ in range(rng.randint(0, 6))})
        f, g, h = rand_qs(), rand_qs(), rand_qs()
        if not (f * g == g * f and (f * g) * h == f * (g * h) and f * (g + h) == f * g + f * h):
            failures.append("ring laws")

    # truncation exactness, M vs M+2
    for field in fields:
        for pred, bound in list(_classes(field).values())[:6]:
            if partition_genfun(field, pred, bound, 12).truncate(10) != partition_genfun(field, pred, bound, 10):
                failures.append(f"truncation {field}")

    # HNF idempotence
    for _ in range(200):
        d = rng.choice((2, 3, 5, 6, 7))
        F = QuadField(d)
        gens = [F(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(rng.randint(1, 3))]
        if not any(gens):
            continue
        I = ideal_from_generators(gens)
        if I.renormalize() != I or hnf([(I.a, 0), (I.b, I.c)]) != (I.a, I.b, I.c):
            failures.append("hnf")

    # valuation additivity for prime ideals
    primes = [principal(Q2(0, 1)), principal(Q2(3)), principal(Q3(1, 1))]
    for _ in range(300):
        p = rng.choice(primes)
        window = enumerate_totally_positive(p.field, 20)
        a, b = rng.choice(window), rng.choice(window)
        if valuation(p, a * b) != valuation(p, a) + valuation(p, b):
            failures.append(f"valuation {p} {a} {b}")

    # phi/psi round trips
    for _ in range(200):
        field = rng.choice(fields)
        delta = rng.choice(enumerate_totally_positive(field, 14))
        chain = rng.choice(enumerate_chains(delta))
        m = len(chain) + rng.randint(0, 3)
        sol = phi(chain, m)
        if psi(sol) != chain or phi(psi(sol), m) != sol or sol.weighted_sum() != delta:
            failures.append(f"round trip {chain}")

    ok = not failures
    assert record(8, "property suites (ring laws, truncation, HNF, valuation, phi/psi), seed 20261019", ok,
                  failures[0] if failures else ""), failures[:5]
