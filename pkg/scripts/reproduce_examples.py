"""Print the worked examples: partition tables over Q(√2) and the chain table over Q(√3)."""
from nfpart.field import QuadField
from nfpart.ideals import GlaisherData, in_glaisher_S, principal
from nfpart.partitions import (Partition, count_chain, enumerate_chains, enumerate_partitions,
                               enumerate_weighted_solutions, phi)
from nfpart.theorems import verify_remark_counterexample


def show(title, parts):
    print(f"{title} = {len(parts)}")
    for p in parts:
        print("   ", p)


def main():
    F = QuadField(2)
    r2 = principal(F(0, 1))
    g = GlaisherData(r2, 2)
    delta = F(6, 2)
    show(f"p({delta})", enumerate_partitions(delta))
    show(f'p("O+ \\ (√2)", {delta})', enumerate_partitions(delta, lambda a: not r2.contains(a)))
    show(f'p("S"(<=1), {delta})', enumerate_partitions(delta, lambda a: in_glaisher_S(g, a), 1))
    print()

    two = principal(F(2))
    delta = F(7, 4)
    show(f"p({delta})", enumerate_partitions(delta))
    show(f'p("O+_2", {delta})', enumerate_partitions(delta, lambda a: not two.contains(a)))
    show(f'p("O+"(<=1), {delta})', enumerate_partitions(delta, None, 1))
    print()

    F = QuadField(3)
    delta = F(7, 2)
    for m in (1, 2, 3):
        chains = enumerate_chains(delta, m, exact=True)
        print(f"chains of {delta} with exactly {m} parts: {len(chains)} "
              f"(at most {m}: {count_chain(delta, m)})")
        for c in chains:
            print("   ", Partition(c), "-> phi =", phi(c, m))
        sols = enumerate_weighted_solutions(delta, m, exact=True)
        print("    solutions with x_m != 0:", ", ".join(str(s) for s in sols))
    print()

    rep = verify_remark_counterexample()
    print(rep.summary())
    for r in rep.rows:
        print(f"    {r['display']}: distinct {r['distinct']}, avoiding (1+√3) {r['avoiding']}, "
              f"no part divisible by 2 {r['avoiding_alt']}, claimed {tuple(r['claimed'])}")


if __name__ == "__main__":
    main()
