"""Lowest-term valuations and the weighting matrix of a sequence.

Walks the greedy descent for a few Pluecker coordinates of the standard
iterated sequence, confirms the result against the full pullback support,
and prints the 20 x 9 weighting matrix together with the nine rows that
form an upper-triangular submatrix with unit diagonal.
"""

from grassdegen.sequences import standard_sequence
from grassdegen.valuation import (
    compute_valuation,
    height_weight,
    pullback_support,
    weighting_matrix,
)

TRIANGULAR_COORDINATES = [
    (4, 5, 6), (1, 5, 6), (1, 2, 6),
    (3, 4, 5), (1, 4, 5), (1, 2, 5),
    (2, 3, 4), (1, 3, 4), (1, 2, 4),
]


def main():
    seq = standard_sequence(6)
    print("sequence:", seq.serialize())

    for K in [(1, 2, 3), (1, 2, 6), (4, 5, 6)]:
        valuation = compute_valuation(seq, K)
        support = pullback_support(seq, K)
        print(f"\np_{K}: valuation {valuation}")
        print(f"  pullback support has {len(support)} monomials, lex-max {max(support)}")
        print(f"  height-weighted total {height_weight(seq, valuation)}"
              f" = {sum(K)} - 6")

    M = weighting_matrix(seq)
    print("\nweighting matrix (rows in lex order):")
    for triple, row in M.items():
        print("  ", "".join(map(str, triple)), row)

    print("\ntriangular witness rows:")
    for K in TRIANGULAR_COORDINATES:
        print("  ", "".join(map(str, K)), M.row(K))


if __name__ == "__main__":
    main()
