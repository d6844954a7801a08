"""How many low-lying necklaces are there, and how good is the asymptotic?

Counts primitive necklaces over {1..A} for a few digit bounds and
compares the exact Moebius-sum count with c_A * A^N / N.
"""

from modwind import necklace


def main():
    print("exact counts vs asymptotic c_A * A^N / N")
    print()
    for A in (2, 3, 5):
        print(f"A = {A}")
        for N in (4, 8, 12):
            rep = necklace.pi_asymptotic(A, N)
            print(
                f"  N = {N:2d}: pi = {rep.exact:>12,}   "
                f"asymptotic = {rep.asymptotic:>14,.1f}   "
                f"rel err = {rep.relative_error:.4%}"
            )
        print()

    # the headline number: 42.7 million necklaces at A = 5, N = 12
    rep = necklace.pi_asymptotic(5, 12)
    print(f"pi_5(12) = {rep.exact:,} exactly, "
          f"approximation off by {rep.relative_error:.2%}")

    # a tiny census for A = 2, N = 4, listed in full
    print()
    print("the ten necklaces with A = 2, N = 4:")
    for nk in necklace.enumerate_necklaces(2, 4):
        print(" ", nk.rep)


if __name__ == "__main__":
    main()
