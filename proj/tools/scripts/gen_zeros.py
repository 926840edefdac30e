#!/usr/bin/env python3
"""Write the ordinates of the first N nontrivial zeta zeros, one per line."""
import sys

import mpmath


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    mpmath.mp.dps = 25
    for n in range(1, count + 1):
        print(mpmath.nstr(mpmath.zetazero(n).imag, 15, strip_zeros=False))
        sys.stdout.flush()


if __name__ == "__main__":
    main()
