#!/usr/bin/env python3
"""The same identities in double precision, and what cancellation costs.

Both closed forms are exact in real arithmetic, so any disagreement with
the brute-force iterated quotient is pure rounding.  The two-factor
expansion has positive coefficients; the multifactor form is an
alternating sum, and its cancellation ratio (sum of |summands| over
|sum|) explodes as the step shrinks -- the classic way to lose every
significant digit while each individual term stays perfectly accurate.
"""

from diffquot import (
    GridSpec,
    exp_fn,
    sin_fn,
    verify_multi_factor,
    verify_two_factor,
)

COLS = "{:>10} {:>8} {:>14} {:>14} {:>16}"


def sweep(r: int) -> None:
    print(f"order r = {r}, f = exp, g = sin, 64 nodes on [0, 2]")
    print(COLS.format("lambda", "pass", "max_abs_err", "max_rel_err", "cancel_ratio"))
    for lam in (0.5, 0.1, 1e-2, 1e-4, 1e-6):
        grid = GridSpec(x_start=0.0, step=2.0 / 63, count=64, lam=lam)
        rep = verify_multi_factor([exp_fn(), sin_fn()], r, grid, tol=1e-9)
        print(
            COLS.format(
                f"{lam:g}",
                "yes" if rep.passed else "no",
                f"{rep.max_abs_err:.3e}",
                f"{rep.max_rel_err:.3e}",
                f"{rep.cancellation_ratio:.3e}",
            )
        )
    print()


for r in (1, 2, 3):
    sweep(r)

# Side by side at a fixed step: the alternating form cancels harder than
# the positive-coefficient expansion on identical inputs.
grid = GridSpec(x_start=0.0, step=2.0 / 63, count=64, lam=0.1)
print("cancellation at lambda = 0.1:")
print("{:>3} {:>18} {:>18}".format("r", "two-factor form", "alternating form"))
for r in (1, 2, 3, 4):
    two = verify_two_factor(exp_fn(), sin_fn(), r, grid, tol=1e-9)
    multi = verify_multi_factor([exp_fn(), sin_fn()], r, grid, tol=1e-9)
    print(
        "{:>3} {:>18.3e} {:>18.3e}".format(
            r, two.cancellation_ratio, multi.cancellation_ratio
        )
    )
