"""A walk through the ordinal notation system.

Run with ``python demos/ordinals_tour.py``.
"""

from ordforge import (
    OMEGA, W, add, compare, extend, H, h_contains, in_B, nat_sum, omega_pow, parse_ord,
    pretty, psi, veblen,
)


def show(label, x):
    print(f"{label:<38} {pretty(x)}")


def main():
    print("Ordinary arithmetic absorbs small summands on the left.")
    show("1 + w", add(parse_ord("1"), OMEGA))
    show("w + 1", add(OMEGA, parse_ord("1")))
    show("natural sum 1 # w", nat_sum(parse_ord("1"), OMEGA))
    print()

    print("Omega is a fixed point of exponentiation, so towers above it collapse.")
    show("w^W", omega_pow(W))
    show("w^(W+1)", omega_pow(add(W, parse_ord("1"))))
    print()

    print("Veblen functions build fixed points of fixed points.")
    eps0 = veblen(parse_ord("1"), parse_ord("0"))
    show("phi(1,0), the first epsilon number", eps0)
    show("w^phi(1,0) is phi(1,0) again", omega_pow(eps0))
    print()

    print("The collapsing function maps huge ordinals below Omega.")
    gamma = parse_ord("w^(w^(W+1))")
    show("gamma", gamma)
    show("psi(gamma)", psi(gamma))
    print("psi(gamma) < W:", compare(psi(gamma), W).symbol)
    print("gamma lies in the closure stage for 0:", in_B(parse_ord("0"), gamma))
    print()

    print("Operators control which ordinals a derivation may mention.")
    big = parse_ord("w^(W+3)")
    print("psi(w^(W+3)) in H_0:", h_contains(H(), psi(big)))
    op = extend(H(), [psi(big)])
    print("after adding it as a parameter the operator starts at stage", pretty(op.stage))
    print("psi(w^(W+3)) in the extended operator:", h_contains(op, psi(big)))


if __name__ == "__main__":
    main()
