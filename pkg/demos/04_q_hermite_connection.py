"""Continuous q-Hermite polynomials in Laurent form and their tie to the moments.

With t standing for the unit-circle variable, H_n(t) = sum_k [n k]_q t^{2k-n}
is palindromic, satisfies H_{n+1} = (t + 1/t) H_n - (1 - q^n) H_{n-1}, and
rescales into the closed-form moments through a = t^2:

    (q;q^2)_{floor((n+1)/2)} P_n(t^2) = t^n H_n(t).
"""

from fractions import Fraction as F

from qmoments import (
    check_hermite_recurrence,
    connection_sides,
    hermite_laurent,
    is_palindromic,
)

q = F(1, 2)
print(f"q = {q}\n")
for n in range(5):
    poly = hermite_laurent(n, q)
    print(f"  H_{n}(t) = {poly}   palindromic: {is_palindromic(poly)}")

print("\nthree-term recurrence, n = 1..12:",
      all(check_hermite_recurrence(n, q) for n in range(1, 13)))

t0 = F(2)
print(f"\nconnection identity at t = {t0}:")
for n in range(6):
    lhs, rhs = connection_sides(n, t0, q)
    print(f"  n={n}: normalized P_{n}(t^2) = {str(lhs):>12}   t^n H_n(t) = {str(rhs):>12}")
